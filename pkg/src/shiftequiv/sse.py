"""Elementary strong shift equivalences: verification, bounded search and
the bipartite graphs ``G_R`` and ``G_{R,S}`` built from a witness.

A pair ``(R, S)`` of non-negative integer matrices with ``RS = A`` and
``SR = B`` is an elementary strong shift equivalence from A to B; strong
shift equivalence is the equivalence relation generated by such steps.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from shiftequiv.graphs import Edge, GraphError, MultiDigraph, default_names, generated_edge_name
from shiftequiv.matrices import DimensionError, NonNegIntMatrix, multiply, trace_powers

log = logging.getLogger(__name__)

DEFAULT_MAX_NODES = 10**7


class SearchLimitExceeded(RuntimeError):
    """find_elementary gave up before deciding; carries the node count."""

    def __init__(self, nodes: int):
        super().__init__(f"search abandoned after {nodes} nodes")
        self.nodes = nodes


@dataclass(frozen=True)
class ElementaryPair:
    """Witness data: A is m x m, B is n x n, R is m x n and S is n x m."""

    A: NonNegIntMatrix
    B: NonNegIntMatrix
    R: NonNegIntMatrix
    S: NonNegIntMatrix

    def __post_init__(self):
        a, b, r, s = self.A, self.B, self.R, self.S
        if not a.is_square or not b.is_square:
            raise DimensionError(f"A ({a.rows}x{a.cols}) and B ({b.rows}x{b.cols}) must be square")
        m, n = a.rows, b.rows
        if r.shape != (m, n):
            raise DimensionError(f"R must be {m}x{n}, got {r.rows}x{r.cols}")
        if s.shape != (n, m):
            raise DimensionError(f"S must be {n}x{m}, got {s.rows}x{s.cols}")


@dataclass(frozen=True)
class Check:
    ok: bool
    diagnostic: str
    index: Optional[int] = None

    def __bool__(self):
        return self.ok


def _first_mismatch(got: NonNegIntMatrix, want: NonNegIntMatrix) -> Optional[tuple[int, int]]:
    for idx, (x, y) in enumerate(zip(got.entries, want.entries)):
        if x != y:
            return divmod(idx, want.cols)
    return None


def verify_elementary(p: ElementaryPair) -> Check:
    """Check ``RS = A`` and ``SR = B`` exactly.

    The diagnostic reports both products; a failing one names its first
    wrong entry with 1-based indices.
    """
    parts = []
    ok = True
    for label, got, want in (("RS=A", multiply(p.R, p.S), p.A), ("SR=B", multiply(p.S, p.R), p.B)):
        bad = _first_mismatch(got, want)
        if bad is None:
            parts.append(f"{label}: ok")
        else:
            ok = False
            i, j = bad
            parts.append(f"{label}: FAIL at ({i + 1},{j + 1}): got {got[i, j]}, expected {want[i, j]}")
    return Check(ok, ", ".join(parts))


@dataclass(frozen=True)
class SSEChain:
    """Matrices ``A_1 .. A_n`` with witness i linking ``A_i`` to ``A_{i+1}``."""

    matrices: tuple[NonNegIntMatrix, ...]
    witnesses: tuple[ElementaryPair, ...] = ()

    def __post_init__(self):
        matrices = tuple(self.matrices)
        witnesses = tuple(self.witnesses)
        if not matrices:
            raise ValueError("a chain needs at least one matrix")
        if len(witnesses) != len(matrices) - 1:
            raise ValueError(f"{len(matrices)} matrices need {len(matrices) - 1} witnesses, got {len(witnesses)}")
        for i, w in enumerate(witnesses):
            if w.A != matrices[i] or w.B != matrices[i + 1]:
                raise ValueError(f"witness {i + 1} does not link matrices {i + 1} and {i + 2}")
        object.__setattr__(self, "matrices", matrices)
        object.__setattr__(self, "witnesses", witnesses)

    @classmethod
    def from_factors(cls, matrices: Sequence[NonNegIntMatrix],
                     factors: Sequence[tuple[NonNegIntMatrix, NonNegIntMatrix]]) -> SSEChain:
        """Build a chain from the matrices and the ``(R, S)`` of each step."""
        if len(factors) != len(matrices) - 1:
            raise ValueError(f"{len(matrices)} matrices need {len(matrices) - 1} witnesses, got {len(factors)}")
        pairs = tuple(ElementaryPair(matrices[i], matrices[i + 1], r, s) for i, (r, s) in enumerate(factors))
        return cls(tuple(matrices), pairs)


def verify_chain(c: SSEChain) -> Check:
    """Verify every step; ``index`` is the 1-based number of the first failing witness."""
    for i, w in enumerate(c.witnesses):
        check = verify_elementary(w)
        if not check:
            return Check(False, f"witness {i + 1}: {check.diagnostic}", i + 1)
    return Check(True, f"chain of {len(c.matrices)} matrices: ok")


def trace_obstruction(a: NonNegIntMatrix, b: NonNegIntMatrix, kmax: Optional[int] = None) -> bool:
    """True iff ``tr(A^k) = tr(B^k)`` for ``k = 1 .. kmax``.

    ``False`` proves A and B are not strong shift equivalent, since
    ``tr((RS)^k) = tr((SR)^k)``.  ``True`` proves nothing.  The default
    ``kmax = max(size A, size B)`` is a heuristic.
    """
    if kmax is None:
        kmax = max(a.rows, b.rows)
    return trace_powers(a, kmax) == trace_powers(b, kmax)


def find_elementary(a: NonNegIntMatrix, b: NonNegIntMatrix, bound: int,
                    max_nodes: int = DEFAULT_MAX_NODES) -> Optional[ElementaryPair]:
    """Search for ``(R, S)`` with entries in ``0..bound``, ``RS = A``, ``SR = B``.

    R is enumerated row-major in lexicographic order; for each R the
    entries of S are enumerated row-major, pruning on partial sums of RS
    and checking each completed row of SR against B.  The first pair found
    is therefore the lexicographically first ``(R, S)``.  ``None`` means no
    pair within the bound exists.  Raises :class:`SearchLimitExceeded`
    once more than ``max_nodes`` entry assignments have been tried.
    """
    if not a.is_square or not b.is_square:
        raise DimensionError("find_elementary needs square matrices")
    if bound < 0:
        raise ValueError("bound must be non-negative")
    m, n = a.rows, b.rows
    A = a.to_rows()
    B = b.to_rows()
    a_row_nonzero = [any(r) for r in A]
    b_row_nonzero = [any(r) for r in B]
    b_col_nonzero = [any(B[i][j] for i in range(n)) for j in range(n)]

    nodes = 0
    R = [[0] * n for _ in range(m)]
    S = [[0] * m for _ in range(n)]

    def tick():
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise SearchLimitExceeded(nodes)

    def r_feasible() -> bool:
        # Necessary conditions on R alone.
        for j in range(n):
            if b_col_nonzero[j] and not any(R[i][j] for i in range(m)):
                return False
        for i in range(m):
            if not a_row_nonzero[i]:
                # Row i of RS vanishes, so S row k is zero wherever R[i][k] > 0,
                # which forces row k of SR = B to vanish.
                for k in range(n):
                    if R[i][k] and b_row_nonzero[k]:
                        return False
        return True

    def solve_s() -> bool:
        # partial[i][j] = sum over assigned rows k of R[i][k] * S[k][j]
        partial = [[0] * m for _ in range(m)]
        # reach[k][i] = bound * sum_{k' > k} R[i][k'], the most rows after k can add
        reach = [[bound * sum(R[i][k + 1:]) for i in range(m)] for k in range(n)]
        rows_using = [[i for i in range(m) if R[i][k]] for k in range(n)]

        def sr_row_matches(k: int) -> bool:
            srow = S[k]
            return all(sum(srow[i] * R[i][jj] for i in range(m)) == B[k][jj] for jj in range(n))

        def place(pos: int) -> bool:
            if pos == n * m:
                return True
            k, j = divmod(pos, m)
            users = rows_using[k]
            hi = bound
            for i in users:
                hi = min(hi, (A[i][j] - partial[i][j]) // R[i][k])
            for x in range(hi + 1):
                tick()
                ok = True
                for i in users:
                    partial[i][j] += R[i][k] * x
                for i in range(m):
                    if partial[i][j] + reach[k][i] < A[i][j]:
                        ok = False
                        break
                if ok:
                    S[k][j] = x
                    if j == m - 1:
                        ok = sr_row_matches(k)
                    if ok and place(pos + 1):
                        return True
                for i in users:
                    partial[i][j] -= R[i][k] * x
            S[k][j] = 0
            return False

        return place(0)

    def place_r(pos: int) -> bool:
        if pos == m * n:
            return r_feasible() and solve_s()
        i, k = divmod(pos, n)
        for x in range(bound + 1):
            tick()
            R[i][k] = x
            if k == n - 1 and a_row_nonzero[i] and not any(R[i]):
                continue
            if place_r(pos + 1):
                return True
        R[i][k] = 0
        return False

    found = place_r(0)
    log.debug("find_elementary: %d nodes, found=%s", nodes, found)
    if not found:
        return None
    rm = NonNegIntMatrix.from_rows(R)
    sm = NonNegIntMatrix.from_rows(S)
    return ElementaryPair(a, b, rm, sm)


def _check_names(row_names: Sequence[str], col_names: Sequence[str], m: int, n: int) -> None:
    if len(row_names) != m:
        raise GraphError(f"expected {m} row names, got {len(row_names)}")
    if len(col_names) != n:
        raise GraphError(f"expected {n} column names, got {len(col_names)}")
    clash = set(row_names) & set(col_names)
    if clash:
        raise GraphError(f"row and column names collide: {sorted(clash)}")


def _bipartite_edges(mat: NonNegIntMatrix, from_names: Sequence[str], to_names: Sequence[str],
                     prefix: str) -> list[Edge]:
    edges = []
    for i, v in enumerate(from_names):
        for j, w in enumerate(to_names):
            for k in range(1, mat[i, j] + 1):
                edges.append(Edge(generated_edge_name(prefix, v, w, k), v, w))
    return edges


def rect_graph(r: NonNegIntMatrix, row_names: Optional[Sequence[str]] = None,
               col_names: Optional[Sequence[str]] = None, prefix: str = "r") -> MultiDigraph:
    """The bipartite graph ``G_R``: ``R(i, j)`` edges from row vertex i to column vertex j."""
    row_names = list(row_names) if row_names is not None else default_names(r.rows, "a")
    col_names = list(col_names) if col_names is not None else default_names(r.cols, "b")
    _check_names(row_names, col_names, r.rows, r.cols)
    return MultiDigraph(tuple(row_names) + tuple(col_names),
                        tuple(_bipartite_edges(r, row_names, col_names, prefix)))


def inflate_graph(r: NonNegIntMatrix, s: NonNegIntMatrix, row_names: Optional[Sequence[str]] = None,
                  col_names: Optional[Sequence[str]] = None) -> MultiDigraph:
    """The bipartite inflation graph ``G_{R,S}``.

    Vertices are the row names followed by the column names.  Edges
    ``r:<v>-><w>#k`` come from R and are listed first, then the edges
    ``s:<w>-><v>#k`` from S, each block row-major.  Its vertex matrix is
    ``block_bipartite(R, S)``.
    """
    m, n = r.rows, r.cols
    if s.shape != (n, m):
        raise DimensionError(f"R is {m}x{n}, so S must be {n}x{m}, got {s.rows}x{s.cols}")
    row_names = list(row_names) if row_names is not None else default_names(m, "a")
    col_names = list(col_names) if col_names is not None else default_names(n, "b")
    _check_names(row_names, col_names, m, n)
    edges = _bipartite_edges(r, row_names, col_names, "r") + _bipartite_edges(s, col_names, row_names, "s")
    return MultiDigraph(tuple(row_names) + tuple(col_names), tuple(edges))
