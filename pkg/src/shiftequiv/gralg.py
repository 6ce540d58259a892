"""Combinatorial invariants of graph C*-algebras.

Everything here is finite bookkeeping on a :class:`MultiDigraph`:

* hereditary and saturated vertex sets, whose lattice indexes the
  gauge-invariant ideals (all ideals when Condition (K) holds);
* the outsplit graph whose algebra is the Toeplitz algebra of the graph
  correspondence;
* regularity of the graph correspondence (row-finite, no sinks);
* the generator maps identifying ``C*(E)`` and ``C*(F)`` with
  complementary full corners of the inflation graph algebra, and the
  resulting Morita-equivalence verdict.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import AbstractSet, Iterable, Optional, Sequence

from shiftequiv.graphs import Edge, GraphError, MultiDigraph, analyze, condition_k, graph_from_matrix, vertex_matrix
from shiftequiv.matrices import DimensionError, NonNegIntMatrix, multiply
from shiftequiv.sse import ElementaryPair, inflate_graph, verify_elementary

BRUTE_FORCE_MAX_VERTICES = 20


def _check_subset(g: MultiDigraph, h: Iterable[str]) -> frozenset[str]:
    h = frozenset(h)
    unknown = sorted(v for v in h if not g.has_vertex(v))
    if unknown:
        raise GraphError(f"unknown vertices: {unknown}")
    return h


def hereditary_closure(g: MultiDigraph, h: Iterable[str]) -> frozenset[str]:
    """Smallest superset of ``h`` closed under following edges forward."""
    closed = set(_check_subset(g, h))
    stack = list(closed)
    while stack:
        v = stack.pop()
        for e in g.out_edges(v):
            if e.range not in closed:
                closed.add(e.range)
                stack.append(e.range)
    return frozenset(closed)


def is_hereditary(g: MultiDigraph, h: AbstractSet[str]) -> bool:
    return all(e.range in h for e in g.edges if e.source in h)


def _absorbable(g: MultiDigraph, v: str, h: AbstractSet[str]) -> bool:
    out = g.out_edges(v)
    return bool(out) and all(e.range in h for e in out)


def is_saturated(g: MultiDigraph, h: AbstractSet[str]) -> bool:
    """No vertex outside ``h`` that emits edges sends all of them into ``h``."""
    return not any(v not in h and _absorbable(g, v, h) for v in g.vertices)


def saturate(g: MultiDigraph, h: Iterable[str]) -> frozenset[str]:
    """Saturation of a hereditary set.

    Repeatedly adds every non-sink vertex whose edges all land in the set.
    The result stays hereditary.  Raises ``ValueError`` if ``h`` is not
    hereditary.
    """
    h = _check_subset(g, h)
    if not is_hereditary(g, h):
        raise ValueError("saturate needs a hereditary vertex set")
    sat = set(h)
    changed = True
    while changed:
        changed = False
        for v in g.vertices:
            if v not in sat and _absorbable(g, v, sat):
                sat.add(v)
                changed = True
    return frozenset(sat)


def canonical_subset(g: MultiDigraph, h: Iterable[str]) -> tuple[str, ...]:
    return g.sorted_vertices(h)


def _subset_key(g: MultiDigraph):
    def key(s: tuple[str, ...]):
        return len(s), tuple(g.index[v] for v in s)
    return key


@dataclass(frozen=True)
class IdealLattice:
    """Proper saturated hereditary subsets of a graph.

    Subsets list their vertices in declaration order and are sorted by
    size, then lexicographically by vertex position.  The empty set is
    included and the full vertex set is not.
    """

    subsets: tuple[tuple[str, ...], ...]
    condition_k: bool

    @property
    def count_with_empty(self) -> int:
        return len(self.subsets)

    @property
    def count_nonzero(self) -> int:
        return sum(1 for s in self.subsets if s)

    @property
    def simple(self) -> bool:
        return self.subsets == ((),) and self.condition_k

    def __contains__(self, item) -> bool:
        return frozenset(item) in {frozenset(s) for s in self.subsets}

    def as_sets(self) -> set[frozenset[str]]:
        return {frozenset(s) for s in self.subsets}


def _hereditary_sets(g: MultiDigraph) -> list[frozenset[str]]:
    """All hereditary sets, each produced once.

    Branches on the first undecided vertex: including it adds its
    hereditary closure, excluding it also excludes everything that can
    reach it.
    """
    reaches = {v: set() for v in g.vertices}  # reaches[v]: vertices with a path to v
    for v in g.vertices:
        for w in hereditary_closure(g, [v]):
            reaches[w].add(v)
    closure = {v: hereditary_closure(g, [v]) for v in g.vertices}
    order = list(g.vertices)
    found = []

    def branch(pos: int, inside: frozenset[str], outside: frozenset[str]):
        while pos < len(order) and (order[pos] in inside or order[pos] in outside):
            pos += 1
        if pos == len(order):
            found.append(inside)
            return
        v = order[pos]
        grown = inside | closure[v]
        if not grown & outside:
            branch(pos + 1, grown, outside)
        branch(pos + 1, inside, outside | reaches[v])

    branch(0, frozenset(), frozenset())
    return found


def _brute_force_subsets(g: MultiDigraph) -> list[frozenset[str]]:
    if len(g.vertices) > BRUTE_FORCE_MAX_VERTICES:
        raise ValueError(f"brute force is limited to {BRUTE_FORCE_MAX_VERTICES} vertices")
    found = []
    for size in range(len(g.vertices) + 1):
        for combo in combinations(g.vertices, size):
            h = frozenset(combo)
            if is_hereditary(g, h) and is_saturated(g, h):
                found.append(h)
    return found


def enumerate_saturated_hereditary(g: MultiDigraph, brute_force: bool = False) -> IdealLattice:
    """The lattice of proper saturated hereditary subsets of ``g``.

    With ``brute_force=True`` every one of the ``2^|V|`` subsets is tested
    directly (at most 20 vertices).
    """
    if brute_force:
        candidates = _brute_force_subsets(g)
    else:
        candidates = [h for h in _hereditary_sets(g) if is_saturated(g, h)]
    full = frozenset(g.vertices)
    subsets = sorted((canonical_subset(g, h) for h in candidates if h != full), key=_subset_key(g))
    return IdealLattice(tuple(subsets), condition_k(g))


def prime(name: str) -> str:
    return name + "'"


def outsplit_toeplitz(g: MultiDigraph) -> MultiDigraph:
    """Outsplit ``g`` at every vertex.

    Adds a sink ``v'`` for each vertex v and, for each edge ``e: v -> w``,
    a new edge ``e': v -> w'``.  Original vertices and edges keep their
    order and come first.
    """
    new_vertices = tuple(prime(v) for v in g.vertices)
    new_edges = tuple(Edge(prime(e.name), e.source, prime(e.range)) for e in g.edges)
    taken = set(g.vertices)
    clash = [v for v in new_vertices if v in taken]
    taken_edges = {e.name for e in g.edges}
    clash += [e.name for e in new_edges if e.name in taken_edges]
    if clash:
        raise GraphError(f"primed names already in use: {clash}")
    return MultiDigraph(g.vertices + new_vertices, g.edges + new_edges)


@dataclass(frozen=True)
class CorrespondenceProfile:
    row_finite: bool
    has_sinks: bool
    has_sources: bool
    sinks: tuple[str, ...] = ()

    @property
    def regular(self) -> bool:
        return self.row_finite and not self.has_sinks

    @property
    def essential(self) -> bool:
        # Graph correspondences always have a nondegenerate left action.
        return True


def profile(g: MultiDigraph) -> CorrespondenceProfile:
    """Regularity data for the graph correspondence of ``g``.

    Finite graphs are row-finite, so the correspondence is regular exactly
    when there are no sinks.
    """
    info = analyze(g)
    return CorrespondenceProfile(
        row_finite=info.row_finite,
        has_sinks=bool(info.sinks),
        has_sources=bool(info.sources),
        sinks=info.sinks,
    )


@dataclass(frozen=True)
class CornerMap:
    """Generator map of ``C*(E)`` onto a corner of the inflation graph algebra.

    Each edge of E goes to the length-2 path ``(first, second)`` of the
    inflation graph; as a product of partial isometries that is
    ``S_first S_second``.
    """

    corner_vertices: tuple[str, ...]
    vertex_map: dict[str, str] = field(hash=False)
    edge_map: dict[str, tuple[str, str]] = field(hash=False)


def _two_paths(g: MultiDigraph, u: str, target: str) -> list[tuple[str, str]]:
    paths = []
    for first in g.out_edges(u):
        for second in g.out_edges(first.range):
            if second.range == target:
                paths.append((g.index[first.range], first.name, second.name))
    paths.sort()
    return [(a, b) for _, a, b in paths]


def _corner(inflation: MultiDigraph, graph: MultiDigraph, corner: Sequence[str]) -> CornerMap:
    edge_map = {}
    for u in graph.vertices:
        for w in graph.vertices:
            edges = [e.name for e in graph.out_edges(u) if e.range == w]
            paths = _two_paths(inflation, u, w)
            if len(edges) != len(paths):
                raise AssertionError(f"{len(edges)} edges {u}->{w} but {len(paths)} paths")
            edge_map.update(zip(edges, paths))
    edge_map = {e.name: edge_map[e.name] for e in graph.edges}
    return CornerMap(tuple(corner), {v: v for v in graph.vertices}, edge_map)


@dataclass(frozen=True)
class CornerResult:
    e_map: CornerMap
    f_map: CornerMap
    inflation: MultiDigraph
    E: MultiDigraph
    F: MultiDigraph

    def __iter__(self):
        return iter((self.e_map, self.f_map, self.inflation, self.E, self.F))


def corner_maps(r: NonNegIntMatrix, s: NonNegIntMatrix, row_names: Optional[Sequence[str]] = None,
                col_names: Optional[Sequence[str]] = None) -> CornerResult:
    """Corner generator maps for ``E = graph(RS)`` and ``F = graph(SR)``.

    Edges of E from u to u' are paired with the paths ``u -> mid -> u'`` of
    the inflation graph.  Both sides are taken in canonical order: E-edges
    by their generated ``#k`` index, paths by middle vertex, then first
    edge name, then second edge name.  F is handled the same way through
    the row vertices.  The two corners partition the inflation vertices.
    """
    inflation = inflate_graph(r, s, row_names, col_names)
    m = r.rows
    rows, cols = inflation.vertices[:m], inflation.vertices[m:]
    e_graph = graph_from_matrix(multiply(r, s), rows)
    f_graph = graph_from_matrix(multiply(s, r), cols)
    return CornerResult(
        _corner(inflation, e_graph, rows),
        _corner(inflation, f_graph, cols),
        inflation, e_graph, f_graph,
    )


class Conclusion(str, enum.Enum):
    MORITA_EQUIVALENT = "morita-equivalent-via-inflation"
    NOT_APPLICABLE = "theorem-not-applicable"


@dataclass(frozen=True)
class MoritaVerdict:
    esse_verified: bool
    profile_E: CorrespondenceProfile
    profile_F: CorrespondenceProfile
    obstructions: tuple[str, ...]
    diagnostic: str = ""

    @property
    def applicable(self) -> bool:
        return self.esse_verified and self.profile_E.regular and self.profile_F.regular

    @property
    def conclusion(self) -> Conclusion:
        return Conclusion.MORITA_EQUIVALENT if self.applicable else Conclusion.NOT_APPLICABLE


def morita_verdict(e: MultiDigraph, f: MultiDigraph, r: NonNegIntMatrix, s: NonNegIntMatrix) -> MoritaVerdict:
    """Decide whether the shift-equivalence theorem applies to ``(E, F, R, S)``.

    It applies when ``RS = A_E``, ``SR = A_F`` and both graph
    correspondences are regular; the conclusion is then that ``C*(E)`` and
    ``C*(F)`` are Morita equivalent via the inflation graph.  Every failed
    hypothesis is listed in ``obstructions``.
    """
    a_e, a_f = vertex_matrix(e), vertex_matrix(f)
    if r.shape != (a_e.rows, a_f.rows) or s.shape != (a_f.rows, a_e.rows):
        raise DimensionError(
            f"E has {a_e.rows} and F has {a_f.rows} vertices; got R {r.rows}x{r.cols}, S {s.rows}x{s.cols}"
        )
    check = verify_elementary(ElementaryPair(a_e, a_f, r, s))
    pe, pf = profile(e), profile(f)
    obstructions = []
    if not check:
        obstructions.append(f"not an elementary strong shift equivalence ({check.diagnostic})")
    for label, p in (("E", pe), ("F", pf)):
        if p.has_sinks:
            obstructions.append(f"{label} has sinks {', '.join(p.sinks)} => X({label}) not regular")
        elif not p.row_finite:
            obstructions.append(f"{label} is not row-finite => X({label}) not regular")
    return MoritaVerdict(bool(check), pe, pf, tuple(obstructions), check.diagnostic)
