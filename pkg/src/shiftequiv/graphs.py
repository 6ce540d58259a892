"""Finite directed multigraphs and the vertex-matrix dictionary.

Edges point from their source ``s(e)`` to their range ``r(e)``.  The
vertex matrix counts edges ``v -> w`` in entry ``(v, w)``; the opposite
arrow convention found in parts of the graph-algebra literature is never
used here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

from shiftequiv.matrices import DimensionError, NonNegIntMatrix


class GraphError(ValueError):
    """Malformed graph data: duplicate or unknown names, bad characters."""


def check_name(name: str, kind: str = "name") -> str:
    if not isinstance(name, str) or not name:
        raise GraphError(f"{kind} must be a non-empty string, got {name!r}")
    if any(c.isspace() for c in name) or name.startswith("#"):
        raise GraphError(f"{kind} {name!r} contains whitespace or starts with '#'")
    return name


@dataclass(frozen=True)
class Edge:
    name: str
    source: str
    range: str


@dataclass(frozen=True)
class MultiDigraph:
    """A finite directed multigraph with ordered, named vertices and edges.

    Declaration order of vertices fixes the indexing of the vertex matrix.
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        vertices = tuple(self.vertices)
        edges = tuple(e if isinstance(e, Edge) else Edge(*e) for e in self.edges)
        seen = set()
        for v in vertices:
            check_name(v, "vertex name")
            if v in seen:
                raise GraphError(f"duplicate vertex {v!r}")
            seen.add(v)
        edge_names = set()
        for e in edges:
            check_name(e.name, "edge name")
            if e.name in edge_names:
                raise GraphError(f"duplicate edge {e.name!r}")
            edge_names.add(e.name)
            for end in (e.source, e.range):
                if end not in seen:
                    raise GraphError(f"edge {e.name!r} uses undeclared vertex {end!r}")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)

    @classmethod
    def build(cls, vertices: Iterable[str], edges: Iterable[tuple[str, str, str]] = ()) -> MultiDigraph:
        return cls(tuple(vertices), tuple(Edge(*e) for e in edges))

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _out(self) -> dict[str, tuple[Edge, ...]]:
        out: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.source].append(e)
        return {v: tuple(es) for v, es in out.items()}

    @cached_property
    def _in(self) -> dict[str, tuple[Edge, ...]]:
        inc: dict[str, list[Edge]] = {v: [] for v in self.vertices}
        for e in self.edges:
            inc[e.range].append(e)
        return {v: tuple(es) for v, es in inc.items()}

    @cached_property
    def edge_by_name(self) -> dict[str, Edge]:
        return {e.name: e for e in self.edges}

    def out_edges(self, v: str) -> tuple[Edge, ...]:
        return self._out[v]

    def in_edges(self, v: str) -> tuple[Edge, ...]:
        return self._in[v]

    def out_degree(self, v: str) -> int:
        return len(self._out[v])

    def in_degree(self, v: str) -> int:
        return len(self._in[v])

    def has_vertex(self, v: str) -> bool:
        return v in self.index

    def sorted_vertices(self, vs: Iterable[str]) -> tuple[str, ...]:
        """Vertices of ``vs`` in declaration order."""
        return tuple(sorted(set(vs), key=self.index.__getitem__))

    def relabel(self, vertex_names: dict[str, str], edge_names: Optional[dict[str, str]] = None) -> MultiDigraph:
        edge_names = edge_names or {}
        return MultiDigraph(
            tuple(vertex_names.get(v, v) for v in self.vertices),
            tuple(
                Edge(edge_names.get(e.name, e.name), vertex_names.get(e.source, e.source),
                     vertex_names.get(e.range, e.range))
                for e in self.edges
            ),
        )


def vertex_matrix(g: MultiDigraph) -> NonNegIntMatrix:
    """Square matrix whose ``(v, w)`` entry counts edges from v to w."""
    n = len(g.vertices)
    if n == 0:
        raise DimensionError("the empty graph has no vertex matrix")
    out = [0] * (n * n)
    idx = g.index
    for e in g.edges:
        out[idx[e.source] * n + idx[e.range]] += 1
    return NonNegIntMatrix(n, n, tuple(out))


def generated_edge_name(prefix: str, v: str, w: str, k: int) -> str:
    return f"{prefix}:{v}->{w}#{k}"


def default_names(n: int, prefix: str = "v") -> list[str]:
    return [f"{prefix}{i + 1}" for i in range(n)]


def graph_from_matrix(a: NonNegIntMatrix, names: Optional[Sequence[str]] = None) -> MultiDigraph:
    """Graph with ``a[v, w]`` parallel edges ``v -> w``.

    Edges are named ``e:<v>-><w>#<k>`` for ``k = 1 .. a[v, w]`` and listed
    row-major.  Vertex names default to ``v1 .. vn``.
    """
    if not a.is_square:
        raise DimensionError(f"graph_from_matrix needs a square matrix, got {a.rows}x{a.cols}")
    names = list(names) if names is not None else default_names(a.rows)
    if len(names) != a.rows:
        raise GraphError(f"expected {a.rows} vertex names, got {len(names)}")
    edges = []
    for i, v in enumerate(names):
        for j, w in enumerate(names):
            for k in range(1, a[i, j] + 1):
                edges.append(Edge(generated_edge_name("e", v, w, k), v, w))
    return MultiDigraph(tuple(names), tuple(edges))


@dataclass(frozen=True)
class GraphAnalysis:
    sinks: tuple[str, ...]
    sources: tuple[str, ...]
    return_path_counts: dict[str, int] = field(hash=False)
    condition_k: bool
    row_finite: bool = True


RETURN_CAP = 2


def first_return_counts(g: MultiDigraph, cap: int = RETURN_CAP) -> dict[str, int]:
    """Number of first-return paths at each vertex, saturated at ``cap``.

    A first-return path at v is a path ``e1 ... ek`` with ``s(e1) = r(ek) = v``
    that does not pass through v in between.  The count may be infinite,
    which the cap absorbs.
    """
    counts = {}
    for v in g.vertices:
        # paths[w]: capped number of paths w -> v that avoid v before the end.
        # Monotone fixed-point iteration; values live in {0..cap}, so it
        # stabilises after at most cap * |V| + 1 rounds.
        paths = {w: 0 for w in g.vertices if w != v}
        changed = True
        while changed:
            changed = False
            for w in paths:
                total = 0
                for e in g.out_edges(w):
                    total += 1 if e.range == v else paths[e.range]
                    if total >= cap:
                        total = cap
                        break
                if total != paths[w]:
                    paths[w] = total
                    changed = True
        total = 0
        for e in g.out_edges(v):
            total = min(cap, total + (1 if e.range == v else paths[e.range]))
        counts[v] = total
    return counts


def condition_k(g: MultiDigraph) -> bool:
    """Every vertex has no first-return path or at least two of them."""
    return all(c != 1 for c in first_return_counts(g).values())


def analyze(g: MultiDigraph) -> GraphAnalysis:
    counts = first_return_counts(g)
    return GraphAnalysis(
        sinks=tuple(v for v in g.vertices if g.out_degree(v) == 0),
        sources=tuple(v for v in g.vertices if g.in_degree(v) == 0),
        return_path_counts=counts,
        condition_k=all(c != 1 for c in counts.values()),
        row_finite=True,
    )
