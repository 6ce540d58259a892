"""Text formats for matrices (``.mat``), graphs (``.graph``), witness
manifests (``.esse``) and chains (``.chain``), plus the report writers.

All parsers skip blank lines and lines starting with ``#`` and raise
:class:`ParseError` carrying the 1-based line number of the offending
line.  Serializers emit the canonical form, so
``parse(serialize(x)) == x`` and ``serialize(parse(text))`` canonicalizes.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator, Optional, Union

from shiftequiv.graphs import Edge, GraphError, MultiDigraph
from shiftequiv.matrices import MatrixError, MatrixOverflowError, NonNegIntMatrix
from shiftequiv.sse import ElementaryPair, SSEChain

PathLike = Union[str, Path]


class ParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None, source: Optional[str] = None):
        self.line = line
        self.source = source
        where = source or "<input>"
        if line is not None:
            where = f"{where}:{line}"
        super().__init__(f"{where}: {message}")


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _nonneg_int(token: str, lineno: int, source: Optional[str]) -> int:
    try:
        value = int(token, 10)
    except ValueError:
        raise ParseError(f"not an integer: {token!r}", lineno, source) from None
    if value < 0:
        raise ParseError(f"negative entry {value}", lineno, source)
    return value


def loads_matrix(text: str, source: Optional[str] = None) -> NonNegIntMatrix:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty matrix file", None, source)
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError("header must be '<rows> <cols>'", lineno, source)
    rows, cols = (_nonneg_int(p, lineno, source) for p in parts)
    if rows < 1 or cols < 1:
        raise ParseError(f"shape must be positive, got {rows}x{cols}", lineno, source)
    body = lines[1:]
    if len(body) != rows:
        where = body[rows][0] if len(body) > rows else (body[-1][0] if body else lineno)
        raise ParseError(f"expected {rows} rows, found {len(body)}", where, source)
    entries = []
    for lineno, line in body:
        tokens = line.split()
        if len(tokens) != cols:
            raise ParseError(f"expected {cols} entries, found {len(tokens)}", lineno, source)
        entries.extend(_nonneg_int(t, lineno, source) for t in tokens)
    try:
        return NonNegIntMatrix(rows, cols, tuple(entries))
    except (MatrixError, MatrixOverflowError) as exc:
        raise ParseError(str(exc), None, source) from None


def dumps_matrix(a: NonNegIntMatrix) -> str:
    lines = [f"{a.rows} {a.cols}"]
    lines += [" ".join(map(str, a.row(i))) for i in range(a.rows)]
    return "\n".join(lines) + "\n"


def loads_graph(text: str, source: Optional[str] = None) -> MultiDigraph:
    vertices: list[str] = []
    vertex_set: set[str] = set()
    edges: list[Edge] = []
    edge_lines: list[int] = []
    edge_names: set[str] = set()
    for lineno, line in _content_lines(text):
        tokens = line.split()
        kind = tokens[0]
        if kind == "vertex":
            if len(tokens) != 2:
                raise ParseError("expected 'vertex <name>'", lineno, source)
            name = tokens[1]
            if name in vertex_set:
                raise ParseError(f"duplicate vertex {name!r}", lineno, source)
            vertices.append(name)
            vertex_set.add(name)
        elif kind == "edge":
            if len(tokens) != 4:
                raise ParseError("expected 'edge <name> <source> <range>'", lineno, source)
            name = tokens[1]
            if name in edge_names:
                raise ParseError(f"duplicate edge {name!r}", lineno, source)
            edges.append(Edge(*tokens[1:]))
            edge_lines.append(lineno)
            edge_names.add(name)
        else:
            raise ParseError(f"unknown record {kind!r}", lineno, source)
    for e, lineno in zip(edges, edge_lines):
        for end in (e.source, e.range):
            if end not in vertex_set:
                raise ParseError(f"edge {e.name!r} uses undeclared vertex {end!r}", lineno, source)
    try:
        return MultiDigraph(tuple(vertices), tuple(edges))
    except GraphError as exc:
        raise ParseError(str(exc), None, source) from None


def dumps_graph(g: MultiDigraph) -> str:
    lines = [f"vertex {v}" for v in g.vertices]
    lines += [f"edge {e.name} {e.source} {e.range}" for e in g.edges]
    return "\n".join(lines) + "\n"


def read_matrix(path: PathLike) -> NonNegIntMatrix:
    return loads_matrix(Path(path).read_text(encoding="utf-8"), str(path))


def read_graph(path: PathLike) -> MultiDigraph:
    return loads_graph(Path(path).read_text(encoding="utf-8"), str(path))


def write_text(path: PathLike, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8", newline="\n")


def read_esse(path: PathLike) -> ElementaryPair:
    """Witness manifest: four lines naming the A, B, R and S ``.mat`` files.

    Relative paths resolve against the manifest's directory.
    """
    path = Path(path)
    lines = list(_content_lines(path.read_text(encoding="utf-8")))
    if len(lines) != 4:
        raise ParseError(f"expected 4 matrix paths (A, B, R, S), found {len(lines)}", None, str(path))
    mats = [read_matrix(path.parent / line) for _, line in lines]
    try:
        return ElementaryPair(*mats)
    except MatrixError as exc:
        raise ParseError(str(exc), None, str(path)) from None


def read_chain(path: PathLike) -> SSEChain:
    """Chain file: ``matrix <path>`` lines, then ``witness <R path> <S path>`` lines.

    Witness i links the i-th and (i+1)-th matrix.
    """
    path = Path(path)
    matrix_paths, witness_paths = [], []
    for lineno, line in _content_lines(path.read_text(encoding="utf-8")):
        tokens = line.split()
        if tokens[0] == "matrix" and len(tokens) == 2:
            if witness_paths:
                raise ParseError("matrix lines must precede witness lines", lineno, str(path))
            matrix_paths.append(tokens[1])
        elif tokens[0] == "witness" and len(tokens) == 3:
            witness_paths.append(tokens[1:])
        else:
            raise ParseError("expected 'matrix <path>' or 'witness <R> <S>'", lineno, str(path))
    matrices = [read_matrix(path.parent / p) for p in matrix_paths]
    factors = [(read_matrix(path.parent / r), read_matrix(path.parent / s)) for r, s in witness_paths]
    try:
        return SSEChain.from_factors(matrices, factors)
    except ValueError as exc:
        raise ParseError(str(exc), None, str(path)) from None


def format_subset(subset) -> str:
    return "{" + ", ".join(subset) + "}"


def lattice_report(lattice) -> str:
    lines = [format_subset(s) for s in lattice.subsets]
    lines.append(f"proper_with_empty={lattice.count_with_empty}")
    lines.append(f"proper_nonzero={lattice.count_nonzero}")
    lines.append(f"simple={str(lattice.simple).lower()}")
    return "\n".join(lines) + "\n"


def corner_report(corner) -> str:
    return "".join(f"{e} -> {a}.{b}\n" for e, (a, b) in corner.edge_map.items())
