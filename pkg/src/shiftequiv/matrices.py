"""Exact non-negative integer matrices.

Entries are plain Python ints, but every constructed entry and every
intermediate sum of a product is checked against the signed 64-bit range.
Exceeding it raises :class:`MatrixOverflowError` instead of silently
producing a big integer, so results agree with a fixed-width
implementation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

INT64_MAX = 2**63 - 1


class MatrixError(ValueError):
    """Invalid matrix data (negative entries, wrong entry count, ...)."""


class DimensionError(MatrixError):
    """Operand shapes are incompatible."""


class MatrixOverflowError(OverflowError):
    """An entry or intermediate sum left the signed 64-bit range."""


def _checked(value: int) -> int:
    if value > INT64_MAX:
        raise MatrixOverflowError(f"value {value} exceeds 64-bit range")
    return value


@dataclass(frozen=True)
class NonNegIntMatrix:
    """Immutable rows x cols matrix of non-negative integers, row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise MatrixError(f"shape must be positive, got {self.rows}x{self.cols}")
        entries = tuple(self.entries)
        if len(entries) != self.rows * self.cols:
            raise MatrixError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(entries)}"
            )
        for idx, x in enumerate(entries):
            if isinstance(x, bool) or not isinstance(x, int):
                raise MatrixError(f"entry {idx} is not an integer: {x!r}")
            if x < 0:
                i, j = divmod(idx, self.cols)
                raise MatrixError(f"negative entry {x} at ({i + 1},{j + 1})")
            _checked(x)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> NonNegIntMatrix:
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise MatrixError("matrix must have at least one row and column")
        width = len(rows[0])
        for i, r in enumerate(rows):
            if len(r) != width:
                raise MatrixError(f"row {i + 1} has {len(r)} entries, expected {width}")
        return cls(len(rows), width, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> NonNegIntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> NonNegIntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index ({i},{j}) out of range for {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return self.entries[j::self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> NonNegIntMatrix:
        return NonNegIntMatrix(
            self.cols, self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def total(self) -> int:
        return _checked(sum(self.entries))

    def max_entry(self) -> int:
        return max(self.entries)

    def trace(self) -> int:
        if not self.is_square:
            raise DimensionError(f"trace of non-square {self.rows}x{self.cols} matrix")
        return _checked(sum(self.entries[i * self.cols + i] for i in range(self.rows)))

    def __matmul__(self, other: NonNegIntMatrix) -> NonNegIntMatrix:
        return multiply(self, other)

    def __repr__(self):
        body = "; ".join(" ".join(map(str, self.row(i))) for i in range(self.rows))
        return f"NonNegIntMatrix({self.rows}x{self.cols}: {body})"


def multiply(a: NonNegIntMatrix, b: NonNegIntMatrix) -> NonNegIntMatrix:
    """Exact product ``a @ b``; raises on shape mismatch or 64-bit overflow."""
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    out = []
    for i in range(a.rows):
        arow = a.row(i)
        for j in range(b.cols):
            acc = 0
            for k, x in enumerate(arow):
                if x:
                    acc = _checked(acc + _checked(x * b.entries[k * b.cols + j]))
            out.append(acc)
    return NonNegIntMatrix(a.rows, b.cols, tuple(out))


def trace_powers(a: NonNegIntMatrix, kmax: int) -> list[int]:
    """Return ``[tr(a), tr(a^2), ..., tr(a^kmax)]``."""
    if not a.is_square:
        raise DimensionError(f"trace powers need a square matrix, got {a.rows}x{a.cols}")
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    traces = []
    power = a
    for k in range(1, kmax + 1):
        if k > 1:
            power = multiply(power, a)
        traces.append(power.trace())
    return traces


def block_bipartite(r: NonNegIntMatrix, s: NonNegIntMatrix) -> NonNegIntMatrix:
    """The square block matrix ``(0 R; S 0)`` for R m x n and S n x m."""
    m, n = r.rows, r.cols
    if s.shape != (n, m):
        raise DimensionError(f"R is {m}x{n}, so S must be {n}x{m}, got {s.rows}x{s.cols}")
    size = m + n
    out = [0] * (size * size)
    for i in range(m):
        for j in range(n):
            out[i * size + m + j] = r[i, j]
    for i in range(n):
        for j in range(m):
            out[(m + i) * size + j] = s[i, j]
    return NonNegIntMatrix(size, size, tuple(out))


def block_diagonal(*blocks: NonNegIntMatrix) -> NonNegIntMatrix:
    """Square block-diagonal matrix of square blocks."""
    if not blocks:
        raise MatrixError("need at least one block")
    for b in blocks:
        if not b.is_square:
            raise DimensionError("block_diagonal needs square blocks")
    size = sum(b.rows for b in blocks)
    out = [0] * (size * size)
    offset = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                out[(offset + i) * size + offset + j] = b[i, j]
        offset += b.rows
    return NonNegIntMatrix(size, size, tuple(out))


def matrix(rows: Iterable[Iterable[int]]) -> NonNegIntMatrix:
    """Shorthand for :meth:`NonNegIntMatrix.from_rows`."""
    return NonNegIntMatrix.from_rows([list(r) for r in rows])
