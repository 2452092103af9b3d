"""Dense exact integer matrices with 64-bit overflow checking.

Python integers never wrap, so "checked" here means every constructed
matrix is validated against the signed 64-bit range and anything outside
it raises ``OverflowError``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from operator import mul as _imul
from typing import Iterable, Sequence

from .errors import ShapeError

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)


def _check_range(values: Iterable[int]) -> None:
    lo = hi = 0
    for v in values:
        if v > hi:
            hi = v
        elif v < lo:
            lo = v
    if hi > INT64_MAX or lo < INT64_MIN:
        raise OverflowError("matrix entry exceeds signed 64-bit range")


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]  # row-major

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ShapeError(f"matrix must be at least 1x1, got {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )
        _check_range(self.entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> IntMatrix:
        if not rows or len({len(r) for r in rows}) != 1:
            raise ShapeError("rows must be non-empty and of equal length")
        return cls(len(rows), len(rows[0]), tuple(int(v) for r in rows for v in r))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        """0-based entry access: ``m[i, j]``."""
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_lists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        return mul(self, other)

    def __add__(self, other: IntMatrix) -> IntMatrix:
        _same_shape(self, other)
        return IntMatrix(self.rows, self.cols,
                         tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        _same_shape(self, other)
        return IntMatrix(self.rows, self.cols,
                         tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> IntMatrix:
        return self.scale(-1)

    def scale(self, k: int) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(k * v for v in self.entries))

    def __str__(self) -> str:
        return str(self.to_lists())


@dataclass(frozen=True, eq=False)
class ScaledMatrix:
    """The exact rational matrix ``numerator / denominator``."""

    numerator: IntMatrix
    denominator: int

    def __post_init__(self) -> None:
        if self.denominator < 1:
            raise ValueError("denominator must be a positive integer")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ScaledMatrix):
            return NotImplemented
        return equals(self.numerator.scale(other.denominator),
                      other.numerator.scale(self.denominator))

    def __hash__(self) -> int:
        r = self.reduced()
        return hash((r.numerator, r.denominator))

    def reduced(self) -> ScaledMatrix:
        from math import gcd

        g = self.denominator
        for v in self.numerator.entries:
            g = gcd(g, v)
        if g == 1:
            return self
        num = self.numerator
        return ScaledMatrix(
            IntMatrix(num.rows, num.cols, tuple(v // g for v in num.entries)),
            self.denominator // g,
        )

    def to_fractions(self) -> list[list[Fraction]]:
        d = self.denominator
        return [[Fraction(v, d) for v in r] for r in self.numerator.to_lists()]


def _same_shape(a: IntMatrix, b: IntMatrix) -> None:
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise ShapeError(f"shape mismatch: {a.rows}x{a.cols} vs {b.rows}x{b.cols}")


def identity_matrix(n: int) -> IntMatrix:
    return IntMatrix(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))


def diag(values: Sequence[int]) -> IntMatrix:
    n = len(values)
    return IntMatrix(n, n, tuple(values[i] if i == j else 0
                                 for i in range(n) for j in range(n)))


def mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bcols = [b.entries[j::b.cols] for j in range(b.cols)]
    out = []
    for i in range(a.rows):
        r = a.entries[i * a.cols:(i + 1) * a.cols]
        for c in bcols:
            out.append(sum(map(_imul, r, c)))
    return IntMatrix(a.rows, b.cols, tuple(out))


def transpose(a: IntMatrix) -> IntMatrix:
    return IntMatrix(a.cols, a.rows,
                     tuple(v for j in range(a.cols) for v in a.entries[j::a.cols]))


def trace(a: IntMatrix) -> int:
    if not a.is_square:
        raise ShapeError("trace of a non-square matrix")
    return sum(a.entries[i * (a.cols + 1)] for i in range(a.rows))


def det(a: IntMatrix) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    if not a.is_square:
        raise ShapeError("determinant of a non-square matrix")
    n = a.rows
    m = a.to_lists()
    s = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    s = -s
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return s * m[n - 1][n - 1]


def equals(a: IntMatrix, b: IntMatrix) -> bool:
    return a.rows == b.rows and a.cols == b.cols and a.entries == b.entries


def is_identity(a: IntMatrix) -> bool:
    return a.is_square and a.entries == identity_matrix(a.rows).entries


def block_extract(a: IntMatrix, row0: int, col0: int, h: int, w: int) -> IntMatrix:
    """The h x w submatrix whose top-left corner is at 1-based (row0, col0)."""
    if (h < 1 or w < 1 or row0 < 1 or col0 < 1
            or row0 + h - 1 > a.rows or col0 + w - 1 > a.cols):
        raise IndexError(
            f"block ({row0},{col0}) of size {h}x{w} outside {a.rows}x{a.cols} matrix"
        )
    r0, c0 = row0 - 1, col0 - 1
    return IntMatrix(h, w, tuple(a[r0 + i, c0 + j] for i in range(h) for j in range(w)))


def direct_sum(*blocks: IntMatrix) -> IntMatrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = [0] * (rows * cols)
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            base = (r0 + i) * cols + c0
            out[base:base + b.cols] = b.row(i)
        r0 += b.rows
        c0 += b.cols
    return IntMatrix(rows, cols, tuple(out))
