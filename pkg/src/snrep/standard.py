"""The standard representation in closed form, its relatives and characters.

Entries of the permutation matrix are read straight off the permutation,
A[r, c] = 1 iff a_r = c, so no n x n matrix is built on the fast paths.
"""
from __future__ import annotations

from enum import Enum
from fractions import Fraction

from .errors import CapacityError, DegreeError
from .exactmat import IntMatrix, trace
from .perm import (Permutation, class_representative, class_size, partitions,
                   sign)
from .permrep import perm_matrix

MAX_NORM_DEGREE = 10


class RepKind(str, Enum):
    PERMUTATION = "permutation"
    TRIVIAL = "trivial"
    SIGN = "sign"
    STANDARD = "standard"
    STANDARD_SIGN = "standard_sign"

    def dimension(self, n: int) -> int:
        if self is RepKind.PERMUTATION:
            return n
        if self in (RepKind.TRIVIAL, RepKind.SIGN):
            return 1
        return n - 1

    @property
    def min_degree(self) -> int:
        return 2 if self in (RepKind.STANDARD, RepKind.STANDARD_SIGN) else 1


def _require_degree(p: Permutation) -> None:
    if p.n < 2:
        raise DegreeError(f"standard representation needs n >= 2, got {p.n}")


def standard_matrix(p: Permutation) -> IntMatrix:
    """(n-1) x (n-1) matrix B with B[i, j] = A[n+1-i, n+1-j] - A[n+1-i, 1]."""
    _require_degree(p)
    n, a = p.n, p.one_line
    out = []
    for i in range(1, n):
        img = a[n - i]  # a_{n+1-i}, 1-based image
        first = 1 if img == 1 else 0
        for j in range(1, n):
            out.append((1 if img == n + 1 - j else 0) - first)
    return IntMatrix(n - 1, n - 1, tuple(out))


def conjugated_closed_form(p: Permutation) -> IntMatrix:
    """The full n x n conjugate P^{-1} A P, written entrywise.

    (i, j) entry: d(i,1) d(j,1) + (1 - d(i,1)) (1 - d(j,1)) (A[n+2-i, n+2-j] - A[n+2-i, 1]).
    Deliberately independent of :func:`standard_matrix`.
    """
    _require_degree(p)
    n, a = p.n, p.one_line

    def A(r: int, c: int) -> int:
        return 1 if a[r - 1] == c else 0

    def d(x: int, y: int) -> int:
        return 1 if x == y else 0

    return IntMatrix(n, n, tuple(
        d(i, 1) * d(j, 1)
        + (1 - d(i, 1)) * (1 - d(j, 1))
        * ((A(n + 2 - i, n + 2 - j) - A(n + 2 - i, 1)) if i > 1 and j > 1 else 0)
        for i in range(1, n + 1) for j in range(1, n + 1)
    ))


def sign_tensored_matrix(p: Permutation) -> IntMatrix:
    return standard_matrix(p).scale(sign(p))


def rep_matrix(kind: RepKind, p: Permutation) -> IntMatrix:
    kind = RepKind(kind)
    if p.n < kind.min_degree:
        raise DegreeError(f"{kind.value} representation needs n >= {kind.min_degree}")
    if kind is RepKind.PERMUTATION:
        return perm_matrix(p)
    if kind is RepKind.TRIVIAL:
        return IntMatrix(1, 1, (1,))
    if kind is RepKind.SIGN:
        return IntMatrix(1, 1, (sign(p),))
    if kind is RepKind.STANDARD:
        return standard_matrix(p)
    return sign_tensored_matrix(p)


def character(kind: RepKind, p: Permutation) -> int:
    return trace(rep_matrix(kind, p))


def conjugacy_classes(n: int) -> list[tuple[tuple[int, ...], int, Permutation]]:
    """(cycle type, class size, representative) for each class of S_n."""
    return [(shape, class_size(shape), class_representative(shape))
            for shape in partitions(n)]


def irreducibility_norm(kind: RepKind, n: int) -> Fraction:
    """<chi, chi> = (1/n!) sum over S_n of chi(g)^2; equals 1 iff irreducible.

    Summed class by class, since characters are constant on cycle types.
    """
    kind = RepKind(kind)
    if n > MAX_NORM_DEGREE:
        raise CapacityError(f"n = {n} exceeds limit {MAX_NORM_DEGREE}")
    if n < kind.min_degree:
        raise DegreeError(f"{kind.value} representation needs n >= {kind.min_degree}")
    total = order = 0
    for _, size, rep in conjugacy_classes(n):
        total += size * character(kind, rep) ** 2
        order += size
    return Fraction(total, order)
