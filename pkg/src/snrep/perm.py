"""Permutations of {1, ..., n} in one-line notation.

Images are stored 0-based internally; the public constructor and
``one_line`` use 1-based values.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterator, Sequence

from .errors import CapacityError, DegreeError

#: largest degree whose n! we agree to enumerate
MAX_ENUM_DEGREE = 20


@dataclass(frozen=True)
class Permutation:
    """An element of S_n, given by the images (a_1, ..., a_n) of 1..n.

    >>> Permutation.from_one_line([2, 3, 1]).one_line
    (2, 3, 1)
    """

    images: tuple[int, ...]  # 0-based

    def __post_init__(self) -> None:
        n = len(self.images)
        if n == 0:
            raise DegreeError("permutation degree must be at least 1")
        if sorted(self.images) != list(range(n)):
            raise ValueError(f"not a permutation: {self.one_line}")

    @classmethod
    def from_one_line(cls, values: Sequence[int]) -> Permutation:
        return cls(tuple(int(v) - 1 for v in values))

    @property
    def n(self) -> int:
        return len(self.images)

    @property
    def one_line(self) -> tuple[int, ...]:
        return tuple(v + 1 for v in self.images)

    def __call__(self, i: int) -> int:
        """Image of the 1-based point ``i``."""
        return self.images[i - 1] + 1

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.one_line)) + ")"


def identity(n: int) -> Permutation:
    if n < 1:
        raise DegreeError("permutation degree must be at least 1")
    return Permutation(tuple(range(n)))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` first, then ``q``: result(i) = q(p(i)).

    With this convention ``perm_matrix(p) @ perm_matrix(q)`` equals
    ``perm_matrix(compose(p, q))``.
    """
    if p.n != q.n:
        raise DegreeError(f"degree mismatch: {p.n} vs {q.n}")
    qi = q.images
    return Permutation(tuple(qi[a] for a in p.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for i, a in enumerate(p.images):
        inv[a] = i
    return Permutation(tuple(inv))


def cycles(p: Permutation) -> list[tuple[int, ...]]:
    """Disjoint cycles (0-based points), each starting at its smallest point."""
    seen = [False] * p.n
    out = []
    for start in range(p.n):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = p.images[i]
        out.append(tuple(cyc))
    return out


def cycle_type(p: Permutation) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def sign(p: Permutation) -> int:
    # a k-cycle is a product of k - 1 transpositions
    return -1 if (p.n - len(cycles(p))) % 2 else 1


def fixed_points(p: Permutation) -> int:
    return sum(1 for i, a in enumerate(p.images) if i == a)


def rank(p: Permutation) -> int:
    """1-based lexicographic rank of ``p`` among all of S_n (Lehmer code)."""
    n = p.n
    remaining = list(range(n))
    r = 0
    for pos, a in enumerate(p.images):
        idx = remaining.index(a)
        r += idx * factorial(n - 1 - pos)
        del remaining[idx]
    return r + 1


def unrank(n: int, k: int) -> Permutation:
    """The k-th permutation of S_n in lexicographic order, 1 <= k <= n!."""
    if n < 1:
        raise DegreeError("permutation degree must be at least 1")
    total = factorial(n)
    if not 1 <= k <= total:
        raise IndexError(f"rank {k} out of range [1, {total}]")
    k -= 1
    remaining = list(range(n))
    images = []
    for pos in range(n - 1, -1, -1):
        idx, k = divmod(k, factorial(pos))
        images.append(remaining.pop(idx))
    return Permutation(tuple(images))


def _lex_permutations(n: int) -> Iterator[tuple[int, ...]]:
    # Narayana's next-permutation; yields a mutable-state snapshot each step
    a = list(range(n))
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] > a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] < a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


def enumerate_perms(n: int) -> Iterator[Permutation]:
    """All n! permutations of S_n, in rank order 1..n!."""
    if n < 1:
        raise DegreeError("permutation degree must be at least 1")
    if n > MAX_ENUM_DEGREE:
        raise CapacityError(f"n = {n} exceeds enumeration limit {MAX_ENUM_DEGREE}")
    for images in _lex_permutations(n):
        yield Permutation(images)


def elements(n: int) -> list[Permutation]:
    return list(enumerate_perms(n))


def partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Partitions of n as weakly decreasing tuples, largest first part first."""
    def gen(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for part in range(min(rest, cap), 0, -1):
            for tail in gen(rest - part, part):
                yield (part,) + tail
    return gen(n, n)


def class_representative(shape: Sequence[int]) -> Permutation:
    """A permutation of the given cycle type, cycles on consecutive points."""
    images = []
    start = 0
    for length in shape:
        images.extend(range(start + 1, start + length))
        images.append(start)
        start += length
    return Permutation(tuple(images))


def class_size(shape: Sequence[int]) -> int:
    """Number of elements of S_n with the given cycle type."""
    n = sum(shape)
    denom = 1
    for length in set(shape):
        m = list(shape).count(length)
        denom *= factorial(m) * length**m
    return factorial(n) // denom
