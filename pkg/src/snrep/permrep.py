"""Permutation representation matrices and their Casimir operator."""
from __future__ import annotations

from .checks import Check, check_equal
from .errors import DegreeError
from .exactmat import IntMatrix, identity_matrix, mul, transpose
from .perm import Permutation, rank


def perm_matrix(p: Permutation) -> IntMatrix:
    """n x n 0/1 matrix with a 1 at (i, a_i) in each row i."""
    n = p.n
    out = [0] * (n * n)
    for i, a in enumerate(p.images):
        out[i * n + a] = 1
    return IntMatrix(n, n, tuple(out))


def casimir(n: int) -> IntMatrix:
    """Zero diagonal, ones everywhere else; commutes with every perm_matrix."""
    if n < 1:
        raise DegreeError("degree must be at least 1")
    return IntMatrix(n, n, tuple(int(i != j) for i in range(n) for j in range(n)))


def verify_orthogonal(p: Permutation) -> Check:
    a = perm_matrix(p)
    return check_equal("orthogonal", identity_matrix(p.n), mul(transpose(a), a),
                       rank(p), p.one_line)


def verify_casimir_commutes(p: Permutation) -> Check:
    """C A = A C, and the intermediate step C A = J - A (J all ones)."""
    n = p.n
    a = perm_matrix(p)
    c = casimir(n)
    ca = mul(c, a)
    r, ol = rank(p), p.one_line
    ones_minus_a = IntMatrix(n, n, tuple(1 - v for v in a.entries))
    step = check_equal("casimir_commutes", ones_minus_a, ca, r, ol)
    if not step.passed:
        return step
    return check_equal("casimir_commutes", mul(a, c), ca, r, ol)
