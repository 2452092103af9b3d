"""Change-of-basis matrix P that block-diagonalizes the permutation representation.

P^{-1} is carried in cleared-denominator form: ``p_inverse_scaled(n)``
returns (Q, n) with Q = n P^{-1}, an integer matrix. Every identity involving
the inverse is checked as an integer identity multiplied through by n.
"""
from __future__ import annotations

from .checks import Check, check_equal
from .errors import DegreeError
from .exactmat import IntMatrix, ScaledMatrix, diag, identity_matrix, mul
from .permrep import casimir


def _require_degree(n: int) -> None:
    if n < 2:
        raise DegreeError(f"degree must be at least 2, got {n}")


def _delta(a: int, b: int) -> int:
    return 1 if a == b else 0


def p_matrix(n: int) -> IntMatrix:
    _require_degree(n)
    # 1-based i, j as in the defining formula
    return IntMatrix(n, n, tuple(
        _delta(j, 1) - (1 - _delta(j, 1)) * _delta(i, 1) + _delta(i, n + 2 - j)
        for i in range(1, n + 1) for j in range(1, n + 1)
    ))


def p_inverse_numerator(n: int) -> IntMatrix:
    _require_degree(n)
    return IntMatrix(n, n, tuple(
        2 * _delta(i, 1) - 1 + n * _delta(i, n + 2 - j)
        for i in range(1, n + 1) for j in range(1, n + 1)
    ))


def p_inverse_scaled(n: int) -> ScaledMatrix:
    return ScaledMatrix(p_inverse_numerator(n), n)


def diagonalized_casimir(n: int) -> IntMatrix:
    """diag(n - 1, -1, ..., -1)."""
    _require_degree(n)
    return diag([n - 1] + [-1] * (n - 1))


def verify_inverse(n: int) -> Check:
    """P Q = n I and Q P = n I."""
    p, q = p_matrix(n), p_inverse_numerator(n)
    target = identity_matrix(n).scale(n)
    right = check_equal("inverse", target, mul(p, q))
    if not right.passed:
        return right
    return check_equal("inverse", target, mul(q, p))


def verify_diagonalization(n: int) -> Check:
    """Q C P = n D."""
    p, q = p_matrix(n), p_inverse_numerator(n)
    return check_equal("diagonalization", diagonalized_casimir(n).scale(n),
                       mul(mul(q, casimir(n)), p))
