import itertools

import pytest
from hypothesis import given, strategies as st

from snrep.errors import ShapeError
from snrep.exactmat import (INT64_MAX, IntMatrix, ScaledMatrix, block_extract, det, diag,
                            direct_sum, equals, identity_matrix, is_identity, mul,
                            trace, transpose)
from snrep.permrep import casimir
from snrep.basis import p_inverse_numerator, p_matrix

M = IntMatrix.from_rows


def leibniz_det(m):
    n = m.rows
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inv % 2 else 1
        for i in range(n):
            term *= m[i, perm[i]]
        total += term
    return total


def naive_mul(a, b):
    return [[sum(a[i, k] * b[k, j] for k in range(a.cols)) for j in range(b.cols)]
            for i in range(a.rows)]


@st.composite
def matrices(draw, rows=None, cols=None, lo=-9, hi=9):
    r = rows or draw(st.integers(1, 5))
    c = cols or draw(st.integers(1, 5))
    return IntMatrix(r, c, tuple(draw(st.lists(st.integers(lo, hi), min_size=r * c,
                                               max_size=r * c))))


@st.composite
def square_chain(draw):
    n = draw(st.integers(1, 5))
    return draw(matrices(n, n)), draw(matrices(n, n)), draw(matrices(n, n))


def test_mul_examples():
    m = M([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert mul(identity_matrix(3), m) == m
    swap = M([[0, 1], [1, 0]])
    assert mul(swap, swap) == identity_matrix(2)
    assert mul(p_matrix(3), p_inverse_numerator(3)) == identity_matrix(3).scale(3)


def test_mul_shape_mismatch():
    with pytest.raises(ShapeError):
        mul(identity_matrix(2), identity_matrix(3))


def test_overflow_is_loud():
    big = M([[INT64_MAX]])
    with pytest.raises(OverflowError):
        mul(big, M([[2]]))
    with pytest.raises(OverflowError):
        big + M([[1]])
    assert (big - M([[1]])).entries == (INT64_MAX - 1,)


def test_constructor_validation():
    with pytest.raises(ShapeError):
        IntMatrix(2, 2, (1, 2, 3))
    with pytest.raises(ShapeError):
        M([[1, 2], [3]])


def test_transpose_examples():
    assert transpose(identity_matrix(4)) == identity_matrix(4)
    assert transpose(M([[0, 1], [0, 0]])) == M([[0, 0], [1, 0]])
    assert transpose(casimir(5)) == casimir(5)
    assert transpose(M([[1, 2, 3]])) == M([[1], [2], [3]])


@pytest.mark.parametrize("m, expected", [
    (identity_matrix(4), 1), (M([[1, 0], [-1, -1]]), -1), (M([[-1, -1], [1, 0]]), 1),
    (M([[0, 1], [1, 0]]), -1), (M([[2, 4], [1, 2]]), 0),
])
def test_det_examples(m, expected):
    assert det(m) == expected


def test_det_needs_square():
    with pytest.raises(ShapeError):
        det(M([[1, 2]]))


def test_trace_equals_identity_block():
    assert trace(identity_matrix(5)) == 5
    m = M([[1, 2], [3, 4]])
    assert equals(m, m) and not equals(m, identity_matrix(2))
    assert is_identity(identity_matrix(3)) and not is_identity(casimir(3))
    b = M([[1, 0], [-1, -1]])
    assert block_extract(direct_sum(M([[1]]), b), 2, 2, 2, 2) == b
    assert direct_sum(M([[1]]), b) == M([[1, 0, 0], [0, 1, 0], [0, -1, -1]])
    assert diag([2, -1, -1]) == M([[2, 0, 0], [0, -1, 0], [0, 0, -1]])


@pytest.mark.parametrize("args", [(0, 1, 1, 1), (2, 2, 2, 1), (1, 1, 3, 1), (1, 1, 0, 1)])
def test_block_extract_out_of_range(args):
    with pytest.raises(IndexError):
        block_extract(identity_matrix(2), *args)


@given(square_chain())
def test_mul_associative(abc):
    a, b, c = abc
    assert mul(mul(a, b), c) == mul(a, mul(b, c))


@given(st.data())
def test_mul_matches_naive_and_transpose_rule(data):
    r, k, c = (data.draw(st.integers(1, 5)) for _ in range(3))
    a, b = data.draw(matrices(r, k)), data.draw(matrices(k, c))
    assert mul(a, b).to_lists() == naive_mul(a, b)
    assert transpose(mul(a, b)) == mul(transpose(b), transpose(a))


@given(st.data())
def test_det_matches_leibniz(data):
    n = data.draw(st.integers(1, 5))
    m = data.draw(matrices(n, n, -4, 4))
    assert det(m) == leibniz_det(m)


@given(st.data())
def test_det_multiplicative(data):
    n = data.draw(st.integers(1, 4))
    a, b = data.draw(matrices(n, n, -5, 5)), data.draw(matrices(n, n, -5, 5))
    assert det(mul(a, b)) == det(a) * det(b)


@given(matrices(), st.integers(1, 50), st.integers(1, 50))
def test_scaled_matrix_equality(m, d, k):
    assert ScaledMatrix(m, d) == ScaledMatrix(m.scale(k), k * d)
    assert ScaledMatrix(m, d).reduced() == ScaledMatrix(m, d)
    assert hash(ScaledMatrix(m, d)) == hash(ScaledMatrix(m.scale(k), k * d))


def test_scaled_matrix_rejects_bad_denominator():
    with pytest.raises(ValueError):
        ScaledMatrix(identity_matrix(2), 0)
    assert ScaledMatrix(identity_matrix(2), 2) != ScaledMatrix(identity_matrix(2), 3)
