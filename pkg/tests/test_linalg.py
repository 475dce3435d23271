"""Exact linear algebra: rref, kernels, solving, characteristic
polynomials and eigenvalue extraction over Q and prime fields."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adrlab.fields import Field, QQ
from adrlab.linalg import (Matrix, field_eigenvalues, poly_roots_in_field,
                           unique_eigenvalue)

GF5 = Field(5)


def mat(field, rows):
    return Matrix(field, [[field.of(x) for x in r] for r in rows],
                  cols=len(rows[0]) if rows else 0)


def test_field_arithmetic_rational():
    assert QQ.of("2/5") + QQ.of("3/5") == QQ.one
    assert QQ.inv(QQ.of(-4)) == Fraction(-1, 4)


def test_field_arithmetic_prime():
    assert GF5.of(7) == 2
    assert GF5.inv(3) == 2  # 3*2 = 6 = 1 mod 5
    assert GF5.of(Fraction(1, 2)) == 3


def test_prime_validation():
    with pytest.raises(ValueError):
        Field(6)
    with pytest.raises(ValueError):
        Field(2 ** 31)


def test_rref_identity():
    m = mat(QQ, [[1, 2], [3, 4]])
    red, pivots = m.rref()
    assert pivots == [0, 1]
    assert red.data[0][:2] == [QQ.one, QQ.zero]


def test_kernel_solve_roundtrip():
    m = mat(QQ, [[1, 2, 3], [2, 4, 6]])
    ker = m.kernel_basis()
    assert len(ker) == 2
    for v in ker:
        assert all(x == QQ.zero for x in m.apply(v))
    sol = m.solve([QQ.of(6), QQ.of(12)])
    assert m.apply(sol) == [QQ.of(6), QQ.of(12)]
    assert m.solve([QQ.one, QQ.zero]) is None


def test_zero_shaped_matrices():
    z = Matrix.zeros(QQ, 0, 3)
    assert z.shape() == (0, 3)
    assert len(z.kernel_basis()) == 3
    zt = z.transpose()
    assert zt.shape() == (3, 0)
    assert (zt @ z).shape() == (3, 3)


def test_charpoly_companion():
    # x^2 - x - 1 via its companion matrix
    m = mat(QQ, [[0, 1], [1, 1]])
    assert m.charpoly() == [QQ.of(-1), QQ.of(-1), QQ.one]


def test_unique_eigenvalue():
    assert unique_eigenvalue(mat(QQ, [[3, 1], [0, 3]])) == QQ.of(3)
    assert unique_eigenvalue(mat(QQ, [[1, 0], [0, 2]])) is None
    # rotation matrix: no rational eigenvalue at all
    assert unique_eigenvalue(mat(QQ, [[0, -1], [1, 0]])) is None


def test_field_eigenvalues_partial_split():
    m = mat(QQ, [[2, 0, 0], [0, 0, -1], [0, 1, 0]])
    roots, residual = field_eigenvalues(m)
    assert roots == [(QQ.of(2), 1)]
    assert residual == 2


def test_roots_in_prime_field():
    # x^2 + 1 over F_5 has roots 2 and 3
    roots, residual = poly_roots_in_field(GF5, [1, 0, 1])
    assert residual == 0
    assert sorted(r for r, _ in roots) == [2, 3]


@st.composite
def small_matrices(draw):
    n = draw(st.integers(min_value=1, max_value=4))
    entries = draw(st.lists(st.integers(min_value=-5, max_value=5),
                            min_size=n * n, max_size=n * n))
    return Matrix.from_entries(QQ, n, n, [QQ.of(x) for x in entries])


@settings(max_examples=60, deadline=None)
@given(small_matrices())
def test_rank_nullity(m):
    assert m.rank() + len(m.kernel_basis()) == m.cols


@settings(max_examples=60, deadline=None)
@given(small_matrices())
def test_charpoly_evaluates_to_zero_on_matrix(m):
    # Cayley-Hamilton, coefficient form
    p = m.charpoly()
    acc = Matrix.zeros(QQ, m.rows, m.rows)
    power = Matrix.identity(QQ, m.rows)
    for c in p:
        acc = acc + power.scale(c)
        power = m @ power
    assert acc.is_zero()


@settings(max_examples=40, deadline=None)
@given(small_matrices())
def test_rref_idempotent(m):
    red, pivots = m.rref()
    again, pivots2 = red.rref()
    assert again == red and pivots == pivots2
