"""Dense exact matrices: arithmetic, elimination, Kronecker convention."""

from fractions import Fraction

import pytest

from holant import DimensionMismatch, Matrix, QI
from holant.linalg import (
    SingularMatrixError,
    span_dim,
    sum_products,
    vector_scalar_normal,
    vectors_independent,
)


def m(rows):
    return Matrix([[QI(v) if isinstance(v, int) else v for v in r] for r in rows])


def test_shape_checks():
    with pytest.raises(DimensionMismatch):
        Matrix([[QI(1), QI(2)], [QI(3)]])
    with pytest.raises(DimensionMismatch):
        Matrix([])


def test_immutability():
    a = Matrix.identity(2)
    with pytest.raises(AttributeError):
        a.rows = 3


def test_mixed_entries_promote_to_float():
    a = Matrix([[QI(1), 2.0 + 0j], [QI(0), QI(1)]])
    assert not a.is_exact
    assert a[0, 0] == 1 + 0j


def test_matmul_and_dimension_error():
    a = m([[1, 2], [3, 4]])
    b = m([[0, 1], [1, 0]])
    assert a @ b == m([[2, 1], [4, 3]])
    with pytest.raises(DimensionMismatch):
        a @ Matrix.column([QI(1), QI(2), QI(3)])


def test_kron_first_factor_is_high_bits():
    # index (i1 i2, j1 j2) must read a[i1,j1] * b[i2,j2]
    a = m([[1, 2], [3, 4]])
    b = m([[5, 6], [7, 8]])
    k = a.kron(b)
    assert k.shape == (4, 4)
    for i1 in range(2):
        for i2 in range(2):
            for j1 in range(2):
                for j2 in range(2):
                    assert k[2 * i1 + i2, 2 * j1 + j2] == a[i1, j1] * b[i2, j2]


def test_inverse_round_trip():
    a = m([[1, 2], [3, 5]])
    assert a @ a.inverse() == Matrix.identity(2)
    with pytest.raises(SingularMatrixError):
        m([[1, 2], [2, 4]]).inverse()


def test_pow_negative_uses_inverse():
    a = m([[2, 0], [0, 3]])
    assert a.pow(-1) == a.inverse()
    assert a.pow(0) == Matrix.identity(2)
    assert a.pow(3) == m([[8, 0], [0, 27]])


def test_determinant():
    assert m([[1, 2], [3, 4]]).det() == QI(-2)
    assert m([[2]]).det() == QI(2)
    # triangular case: product of the diagonal
    assert m([[3, 9, 1], [0, 2, 5], [0, 0, 7]]).det() == QI(42)


def test_rref_rank_kernel():
    a = m([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert a.rank() == 2
    basis = a.kernel_basis()
    assert len(basis) == 1
    vec = basis[0]
    prod = a @ Matrix.column(list(vec))
    assert all(prod[i, 0] == QI(0) for i in range(3))


def test_rref_float_pivoting():
    a = Matrix([[1e-14 + 0j, 1 + 0j], [1 + 0j, 0j]])
    # tiny pivot must not be chosen over the unit entry
    assert a.rank() == 2


def test_char_poly_convention():
    # coefficients of det(X I - M), highest power first after the monic term
    a = m([[2, 1], [0, 3]])
    coeffs = a.char_poly()
    assert coeffs == (QI(-5), QI(6))


def test_char_poly_trace_and_det():
    a = m([[1, 2, 0], [0, 1, 3], [4, 0, 1]])
    coeffs = a.char_poly()
    assert coeffs[0] == -QI(3)          # -trace
    assert coeffs[-1] == -a.det()       # (-1)^n det, n = 3


def test_is_diagonal_and_proportional():
    d = Matrix.diagonal([QI(1), QI(2)])
    assert d.is_diagonal()
    assert not m([[1, 1], [0, 2]]).is_diagonal()
    assert m([[2, 4], [6, 8]]).proportional_to(m([[1, 2], [3, 4]]))
    assert not m([[2, 4], [6, 9]]).proportional_to(m([[1, 2], [3, 4]]))


def test_sum_products_exact():
    assert sum_products([QI(1), QI(2)], [QI(3), QI(4)]) == QI(11)


def test_vector_scalar_normal():
    vec = [QI(0), QI(2), QI(4)]
    normal = vector_scalar_normal(vec)
    assert normal == (QI(0), QI(1), QI(2))
    assert vector_scalar_normal([QI(0), QI(0)]) is None


def test_span_dim_and_independence():
    v1 = (QI(1), QI(0))
    v2 = (QI(0), QI(1))
    v3 = (QI(1), QI(1))
    assert span_dim([v1, v2, v3]) == 2
    assert vectors_independent([v1, v2])
    assert not vectors_independent([v1, v1])


def test_equal_within_tolerance():
    a = m([[1, 2], [3, 4]])
    b = Matrix([[1 + 1e-12 + 0j, 2 + 0j], [3 + 0j, 4 + 0j]])
    assert a.equal_within(b, 1e-9)
    assert not a.equal_within(b.scale(2 + 0j), 1e-9)


def test_fraction_entries_survive():
    a = Matrix([[QI(Fraction(1, 3))]])
    assert (a @ a)[0, 0] == QI(Fraction(1, 9))
