"""Exact Gaussian-rational scalars, eighth roots of unity, parsing."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from holant import (
    QI,
    ScalarParseError,
    Zeta8,
    format_scalar,
    i_power,
    parse_scalar,
    parse_signature_values,
    scalars_equal,
    to_complex,
)
from holant.scalars import (
    QI_I,
    QI_ONE,
    QI_ZERO,
    conj,
    is_gaussian_root_of_unity,
    is_zero,
    norm_sq,
    product,
)

small_fracs = st.fractions(
    min_value=-8, max_value=8, max_denominator=6
)
gaussians = st.builds(QI, small_fracs, small_fracs)


def test_field_constants():
    assert QI_ZERO == QI(0)
    assert QI_ONE == QI(1)
    assert QI_I * QI_I == QI(-1)


def test_arithmetic_matches_complex():
    a = QI(Fraction(3, 2), Fraction(-1, 4))
    b = QI(-2, 5)
    assert to_complex(a + b) == to_complex(a) + to_complex(b)
    assert to_complex(a * b) == to_complex(a) * to_complex(b)
    assert to_complex(a - b) == to_complex(a) - to_complex(b)
    assert to_complex(a / b) == pytest.approx(to_complex(a) / to_complex(b))


@given(gaussians, gaussians)
def test_multiplication_commutes(a, b):
    assert a * b == b * a


@given(gaussians)
def test_division_inverts_multiplication(a):
    b = QI(Fraction(2, 3), Fraction(-1, 7))
    assert (a * b) / b == a


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        QI(1) / QI(0)


def test_power():
    assert QI(0, 1) ** 4 == QI(1)
    assert QI(2) ** -2 == QI(Fraction(1, 4))


@given(gaussians)
def test_norm_and_conjugate(a):
    assert norm_sq(a) == a.re * a.re + a.im * a.im
    assert conj(a) * a == QI(norm_sq(a))


def test_parse_scalar_forms():
    assert parse_scalar("3") == QI(3)
    assert parse_scalar("-1/2") == QI(Fraction(-1, 2))
    assert parse_scalar("i") == QI(0, 1)
    assert parse_scalar("-i") == QI(0, -1)
    assert parse_scalar("2+3i") == QI(2, 3)
    assert parse_scalar("1/2-3/4i") == QI(Fraction(1, 2), Fraction(-3, 4))
    assert parse_scalar(" 5 ") == QI(5)


@pytest.mark.parametrize("bad", ["", "bogus", "1+", "i i", "2..5", "1/0"])
def test_parse_scalar_rejects(bad):
    with pytest.raises(ScalarParseError):
        parse_scalar(bad)


@given(gaussians)
def test_format_parse_round_trip(a):
    assert parse_scalar(format_scalar(a)) == a


def test_format_complex_uses_repr():
    z = complex(0.5, -1.25)
    assert format_scalar(z) == repr(z)


def test_parse_signature_values():
    vals = parse_signature_values("1, i, -i, -1")
    assert vals == (QI(1), QI(0, 1), QI(0, -1), QI(-1))
    # length checks live with the consumer; empty entries fail here
    with pytest.raises(ScalarParseError):
        parse_signature_values("1,,3")


def test_scalars_equal_mixed_backends():
    assert scalars_equal(QI(Fraction(1, 2)), 0.5 + 0j)
    assert scalars_equal(0.5, 0.5 + 1e-12, 1e-9)
    assert not scalars_equal(QI(1), QI(0, 1))


def test_is_zero_tolerance():
    assert is_zero(QI(0))
    assert not is_zero(QI(Fraction(1, 10**9)))
    assert is_zero(1e-12 + 0j)
    assert not is_zero(1e-3, 1e-6)


def test_gaussian_roots_of_unity():
    # the only roots of unity in this field are the powers of i
    for k in range(4):
        assert is_gaussian_root_of_unity(i_power(k))
    assert not is_gaussian_root_of_unity(QI(2))
    assert not is_gaussian_root_of_unity(QI(1, 1))
    assert not is_gaussian_root_of_unity(QI(0))


def test_i_power_cycle():
    assert [i_power(k) for k in range(4)] == [QI(1), QI(0, 1), QI(-1), QI(0, -1)]
    assert i_power(-1) == i_power(3)
    assert i_power(7) == i_power(3)


def test_zeta8_squares_to_i():
    zeta = Zeta8(0, 1)
    assert zeta * zeta == Zeta8.from_qi(QI(0, 1))
    assert zeta ** 4 == Zeta8.from_qi(QI(-1))
    assert zeta ** 8 == Zeta8(1)


def test_zeta8_arithmetic_matches_complex():
    a = Zeta8(0, 1) + Zeta8.from_qi(QI(2, -1))
    b = Zeta8(0, 0, 0, 1) * Zeta8.from_qi(QI(0, 1))
    assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-12
    assert abs((a + b).to_complex() - (a.to_complex() + b.to_complex())) < 1e-12


def test_zeta8_qi_round_trip():
    v = QI(Fraction(3, 2), Fraction(-5, 4))
    assert Zeta8.from_qi(v).to_qi() == v
    with pytest.raises(ValueError):
        Zeta8(0, 1).to_qi()


def test_product_empty_is_one():
    assert product([]) == QI(1)
    assert product([QI(2), QI(3), QI(0, 1)]) == QI(0, 6)
