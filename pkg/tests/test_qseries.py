from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from qweier.errors import DivisionByZeroSeries, PrecisionError, ValuationError
from qweier.qseries import INFINITE, QSeries


def qs(*coeffs, prec=None):
    return QSeries([F(c) for c in coeffs], prec)


small_rationals = st.fractions(
    min_value=-9, max_value=9, max_denominator=6
)


@st.composite
def small_series(draw, min_prec=1, max_prec=8):
    prec = draw(st.integers(min_value=min_prec, max_value=max_prec))
    coeffs = draw(
        st.lists(small_rationals, min_size=prec, max_size=prec)
    )
    return QSeries(coeffs, prec)


# -- construction and invariants ------------------------------------------


def test_coeffs_padded_to_prec():
    s = qs(1, 2, prec=5)
    assert s.prec == 5
    assert s.coeffs == (F(1), F(2), F(0), F(0), F(0))


def test_coeffs_truncated_to_prec():
    s = qs(1, 2, 3, 4, prec=2)
    assert s.coeffs == (F(1), F(2))


def test_immutability():
    s = qs(1, 2)
    with pytest.raises(AttributeError):
        s.prec = 10


# -- add -------------------------------------------------------------------


def test_add_truncates_to_common_precision():
    # (1 + 2q mod q^3) + (3q mod q^2) = 1 + 5q mod q^2
    a = qs(1, 2, 0, prec=3)
    b = qs(0, 3, prec=2)
    assert a + b == qs(1, 5, prec=2)


def test_add_zero_is_identity():
    a = qs(3, -1, F(2, 7), prec=3)
    assert a + QSeries.zero(3) == a


def test_add_negative_cancels():
    a = qs(1, 240, 2160, prec=3)
    assert (a + (-a)).is_zero()


# -- mul -------------------------------------------------------------------


def test_mul_basic():
    # (1+q)(1-q) = 1 - q^2 mod q^3
    assert qs(1, 1, prec=3) * qs(1, -1, prec=3) == qs(1, 0, -1, prec=3)


def test_mul_one_is_identity():
    a = qs(2, -3, 5, prec=3)
    assert a * QSeries.one(3) == a


def test_mul_by_scalar():
    assert qs(1, 2, prec=2) * 3 == qs(3, 6, prec=2)
    assert F(1, 2) * qs(4, 2, prec=2) == qs(2, 1, prec=2)


# -- q_derive ----------------------------------------------------------------


def test_q_derive():
    assert qs(1, 1, 1).q_derive() == qs(0, 1, 2)


def test_q_derive_constant_is_zero():
    assert qs(1, prec=4).q_derive().is_zero()


# -- valuation ---------------------------------------------------------------


def test_valuation_of_zero_is_infinite():
    assert QSeries.zero(10).valuation() == INFINITE
    assert INFINITE > 10 ** 9


def test_valuation_examples():
    assert qs(0, 0, 1, 0, -4).valuation() == 2
    assert qs(7).valuation() == 0


# -- pow ---------------------------------------------------------------------


def test_pow_zero_is_one():
    assert qs(0, 1, prec=4) ** 0 == QSeries.one(4)


def test_pow_square():
    assert qs(1, 1, prec=3) ** 2 == qs(1, 2, 1, prec=3)


# -- exact_div ----------------------------------------------------------------


def test_exact_div_monomial():
    # (q^2 + q^3)/q = q + q^2, precision contracts by 1
    a = qs(0, 0, 1, 1, prec=4)
    b = qs(0, 1, prec=4)
    assert a.exact_div(b) == qs(0, 1, 1, prec=3)


def test_exact_div_cancellation():
    a = qs(0, 1, -2, 3, 1, prec=5)
    cube = a ** 3
    assert cube.exact_div(a) == (a ** 2).truncated(4)


def test_exact_div_by_zero_series():
    with pytest.raises(DivisionByZeroSeries):
        qs(1, 2).exact_div(QSeries.zero(2))


def test_exact_div_valuation_mismatch():
    with pytest.raises(ValuationError):
        qs(1, 1).exact_div(qs(0, 1))


def test_exact_div_zero_dividend_allowed():
    # valuation(0 mod q^4) counts as >= 4 >= valuation(q)
    z = QSeries.zero(4).exact_div(qs(0, 1, prec=4))
    assert z.is_zero() and z.prec == 3


# -- shifted / truncated ------------------------------------------------------


def test_shifted_gains_precision():
    s = qs(1, 2, prec=2).shifted(3)
    assert s == qs(0, 0, 0, 1, 2, prec=5)


def test_truncated_cannot_extend():
    with pytest.raises(PrecisionError):
        qs(1, 2, prec=2).truncated(5)


def test_coeff_out_of_window():
    with pytest.raises(PrecisionError):
        qs(1, 2, prec=2).coeff(2)


# -- ring laws (property tests) ----------------------------------------------


@given(small_series(), small_series(), small_series())
def test_add_associative(a, b, c):
    assert (a + b) + c == a + (b + c)


@given(small_series(), small_series())
def test_mul_commutative(a, b):
    assert a * b == b * a


@given(small_series(), small_series(), small_series())
def test_mul_distributes(a, b, c):
    lhs = a * (b + c)
    rhs = a * b + a * c
    assert lhs == rhs


@given(small_series(), small_series(), small_series())
def test_mul_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(small_series(), small_series())
def test_q_derive_is_a_derivation(a, b):
    lhs = (a * b).q_derive()
    rhs = a.q_derive() * b + a * b.q_derive()
    assert lhs == rhs


@given(small_series(), small_series())
def test_valuation_adds_under_mul(a, b):
    va, vb = a.valuation(), b.valuation()
    prod = a * b
    if va == INFINITE or vb == INFINITE or va + vb >= prod.prec:
        return
    # Q has no zero divisors, so the leading terms cannot cancel.
    assert prod.valuation() == va + vb


@given(small_series(min_prec=2), small_series(min_prec=2))
def test_exact_div_round_trip(a, b):
    vb = b.valuation()
    va = a.valuation()
    if vb == INFINITE or (va != INFINITE and va < vb):
        return
    c = a.exact_div(b)
    assert (b * c).agrees_with(a, prec=c.prec)
