from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetaverify.special import (
    H,
    HarmonicPoleError,
    HarmonicSpec,
    Jet,
    JetDivisionError,
    LaurentSeries,
    harmonic,
    jet_arith,
    mixed_coefficient,
    nest_jets,
    pochhammer,
    pochhammer_jet,
    taylor_coefficient,
)

HALF = Fraction(1, 2)
small_q = st.fractions(min_value=-7, max_value=7, max_denominator=12)


def test_pochhammer_examples():
    assert pochhammer(Fraction(9, 4), 0) == 1
    assert pochhammer(HALF, 3) == Fraction(15, 8)
    assert pochhammer(1, 4) == 24
    assert pochhammer(-2, 5) == 0


@pytest.mark.parametrize("x", [Fraction(1, 3), Fraction(-7, 2), Fraction(5), Fraction(-11, 12)])
def test_pochhammer_recurrence(x):
    p = Fraction(1)
    for m in range(200):
        assert pochhammer(x, m) == p
        p *= x + m


def test_harmonic_examples():
    assert harmonic(HarmonicSpec(0, 3, Fraction(5, 7))) == 0
    assert harmonic(HarmonicSpec(3, 1, 0)) == Fraction(11, 6)
    assert harmonic(HarmonicSpec(2, 2, HALF)) == Fraction(136, 225)


def test_harmonic_pole_names_k():
    with pytest.raises(HarmonicPoleError) as info:
        H(5, 2, -3)
    assert "3" in str(info.value)
    assert H(2, 1, -3) == Fraction(-1, 2) + -1


def _odd_part(k, order):
    return sum(Fraction(1, (2 * i + 1) ** order) for i in range(k + 1))


@pytest.mark.parametrize("order,scale", [(3, 8), (4, 16)])
def test_duplication(order, scale):
    for k in range(101):
        assert H(k, order, HALF) == scale * H(2 * k + 1, order) - H(k, order) - scale
        # equivalently the odd reciprocals past 1
        assert H(k, order, HALF) == scale * (_odd_part(k, order) - 1)


@pytest.mark.parametrize("order,scale", [(2, 4), (4, 16)])
def test_telescoping(order, scale):
    for k in range(101):
        lhs = H(k, order, -HALF) - H(k, order, HALF)
        assert lhs == scale * (1 - Fraction(1, (2 * k + 1) ** order))


def test_jet_square_and_self_division():
    a = Fraction(3, 7)
    x = Jet.variable(a)
    sq = x * x
    assert sq.coeffs == (a * a, 2 * a)
    one = jet_arith(x, x, "div")
    assert one.coeffs == (1, 0)


def test_jet_division_by_zero_constant_term():
    x = Jet.variable(Fraction(0))
    with pytest.raises(JetDivisionError):
        Jet.constant(Fraction(1)) / x


def test_jet_int_division_stays_rational():
    x = Jet.variable(Fraction(1, 3), 2)
    half = x / 2
    assert all(isinstance(c, Fraction) for c in half.coeffs)


def _f(x):
    return (x * x + 3) / (2 * x - 5) * (x + Fraction(1, 4)) ** 3


def test_order_two_against_finite_differences():
    # central differences with a rational step of 1e-20: error O(h^2)
    a = Fraction(2, 3)
    j = _f(Jet.variable(a, 2))
    h = Fraction(1, 10**20)
    d1 = (_f(a + h) - _f(a - h)) / (2 * h)
    d2 = (_f(a + h) - 2 * _f(a) + _f(a - h)) / (h * h)
    assert abs(j.coeffs[1] - d1) < Fraction(1, 10**30)
    assert abs(2 * j.coeffs[2] - d2) < Fraction(1, 10**15)


def test_pochhammer_jet_examples():
    j = pochhammer_jet(1, 3)
    assert j.coeffs == (6, 11)
    assert pochhammer_jet(Fraction(5, 3), 0).coeffs == (1, 0)


@settings(max_examples=200, deadline=None)
@given(small_q, st.integers(min_value=0, max_value=30))
def test_pochhammer_jet_derivative_is_harmonic(x0, m):
    # D (1+x)_m = (1+x)_m H_m(x)
    try:
        expected = pochhammer(1 + x0, m) * H(m, 1, x0)
    except HarmonicPoleError:
        return
    j = pochhammer_jet(1 + x0, m)
    assert j.coeffs[0] == pochhammer(1 + x0, m)
    assert j.coeffs[1] == expected


def test_nested_jets():
    c, d = nest_jets(1, Fraction(3, 2))
    assert mixed_coefficient(c * d) == 1
    assert mixed_coefficient(pochhammer(c, 2) * pochhammer(d, 2)) == 12
    const = Fraction(5) + 0 * c * d
    assert taylor_coefficient(const, 1, 0) == 0
    assert taylor_coefficient(const, 0, 1) == 0
    assert taylor_coefficient(const, 1, 1) == 0
    assert taylor_coefficient(Fraction(7), 1) == 0
    with pytest.raises(ValueError):
        nest_jets(1, 2, "c", "c")


def test_laurent_limits():
    n = LaurentSeries.n_variable()
    # (n+1)(n+2)/n^2 -> 1 and (n-3)/(2n+1) -> 1/2
    assert ((n + 1) * (n + 2) / (n * n)).limit() == 1
    assert ((n - 3) / (2 * n + 1)).limit() == HALF
    assert pochhammer(1 + n, 0) == 1
