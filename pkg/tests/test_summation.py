from fractions import Fraction
from itertools import count
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles as O
from zetaverify.constants import catalan, pi, zeta_int
from zetaverify.numerics import PrecisionContext, agree_to_digits
from zetaverify.registry import summands as S
from zetaverify.special import H
from zetaverify.summation import (
    AlternatingPolyDecay,
    ExtrapolationError,
    Geometric,
    PolyDecay,
    RatioAssertionError,
    SeriesDescriptor,
    SignPatternError,
    SummationError,
    Terminating,
    cvz_d,
    cvz_estimate,
    cvz_weights,
    sum_cvz,
    sum_finite,
    sum_geometric,
    sum_richardson,
    tail_slope,
)

CTX = PrecisionContext.for_digits(60)


def powers(lift, q):
    x = lift(1)
    while True:
        yield x
        x = x * q


def inverse_powers(lift, p):
    for k in count(1):
        yield lift(Fraction(1, k**p))


def alt_inverse(lift, p, odd=False):
    for k in count(0):
        m = 2 * k + 1 if odd else k + 1
        yield lift(Fraction((-1) ** k, m**p))


def geo(q, bound=None):
    q = Fraction(q)
    return SeriesDescriptor(f"geo{q}", powers, Geometric(bound or abs(q)), (("q", q),))


# finite -----------------------------------------------------------------------


def test_sum_finite_basics():
    one = SeriesDescriptor("one", powers, Terminating(0), (("q", Fraction(0)),))
    assert sum_finite(one, 0) == 1
    assert sum_finite(one, -1) == 0
    s = SeriesDescriptor("late", powers, Terminating(3), (("q", Fraction(1, 2)),), start=5)
    assert sum_finite(s, 3) == 0


def test_sum_finite_zeilberger_partial():
    # (21k+13) (1)_k^3 / (64^k (3/2)_k^3), with (3/2)_k = (2k+1)!/(4^k k!)
    def term(k):
        three_halves = Fraction(factorial(2 * k + 1), 4**k * factorial(k))
        return Fraction((21 * k + 13) * factorial(k) ** 3, 64**k) / three_halves**3

    s = SeriesDescriptor("zeilberger", S.zeilberger, Terminating(3))
    assert sum_finite(s, 3) == sum(term(k) for k in range(4))
    assert term(1) == Fraction(34 * 8, 64 * 27)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.fractions(max_denominator=50), min_size=1, max_size=30))
def test_sum_finite_is_exact(xs):
    def listed(lift):
        yield from (lift(x) for x in xs)

    s = SeriesDescriptor("list", listed, Terminating(len(xs) - 1))
    assert sum_finite(s, len(xs) - 1) == sum(xs, Fraction(0))


# geometric -------------------------------------------------------------------


@pytest.mark.parametrize("q", ["1/2", "1/4", "1/64", "-1/4"])
def test_geometric_contains_closed_form(q):
    q = Fraction(q)
    r = sum_geometric(geo(q), Fraction(1, 10**50), CTX)
    assert r.rigorous
    assert r.value.contains(1 / (1 - q))
    assert r.value.radius <= Fraction(1, 10**50)


def test_ratio_violation_names_k():
    # declared 1/4 but true ratio 1/2
    with pytest.raises(RatioAssertionError) as info:
        sum_geometric(geo(Fraction(1, 2), Fraction(1, 4)), Fraction(1, 10**20), CTX)
    assert info.value.k == 1


def test_geometric_term_budget():
    s = SeriesDescriptor("guillera", S.guillera, Geometric(Fraction(3, 10), 2))
    r = sum_geometric(s, Fraction(1, 10**52), CTX)
    assert r.terms_used <= 120
    z = SeriesDescriptor("zeilberger", S.zeilberger, Geometric(Fraction(1, 32), 4))
    assert sum_geometric(z, Fraction(1, 10**52), CTX).terms_used <= 40
    with pytest.raises(SummationError):
        sum_geometric(s, Fraction(1, 10**52), CTX, max_terms=10)


def test_engine_preconditions():
    with pytest.raises(SummationError):
        sum_richardson(geo(Fraction(1, 2)), 64, 4, CTX)
    with pytest.raises(SummationError):
        sum_cvz(geo(Fraction(1, 2)), 10, CTX)
    with pytest.raises(ValueError):
        PolyDecay(Fraction(3, 2))
    with pytest.raises(ValueError):
        Geometric(Fraction(1))


# Richardson ------------------------------------------------------------------


@pytest.mark.parametrize("p", [2, 3])
def test_richardson_zeta(p):
    s = SeriesDescriptor(f"zeta{p}", inverse_powers, PolyDecay(Fraction(p)), (("p", p),))
    r = sum_richardson(s, 64, 6, CTX)
    assert not r.rigorous
    assert agree_to_digits(r.value, zeta_int(p, CTX)) >= 10
    assert r.value.contains(zeta_int(p, CTX).midpoint)


def test_richardson_fractional_exponent():
    # terms (k + 1/3)^(-5/2) are not rational, so use (k)_{5/2}-like rational surrogate:
    # 1/(k(k+1)) telescopes to 1 and decays like k^-2
    def tele(lift):
        for k in count(1):
            yield lift(Fraction(1, k * (k + 1)))

    s = SeriesDescriptor("telescoping", tele, PolyDecay(Fraction(2)))
    r = sum_richardson(s, 64, 6, CTX)
    assert agree_to_digits(r.value, r.value.__class__.from_rational(1, CTX.bits)) >= 15


def test_richardson_on_geometric_input():
    s = SeriesDescriptor("misdeclared", powers, PolyDecay(Fraction(2)), (("q", Fraction(1, 2)),))
    r = sum_richardson(s, 64, 4, CTX)
    assert r.value.contains(2)
    assert r.heuristic_gap < Fraction(1, 10**15)
    assert sum_richardson(s, 128, 4, CTX).heuristic_gap < r.heuristic_gap


def test_richardson_depth_consistency():
    s = SeriesDescriptor("zeta3", inverse_powers, PolyDecay(Fraction(3)), (("p", 3),))
    a = sum_richardson(s, 64, 6, CTX)
    b = sum_richardson(s, 64, 7, CTX)
    assert abs(a.value.midpoint - b.value.midpoint) <= a.heuristic_gap


def test_richardson_flags_divergence():
    # a lone spike between the last two nodes wrecks the final column
    def late_spike(lift):
        for k in count(1):
            yield lift(Fraction(1, k * k) + (Fraction(1, 1000) if k == 1000 else 0))

    s = SeriesDescriptor("spike", late_spike, PolyDecay(Fraction(2)))
    with pytest.raises(ExtrapolationError, match="increase base_N"):
        sum_richardson(s, 16, 6, CTX)


def test_tail_slope():
    s = SeriesDescriptor("zeta3", inverse_powers, PolyDecay(Fraction(3)), (("p", 3),))
    assert abs(tail_slope(s) - 3) < 0.01


# CVZ -------------------------------------------------------------------------


def test_cvz_integer_weights():
    assert [cvz_d(n) for n in range(5)] == [1, 3, 17, 99, 577]
    for n in (1, 5, 20, 40):
        w = cvz_weights(n)
        assert len(w) == n and all(isinstance(c, int) for c in w)
    # exact rational run: sum (-1)^k/(k+1) at depth 20 is log 2 to ~15 digits
    est = cvz_estimate([Fraction(1, k + 1) for k in range(20)], 20)
    assert abs(est - O.frac(O.LN2)) < Fraction(1, 10**14)


def test_cvz_log2():
    s = SeriesDescriptor("log2", alt_inverse, AlternatingPolyDecay(Fraction(1)), (("p", 1),))
    r = sum_cvz(s, 32, CTX)
    assert abs(r.value.midpoint - O.frac(O.LN2)) < Fraction(1, 10**12)
    assert abs(r.value.midpoint - O.frac(O.LN2)) <= r.value.radius


def test_cvz_catalan():
    s = SeriesDescriptor("G", alt_inverse, AlternatingPolyDecay(Fraction(2)), (("p", 2), ("odd", True)))
    r = sum_cvz(s, 32, CTX)
    assert abs(r.value.midpoint - O.frac(O.CATALAN)) < Fraction(1, 10**12)
    assert agree_to_digits(r.value, catalan(CTX)) >= 12


def test_cvz_alternating_h3():
    s = SeriesDescriptor("alt-h3", S.alternating_h3_sum, AlternatingPolyDecay(Fraction(2)))
    r = sum_cvz(s, 24, CTX)
    assert abs(r.value.midpoint - O.frac(O.ALT_H3)) < Fraction(1, 10**8)
    target = pi(CTX) ** 2 * zeta_int(3, CTX) / 8 - zeta_int(5, CTX) * Fraction(21, 32)
    assert agree_to_digits(r.value, target) >= 8


def test_cvz_double_run_within_gap():
    s = SeriesDescriptor("alt-h3", S.alternating_h3_sum, AlternatingPolyDecay(Fraction(2)))
    a = sum_cvz(s, 24, CTX)
    b = sum_cvz(s, 40, CTX)
    assert abs(a.value.midpoint - b.value.midpoint) <= a.heuristic_gap


def test_cvz_sign_pattern():
    s = SeriesDescriptor("zeta2", inverse_powers, AlternatingPolyDecay(Fraction(2)), (("p", 2),))
    with pytest.raises(SignPatternError):
        sum_cvz(s, 10, CTX)


def test_engines_cross_agree():
    # sum (-1/4)^k: geometric and CVZ both apply
    g = sum_geometric(geo(Fraction(-1, 4)), Fraction(1, 10**40), CTX)
    c = sum_cvz(SeriesDescriptor("alt", powers, AlternatingPolyDecay(Fraction(1)), (("q", Fraction(-1, 4)),)), 40, CTX)
    assert g.value.overlaps(c.value)


def test_descriptor_term_access():
    s = SeriesDescriptor("alt-cat", S.catalan_euler_sum, AlternatingPolyDecay(Fraction(1, 2)), start=1)
    with pytest.raises(IndexError):
        s.term(0)
    assert s.term(1) != 0
    assert H(3, 3) == Fraction(251, 216)
