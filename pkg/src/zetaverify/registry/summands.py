"""Term generators for every series in the catalog.

Each generator has the signature ``gen(lift, **params)`` and yields the
terms for k = 0, 1, 2, ... forever.  Parameters arrive already in the
working number field (``Fraction``, :class:`ApproxReal`, :class:`Jet`,
``float`` ...); ``lift`` maps a rational literal into that field and is only
needed to seed accumulators that do not involve any parameter.

Pochhammer products are advanced one factor at a time so that no term ever
forms a huge intermediate (this also keeps float evaluation in range).
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from operator import mul

HALF = Fraction(1, 2)


def _prod(xs):
    return reduce(mul, xs)


def _rising_step(ups, downs, k):
    """(prod (u+k)) / (prod (v+k)) -- the factor taking (.)_k to (.)_{k+1}."""
    return _prod(u + k for u in ups) / _prod(v + k for v in downs)


# ---------------------------------------------------------------------------
# classical weights: (-1/4)^k (1)_k^5/(3/2)_k^5, (1/64)^k (1)_k^3/(3/2)_k^3,
# (1/64)^k (1/2)_k^3/(1)_k^3


def _quintic_weights(lift):
    w, k = lift(1), 0
    while True:
        yield k, w
        w = w * Fraction(-8 * (k + 1) ** 5, (2 * k + 3) ** 5)
        k += 1


def _cubic_weights(lift):
    w, k = lift(1), 0
    while True:
        yield k, w
        w = w * Fraction((k + 1) ** 3, 8 * (2 * k + 3) ** 3)
        k += 1


def _half_cubic_weights(lift):
    w, k = lift(1), 0
    while True:
        yield k, w
        w = w * Fraction((2 * k + 1) ** 3, 512 * (k + 1) ** 3)
        k += 1


def guillera(lift):
    for k, w in _quintic_weights(lift):
        yield w * (10 * k * k + 14 * k + 5)


def zeilberger(lift):
    for k, w in _cubic_weights(lift):
        yield w * (21 * k + 13)


def ramanujan(lift):
    for k, w in _half_cubic_weights(lift):
        yield w * (42 * k + 5)


class _OddEven:
    """Running H_k^(l), H_{2k}^(l) and H_{2k+1}^(l) for one order l."""

    def __init__(self, lift, order):
        self.order = order
        self.k = 0
        self.plain = lift(0)
        self.even = lift(0)
        self.odd = lift(1)

    def advance(self):
        k, l = self.k, self.order
        self.plain = self.plain + Fraction(1, (k + 1) ** l)
        self.even = self.odd + Fraction(1, (2 * k + 2) ** l)
        self.odd = self.even + Fraction(1, (2 * k + 3) ** l)
        self.k += 1


def zeta7_series(lift):
    h = _OddEven(lift, 4)
    for k, w in _quintic_weights(lift):
        yield w * (10 * k * k + 14 * k + 5) * (16 * h.odd + 3 * h.plain)
        h.advance()


def zeta3_squared_series(lift):
    h = _OddEven(lift, 3)
    for k, w in _quintic_weights(lift):
        yield w * ((10 * k * k + 14 * k + 5) * (8 * h.odd - h.plain) + Fraction(2, k + 1))
        h.advance()


def pi2zeta3_series(lift):
    h = _OddEven(lift, 3)
    for k, w in _cubic_weights(lift):
        yield w * ((21 * k + 13) * (h.odd + 2 * h.plain) - Fraction(27, 8 * (k + 1) ** 2))
        h.advance()


def catalan_series(lift):
    h = _OddEven(lift, 3)
    for k, w in _half_cubic_weights(lift):
        yield w * ((42 * k + 5) * (17 * h.even - 2 * h.plain) - Fraction(27, (2 * k + 1) ** 2))
        h.advance()


# open conjectures with the same weights


def conj_zeilberger_a(lift):
    h = _OddEven(lift, 3)
    for k, w in _cubic_weights(lift):
        yield w * (21 * k + 13) * (8 * h.odd + 43 * h.plain)
        h.advance()


def conj_zeilberger_b(lift):
    h = _OddEven(lift, 3)
    for k, w in _cubic_weights(lift):
        yield w * ((21 * k + 13) * h.plain - Fraction(1, (k + 1) ** 2))
        h.advance()


def conj_ramanujan_a(lift):
    h = _OddEven(lift, 3)
    for k, w in _half_cubic_weights(lift):
        yield w * (42 * k + 5) * (h.even - Fraction(43, 352) * h.plain)
        h.advance()


def conj_ramanujan_b(lift):
    h = _OddEven(lift, 3)
    for k, w in _half_cubic_weights(lift):
        yield w * ((42 * k + 5) * h.plain - Fraction(352, (2 * k + 1) ** 2))
        h.advance()


# ---------------------------------------------------------------------------
# the quadratic transformation with cubic weight (five free parameters)


def quad_lhs(lift, a, b, c, d, e):
    s = 1 + 2 * a - b - c - d - e
    ups = (1 + a - b - c, 1 + a - b - d, 1 + a - b - e, 1 + a - c - d, 1 + a - c - e, 1 + a - d - e)
    downs = (1 + a - b, 1 + a - c, 1 + a - d, 1 + a - e)
    w, k = 1 / (s * (s + 1)), 0
    while True:
        weight = (1 + 2 * a - b - c - d + 2 * k) * (2 + 2 * a - b - c - d - e + 2 * k) * (a - e + k) + (
            1 + a - b - c + k
        ) * (1 + a - b - d + k) * (1 + a - c - d + k)
        yield w * weight
        w = -w * _rising_step(ups, downs, k) / ((s + 2 * k + 2) * (s + 2 * k + 3))
        k += 1


def well_poised_rhs(lift, a, b, c, d, e):
    """(a+2k) (b)_k (c)_k (d)_k (e)_k / ((1+a-b)_k ... (1+a-e)_k)."""
    ups = (b, c, d, e)
    downs = (1 + a - b, 1 + a - c, 1 + a - d, 1 + a - e)
    w, k = lift(1), 0
    while True:
        yield (a + 2 * k) * w
        w = w * _rising_step(ups, downs, k)
        k += 1


def quad_x_lhs(lift, x):
    w, k = lift(1), 0
    while True:
        bk = 2 * (x + k) * (2 - x + 2 * k) + (1 + k) * (2 - 2 * x + k)
        yield w * bk
        w = w * Fraction(-(k + 1) ** 3, 2 * (2 * k + 3)) * (2 * x + k) * (2 - 2 * x + k) / (
            ((1 + x + k) * (2 - x + k)) ** 2
        )
        k += 1


def quad_x_rhs(lift, x):
    v, k = lift(1), 0
    while True:
        yield 2 * (2 * k + 1) * v
        v = v * ((x + k) * (1 - x + k) / ((2 - x + k) * (1 + x + k))) ** 2
        k += 1


def quad_x_reduced_lhs(lift, x):
    w, k = lift(1), 0
    s1 = s2 = lift(0)
    while True:
        bk = 2 * (x + k) * (2 - x + 2 * k) + (1 + k) * (2 - 2 * x + k)
        yield w * (1 + bk * (s1 - s2))
        w = w * Fraction(-(k + 1) ** 3, 2 * (2 * k + 3)) * (2 * x + k) * (2 - 2 * x + k) / (
            ((1 + x + k) * (2 - x + k)) ** 2
        )
        i = k + 1
        s1 = s1 + 2 / ((2 * x - 1 + i) * (1 - 2 * x + i))
        s2 = s2 + 1 / ((x + i) * (1 - x + i))
        k += 1


def quad_x_reduced_rhs(lift, x):
    v, k = lift(1), 0
    s2 = s3 = lift(0)
    while True:
        yield 2 * (2 * k + 1) * v * (s3 - s2)
        v = v * ((x + k) * (1 - x + k) / ((2 - x + k) * (1 + x + k))) ** 2
        i = k + 1
        s2 = s2 + 1 / ((x + i) * (1 - x + i))
        s3 = s3 + 1 / ((x - 1 + i) * (-x + i))
        k += 1


class _HalfShifted:
    """Running H_k^(l) together with H_k^(l)(1/2) and H_k^(l)(-1/2)."""

    def __init__(self, lift, order):
        self.order = order
        self.k = 0
        self.plain = self.up = self.down = lift(0)

    def advance(self):
        i, l = self.k + 1, self.order
        self.plain = self.plain + Fraction(1, i**l)
        self.up = self.up + Fraction(2**l, (2 * i + 1) ** l)
        self.down = self.down + Fraction(2**l, (2 * i - 1) ** l)
        self.k = i


def zeta7_part_one_lhs(lift):
    h2, h4 = _HalfShifted(lift, 2), _HalfShifted(lift, 4)
    for k, w in _quintic_weights(lift):
        x = h2.up - 2 * h2.plain
        yield w * ((10 * k * k + 14 * k + 5) * (h4.up - 8 * h4.plain + 2 * x * x) - 8 * x)
        h2.advance()
        h4.advance()


def zeta7_part_one_rhs(lift):
    h2, h4 = _HalfShifted(lift, 2), _HalfShifted(lift, 4)
    k = 0
    while True:
        y = h2.down - h2.up
        z = h4.down - h4.up
        yield Fraction(4, (2 * k + 1) ** 3) * (2 * y * y - z)
        h2.advance()
        h4.advance()
        k += 1


def zeta7_part_two_lhs(lift):
    h2, h4 = _HalfShifted(lift, 2), _HalfShifted(lift, 4)
    for k, w in _quintic_weights(lift):
        x = h2.up - 2 * h2.plain
        yield w * ((10 * k * k + 14 * k + 5) * (-6 * h4.plain + x * x) - 4 * x)
        h2.advance()
        h4.advance()


def zeta7_part_two_rhs(lift):
    h2 = _HalfShifted(lift, 2)
    k = 0
    while True:
        y = h2.down - h2.up
        yield Fraction(4, (2 * k + 1) ** 3) * y * y
        h2.advance()
        k += 1


def quad_bcd_lhs(lift, b, c, d):
    return quad_lhs(lift, 1, b, c - b, d - c, 2 - d)


def quad_bcd_rhs(lift, b, c, d):
    return well_poised_rhs(lift, 1, b, c - b, d - c, 2 - d)


def quad_cd_reduced_lhs(lift, c, d):
    ups = (c, 2 - c, HALF * 3 + c - d, HALF - c + d, d - HALF, HALF * 5 - d)
    downs = (HALF * 5 - c, 2 + c - d, d)
    w, k = lift(1), 0
    t1 = t2 = t3 = lift(0)
    while True:
        ck = 2 * (1 + k) * (d - 1 + k) * (3 - d + 2 * k) + (HALF * 5 - d + k) * (HALF * 3 + c - d + k) * (2 - c + k)
        yield w * ((t1 + t2 - t3) * ck + (2 - c + k))
        w = w * _rising_step(ups, downs, k) * Fraction(-1, 4 * (k + 2) * (k + HALF * 3) ** 2)
        i = k + 1
        t1 = t1 + 1 / ((HALF * 3 - d + i) * (HALF + c - d + i))
        t2 = t2 + 1 / ((d - c - HALF + i) * (d - HALF * 3 + i))
        t3 = t3 + 1 / ((HALF + i) * (HALF * 3 - c + i))
        k += 1


def quad_cd_reduced_rhs(lift, c, d):
    ups = (c - HALF, d - c, 2 - d)
    downs = (HALF * 5 - c, 2 + c - d, d)
    v, k = lift(1), 0
    u1 = t3 = lift(0)
    while True:
        yield 2 * v * (u1 - t3)
        v = v * _rising_step(ups, downs, k)
        i = k + 1
        u1 = u1 + 1 / ((i - HALF) * (c - HALF * 3 + i))
        t3 = t3 + 1 / ((HALF + i) * (HALF * 3 - c + i))
        k += 1


# ---------------------------------------------------------------------------
# t(3,3) and the zeta(3)^2 chain


def t33_euler_sum(lift):
    h = _OddEven(lift, 3)
    k = 0
    while True:
        yield (8 * h.even - h.plain) * Fraction(1, (2 * k + 1) ** 3)
        h.advance()
        k += 1


def cubic_quad_lhs(lift, a, b, c, d, e):
    """Quadratic transformation with the rational weight of degree one."""
    s = 1 + 2 * a - b - c - d - e
    ups = (c, d, e, 1 + a - b - c, 1 + a - b - d, 1 + a - b - e)
    downs = (1 + a - c, 1 + a - d, 1 + a - e, s)
    w, k = lift(1), 0
    while True:
        weight = (1 + 2 * a - b - c - d + 2 * k) * (a - e + k) / (s + k) + (1 + a - b - c + k) * (
            1 + a - b - d + k
        ) * (e + k) / ((1 + a - b + 2 * k) * (s + k))
        yield w * weight
        w = -w * _rising_step(ups, downs, k) / ((1 + a - b + 2 * k) * (2 + a - b + 2 * k))
        k += 1


def _cd_weights(lift, c, d):
    ups = (c, d - c, 2 + c - d, 2 - c, d - 1, 3 - d)
    downs = (HALF * 5 - c, HALF * 5 + c - d, d - HALF)
    w, k = lift(1), 0
    while True:
        yield k, w
        w = w * _rising_step(ups, downs, k) * Fraction(-1, 4 * (k + 1) * (k + HALF * 3) ** 2)
        k += 1


def cubic_cd_lhs(lift, c, d):
    for k, w in _cd_weights(lift, c, d):
        fk = (2 * d - 3 + 2 * k) * (7 - 2 * d + 4 * k) / 2 + (2 - c + k) * (3 - d + k) * (2 + c - d + k) / (k + 1)
        yield w * fk


def cubic_cd_rhs(lift, c, d):
    ups = (HALF, c, d - c, 3 - d)
    downs = (2, HALF * 5 - c, HALF * 5 + c - d, d - HALF)
    v, k = lift(1), 0
    while True:
        yield v * Fraction(4 * k + 3, 2)
        v = v * _rising_step(ups, downs, k)
        k += 1


def nine_f_eight_limit_rhs(lift, c, d):
    ups = (c - HALF, d - c - HALF, HALF * 5 - d)
    downs = (HALF * 5 - c, HALF * 5 + c - d, d - HALF)
    v, k = lift(1), 0
    while True:
        yield 2 * v
        v = v * _rising_step(ups, downs, k)
        k += 1


def cubic_d_lhs(lift, d):
    ups = (d - 1, d - 1, 3 - d, 3 - d)
    downs = (d - HALF, HALF * 7 - d)
    w, k = lift(1), 0
    v1 = v2 = v3 = lift(0)
    while True:
        poly = (10 * k * k + 14 * k - 2 * d * d + 8 * d - 3) / 2
        yield w * ((3 - d + k) / (k + 1) + poly * (v1 + v2 - v3))
        w = w * _rising_step(ups, downs, k) * Fraction(-(k + 1), 4 * (k + HALF * 3) ** 3)
        i = k + 1
        v1 = v1 + 1 / (i * (d - 2 + i))
        v2 = v2 + 1 / (i * (2 - d + i))
        v3 = v3 + 1 / ((HALF + i) * (HALF * 5 - d + i))
        k += 1


def cubic_d_rhs(lift, d):
    ups = (HALF, d - HALF * 3, HALF * 5 - d)
    downs = (HALF * 3, HALF * 7 - d, d - HALF)
    v, k = lift(1), 0
    v3 = v4 = lift(0)
    while True:
        yield 2 * v * (v4 - v3)
        v = v * _rising_step(ups, downs, k)
        i = k + 1
        v3 = v3 + 1 / ((HALF + i) * (HALF * 5 - d + i))
        v4 = v4 + 1 / ((i - HALF) * (d - HALF * 5 + i))
        k += 1


def zeta3sq_part_lhs(lift):
    h = _OddEven(lift, 3)
    for k, w in _quintic_weights(lift):
        yield w * ((10 * k * k + 14 * k + 5) * (8 * h.odd - h.plain - 8) + Fraction(2, k + 1))
        h.advance()


def zeta3sq_part_middle(lift):
    h = _OddEven(lift, 3)
    k = 0
    while True:
        m = Fraction(1, (2 * k + 1) ** 3)
        yield 8 * m * (8 * h.even - h.plain - 4 + 4 * m)
        h.advance()
        k += 1


# ---------------------------------------------------------------------------
# the quartic-denominator transformation and its terminating specializations


def quartic_weight(a, b, c, d, e, k):
    s = 1 + 2 * a - b - c - d - e
    first = (1 + 2 * a - b - c - d + 3 * k) * (a - e + 2 * k) / (s + 2 * k)
    second = (
        (e + k)
        * (1 + a - b - c + k)
        / ((1 + a - b + 2 * k) * (1 + a - d + 2 * k))
        * (1 + a - b - d + k)
        * (1 + a - c - d + k)
        * (2 + 2 * a - b - d - e + 3 * k)
        / ((s + 2 * k) * (s + 1 + 2 * k))
    )
    third = (
        (c + k)
        * (e + k)
        * (1 + a - b - c + k)
        * (1 + a - b - d + k)
        / ((1 + a - b + 2 * k) * (1 + a - c + 2 * k) * (1 + a - d + 2 * k) * (1 + a - e + 2 * k))
        * (1 + a - b - e + k)
        * (1 + a - c - d + k)
        * (1 + a - d - e + k)
        / ((s + 2 * k) * (s + 1 + 2 * k))
    )
    return first + second + third


def _quartic_prefactors(lift, a, b, c, d, e):
    s = 1 + 2 * a - b - c - d - e
    ups = (b, c, d, e, 1 + a - b - c, 1 + a - b - d, 1 + a - b - e, 1 + a - c - d, 1 + a - c - e, 1 + a - d - e)
    doubles = (1 + a - b, 1 + a - c, 1 + a - d, 1 + a - e, s)
    w, k = lift(1), 0
    while True:
        yield k, w
        den = _prod((v + 2 * k) * (v + 2 * k + 1) for v in doubles)
        w = -w * _prod(u + k for u in ups) / den
        k += 1


def quartic_lhs(lift, a, b, c, d, e):
    for k, w in _quartic_prefactors(lift, a, b, c, d, e):
        yield w * quartic_weight(a, b, c, d, e, k)


def quartic_terminating_lhs(lift, a, b, c, d, n):
    return quartic_lhs(lift, a, b, c - b, d - c, -n)


def quartic_terminating_rhs(lift, a, b, c, d, n):
    return well_poised_rhs(lift, a, b, c - b, d - c, -n)


def _b_derivative_of_weight(a, b, c, d, n, k):
    from ..special import Jet

    bj = Jet.variable(b, 1, "b")
    return quartic_weight(a, bj, c - bj, d - c, -n, k).derivative(1)


def quartic_derivative_lhs(lift, a, b, c, d, n):
    hs = [lift(0)] * 6  # H_k at shifts b-1, c-b-1, a+b-d, a-b+c-d, a+b-c+n, a-b+n
    shifts = (b - 1, c - b - 1, a + b - d, a - b + c - d, a + b - c + n, a - b + n)
    h2a = h2b = lift(0)  # H_{2k}(a-b), H_{2k}(a+b-c)
    for k, w in _quartic_prefactors(lift, a, b, c - b, d - c, -n):
        bracket = hs[0] - hs[1] + hs[2] - hs[3] + h2a - h2b + hs[4] - hs[5]
        weight = quartic_weight(a, b, c - b, d - c, -n, k)
        yield w * (bracket * weight + _b_derivative_of_weight(a, b, c, d, n, k))
        hs = [h + 1 / (x + k + 1) for h, x in zip(hs, shifts)]
        for i in (2 * k + 1, 2 * k + 2):
            h2a = h2a + 1 / (a - b + i)
            h2b = h2b + 1 / (a + b - c + i)


def quartic_derivative_rhs(lift, a, b, c, d, n):
    shifts = (b - 1, c - b - 1, a - b, a + b - c)
    hs = [lift(0)] * 4
    for k, term in enumerate(well_poised_rhs(lift, a, b, c - b, d - c, -n)):
        yield term * (hs[0] - hs[1] + hs[2] - hs[3])
        hs = [h + 1 / (x + k + 1) for h, x in zip(hs, shifts)]


def _finite_prefactors(lift, c, n, ups, doubles):
    w, k = lift(1), 0
    while True:
        yield k, w
        den = _prod((v + 2 * k) * (v + 2 * k + 1) for v in doubles)
        w = -w * _prod(u + k for u in ups) / den
        k += 1


def finite_c2_weights(c, n, k):
    p = (
        3 * k
        + 2
        + (c - 1 + k) * (3 - c + k) * (2 + c + 3 * k + n) * (k - n) / (2 * (c + 2 * k) * (2 + 2 * k + n) * (3 + 2 * k + n))
        + (c - 1 + k) ** 2
        * (3 - c + k)
        * (c + k + n)
        * (2 + k + n)
        * (k - n)
        / (2 * (c + 2 * k) * (4 - c + 2 * k) * (2 + 2 * k + n) * (3 + 2 * k + n) ** 2)
    )
    q = (
        (3 - c + k) ** 2
        * (k - n)
        / (4 * (c + 2 * k) * (4 - c + 2 * k) ** 2)
        * (64 + 22 * c - 5 * c * c + 118 * k + 2 * c * k + 43 * k * k + 54 * n + 36 * k * n + 9 * n * n)
        / ((2 + 2 * k + n) * (3 + 2 * k + n) ** 2)
    )
    return p, q


def finite_c2_lhs(lift, c, n):
    ups = (1, 1, c - 1, c - 1, 3 - c, 3 - c, c + n, 4 - c + n, 2 + n, -n)
    doubles = (2, c, 4 - c, 2 + n, 3 + n)
    s1 = s2 = s3 = lift(0)
    for k, w in _finite_prefactors(lift, c, n, ups, doubles):
        p, q = finite_c2_weights(c, n, k)
        yield w * ((2 * s1 - s2 + s3) * p + q)
        i = k + 1
        s1 = s1 + 1 / (i * (c - 2 + i))
        s3 = s3 + 1 / ((1 + n + i) * (3 - c + n + i))
        for j in (2 * k + 1, 2 * k + 2):
            s2 = s2 + 1 / ((1 + j) * (3 - c + j))


def finite_c2_rhs(lift, c, n):
    ups = (c - 1, 3 - c, -n)
    downs = (4 - c, c, 3 + n)
    v, k = lift(1), 0
    s1 = s2 = lift(0)
    while True:
        yield 2 * v * (s1 - s2)
        v = v * _rising_step(ups, downs, k)
        i = k + 1
        s1 = s1 + 1 / (i * (c - 2 + i))
        s2 = s2 + 1 / ((1 + i) * (3 - c + i))
        k += 1


def finite_c1_weights(c, n, k):
    r = (
        Fraction(6 * k + 1, 2)
        + (2 * c - 1 + 2 * k) * (3 - 2 * c + 2 * k) * (1 + c + 3 * k + n) * (k - n)
        / (2 * (c + 2 * k) * (1 + 4 * k + 2 * n) * (3 + 4 * k + 2 * n))
        + (2 * c - 1 + 2 * k) ** 2
        * (3 - 2 * c + 2 * k)
        * (c + k + n)
        * (1 + k + n)
        * (k - n)
        / (2 * (c + 2 * k) * (2 - c + 2 * k) * (1 + 4 * k + 2 * n) * (3 + 4 * k + 2 * n) ** 2)
    )
    s = (
        (3 - 2 * c + 2 * k) ** 2
        * (k - n)
        / (2 * (c + 2 * k) * (2 - c + 2 * k) ** 2)
        * (16 + 11 * c - 5 * c * c + 59 * k + 2 * c * k + 43 * k * k + 27 * n + 36 * k * n + 9 * n * n)
        / ((1 + 4 * k + 2 * n) * (3 + 4 * k + 2 * n) ** 2)
    )
    return r, s


def finite_c1_lhs(lift, c, n):
    ups = (HALF, HALF, c - HALF, c - HALF, HALF * 3 - c, HALF * 3 - c, c + n, 2 - c + n, 1 + n, -n)
    doubles = (1, c, 2 - c, HALF + n, HALF * 3 + n)
    s1 = s2 = s3 = lift(0)
    for k, w in _finite_prefactors(lift, c, n, ups, doubles):
        r, s = finite_c1_weights(c, n, k)
        yield w * ((2 * s1 - s2 + s3) * r + s)
        i = k + 1
        s1 = s1 + 1 / ((i - HALF) * (c - HALF * 3 + i))
        s3 = s3 + 1 / ((n + i) * (1 - c + n + i))
        for j in (2 * k + 1, 2 * k + 2):
            s2 = s2 + 1 / (j * (1 - c + j))


def finite_c1_rhs(lift, c, n):
    ups = (HALF, c - HALF, HALF * 3 - c, -n)
    downs = (1, 2 - c, c, HALF * 3 + n)
    v, k = lift(1), 0
    s1 = s2 = lift(0)
    while True:
        yield v * Fraction(4 * k + 1, 2) * (s1 - s2)
        v = v * _rising_step(ups, downs, k)
        i = k + 1
        s1 = s1 + 1 / ((i - HALF) * (c - HALF * 3 + i))
        s2 = s2 + 1 / (i * (1 - c + i))
        k += 1


def pi2zeta3_part_lhs(lift):
    h = _OddEven(lift, 3)
    for k, w in _cubic_weights(lift):
        yield w * ((21 * k + 13) * (h.odd + 2 * h.plain - 1) - Fraction(27, 8 * (k + 1) ** 2))
        h.advance()


def pi2zeta3_alternating(lift):
    """16 (-1)^k/(k+1)^2 {2 H_{k+1}^(3) - 1/(k+1)^3 - 1}; the k = 0 term vanishes."""
    h3 = lift(0)
    k = 0
    while True:
        m = Fraction(1, (k + 1) ** 3)
        h3 = h3 + m
        yield Fraction(16 * (-1) ** k, (k + 1) ** 2) * (2 * h3 - m - 1)
        k += 1


def alternating_h3_sum(lift):
    h3 = lift(0)
    k = 0
    while True:
        h3 = h3 + Fraction(1, (k + 1) ** 3)
        yield Fraction((-1) ** k, (k + 1) ** 2) * h3
        k += 1


def catalan_euler_sum(lift):
    h = _OddEven(lift, 3)
    v, k = lift(1), 0
    while True:
        yield v * ((-1) ** k * (4 * k + 1)) * h.even
        v = v * Fraction((2 * k + 1) ** 3, 8 * (k + 1) ** 3)
        h.advance()
        k += 1


# ---------------------------------------------------------------------------
# terminating 9F8


def nine_f_eight_terms(lift, upper, lower):
    """Terms of sum_k prod (upper)_k / (k! prod (lower)_k) at z = 1."""
    w, k = lift(1), 0
    while True:
        yield w
        w = w * _rising_step(upper, lower, k) / (k + 1)
        k += 1


def nine_f_eight_sides(a, b, c, d, e, f, n, reading="printed"):
    """Upper/lower parameter lists and the prefactor of both sides.

    ``g`` is fixed by the balance condition 2 + 3a = b+c+d+e+f+g-n.
    ``reading`` selects the lower parameters of the transformed series:
    "printed" uses 1+a-b, 1+a-c, 1+a-d; "shifted" uses 1+lam-b, ...
    """
    g = 2 + 3 * a + n - b - c - d - e - f
    lam = 1 + 2 * a - b - c - d
    lhs_up = (a, 1 + a / 2, b, c, d, e, f, g, -n)
    lhs_down = (a / 2, 1 + a - b, 1 + a - c, 1 + a - d, 1 + a - e, 1 + a - f, 1 + a - g, 1 + a + n)
    rhs_up = (lam, 1 + lam / 2, lam + b - a, lam + c - a, lam + d - a, e, f, g, -n)
    if reading == "printed":
        mid = (1 + a - b, 1 + a - c, 1 + a - d)
    elif reading == "shifted":
        mid = (1 + lam - b, 1 + lam - c, 1 + lam - d)
    else:
        raise ValueError(f"unknown reading {reading!r}")
    rhs_down = (lam / 2,) + mid + (1 + lam - e, 1 + lam - f, 1 + lam - g, 1 + lam + n)
    pre_up = (1 + a, 1 + lam - e, 1 + lam - f, 1 + lam - g)
    pre_down = (1 + lam, 1 + a - e, 1 + a - f, 1 + a - g)
    return (lhs_up, lhs_down), (rhs_up, rhs_down), (pre_up, pre_down)


# ---------------------------------------------------------------------------
# odd harmonic double sums


def t_double_terms(lift, k1, k2):
    """Terms (m >= 1) of t(k1,k2) = sum_m T_{m-1}^(k1) / (2m-1)^k2."""
    inner = lift(0)
    m = 1
    while True:
        yield inner * Fraction(1, (2 * m - 1) ** k2)
        inner = inner + Fraction(1, (2 * m - 1) ** k1)
        m += 1
