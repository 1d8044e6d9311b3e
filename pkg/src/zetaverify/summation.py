"""Series evaluation engines.

A :class:`SeriesDescriptor` wraps a field-generic term generator together
with its convergence class.  Four engines consume descriptors:

* :func:`sum_finite` -- exact rational partial sums;
* :func:`sum_geometric` -- rigorous balls for geometrically convergent series;
* :func:`sum_richardson` -- extrapolation for tails decaying like k**-p;
* :func:`sum_cvz` -- Cohen/Villegas/Zagier acceleration of alternating series.

Only the first two are rigorous.  The others fold a heuristic error estimate
into the radius and say so.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from itertools import islice
from typing import Callable, Iterator, Union

from .numerics import ApproxReal, PrecisionContext, error_bound

CVZ_STEP = 16
CVZ_RATE = Fraction(583, 100)  # just above 3 + sqrt(8)


class SummationError(ArithmeticError):
    """An engine precondition failed while summing."""


class RatioAssertionError(SummationError):
    def __init__(self, name: str, k: int, ratio_bound: Fraction):
        super().__init__(f"{name}: |t({k})| > {ratio_bound}*|t({k - 1})|; the declared ratio bound is wrong")
        self.k = k


class ExtrapolationError(SummationError):
    pass


class SignPatternError(SummationError):
    pass


@dataclass(frozen=True)
class Geometric:
    ratio_bound: Fraction
    from_index: int = 0

    def __post_init__(self):
        if not 0 < self.ratio_bound < 1:
            raise ValueError("ratio bound must lie in (0, 1)")


@dataclass(frozen=True)
class PolyDecay:
    exponent: Fraction

    def __post_init__(self):
        if self.exponent < 2:
            raise ValueError("PolyDecay needs exponent >= 2")


@dataclass(frozen=True)
class AlternatingPolyDecay:
    exponent: Fraction

    def __post_init__(self):
        if self.exponent < Fraction(1, 2):
            raise ValueError("AlternatingPolyDecay needs exponent >= 1/2")


@dataclass(frozen=True)
class Terminating:
    """Finite sum; the terms past ``last`` vanish or are ignored."""

    last: int


Klass = Union[Geometric, PolyDecay, AlternatingPolyDecay, Terminating]


@dataclass(frozen=True)
class SeriesDescriptor:
    """``summand(lift, **params)`` yields the terms for k = 0, 1, ...;
    the series is the sum from ``start`` on."""

    name: str
    summand: Callable[..., Iterator]
    klass: Klass
    params: tuple = ()
    start: int = 0

    def terms(self, lift) -> Iterator:
        kwargs = {k: (v if isinstance(v, int) else lift(v)) for k, v in self.params}
        return islice(self.summand(lift, **kwargs), self.start, None)

    def term(self, k: int) -> Fraction:
        """Exact term t(k) for k >= start."""
        if k < self.start:
            raise IndexError(f"{self.name} starts at k = {self.start}")
        return next(islice(self.terms(Fraction), k - self.start, None))


@dataclass
class SumResult:
    value: ApproxReal
    rigorous: bool
    terms_used: int
    engine: str
    heuristic_gap: Fraction | None = None
    settings: dict = field(default_factory=dict)


def ball_lift(ctx: PrecisionContext):
    return partial(ApproxReal.from_rational, prec=ctx.bits)


def sum_finite(s: SeriesDescriptor, n: int) -> Fraction:
    """Exact sum of t(start), ..., t(n)."""
    total = Fraction(0)
    for t in islice(s.terms(Fraction), max(0, n - s.start + 1)):
        total += t
    return total


def _abs_upper(x: ApproxReal) -> int:
    return abs(x.mid) + x.rad


def _abs_lower(x: ApproxReal) -> int:
    return max(0, abs(x.mid) - x.rad)


def sum_geometric(s: SeriesDescriptor, target_radius, ctx: PrecisionContext, max_terms: int = 10**6) -> SumResult:
    """Partial sum plus the bound |t(N+1)|/(1-q) on the tail."""
    if not isinstance(s.klass, Geometric):
        raise SummationError(f"{s.name} is not declared geometric")
    q, k0 = s.klass.ratio_bound, max(s.klass.from_index, s.start)
    target = Fraction(target_radius)
    it = s.terms(ball_lift(ctx))
    total = ApproxReal(0, 0, ctx.bits)
    prev = None
    k = s.start
    for t in it:
        if prev is not None and k - 1 >= k0:
            # certain violation only: lower(|t_k|) > q * upper(|t_{k-1}|)
            if _abs_lower(t) * q.denominator > q.numerator * _abs_upper(prev):
                raise RatioAssertionError(s.name, k, q)
        if k > k0:
            tail = Fraction(_abs_upper(t), 1 << t.prec) / (1 - q)
            if tail <= target:
                value = total.widen(tail)
                return SumResult(
                    value,
                    value.rigorous,
                    k - s.start,
                    "geometric",
                    settings={"ratio_bound": str(q), "from_index": k0, "truncation": k - 1},
                )
        if k - s.start >= max_terms:
            break
        total = total + t
        prev = t
        k += 1
    raise SummationError(f"{s.name}: tail bound not reached within {max_terms} terms")


def _pow2(e: Fraction, prec: int) -> ApproxReal:
    """Ball for 2**e, e rational."""
    e = Fraction(e)
    if e.denominator == 1:
        n = e.numerator
        return ApproxReal(1 << (n + prec), 0, prec) if n >= -prec else ApproxReal.from_rational(Fraction(1, 1 << -n), prec)
    a, b = e.numerator, e.denominator
    # floor((2**(a + prec*b)) ** (1/b)) by integer Newton iteration
    target = 1 << (a + prec * b)
    x = 1 << ((a + prec * b) // b + 1)
    while True:
        y = ((b - 1) * x + target // x ** (b - 1)) // b
        if y >= x:
            break
        x = y
    while x**b > target:
        x -= 1
    return ApproxReal(x, 1, prec)


def richardson_table(partials: list, exponents: list) -> list:
    """Extrapolation table T[m][j] for nodes N_m = N_0 * 2**m whose error
    behaves like sum_j c_j N**-exponents[j]."""
    table = [[p] for p in partials]
    for m in range(1, len(partials)):
        for j in range(1, m + 1):
            f = exponents[j - 1]
            table[m].append((f * table[m][j - 1] - table[m - 1][j - 1]) / (f - 1))
    return table


def sum_richardson(s: SeriesDescriptor, base_N: int, depth: int, ctx: PrecisionContext) -> SumResult:
    """Extrapolate partial sums at N = base_N * 2**m, m = 0..depth.

    For terms ~ k**-p the truncation error has an expansion in
    N**-(p-1), N**-p, N**-(p+1), ...; the table eliminates those powers in
    turn (for integer p this is polynomial extrapolation in 1/N with the
    known-vanishing low powers skipped).
    """
    if not isinstance(s.klass, PolyDecay):
        raise SummationError(f"{s.name} is not declared PolyDecay")
    if depth < 2:
        raise ValueError("depth must be at least 2")
    p = Fraction(s.klass.exponent)
    nodes = [base_N << m for m in range(depth + 1)]
    partials = []
    total = ApproxReal(0, 0, ctx.bits)
    for count, t in enumerate(islice(s.terms(ball_lift(ctx)), nodes[-1]), 1):
        total = total + t
        if count in nodes:
            partials.append(total)
    factors = [_pow2(p - 1 + j, ctx.bits) for j in range(depth)]
    table = richardson_table(partials, factors)
    deltas = [error_bound(table[m][m], table[m][m - 1]) for m in range(1, depth + 1)]
    noise = Fraction(max(r.rad for r in table[-1]) + 1, 1 << ctx.bits)
    if deltas[-1] > 2 * deltas[-2] + 4 * noise:
        raise ExtrapolationError(
            f"{s.name}: extrapolants diverge (last differences {float(deltas[-2]):.3g} -> "
            f"{float(deltas[-1]):.3g}); increase base_N"
        )
    gap = 4 * deltas[-1]
    value = table[-1][-1].widen(gap, rigorous=False)
    return SumResult(
        value,
        False,
        nodes[-1],
        "richardson",
        heuristic_gap=gap,
        settings={"base_N": base_N, "depth": depth, "exponent": str(p)},
    )


def cvz_d(n: int) -> int:
    """d_n = ((3+sqrt 8)**n + (3-sqrt 8)**n)/2 via d_m = 6 d_{m-1} - d_{m-2}."""
    a, b = 1, 3
    for _ in range(n):
        a, b = b, 6 * b - a
    return a


def cvz_weights(n: int) -> list[int]:
    """Integer weights c_k (signs included) with sum (-1)^k a_k ~ sum c_k a_k / d_n."""
    d = cvz_d(n)
    b, c = Fraction(-1), Fraction(-d)
    out = []
    for k in range(n):
        c = b - c
        out.append(c)
        b = b * (k + n) * (k - n) / (Fraction(2 * k + 1, 2) * (k + 1))
    assert all(x.denominator == 1 for x in out)
    return [int(x) for x in out]


def cvz_estimate(magnitudes: list, n: int):
    """sum_{k<n} (-1)^k a_k accelerated at depth n (a_k in any field)."""
    weights = cvz_weights(n)
    s = 0
    for w, a in zip(weights, magnitudes):
        s = s + w * a
    return s / cvz_d(n)


def _alternating_magnitudes(s: SeriesDescriptor, count: int, ctx: PrecisionContext) -> tuple[int, list]:
    sign0 = None
    mags = []
    for j, t in enumerate(islice(s.terms(ball_lift(ctx)), count)):
        sg = t.sign()
        if sg == 0:
            raise SignPatternError(f"{s.name}: sign of term {s.start + j} is not determined")
        if sign0 is None:
            sign0 = sg
        elif sg != sign0 * (-1) ** j:
            raise SignPatternError(f"{s.name}: terms stop alternating at k = {s.start + j}")
        mags.append(abs(t))
    return sign0, mags


def sum_cvz(s: SeriesDescriptor, depth_n: int, ctx: PrecisionContext) -> SumResult:
    """CVZ estimate at depth_n, double-checked against depth_n + 16."""
    if not isinstance(s.klass, AlternatingPolyDecay):
        raise SummationError(f"{s.name} is not declared AlternatingPolyDecay")
    deep = depth_n + CVZ_STEP
    sign0, mags = _alternating_magnitudes(s, deep, ctx)
    v = sign0 * cvz_estimate(mags, depth_n)
    w = sign0 * cvz_estimate(mags, deep)
    mag = Fraction(abs(v.mid) + v.rad, 1 << v.prec)
    gap = max(3 * mag / CVZ_RATE**depth_n, 4 * error_bound(v, w))
    return SumResult(
        v.widen(gap, rigorous=False),
        False,
        deep,
        "cvz",
        heuristic_gap=gap,
        settings={"depth": depth_n, "check_depth": deep},
    )


def tail_slope(s: SeriesDescriptor, k_lo: int = 2**10, k_hi: int = 2**14) -> float:
    """Least-squares decay exponent of |t(k)| over k = k_lo, 2 k_lo, ..., k_hi."""
    samples = []
    wanted = set()
    k = k_lo
    while k <= k_hi:
        wanted.add(k)
        k *= 2
    for k, t in enumerate(s.terms(float), s.start):
        if k in wanted:
            samples.append((math.log(k), math.log(abs(t))))
        if k >= k_hi:
            break
    n = len(samples)
    mx = sum(x for x, _ in samples) / n
    my = sum(y for _, y in samples) / n
    slope = sum((x - mx) * (y - my) for x, y in samples) / sum((x - mx) ** 2 for x, _ in samples)
    return -slope
