"""Exact rationals and fixed-point ball arithmetic.

Rationals are :class:`fractions.Fraction`.  Real numbers that cannot be
represented exactly are carried as :class:`ApproxReal` balls: an integer
midpoint ``mid`` and an integer radius ``rad``, both scaled by ``2**prec``.
Every operation rounds the radius outward, so a ball built from inputs that
contain their true values contains the true result.
"""

from __future__ import annotations

import decimal
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

DIGITS_CAP = 10**6
LOG2_10 = math.log2(10)


class BallDivisionError(ZeroDivisionError):
    """Division by a ball whose interval contains zero."""


@dataclass(frozen=True)
class PrecisionContext:
    working_bits: int = 128
    guard_bits: int = 32

    def __post_init__(self):
        if self.working_bits < 32:
            raise ValueError(f"working_bits must be >= 32, got {self.working_bits}")
        if self.guard_bits < 0:
            raise ValueError("guard_bits must be nonnegative")

    @property
    def bits(self) -> int:
        return self.working_bits + self.guard_bits

    @classmethod
    def for_digits(cls, digits: int, guard_bits: int = 32) -> "PrecisionContext":
        return cls(max(32, math.ceil(digits * LOG2_10) + 8), guard_bits)

    def with_guard(self, guard_bits: int) -> "PrecisionContext":
        return PrecisionContext(self.working_bits, guard_bits)


def _round_div(n: int, d: int) -> int:
    # nearest integer to n/d for d > 0
    return (2 * n + d) // (2 * d)


def _ceil_div(n: int, d: int) -> int:
    return -((-n) // d)


def _round_shift(n: int, s: int) -> tuple[int, bool]:
    """Round n / 2**s to nearest; second item tells whether rounding occurred."""
    if s <= 0:
        return n << -s, False
    q = (n + (1 << (s - 1))) >> s
    return q, (n & ((1 << s) - 1)) != 0


class ApproxReal:
    """Ball ``[ (mid-rad)/2**prec, (mid+rad)/2**prec ]``.

    ``rigorous`` is False once any heuristic error estimate (extrapolation,
    acceleration) has been folded into the radius.
    """

    __slots__ = ("mid", "rad", "prec", "rigorous")

    def __init__(self, mid: int, rad: int, prec: int, rigorous: bool = True):
        if rad < 0:
            raise ValueError("radius must be nonnegative")
        self.mid = mid
        self.rad = rad
        self.prec = prec
        self.rigorous = rigorous

    # construction -------------------------------------------------------

    @classmethod
    def from_rational(cls, q, prec: int) -> "ApproxReal":
        q = Fraction(q)
        num = q.numerator << prec
        mid = _round_div(num, q.denominator)
        return cls(mid, 0 if num % q.denominator == 0 else 1, prec)

    @classmethod
    def from_interval(cls, lo: Fraction, hi: Fraction, prec: int, rigorous: bool = True) -> "ApproxReal":
        """Smallest representable ball containing ``[lo, hi]``."""
        lo_i = math.floor(Fraction(lo) * (1 << prec))
        hi_i = math.ceil(Fraction(hi) * (1 << prec))
        mid = (lo_i + hi_i) // 2
        return cls(mid, max(hi_i - mid, mid - lo_i), prec, rigorous)

    # views --------------------------------------------------------------

    @property
    def midpoint(self) -> Fraction:
        return Fraction(self.mid, 1 << self.prec)

    @property
    def radius(self) -> Fraction:
        return Fraction(self.rad, 1 << self.prec)

    @property
    def precision(self) -> int:
        return self.prec

    def lower(self) -> Fraction:
        return Fraction(self.mid - self.rad, 1 << self.prec)

    def upper(self) -> Fraction:
        return Fraction(self.mid + self.rad, 1 << self.prec)

    def contains(self, q) -> bool:
        q = Fraction(q)
        return abs((q.numerator << self.prec) - self.mid * q.denominator) <= self.rad * q.denominator

    def contains_zero(self) -> bool:
        return abs(self.mid) <= self.rad

    def overlaps(self, other: "ApproxReal") -> bool:
        a, b = _align(self, other)
        return abs(a.mid - b.mid) <= a.rad + b.rad

    def sign(self) -> int:
        """+1 / -1 when the whole ball is on one side of zero, else 0."""
        if self.mid > self.rad:
            return 1
        if self.mid < -self.rad:
            return -1
        return 0

    def __float__(self) -> float:
        return self.mid / 2.0**self.prec if self.prec < 1000 else float(self.midpoint)

    def __repr__(self) -> str:
        flag = "" if self.rigorous else ", heuristic"
        return f"ApproxReal({float(self)!r} +/- {float(self.radius):.3g}, {self.prec} bits{flag})"

    # precision management ------------------------------------------------

    def at_precision(self, prec: int) -> "ApproxReal":
        if prec == self.prec:
            return self
        if prec > self.prec:
            s = prec - self.prec
            return ApproxReal(self.mid << s, self.rad << s, prec, self.rigorous)
        s = self.prec - prec
        mid, inexact = _round_shift(self.mid, s)
        rad = _ceil_div(self.rad, 1 << s) + (1 if inexact else 0)
        return ApproxReal(mid, rad, prec, self.rigorous)

    def widen(self, extra, rigorous: bool | None = None) -> "ApproxReal":
        """Add ``extra`` (a nonnegative rational) to the radius."""
        extra = Fraction(extra)
        add = _ceil_div(extra.numerator << self.prec, extra.denominator)
        flag = self.rigorous if rigorous is None else (self.rigorous and rigorous)
        return ApproxReal(self.mid, self.rad + add, self.prec, flag)

    # arithmetic ---------------------------------------------------------

    def __neg__(self):
        return ApproxReal(-self.mid, self.rad, self.prec, self.rigorous)

    def __pos__(self):
        return self

    def __abs__(self):
        return ApproxReal(abs(self.mid), self.rad, self.prec, self.rigorous)

    def __add__(self, other):
        if isinstance(other, ApproxReal):
            a, b = _align(self, other)
            return ApproxReal(a.mid + b.mid, a.rad + b.rad, a.prec, a.rigorous and b.rigorous)
        if isinstance(other, int):
            return ApproxReal(self.mid + (other << self.prec), self.rad, self.prec, self.rigorous)
        if isinstance(other, Rational):
            q = ApproxReal.from_rational(other, self.prec)
            return ApproxReal(self.mid + q.mid, self.rad + q.rad, self.prec, self.rigorous)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (ApproxReal, Rational)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, Rational):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, ApproxReal):
            a, b = _align(self, other)
            p = a.prec
            mid, inexact = _round_shift(a.mid * b.mid, p)
            err = abs(a.mid) * b.rad + abs(b.mid) * a.rad + a.rad * b.rad
            rad = _ceil_div(err, 1 << p) + (1 if inexact else 0)
            return ApproxReal(mid, rad, p, a.rigorous and b.rigorous)
        if isinstance(other, int):
            return ApproxReal(self.mid * other, self.rad * abs(other), self.prec, self.rigorous)
        if isinstance(other, Rational):
            n, d = other.numerator, other.denominator
            prod = self.mid * n
            mid = _round_div(prod, d)
            rad = _ceil_div(self.rad * abs(n), d) + (0 if prod % d == 0 else 1)
            return ApproxReal(mid, rad, self.prec, self.rigorous)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, ApproxReal):
            a, b = _align(self, other)
            if abs(b.mid) <= b.rad:
                raise BallDivisionError("division by a ball containing zero")
            p = a.prec
            bm = abs(b.mid)
            num = a.mid << p
            mid = _round_div(num if b.mid > 0 else -num, bm)
            exact = num % bm == 0
            err_num = (a.rad * bm + abs(a.mid) * b.rad) << p
            err_den = bm * (bm - b.rad)
            rad = _ceil_div(err_num, err_den) + (0 if exact else 1)
            return ApproxReal(mid, rad, p, a.rigorous and b.rigorous)
        if isinstance(other, Rational):
            if other == 0:
                raise BallDivisionError("division by exact zero")
            return self * Fraction(other.denominator, other.numerator)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, Rational):
            return ApproxReal.from_rational(other, self.prec) / self
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return 1 / (self**-n)
        result = ApproxReal(1 << self.prec, 0, self.prec, self.rigorous)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result


def _align(a: ApproxReal, b: ApproxReal) -> tuple[ApproxReal, ApproxReal]:
    if a.prec == b.prec:
        return a, b
    p = max(a.prec, b.prec)
    return a.at_precision(p), b.at_precision(p)


def rat_arith(a, b, op: str) -> Fraction:
    """Exact field operation on rationals; ``op`` in add/sub/mul/div."""
    a, b = Fraction(a), Fraction(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise ZeroDivisionError(f"rational division of {a} by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def ball_from_rational(q, ctx: PrecisionContext) -> ApproxReal:
    return ApproxReal.from_rational(q, ctx.bits)


def ball_arith(a: ApproxReal, b: ApproxReal, op: str) -> ApproxReal:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def error_bound(a: ApproxReal, b: ApproxReal) -> Fraction:
    """|a.mid - b.mid| + a.rad + b.rad as an exact rational."""
    x, y = _align(a, b)
    return Fraction(abs(x.mid - y.mid) + x.rad + y.rad, 1 << x.prec)


def agree_to_digits(a: ApproxReal, b: ApproxReal) -> int:
    """Largest D with |a-b| + radii <= 10**-D * max(1, |a|); capped at DIGITS_CAP."""
    x, y = _align(a, b)
    bound = abs(x.mid - y.mid) + x.rad + y.rad
    if bound == 0:
        return DIGITS_CAP
    scale = max(1 << x.prec, abs(x.mid))
    if bound > scale:
        return 0
    d = max(0, int(math.log10(scale) - math.log10(bound)) - 1)
    while d > 0 and bound * 10**d > scale:
        d -= 1
    while bound * 10 ** (d + 1) <= scale:
        d += 1
    return min(d, DIGITS_CAP)


def format_significant(x: ApproxReal, digits: int) -> str:
    """Midpoint rounded (half-even) to ``digits`` significant decimal digits."""
    with decimal.localcontext() as dctx:
        dctx.prec = digits + x.prec // 3 + 20
        value = decimal.Decimal(x.mid) / (decimal.Decimal(2) ** x.prec)
        if value == 0:
            return "0"
        exp = value.adjusted()
        quant = decimal.Decimal(1).scaleb(exp - digits + 1)
        out = value.quantize(quant, rounding=decimal.ROUND_HALF_EVEN)
        return format(out, "f")


def to_decimal_string(x: ApproxReal, places: int) -> tuple[str, str]:
    """Fixed-point decimal strings (value, radius) with the radius rounded up
    to cover the decimal rounding of the value."""
    scale = 10**places
    num = x.mid * scale
    value = _round_div(num, 1 << x.prec)
    err = _ceil_div(x.rad * scale, 1 << x.prec) + 1
    return _fixed(value, places), _fixed(err, places)


def _fixed(n: int, places: int) -> str:
    sign = "-" if n < 0 else ""
    s = str(abs(n)).rjust(places + 1, "0")
    return f"{sign}{s[:-places]}.{s[-places:]}" if places else f"{sign}{s}"
