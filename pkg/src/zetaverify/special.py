"""Shifted factorials, generalized harmonic numbers and truncated Taylor jets.

A :class:`Jet` carries the Taylor coefficients of a quantity in one variable
up to a fixed order.  Pushing jets through ordinary arithmetic gives exact
derivatives of rational expressions; nesting jets (coefficients that are
themselves jets in another variable) gives mixed partials.

:class:`LaurentSeries` is a truncated expansion in ``u = 1/n``.  Used as the
coefficient field of a jet it lets us take ``n -> oo`` limits of terms that
are rational in ``n`` without knowing the degrees in advance.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


class HarmonicPoleError(ZeroDivisionError):
    def __init__(self, k: int, shift):
        super().__init__(f"harmonic sum hits a pole at k={k} (shift {shift})")
        self.k = k


class JetDivisionError(ZeroDivisionError):
    pass


def pochhammer(x, m: int):
    """Rising factorial (x)_m = x (x+1) ... (x+m-1)."""
    if m < 0:
        raise ValueError("length must be nonnegative")
    result = Fraction(1) if isinstance(x, Rational) else x * 0 + 1
    for i in range(m):
        result = result * (x + i)
    return result


@dataclass(frozen=True)
class HarmonicSpec:
    n: int
    order: int = 1
    shift: Fraction = Fraction(0)

    def __post_init__(self):
        if self.n < 0 or self.order < 1:
            raise ValueError(f"invalid harmonic spec {self}")
        object.__setattr__(self, "shift", Fraction(self.shift))


_prefix_cache: dict[tuple[int, Fraction], list[Fraction]] = {}
_prefix_lock = threading.Lock()


def harmonic(spec: HarmonicSpec) -> Fraction:
    """sum_{k=1}^{n} 1/(shift+k)^order, exactly."""
    x, n, order = spec.shift, spec.n, spec.order
    if x.denominator == 1 and -n <= x.numerator <= -1:
        raise HarmonicPoleError(-x.numerator, x)
    key = (order, x)
    prefix = _prefix_cache.get(key)
    if prefix is None or len(prefix) <= n:
        with _prefix_lock:
            prefix = list(_prefix_cache.get(key, [Fraction(0)]))
            for k in range(len(prefix), n + 1):
                prefix.append(prefix[-1] + 1 / (x + k) ** order)
            _prefix_cache[key] = prefix
    return prefix[n]


def H(n: int, order: int = 1, shift=0) -> Fraction:
    return harmonic(HarmonicSpec(n, order, Fraction(shift)))


# ---------------------------------------------------------------------------
# jets


def _depth(v) -> int:
    return v.depth if isinstance(v, Jet) else 0


class Jet:
    """Truncated Taylor expansion ``sum coeffs[j] * eps**j`` in variable ``var``."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs, var: str = "x"):
        self.coeffs = tuple(coeffs)
        self.var = var
        if not self.coeffs:
            raise ValueError("a jet needs at least one coefficient")

    @classmethod
    def variable(cls, point, order: int = 1, var: str = "x") -> "Jet":
        zero = point * 0
        return cls((point, zero + 1) + (zero,) * (order - 1), var)

    @classmethod
    def constant(cls, value, order: int = 1, var: str = "x") -> "Jet":
        zero = value * 0
        return cls((value,) + (zero,) * order, var)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def depth(self) -> int:
        return 1 + _depth(self.coeffs[0])

    @property
    def value(self):
        return self.coeffs[0]

    def derivative(self, j: int = 1):
        """j-th Taylor coefficient (the j-th derivative divided by j!)."""
        return self.coeffs[j]

    def __repr__(self):
        return f"Jet[{self.var}]({', '.join(map(str, self.coeffs))})"

    def __eq__(self, other):
        if isinstance(other, Jet):
            return self.var == other.var and self.coeffs == other.coeffs
        return all(c == 0 for c in self.coeffs[1:]) and self.coeffs[0] == other

    __hash__ = None

    def _same(self, other) -> bool | None:
        """True: jet in our variable; False: scalar to us; None: defer to other."""
        if not isinstance(other, Jet):
            return False
        if other.var == self.var:
            if other.order != self.order:
                raise ValueError(f"jet order mismatch: {self.order} vs {other.order}")
            return True
        d, e = self.depth, other.depth
        if e < d:
            return False
        if e > d:
            return None
        raise TypeError(f"cannot combine jets in {self.var!r} and {other.var!r} at equal depth")

    def _make(self, coeffs):
        return Jet(coeffs, self.var)

    def __neg__(self):
        return self._make(-c for c in self.coeffs)

    def __pos__(self):
        return self

    def __add__(self, other):
        same = self._same(other)
        if same is None:
            return NotImplemented
        if same:
            return self._make(a + b for a, b in zip(self.coeffs, other.coeffs))
        return self._make((self.coeffs[0] + other,) + self.coeffs[1:])

    __radd__ = __add__

    def __sub__(self, other):
        same = self._same(other)
        if same is None:
            return NotImplemented
        if same:
            return self._make(a - b for a, b in zip(self.coeffs, other.coeffs))
        return self._make((self.coeffs[0] - other,) + self.coeffs[1:])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        same = self._same(other)
        if same is None:
            return NotImplemented
        if not same:
            return self._make(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        out = []
        for j in range(len(a)):
            acc = a[0] * b[j]
            for i in range(1, j + 1):
                acc = acc + a[i] * b[j - i]
            out.append(acc)
        return self._make(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        same = self._same(other)
        if same is None:
            return NotImplemented
        if not same:
            try:
                inv = Fraction(1, other) if isinstance(other, int) else 1 / other
            except ZeroDivisionError as exc:
                raise JetDivisionError(f"jet division by zero scalar: {exc}") from exc
            return self._make(c * inv for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        try:
            inv0 = 1 / b[0]
        except ZeroDivisionError as exc:
            raise JetDivisionError(f"jet division by a jet with zero constant term: {exc}") from exc
        out = []
        for j in range(len(a)):
            acc = a[j]
            for i in range(1, j + 1):
                acc = acc - b[i] * out[j - i]
            out.append(acc * inv0)
        return self._make(out)

    def __rtruediv__(self, other):
        return Jet.constant(other, self.order, self.var) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return 1 / self**-n
        result = Jet.constant(self.coeffs[0] * 0 + 1, self.order, self.var)
        for _ in range(n):
            result = result * self
        return result


def jet_arith(a: Jet, b: Jet, op: str) -> Jet:
    if not (isinstance(a, Jet) and isinstance(b, Jet)) or a.var != b.var:
        raise ValueError("jet_arith needs two jets in the same variable")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def pochhammer_jet(x0, m: int, order: int = 1, var: str = "x") -> Jet:
    """Jet of (x)_m at x = x0."""
    x = Jet.variable(Fraction(x0), order, var)
    result = Jet.constant(Fraction(1), order, var)
    for i in range(m):
        result = result * (x + i)
    return result


def nest_jets(inner_point, outer_point, inner: str = "c", outer: str = "d", order: int = 1):
    """Variables for a two-variable expansion: jets in ``outer`` whose
    coefficients are jets in ``inner``.  Returns ``(inner_var, outer_var)``."""
    if inner == outer:
        raise ValueError("nested jets need distinct variable tags")
    zero = Jet.constant(Fraction(0), order, inner)
    x_in = Jet.variable(Fraction(inner_point), order, inner)
    x_out_val = Jet.constant(Fraction(outer_point), order, inner)
    inner_var = Jet((x_in,) + (zero,) * order, outer)
    outer_var = Jet((x_out_val, zero + 1) + (zero,) * (order - 1), outer)
    return inner_var, outer_var


def taylor_coefficient(value, *orders):
    """Coefficient of a (possibly nested) jet, outermost order first.

    Plain numbers are treated as constants, so their higher coefficients
    are 0.
    """
    for j in orders:
        if isinstance(value, Jet):
            value = value.coeffs[j] if j <= value.order else 0
        elif j:
            return 0
    return value


def mixed_coefficient(j: Jet, outer_order: int = 1, inner_order: int = 1):
    """Coefficient of eps_outer**outer_order * eps_inner**inner_order."""
    return taylor_coefficient(j, outer_order, inner_order)


# ---------------------------------------------------------------------------
# truncated Laurent series in u = 1/n

LAURENT_LENGTH = 12


class LaurentSeries:
    """``sum_{j >= val} c_j u**j`` known through ``u**(val + len(coeffs) - 1)``.

    The leading coefficient is nonzero unless ``coeffs`` is empty, in which
    case the value is ``O(u**val)``.
    """

    __slots__ = ("val", "coeffs")

    def __init__(self, val: int, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            val += 1
        self.val = val
        self.coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, q, length: int = LAURENT_LENGTH) -> "LaurentSeries":
        q = Fraction(q)
        if q == 0:
            return cls(length, ())
        return cls(0, [q] + [Fraction(0)] * (length - 1))

    @classmethod
    def n_variable(cls, length: int = LAURENT_LENGTH) -> "LaurentSeries":
        """The symbol n itself, i.e. 1/u."""
        return cls(-1, [Fraction(1)] + [Fraction(0)] * (length - 1))

    @property
    def known_through(self) -> int:
        """Exponent of the first unknown power of u."""
        return self.val + len(self.coeffs)

    def coefficient(self, j: int) -> Fraction:
        if j >= self.known_through:
            raise ArithmeticError(f"u^{j} coefficient not known (truncated at u^{self.known_through})")
        if j < self.val:
            return Fraction(0)
        return self.coeffs[j - self.val]

    def limit(self) -> Fraction:
        """Value as n -> oo."""
        if self.coeffs and self.val < 0:
            raise ArithmeticError(f"term diverges like n^{-self.val}")
        return self.coefficient(0)

    def __repr__(self):
        return f"LaurentSeries(val={self.val}, {list(map(str, self.coeffs))})"

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = LaurentSeries.constant(other, max(1, self.known_through))
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        top = min(self.known_through, other.known_through)
        lo = min(self.val, other.val)
        return all(self._c(j) == other._c(j) for j in range(lo, top))

    __hash__ = None

    def _c(self, j: int) -> Fraction:
        if j < self.val or j >= self.known_through:
            return Fraction(0)
        return self.coeffs[j - self.val]

    def _coerce(self, other):
        if isinstance(other, LaurentSeries):
            return other
        if isinstance(other, Rational):
            return LaurentSeries.constant(other, max(1, self.known_through, LAURENT_LENGTH))
        return None

    def __neg__(self):
        return LaurentSeries(self.val, [-c for c in self.coeffs])

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        top = min(self.known_through, other.known_through)
        lo = min(self.val, other.val)
        return LaurentSeries(lo, [self._c(j) + other._c(j) for j in range(lo, top)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        length = min(len(self.coeffs), len(other.coeffs))
        val = self.val + other.val
        if length == 0:
            # an empty series stores its O() bound in val
            return LaurentSeries(val, ())
        a, b = self.coeffs, other.coeffs
        out = []
        for j in range(length):
            acc = Fraction(0)
            for i in range(j + 1):
                acc += a[i] * b[j - i]
            out.append(acc)
        return LaurentSeries(val, out)

    __rmul__ = __mul__

    def reciprocal(self) -> "LaurentSeries":
        if not self.coeffs:
            raise ZeroDivisionError(f"reciprocal of O(u^{self.val}): leading term unknown")
        b = self.coeffs
        inv0 = 1 / b[0]
        out = []
        for j in range(len(b)):
            acc = Fraction(1) if j == 0 else Fraction(0)
            for i in range(1, j + 1):
                acc -= b[i] * out[j - i]
            out.append(acc * inv0)
        return LaurentSeries(-self.val, out)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.reciprocal()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (self**-n).reciprocal()
        result = LaurentSeries.constant(1, max(len(self.coeffs), 1))
        for _ in range(n):
            result = result * self
        return result
