"""Closed-form right-hand sides as small expression trees.

Leaves are rationals and named constants; interior nodes are + - * / and
integer powers.  Trees are built with ordinary Python operators::

    127 * zeta(7) / 2
    240 * zeta(3) / PI - 128 * CATALAN
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from ..constants import ConstantId, constant
from ..numerics import ApproxReal, PrecisionContext


class Expr:
    def evaluate(self, ctx: PrecisionContext, cache_dir=None) -> ApproxReal:
        raise NotImplementedError

    def constants(self) -> set:
        return set()

    # operator sugar ---------------------------------------------------------

    def __add__(self, other):
        return BinOp("+", self, lift(other))

    def __radd__(self, other):
        return BinOp("+", lift(other), self)

    def __sub__(self, other):
        return BinOp("-", self, lift(other))

    def __rsub__(self, other):
        return BinOp("-", lift(other), self)

    def __mul__(self, other):
        return BinOp("*", self, lift(other))

    def __rmul__(self, other):
        return BinOp("*", lift(other), self)

    def __truediv__(self, other):
        return BinOp("/", self, lift(other))

    def __rtruediv__(self, other):
        return BinOp("/", lift(other), self)

    def __neg__(self):
        return BinOp("*", Rat(-1), self)

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        return Pow(self, n)


def lift(x) -> Expr:
    if isinstance(x, Expr):
        return x
    if isinstance(x, Rational):
        return Rat(Fraction(x))
    raise TypeError(f"cannot use {x!r} in a closed form")


class Rat(Expr):
    def __init__(self, q):
        self.q = Fraction(q)

    def evaluate(self, ctx, cache_dir=None):
        return ApproxReal.from_rational(self.q, ctx.bits)

    def __str__(self):
        return str(self.q)


class Const(Expr):
    def __init__(self, cid: ConstantId):
        self.cid = cid

    def evaluate(self, ctx, cache_dir=None):
        return constant(self.cid, ctx, cache_dir)

    def constants(self):
        return {self.cid}

    def __str__(self):
        return str(self.cid)


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


class BinOp(Expr):
    def __init__(self, op: str, left: Expr, right: Expr):
        self.op, self.left, self.right = op, left, right

    def evaluate(self, ctx, cache_dir=None):
        a = self.left.evaluate(ctx, cache_dir)
        b = self.right.evaluate(ctx, cache_dir)
        if self.op == "+":
            return a + b
        if self.op == "-":
            return a - b
        if self.op == "*":
            return a * b
        return a / b

    def constants(self):
        return self.left.constants() | self.right.constants()

    def __str__(self):
        def wrap(e, right_side):
            s = str(e)
            if isinstance(e, BinOp) and (
                _PREC[e.op] < _PREC[self.op] or (right_side and _PREC[e.op] == _PREC[self.op] and self.op in "-/")
            ):
                return f"({s})"
            if isinstance(e, Rat) and (e.q < 0 or e.q.denominator != 1) and self.op != "+":
                return f"({s})"
            return s

        return f"{wrap(self.left, False)} {self.op} {wrap(self.right, True)}"


class Pow(Expr):
    def __init__(self, base: Expr, n: int):
        self.base, self.n = base, n

    def evaluate(self, ctx, cache_dir=None):
        return self.base.evaluate(ctx, cache_dir) ** self.n

    def constants(self):
        return self.base.constants()

    def __str__(self):
        b = str(self.base)
        return f"({b})^{self.n}" if isinstance(self.base, BinOp) else f"{b}^{self.n}"


PI = Const(ConstantId("pi"))
CATALAN = Const(ConstantId("catalan"))


def zeta(s: int) -> Const:
    return Const(ConstantId("zeta", (s,)))


def lam(s: int) -> Const:
    return Const(ConstantId("lambda", (s,)))


def t(*args: int) -> Const:
    return Const(ConstantId("t", tuple(args)))
