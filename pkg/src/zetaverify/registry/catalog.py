"""The static catalog of identities, jet transitions and theorem assemblies."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Optional, Union

from ..special import pochhammer
from ..summation import AlternatingPolyDecay, Geometric, PolyDecay, SeriesDescriptor, Terminating
from . import summands as S
from .closedform import CATALAN, PI, Expr, lam, t, zeta

F = Fraction
HALF = F(1, 2)

# ---------------------------------------------------------------------------
# strategies


@dataclass(frozen=True)
class ExactFinite:
    n_range: tuple = (0, 12)
    readings: tuple = ()


@dataclass(frozen=True)
class NumericGeometric:
    digits: int = 50


@dataclass(frozen=True)
class NumericRichardson:
    """``digits`` caps what is asked of the extrapolated members."""

    digits: int = 10
    base_N: int = 64
    depth: int = 7


@dataclass(frozen=True)
class NumericCVZ:
    digits: int = 30


@dataclass(frozen=True)
class ClosedFormCheck:
    """Two closed forms compared through the constants kernel."""

    digits: int = 50


@dataclass(frozen=True)
class ConjectureResidual:
    digits: int = 30


Strategy = Union[ExactFinite, NumericGeometric, NumericRichardson, NumericCVZ, ClosedFormCheck, ConjectureResidual]


def strategy_name(s: Strategy) -> str:
    return type(s).__name__


# ---------------------------------------------------------------------------
# identities


@dataclass(frozen=True)
class Param:
    """Open interval (lo, hi) for sampling; ``derived`` params are computed."""

    name: str
    lo: Fraction = F(-1)
    hi: Fraction = F(2)
    derived: bool = False


@dataclass(frozen=True)
class Side:
    """One member of an identity: ``scale * factor(p) * series(p)`` or a closed form."""

    label: str
    series: Optional[Callable[[Mapping], SeriesDescriptor]] = None
    closed: Optional[Expr] = None
    scale: Fraction = F(1)
    factor: Optional[Callable[[Mapping], Fraction]] = None


@dataclass(frozen=True)
class Identity:
    id: str
    tag: str
    sides: tuple
    strategy: Strategy
    params: tuple = ()
    constraint: Optional[Callable[[Mapping], bool]] = None
    complete: Optional[Callable[[Mapping], dict]] = None
    note: str = ""

    @property
    def free_params(self) -> tuple:
        return tuple(p for p in self.params if not p.derived and p.name != "n")

    @property
    def param_names(self) -> tuple:
        return tuple(p.name for p in self.params)

    @property
    def is_exact(self) -> bool:
        return isinstance(self.strategy, ExactFinite)

    @property
    def is_conjecture(self) -> bool:
        return isinstance(self.strategy, ConjectureResidual)


# ---------------------------------------------------------------------------
# builders


def _series(name: str, summand, klass, names=(), start=0):
    def build(p: Mapping) -> SeriesDescriptor:
        k = klass(p) if callable(klass) else klass
        return SeriesDescriptor(name, summand, k, tuple((n, p[n]) for n in names), start)

    return build


def _geo_param(p: Mapping) -> Geometric:
    """q = 1/2 for series with ratio -> 1/4 once k clears the parameters."""
    reach = sum(abs(v) for v in p.values())
    return Geometric(HALF, 32 + 8 * math.ceil(reach))


def _s_value(p: Mapping) -> Fraction:
    return 1 + 2 * p["a"] - p["b"] - p["c"] - p["d"] - p["e"]


def _wp_rhs_decay(p: Mapping) -> PolyDecay:
    return PolyDecay(2 * _s_value(p) + 1)


def _s_at_least_half(p: Mapping) -> bool:
    return _s_value(p) >= HALF


ABCDE = (Param("a", F(0), F(3)),) + tuple(Param(n, F(-1, 2), F(3, 2)) for n in "bcde")

QUINTIC = Geometric(F(3, 10), 8)
SIXTYFOURTH = Geometric(F(1, 32), 4)
P3 = PolyDecay(F(3))
P2 = PolyDecay(F(2))


def _wp_rhs(name):
    return _series(name, S.well_poised_rhs, _wp_rhs_decay, "abcde")


# terminating 9F8 -----------------------------------------------------------


def _nine_f_eight_complete(p: Mapping) -> dict:
    q = dict(p)
    if "g" not in q:
        q["g"] = 2 + 3 * q["a"] + q["n"] - q["b"] - q["c"] - q["d"] - q["e"] - q["f"]
    return q


def _nine_f_eight_balanced(p: Mapping) -> bool:
    return 2 + 3 * p["a"] == p["b"] + p["c"] + p["d"] + p["e"] + p["f"] + p["g"] - p["n"]


def _nine_f_eight_parts(p: Mapping):
    return S.nine_f_eight_sides(p["a"], p["b"], p["c"], p["d"], p["e"], p["f"], p["n"], p.get("_reading", "printed"))


def _nine_f_eight_side(which: int):
    def build(p: Mapping) -> SeriesDescriptor:
        up, down = _nine_f_eight_parts(p)[which]

        def summand(lift):
            return S.nine_f_eight_terms(lift, tuple(map(lift, up)), tuple(map(lift, down)))

        return SeriesDescriptor("9F8", summand, Terminating(p["n"]))

    return build


def _nine_f_eight_prefactor(p: Mapping) -> Fraction:
    up, down = _nine_f_eight_parts(p)[2]
    n = p["n"]
    r = F(1)
    for u in up:
        r *= pochhammer(u, n)
    for v in down:
        r /= pochhammer(v, n)
    return r


def _terminating(name, summand, names):
    return _series(name, summand, lambda p: Terminating(p["n"]), names)


# ---------------------------------------------------------------------------

_CONJ_NOTE = "right-hand side mixes weight 3 and weight 5 constants"

IDENTITIES: tuple = (
    # classical series ------------------------------------------------------
    Identity(
        "guillera",
        "Guillera's series for 7 zeta(3)/2",
        (Side("lhs", _series("guillera", S.guillera, QUINTIC)), Side("rhs", closed=F(7, 2) * zeta(3))),
        NumericGeometric(),
    ),
    Identity(
        "zeilberger",
        "Zeilberger's series for 4 pi^2/3",
        (Side("lhs", _series("zeilberger", S.zeilberger, SIXTYFOURTH)), Side("rhs", closed=4 * PI**2 / 3)),
        NumericGeometric(),
    ),
    Identity(
        "ramanujan",
        "Ramanujan's series for 16/pi",
        (Side("lhs", _series("ramanujan", S.ramanujan, SIXTYFOURTH)), Side("rhs", closed=16 / PI)),
        NumericGeometric(),
    ),
    # main theorems ---------------------------------------------------------
    Identity(
        "thm-a",
        "Guillera-type series for 127 zeta(7)/2",
        (Side("lhs", _series("thm-a", S.zeta7_series, QUINTIC)), Side("rhs", closed=F(127, 2) * zeta(7))),
        NumericGeometric(),
    ),
    Identity(
        "thm-b",
        "Guillera-type series for 49 zeta(3)^2/2",
        (Side("lhs", _series("thm-b", S.zeta3_squared_series, QUINTIC)), Side("rhs", closed=F(49, 2) * zeta(3) ** 2)),
        NumericGeometric(),
    ),
    Identity(
        "thm-c",
        "Zeilberger-type series for 4 pi^2 zeta(3) - 36 zeta(5)",
        (
            Side("lhs", _series("thm-c", S.pi2zeta3_series, SIXTYFOURTH)),
            Side("rhs", closed=4 * PI**2 * zeta(3) - 36 * zeta(5)),
        ),
        NumericGeometric(),
    ),
    Identity(
        "thm-d",
        "Ramanujan-type series for 240 zeta(3)/pi - 128 G",
        (
            Side("lhs", _series("thm-d", S.catalan_series, SIXTYFOURTH)),
            Side("rhs", closed=240 * zeta(3) / PI - 128 * CATALAN),
        ),
        NumericGeometric(),
    ),
    # open conjectures --------------------------------------------------------
    Identity(
        "conj-zeilberger-a",
        "Conjectured Zeilberger-type series with 8 H_{2k+1}^(3) + 43 H_k^(3)",
        (
            Side("lhs", _series("conj-zeilberger-a", S.conj_zeilberger_a, SIXTYFOURTH)),
            Side("rhs", closed=F(711, 28) * zeta(3) - F(29, 14) * PI**2 * zeta(3)),
        ),
        ConjectureResidual(),
        note=_CONJ_NOTE,
    ),
    Identity(
        "conj-zeilberger-b",
        "Conjectured Zeilberger-type series with H_k^(3)",
        (
            Side("lhs", _series("conj-zeilberger-b", S.conj_zeilberger_b, SIXTYFOURTH)),
            Side("rhs", closed=F(496, 7) * zeta(3) - F(128, 21) * PI**2 * zeta(3)),
        ),
        ConjectureResidual(),
        note=_CONJ_NOTE,
    ),
    Identity(
        "conj-ramanujan-a",
        "Conjectured Ramanujan-type series with H_{2k}^(3) - 43 H_k^(3)/352",
        (
            Side("lhs", _series("conj-ramanujan-a", S.conj_ramanujan_a, SIXTYFOURTH)),
            Side("rhs", closed=F(555, 77) * zeta(3) / PI - F(32, 11) * CATALAN),
        ),
        ConjectureResidual(),
    ),
    Identity(
        "conj-ramanujan-b",
        "Conjectured Ramanujan-type series with H_k^(3)",
        (
            Side("lhs", _series("conj-ramanujan-b", S.conj_ramanujan_b, SIXTYFOURTH)),
            Side("rhs", closed=F(10720, 7) * zeta(3) / PI - F(7168, 7) * CATALAN),
        ),
        ConjectureResidual(),
    ),
    # terminating very-well-poised 9F8 ---------------------------------------
    Identity(
        "9f8",
        "Terminating balanced very-well-poised 9F8 transformation",
        (
            Side("lhs", _nine_f_eight_side(0)),
            Side("rhs", _nine_f_eight_side(1), factor=_nine_f_eight_prefactor),
        ),
        ExactFinite(readings=("printed", "shifted")),
        params=(
            Param("a", F(0), F(4)),
            *(Param(n, F(-2), F(3)) for n in "bcdef"),
            Param("g", derived=True),
            Param("n"),
        ),
        constraint=_nine_f_eight_balanced,
        complete=_nine_f_eight_complete,
        note="balance 2+3a=b+c+d+e+f+g-n; lambda=1+2a-b-c-d",
    ),
    # the quadratic transformation and the zeta(7) chain ----------------------
    Identity(
        "wp-transform-quadratic",
        "Quadratic transformation with cubic weight into a well-poised 7F6",
        (
            Side("lhs", _series("quad-lhs", S.quad_lhs, _geo_param, "abcde")),
            Side("rhs", _wp_rhs("well-poised-rhs")),
        ),
        NumericRichardson(),
        params=ABCDE,
        constraint=_s_at_least_half,
    ),
    Identity(
        "wp-transform-x",
        "Quadratic transformation at (a,b,c,d,e) = (1,x,1-x,x,1-x)",
        (
            Side("lhs", _series("quad-x-lhs", S.quad_x_lhs, _geo_param, "x")),
            Side("rhs", _series("quad-x-rhs", S.quad_x_rhs, P3, "x")),
        ),
        NumericRichardson(),
        params=(Param("x", F(0), F(1)),),
        constraint=lambda p: p["x"] != HALF,
    ),
    Identity(
        "wp-transform-x-divided",
        "x-derivative of the x-instance divided by 1-2x",
        (
            Side("lhs", _series("quad-x-div-lhs", S.quad_x_reduced_lhs, _geo_param, "x")),
            Side("rhs", _series("quad-x-div-rhs", S.quad_x_reduced_rhs, P3, "x")),
        ),
        NumericRichardson(),
        params=(Param("x", F(0), F(1)),),
        constraint=lambda p: p["x"] != HALF,
    ),
    Identity(
        "zeta7-component-1",
        "Second x-derivative at x = 1/2: 64 lambda(3) - 256 lambda(5) + 192 lambda(7)",
        (
            Side("lhs", _series("zeta7-part-one-lhs", S.zeta7_part_one_lhs, QUINTIC)),
            Side("middle", _series("zeta7-part-one-rhs", S.zeta7_part_one_rhs, P3)),
            Side("rhs", closed=64 * lam(3) - 256 * lam(5) + 192 * lam(7)),
        ),
        NumericRichardson(),
    ),
    Identity(
        "wp-transform-bcd",
        "Quadratic transformation at (a,c,d,e) -> (1,c-b,d-c,2-d)",
        (
            Side("lhs", _series("quad-bcd-lhs", S.quad_bcd_lhs, _geo_param, "bcd")),
            Side("rhs", _series("quad-bcd-rhs", S.quad_bcd_rhs, P3, "bcd")),
        ),
        NumericRichardson(),
        params=(Param("b", F(0), F(1)), Param("c", F(0), F(2)), Param("d", F(1, 2), F(2))),
    ),
    Identity(
        "wp-transform-cd-divided",
        "b-derivative at b = 1/2 divided by c-1",
        (
            Side("lhs", _series("quad-cd-div-lhs", S.quad_cd_reduced_lhs, _geo_param, "cd")),
            Side("rhs", _series("quad-cd-div-rhs", S.quad_cd_reduced_rhs, P3, "cd")),
        ),
        NumericRichardson(),
        params=(Param("c", F(1, 2), F(2)), Param("d", F(1), F(5, 2))),
        constraint=lambda p: p["c"] != 1,
    ),
    Identity(
        "zeta7-component-2",
        "Mixed (c,d)-derivative at (1, 3/2): 64 lambda(3) - 128 lambda(5) + 64 lambda(7)",
        (
            Side("lhs", _series("zeta7-part-two-lhs", S.zeta7_part_two_lhs, QUINTIC)),
            Side("middle", _series("zeta7-part-two-rhs", S.zeta7_part_two_rhs, P3)),
            Side("rhs", closed=64 * lam(3) - 128 * lam(5) + 64 * lam(7)),
        ),
        NumericRichardson(),
    ),
    # t(3,3) and the zeta(3)^2 chain ------------------------------------------
    Identity(
        "t33-euler-sum",
        "Odd harmonic Euler sum 8 t(3,3) = 49 zeta(3)^2/16 - pi^6/240",
        (
            Side("lhs", _series("t33-euler-sum", S.t33_euler_sum, P3)),
            Side("rhs", closed=F(49, 16) * zeta(3) ** 2 - PI**6 / 240),
        ),
        NumericRichardson(),
    ),
    Identity(
        "t33-stuffle",
        "Stuffle evaluation 8 t(3,3) = 4 (t(3)^2 - t(6))",
        (Side("lhs", closed=8 * t(3, 3)), Side("rhs", closed=F(49, 16) * zeta(3) ** 2 - PI**6 / 240)),
        ClosedFormCheck(),
    ),
    Identity(
        "wp-transform-cubic",
        "Transformation with rational weight into a well-poised 7F6",
        (
            Side("lhs", _series("cubic-lhs", S.cubic_quad_lhs, _geo_param, "abcde")),
            Side("rhs", _wp_rhs("well-poised-rhs")),
        ),
        NumericRichardson(),
        params=ABCDE,
        constraint=_s_at_least_half,
    ),
    Identity(
        "cd-cubic-weight",
        "Rational-weight transformation at (a,b,d,e) -> (3/2,1/2,d-c,3-d)",
        (
            Side("lhs", _series("cd-cubic-lhs", S.cubic_cd_lhs, _geo_param, "cd")),
            Side("rhs", _series("cd-cubic-rhs", S.cubic_cd_rhs, P2, "cd")),
        ),
        NumericRichardson(),
        params=(Param("c", F(0), F(2)), Param("d", F(1), F(3))),
    ),
    Identity(
        "nine-f-eight-limit",
        "Nonterminating limit of the 9F8 transformation in (c,d)",
        (
            Side("lhs", _series("cd-cubic-rhs", S.cubic_cd_rhs, P2, "cd")),
            Side("rhs", _series("nine-f-eight-limit", S.nine_f_eight_limit_rhs, P3, "cd")),
        ),
        NumericRichardson(),
        params=(Param("c", F(0), F(2)), Param("d", F(1), F(3))),
    ),
    Identity(
        "cd-cubic-reduced",
        "Rational-weight series equal to the 9F8 limit",
        (
            Side("lhs", _series("cd-cubic-lhs", S.cubic_cd_lhs, _geo_param, "cd")),
            Side("rhs", _series("nine-f-eight-limit", S.nine_f_eight_limit_rhs, P3, "cd")),
        ),
        NumericRichardson(),
        params=(Param("c", F(0), F(2)), Param("d", F(1), F(3))),
    ),
    Identity(
        "d-reduced",
        "c-derivative divided by d-2c at c = 1",
        (
            Side("lhs", _series("d-reduced-lhs", S.cubic_d_lhs, _geo_param, "d")),
            Side("rhs", _series("d-reduced-rhs", S.cubic_d_rhs, P3, "d")),
        ),
        NumericRichardson(),
        params=(Param("d", F(1), F(3)),),
        constraint=lambda p: p["d"] != 2,
    ),
    Identity(
        "zeta3sq-component",
        "d-derivative at d = 2: 49 zeta(3)^2/2 - 28 zeta(3)",
        (
            Side("lhs", _series("zeta3sq-part-lhs", S.zeta3sq_part_lhs, QUINTIC)),
            Side("middle", _series("zeta3sq-part-middle", S.zeta3sq_part_middle, P3)),
            Side("rhs", closed=F(49, 2) * zeta(3) ** 2 - 28 * zeta(3)),
        ),
        NumericRichardson(),
    ),
    # the quartic-denominator transformation and its terminating cases --------
    Identity(
        "wp-transform-quartic",
        "Transformation with doubled shifted factorials into a well-poised 7F6",
        (
            Side("lhs", _series("quartic-lhs", S.quartic_lhs, lambda p: Geometric(F(1, 64), _geo_param(p).from_index), "abcde")),
            Side("rhs", _wp_rhs("well-poised-rhs")),
        ),
        NumericRichardson(),
        params=ABCDE,
        constraint=_s_at_least_half,
    ),
    Identity(
        "quartic-terminating",
        "Terminating case (c,d,e) -> (c-b,d-c,-n)",
        (
            Side("lhs", _terminating("quartic-terminating-lhs", S.quartic_terminating_lhs, "abcdn")),
            Side("rhs", _terminating("quartic-terminating-rhs", S.quartic_terminating_rhs, "abcdn")),
        ),
        ExactFinite(),
        params=(Param("a", F(0), F(3)), *(Param(n, F(-1), F(3)) for n in "bcd"), Param("n")),
    ),
    Identity(
        "quartic-terminating-derivative",
        "b-derivative of the terminating case",
        (
            Side("lhs", _terminating("quartic-derivative-lhs", S.quartic_derivative_lhs, "abcdn")),
            Side("rhs", _terminating("quartic-derivative-rhs", S.quartic_derivative_rhs, "abcdn")),
        ),
        ExactFinite(),
        params=(Param("a", F(0), F(3)), *(Param(n, F(-1), F(3)) for n in "bcd"), Param("n")),
    ),
    Identity(
        "terminating-c-2",
        "Derivative identity divided by c-2b at (a,b,d) = (2,1,3)",
        (
            Side("lhs", _terminating("finite-c2-lhs", S.finite_c2_lhs, "cn")),
            Side("rhs", _terminating("finite-c2-rhs", S.finite_c2_rhs, "cn")),
        ),
        ExactFinite(),
        params=(Param("c", F(0), F(4)), Param("n")),
        constraint=lambda p: p["c"] != 2,
    ),
    Identity(
        "terminating-c-1",
        "Derivative identity divided by c-2b at (a,b,d) = (1/2,1/2,3/2)",
        (
            Side("lhs", _terminating("finite-c1-lhs", S.finite_c1_lhs, "cn")),
            Side("rhs", _terminating("finite-c1-rhs", S.finite_c1_rhs, "cn")),
        ),
        ExactFinite(),
        params=(Param("c", F(0), F(2)), Param("n")),
        constraint=lambda p: p["c"] != 1,
    ),
    Identity(
        "pi2zeta3-component",
        "c-derivative at c = 2, n -> oo: 4 pi^2 zeta(3) - 36 zeta(5) - 4 pi^2/3",
        (
            Side("lhs", _series("pi2zeta3-part-lhs", S.pi2zeta3_part_lhs, SIXTYFOURTH)),
            Side("rhs", closed=4 * PI**2 * zeta(3) - 36 * zeta(5) - 4 * PI**2 / 3),
        ),
        NumericGeometric(),
    ),
    Identity(
        "pi2zeta3-alternating",
        "Alternating harmonic sum 16 sum (-1)^k (2 H_{k+1}^(3) - (k+1)^-3 - 1)/(k+1)^2",
        (
            Side("lhs", _series("pi2zeta3-alternating", S.pi2zeta3_alternating, AlternatingPolyDecay(F(2)), start=1)),
            Side("rhs", closed=4 * PI**2 * zeta(3) - 36 * zeta(5) - 4 * PI**2 / 3),
        ),
        NumericCVZ(),
    ),
    Identity(
        "alt-h3-euler-sum",
        "Alternating Euler sum of H_{k+1}^(3)/(k+1)^2",
        (
            Side("lhs", _series("alt-h3-euler-sum", S.alternating_h3_sum, AlternatingPolyDecay(F(2)))),
            Side("rhs", closed=PI**2 * zeta(3) / 8 - F(21, 32) * zeta(5)),
        ),
        NumericCVZ(),
    ),
    Identity(
        "catalan-euler-sum",
        "Alternating central-binomial sum with H_{2k}^(3): 15 zeta(3)/(4 pi) - 2 G",
        (
            Side("lhs", _series("catalan-euler-sum", S.catalan_euler_sum, AlternatingPolyDecay(HALF), start=1)),
            Side("rhs", closed=15 * zeta(3) / (4 * PI) - 2 * CATALAN),
        ),
        NumericCVZ(),
    ),
)


def _stuffle(k: int, l: int) -> Identity:
    def summand(lift):
        a = S.t_double_terms(lift, k, l)
        b = S.t_double_terms(lift, l, k)
        for x, y in zip(a, b):
            yield x + y

    sides = (
        Side("lhs", _series(f"t({k},{l})+t({l},{k})", summand, PolyDecay(F(min(k, l))))),
        Side("rhs", closed=t(k) * t(l) - t(k + l)),
    )
    return Identity(
        f"stuffle-{k}-{l}",
        f"Stuffle relation t({k}) t({l}) = t({k},{l}) + t({l},{k}) + t({k + l})",
        sides,
        NumericRichardson(digits=6),
    )


IDENTITIES = IDENTITIES + tuple(_stuffle(k, l) for k, l in ((2, 2), (2, 3), (3, 2), (3, 3)))

_BY_ID = {i.id: i for i in IDENTITIES}
assert len(_BY_ID) == len(IDENTITIES), "duplicate identity id"


# ---------------------------------------------------------------------------
# jet transitions


@dataclass(frozen=True)
class JetTransition:
    """Per-term derivative step.

    The source summand is evaluated with jet-valued pivot variables; the
    Taylor coefficient selected by ``coefficient`` (outermost order first),
    times ``scale``, must equal the target term for every k.  With
    ``n_limit`` the source also depends on n, carried as a Laurent series in
    1/n, and the coefficient is taken in the limit n -> oo.
    """

    name: str
    source_id: str
    target_id: str
    source: Callable
    target: Callable
    pivot: tuple
    coefficient: tuple
    scale: Fraction
    n_limit: bool = False

    @property
    def order(self) -> int:
        return sum(self.coefficient)


JET_TRANSITIONS: tuple = (
    JetTransition(
        "x-divided-to-zeta7-1:lhs", "wp-transform-x-divided", "zeta7-component-1",
        S.quad_x_reduced_lhs, S.zeta7_part_one_lhs, (("x", HALF),), (2,), F(-2),
    ),
    JetTransition(
        "x-divided-to-zeta7-1:rhs", "wp-transform-x-divided", "zeta7-component-1",
        S.quad_x_reduced_rhs, S.zeta7_part_one_rhs, (("x", HALF),), (2,), F(-2),
    ),
    JetTransition(
        "cd-divided-to-zeta7-2:lhs", "wp-transform-cd-divided", "zeta7-component-2",
        S.quad_cd_reduced_lhs, S.zeta7_part_two_lhs, (("c", F(1)), ("d", F(3, 2))), (1, 1), F(2),
    ),
    JetTransition(
        "cd-divided-to-zeta7-2:rhs", "wp-transform-cd-divided", "zeta7-component-2",
        S.quad_cd_reduced_rhs, S.zeta7_part_two_rhs, (("c", F(1)), ("d", F(3, 2))), (1, 1), F(2),
    ),
    JetTransition(
        "d-reduced-to-zeta3sq:lhs", "d-reduced", "zeta3sq-component",
        S.cubic_d_lhs, S.zeta3sq_part_lhs, (("d", F(2)),), (1,), F(-2),
    ),
    JetTransition(
        "d-reduced-to-zeta3sq:rhs", "d-reduced", "zeta3sq-component",
        S.cubic_d_rhs, S.zeta3sq_part_middle, (("d", F(2)),), (1,), F(-2),
    ),
    JetTransition(
        "terminating-c-2-to-pi2zeta3:lhs", "terminating-c-2", "pi2zeta3-component",
        S.finite_c2_lhs, S.pi2zeta3_part_lhs, (("c", F(2)),), (1,), F(-8), n_limit=True,
    ),
    JetTransition(
        "terminating-c-2-to-pi2zeta3:rhs", "terminating-c-2", "pi2zeta3-alternating",
        S.finite_c2_rhs, S.pi2zeta3_alternating, (("c", F(2)),), (1,), F(-8), n_limit=True,
    ),
    JetTransition(
        "terminating-c-1-to-thm-d:lhs", "terminating-c-1", "thm-d",
        S.finite_c1_lhs, S.catalan_series, (("c", F(1)),), (1,), F(-16), n_limit=True,
    ),
    JetTransition(
        "terminating-c-1-to-catalan-euler:rhs", "terminating-c-1", "catalan-euler-sum",
        S.finite_c1_rhs, S.catalan_euler_sum, (("c", F(1)),), (1,), F(-1, 4), n_limit=True,
    ),
)

# ---------------------------------------------------------------------------
# theorem assemblies: rational combinations of member left-hand sides


@dataclass(frozen=True)
class Assembly:
    name: str
    ids: tuple
    coefficients: tuple
    target: Expr
    target_id: str = ""
    note: str = field(default="")


ASSEMBLIES: tuple = (
    Assembly(
        "assemble-thm-a",
        ("zeta7-component-1", "zeta7-component-2", "guillera"),
        (F(1), F(-2), F(16)),
        F(127, 2) * zeta(7),
        "thm-a",
    ),
    Assembly("assemble-thm-b", ("zeta3sq-component", "guillera"), (F(1), F(8)), F(49, 2) * zeta(3) ** 2, "thm-b"),
    Assembly(
        "assemble-thm-c",
        ("zeilberger", "pi2zeta3-component"),
        (F(1), F(1)),
        4 * PI**2 * zeta(3) - 36 * zeta(5),
        "thm-c",
    ),
    Assembly("assemble-thm-d", ("catalan-euler-sum",), (F(64),), 240 * zeta(3) / PI - 128 * CATALAN, "thm-d"),
)


def catalog() -> tuple:
    return IDENTITIES


def lookup(identity_id: str) -> Identity:
    try:
        return _BY_ID[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity {identity_id!r}") from None


def transition(name: str) -> JetTransition:
    for t_ in JET_TRANSITIONS:
        if t_.name == name:
            return t_
    raise KeyError(f"unknown jet transition {name!r}")
