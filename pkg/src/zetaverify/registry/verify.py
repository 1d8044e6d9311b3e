"""Instantiate catalog entries, sample parameters and run the checks."""

from __future__ import annotations

import math
import random
import time
import zlib
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import islice
from typing import Mapping, Optional

from ..numerics import DIGITS_CAP, ApproxReal, PrecisionContext, agree_to_digits, to_decimal_string
from ..special import Jet, LaurentSeries, nest_jets, taylor_coefficient
from ..summation import (
    AlternatingPolyDecay,
    Geometric,
    PolyDecay,
    SummationError,
    Terminating,
    sum_cvz,
    sum_finite,
    sum_geometric,
    sum_richardson,
    tail_slope,
)
from .catalog import (
    ASSEMBLIES,
    Assembly,
    ConjectureResidual,
    Identity,
    JetTransition,
    NumericRichardson,
    lookup,
    strategy_name,
)
from .closedform import Expr

PASS, FAIL, RESIDUAL = "pass", "fail", "residual-only"
TRIAL_TERMS = 30
MAX_DENOMINATOR = 12
SLOPE_TOLERANCE = 0.2
RETRIES = 3


class DomainError(ValueError):
    """Parameters outside an identity's admissible domain."""


class VerificationError(RuntimeError):
    """An engine failed; the message names the identity."""

    def __init__(self, identity_id: str, cause: Exception):
        super().__init__(f"{identity_id}: {cause}")
        self.identity_id = identity_id
        self.cause = cause


@dataclass
class VerificationReport:
    identity_id: str
    params: dict
    status: str
    digits_matched: int
    digits_requested: int
    rigorous: bool
    terms_used: int
    engine: str
    engine_settings: dict = field(default_factory=dict)
    heuristic_gap: Optional[str] = None
    value: Optional[str] = None
    residual: Optional[str] = None
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: Mapping) -> "VerificationReport":
        return cls(**d)


# ---------------------------------------------------------------------------
# parameters


def parse_rational(text) -> Fraction:
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"not a rational number: {text!r}") from None


def _format_params(p: Mapping) -> dict:
    return {k: str(v) for k, v in sorted(p.items()) if not k.startswith("_")}


def _in_box(identity: Identity, p: Mapping) -> bool:
    for prm in identity.free_params:
        if not prm.lo < p[prm.name] < prm.hi:
            return False
    return True


def _exact_sides(identity: Identity, p: Mapping) -> list:
    out = []
    for side in identity.sides:
        s = side.series(p)
        v = sum_finite(s, p["n"]) * side.scale
        if side.factor is not None:
            v *= side.factor(p)
        out.append(v)
    return out


def _n_values(identity: Identity, p: Mapping) -> list:
    if "n" in p:
        return [int(p["n"])]
    lo, hi = identity.strategy.n_range
    return list(range(lo, hi + 1))


def _instances(identity: Identity, p: Mapping, reading: Optional[str] = None):
    """Fully specified parameter dicts (one per n for terminating entries)."""
    if not identity.is_exact:
        yield dict(p)
        return
    for n in _n_values(identity, p):
        q = dict(p, n=n)
        if reading is not None:
            q["_reading"] = reading
        if identity.complete is not None:
            q = identity.complete(q)
        yield q


def admissible(identity: Identity, p: Mapping) -> bool:
    """Constraint filter plus pole avoidance by trial evaluation."""
    if not identity.params:
        return True
    readings = (identity.strategy.readings or (None,)) if identity.is_exact else (None,)
    try:
        for q in (q for r in readings for q in _instances(identity, p, r)):
            if identity.constraint is not None and not identity.constraint(q):
                return False
            if identity.is_exact:
                _exact_sides(identity, q)
                continue
            for side in identity.sides:
                if side.series is None:
                    continue
                s = side.series(q)
                terms = list(islice(s.terms(Fraction), TRIAL_TERMS))
                if terms[-1] == 0:  # a numerator factor vanished: degenerate
                    return False
    except ZeroDivisionError:
        return False
    return True


def _rng(identity: Identity, seed: int) -> random.Random:
    return random.Random(seed * 1_000_003 + zlib.crc32(identity.id.encode()))


def sample_params(identity, seed: int = 1, count: int = 3, max_attempts: int = 2000) -> list[dict]:
    """``count`` distinct admissible tuples with denominators <= 12."""
    identity = lookup(identity) if isinstance(identity, str) else identity
    free = identity.free_params
    if not free:
        raise DomainError(f"{identity.id} has no free parameters")
    rng = _rng(identity, seed)
    out: list[dict] = []
    for _ in range(max_attempts):
        p = {}
        for prm in free:
            den = rng.randint(2, MAX_DENOMINATOR)
            lo = math.floor(prm.lo * den) + 1
            hi = math.ceil(prm.hi * den) - 1
            p[prm.name] = Fraction(rng.randint(lo, hi), den)
        if p in out or not _in_box(identity, p) or not admissible(identity, p):
            continue
        out.append(p)
        if len(out) == count:
            return out
    raise DomainError(f"{identity.id}: could not find {count} admissible parameter tuples")


def check_params(identity: Identity, params: Optional[Mapping]) -> dict:
    p = {k: parse_rational(v) for k, v in (params or {}).items()}
    unknown = set(p) - set(identity.param_names)
    if unknown:
        raise DomainError(f"{identity.id}: unknown parameter(s) {', '.join(sorted(unknown))}")
    missing = [prm.name for prm in identity.free_params if prm.name not in p]
    if missing:
        raise DomainError(f"{identity.id}: missing parameter(s) {', '.join(missing)}")
    if "n" in p:
        if p["n"].denominator != 1 or p["n"] < 0:
            raise DomainError(f"{identity.id}: n must be a nonnegative integer")
        p["n"] = int(p["n"])
    if identity.complete is not None and "g" in p and identity.constraint is not None:
        if "n" not in p:
            raise DomainError(f"{identity.id}: g can only be given together with n")
        if not identity.constraint(p):
            raise DomainError(f"{identity.id}: parameters violate {identity.note.split(';')[0]}")
    if not admissible(identity, p):
        raise DomainError(f"{identity.id}: parameters outside the admissible domain (constraint or pole)")
    return p


# ---------------------------------------------------------------------------
# evaluation


@dataclass
class _Member:
    value: ApproxReal
    rigorous: bool
    terms: int
    engine: str
    gap: Optional[Fraction] = None
    settings: dict = field(default_factory=dict)


def _effective_digits(strategy, digits: Optional[int]) -> int:
    if digits is None:
        return strategy.digits
    if isinstance(strategy, NumericRichardson):
        return min(digits, strategy.digits)
    return digits


def cvz_depth(digits: int) -> int:
    return math.ceil((digits + 3) / math.log10(5.83)) + 2


def _evaluate_side(side, p, strategy, digits, ctx, cache_dir, max_terms, base_N) -> _Member:
    if side.closed is not None:
        v = side.closed.evaluate(ctx, cache_dir)
        m = _Member(v, v.rigorous, 0, "closed-form")
    else:
        s = side.series(p)
        k = s.klass
        if isinstance(k, Geometric):
            r = sum_geometric(s, Fraction(1, 10 ** (digits + 2)), ctx, max_terms)
        elif isinstance(k, PolyDecay):
            depth = strategy.depth if isinstance(strategy, NumericRichardson) else 7
            r = sum_richardson(s, base_N, depth, ctx)
            slope = tail_slope(s)
            r.settings["tail_slope"] = round(slope, 4)
            r.settings["tail_slope_ok"] = abs(slope - float(k.exponent)) <= SLOPE_TOLERANCE
        elif isinstance(k, AlternatingPolyDecay):
            r = sum_cvz(s, cvz_depth(digits), ctx)
        elif isinstance(k, Terminating):
            raise SummationError(f"{s.name}: terminating series in a numeric identity")
        else:  # pragma: no cover
            raise SummationError(f"{s.name}: unknown convergence class")
        m = _Member(r.value, r.rigorous, r.terms_used, r.engine, r.heuristic_gap, r.settings)
    if side.scale != 1:
        m.value = m.value * side.scale
        if m.gap is not None:
            m.gap *= abs(side.scale)
    if side.factor is not None:
        m.value = m.value * side.factor(p)
    return m


def _decimal(x: ApproxReal, digits: int) -> str:
    mag = abs(x.midpoint)
    lead = math.floor(math.log10(mag)) + 1 if mag >= 1 else 0
    places = max(digits + 2 - lead, 4)
    v, r = to_decimal_string(x, places)
    return f"{v} +/- {r}"


def _fmt_gap(g: Optional[Fraction]) -> Optional[str]:
    return None if g is None else f"{float(g):.3e}"


def _rational_digits(a: Fraction, b: Fraction) -> int:
    if a == b:
        return DIGITS_CAP
    scale = max(Fraction(1), abs(a))
    d = 0
    while abs(a - b) * 10 ** (d + 1) <= scale:
        d += 1
    return d


def _verify_exact(identity: Identity, p: dict, t0: float) -> VerificationReport:
    readings = identity.strategy.readings or (None,)
    outcomes = {}
    for reading in readings:
        worst, failures, terms = DIGITS_CAP, [], 0
        for q in _instances(identity, p, reading):
            try:
                vals = _exact_sides(identity, q)
            except ZeroDivisionError:
                if reading == readings[0]:
                    raise
                failures.append(q["n"])  # the alternative reading hits a pole here
                worst = 0
                continue
            terms += q["n"] + 1
            d = min(_rational_digits(vals[-1], v) for v in vals[:-1])
            if d < DIGITS_CAP:
                failures.append(q["n"])
            worst = min(worst, d)
        outcomes[reading] = (worst, failures, terms)
    primary = readings[0]
    worst, failures, terms = outcomes[primary]
    settings = {"n_values": _n_values(identity, p)}
    if identity.strategy.readings:
        settings["readings"] = {
            r: (PASS if not f else f"{FAIL} at n=" + ",".join(map(str, f))) for r, (_, f, _) in outcomes.items()
        }
        settings["reading"] = primary
    if "n" in p:
        q = next(_instances(identity, p, primary))
        value = str(_exact_sides(identity, q)[0])
    else:
        value = None
    return VerificationReport(
        identity.id,
        _format_params(p),
        PASS if not failures else FAIL,
        worst,
        DIGITS_CAP,
        True,
        terms,
        "exact",
        settings,
        value=value,
        residual=None if not failures else f"mismatch at n={','.join(map(str, failures))}",
        wall_time=time.perf_counter() - t0,
    )


def _verify_numeric(identity, p, digits, ctx, cache_dir, max_terms, base_N) -> tuple:
    strategy = identity.strategy
    members = [_evaluate_side(s, p, strategy, digits, ctx, cache_dir, max_terms, base_N) for s in identity.sides]
    ref = members[-1]
    matched = min(agree_to_digits(m.value, ref.value) for m in members[:-1])
    slopes_ok = all(m.settings.get("tail_slope_ok", True) for m in members)
    return members, matched, slopes_ok


def verify(
    identity,
    params: Optional[Mapping] = None,
    digits: Optional[int] = None,
    ctx: Optional[PrecisionContext] = None,
    cache_dir=None,
    seed: int = 1,
    max_terms: int = 10**6,
) -> VerificationReport:
    """Check one identity at one parameter tuple.

    Parametric entries without ``params`` use the first sampled tuple.
    Terminating entries run every n in their range unless ``n`` is given.
    """
    t0 = time.perf_counter()
    identity = lookup(identity) if isinstance(identity, str) else identity
    if params is None and identity.free_params:
        params = sample_params(identity, seed, 1)[0]
    p = check_params(identity, params)
    if identity.is_exact:
        return _verify_exact(identity, p, t0)

    strategy = identity.strategy
    want = _effective_digits(strategy, digits)
    ctx = ctx or PrecisionContext.for_digits(want + 10)
    base_N = strategy.base_N if isinstance(strategy, NumericRichardson) else 64
    settings: dict = {"strategy": strategy_name(strategy), "bits": ctx.bits}
    if digits is not None and want != digits:
        settings["digits_asked"] = digits
    attempts = 0
    while True:
        attempts += 1
        try:
            members, matched, slopes_ok = _verify_numeric(identity, p, want, ctx, cache_dir, max_terms, base_N)
        except (SummationError, ZeroDivisionError) as exc:
            raise VerificationError(identity.id, exc) from exc
        done = isinstance(strategy, ConjectureResidual) or (matched >= want and slopes_ok)
        if done or attempts > RETRIES:
            break
        ctx = ctx.with_guard(2 * ctx.guard_bits)
        if isinstance(strategy, NumericRichardson):
            base_N *= 2
    lhs, ref = members[0], members[-1]
    residual = lhs.value - ref.value
    rigorous = all(m.rigorous for m in members)
    gaps = [m.gap for m in members if m.gap is not None]
    settings["attempts"] = attempts
    settings["bits"] = ctx.bits
    settings["members"] = [
        {"label": s.label, "engine": m.engine, "terms_used": m.terms, "rigorous": m.rigorous, **m.settings}
        for s, m in zip(identity.sides, members)
    ]
    if isinstance(strategy, ConjectureResidual):
        status = RESIDUAL
        settings["anomalous"] = not residual.contains_zero()
    else:
        status = PASS if matched >= want and slopes_ok else FAIL
        if not slopes_ok:
            settings["tail_slope_failure"] = True
    return VerificationReport(
        identity.id,
        _format_params(p),
        status,
        matched,
        want,
        rigorous,
        sum(m.terms for m in members),
        "+".join(dict.fromkeys(m.engine for m in members)),
        settings,
        heuristic_gap=_fmt_gap(max(gaps)) if gaps else None,
        value=_decimal(lhs.value, want),
        residual=_decimal(residual, want),
        wall_time=time.perf_counter() - t0,
    )


# ---------------------------------------------------------------------------
# jet transitions


@dataclass(frozen=True)
class JetCheck:
    k: int
    coefficient: Fraction
    target: Fraction

    @property
    def passed(self) -> bool:
        return self.coefficient == self.target


class JetPoleError(ZeroDivisionError):
    def __init__(self, name: str, k: int):
        super().__init__(f"{name}: pole at the pivot for k = {k}")
        self.k = k


def _pivot_vars(t: JetTransition) -> dict:
    if len(t.pivot) == 1:
        (name, point), = t.pivot
        return {name: Jet.variable(Fraction(point), max(t.coefficient), name)}
    (inner, ip), (outer, op) = t.pivot
    x_in, x_out = nest_jets(ip, op, inner, outer, max(t.coefficient))
    return {inner: x_in, outer: x_out}


def jet_transition_check(t: JetTransition, k_max: int = 50) -> list[JetCheck]:
    """Exact per-term comparison for k = 0..k_max."""
    kwargs = _pivot_vars(t)
    if t.n_limit:
        kwargs["n"] = LaurentSeries.n_variable()
    source = t.source(Fraction, **kwargs)
    target = t.target(Fraction)
    out = []
    for k in range(k_max + 1):
        try:
            src = next(source)
        except ZeroDivisionError as exc:
            raise JetPoleError(t.name, k) from exc
        coef = taylor_coefficient(src, *t.coefficient)
        if isinstance(coef, LaurentSeries):
            coef = coef.limit()
        out.append(JetCheck(k, Fraction(coef) * t.scale, Fraction(next(target))))
    return out


# ---------------------------------------------------------------------------
# linear combinations


def linear_combination_check(
    ids,
    coefficients,
    target: Expr,
    digits: int = 50,
    ctx: Optional[PrecisionContext] = None,
    cache_dir=None,
    name: str = "linear-combination",
) -> VerificationReport:
    """sum c_i * (left-hand side of identity i) against ``target``."""
    t0 = time.perf_counter()
    if len(ids) != len(coefficients):
        raise ValueError("ids and coefficients differ in length")
    ctx = ctx or PrecisionContext.for_digits(digits + 10)
    total = ApproxReal(0, 0, ctx.bits)
    rigorous, terms, engines, gaps = True, 0, [], []
    for iid, c in zip(ids, coefficients):
        identity = lookup(iid)
        c = Fraction(c)
        if c == 0:
            continue
        try:
            m = _evaluate_side(identity.sides[0], {}, identity.strategy, digits, ctx, cache_dir, 10**6, 64)
        except (SummationError, ZeroDivisionError) as exc:
            raise VerificationError(iid, exc) from exc
        total = total + m.value * c
        rigorous &= m.rigorous
        terms += m.terms
        engines.append(m.engine)
        if m.gap is not None:
            gaps.append(abs(c) * m.gap)
    goal = target.evaluate(ctx, cache_dir)
    rigorous &= goal.rigorous
    matched = agree_to_digits(total, goal)
    return VerificationReport(
        name,
        {},
        PASS if matched >= digits else FAIL,
        matched,
        digits,
        rigorous,
        terms,
        "+".join(dict.fromkeys(engines)) or "none",
        {
            "ids": list(ids),
            "coefficients": [str(Fraction(c)) for c in coefficients],
            "target": str(target),
            "bits": ctx.bits,
        },
        heuristic_gap=_fmt_gap(sum(gaps)) if gaps else None,
        value=_decimal(total, digits),
        residual=_decimal(total - goal, digits),
        wall_time=time.perf_counter() - t0,
    )


def assembly_digits(a: Assembly, digits: Optional[int]) -> int:
    return min(digits or 50, 25) if a.target_id == "thm-d" else (digits or 50)


def check_assembly(a: Assembly, digits: Optional[int] = None, cache_dir=None) -> VerificationReport:
    return linear_combination_check(
        a.ids, a.coefficients, a.target, assembly_digits(a, digits), cache_dir=cache_dir, name=a.name
    )


def assembly(name: str) -> Assembly:
    for a in ASSEMBLIES:
        if a.name == name:
            return a
    raise KeyError(f"unknown assembly {name!r}")
