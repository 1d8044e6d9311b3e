"""Independent evaluation of the constants that appear on right-hand sides.

pi comes from Machin-type arctangent formulas, zeta(s) from Euler-Maclaurin
summation with exact Bernoulli numbers, lambda(s) = (1 - 2**-s) zeta(s),
Catalan's constant from CVZ acceleration, and the odd double sums t(k1, k2)
either from the stuffle closed form or from extrapolated direct summation.
None of these routes uses the hypergeometric series under test.
"""

from __future__ import annotations

import hashlib
import logging
import math
import os
import re
import tempfile
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from .numerics import ApproxReal, PrecisionContext, error_bound, to_decimal_string
from .summation import (
    CVZ_RATE,
    CVZ_STEP,
    PolyDecay,
    SeriesDescriptor,
    cvz_estimate,
    sum_richardson,
)

log = logging.getLogger(__name__)

ENGINE_VERSION = "zetaverify-consts/1"
BERNOULLI_CAP = 512


class ConstantError(ValueError):
    pass


class CacheCorruptError(ConstantError):
    pass


# ---------------------------------------------------------------------------
# identifiers

_NAME_RE = re.compile(r"^(pi|catalan|zeta(\d+)|lambda(\d+)|t(\d+)(?:[_,](\d+))?|t\((\d+)(?:,(\d+))?\))$")


@dataclass(frozen=True)
class ConstantId:
    """``kind`` is one of pi, zeta, lambda, catalan, t; ``args`` its integer arguments."""

    kind: str
    args: tuple = ()

    def __post_init__(self):
        kind, args = self.kind, self.args
        if kind in ("pi", "catalan"):
            ok = args == ()
        elif kind in ("zeta", "lambda"):
            ok = len(args) == 1 and args[0] >= 2
        elif kind == "t":
            ok = (len(args) == 1 and args[0] >= 2) or (len(args) == 2 and args[0] >= 1 and args[1] >= 2)
        else:
            ok = False
        if not ok:
            raise ConstantError(f"invalid constant {kind}{args}")

    @classmethod
    def parse(cls, name: str) -> "ConstantId":
        m = _NAME_RE.match(name.strip().lower().replace(" ", ""))
        if not m:
            raise ConstantError(f"unknown constant {name!r}")
        whole, z, lam, t1, t2, p1, p2 = m.groups()
        if whole in ("pi", "catalan"):
            return cls(whole)
        if z:
            return cls("zeta", (int(z),))
        if lam:
            return cls("lambda", (int(lam),))
        a, b = (t1, t2) if t1 else (p1, p2)
        return cls("t", (int(a),) if b is None else (int(a), int(b)))

    def __str__(self) -> str:
        if self.kind == "t":
            return "t" + "_".join(map(str, self.args))
        return self.kind + "".join(map(str, self.args))

    @property
    def heuristic(self) -> bool:
        return self.kind == "catalan" or (self.kind == "t" and len(self.args) == 2 and self.args[0] != self.args[1])


PI = ConstantId("pi")
CATALAN = ConstantId("catalan")


def Zeta(s: int) -> ConstantId:
    return ConstantId("zeta", (s,))


def Lambda(s: int) -> ConstantId:
    return ConstantId("lambda", (s,))


def TSingle(k: int) -> ConstantId:
    return ConstantId("t", (k,))


def TDouble(k1: int, k2: int) -> ConstantId:
    return ConstantId("t", (k1, k2))


# ---------------------------------------------------------------------------
# pi

MACHIN = ((16, 5), (-4, 239))
GAUSS = ((48, 18), (32, 57), (-20, 239))


def _arctan_inv(m: int, prec: int) -> ApproxReal:
    """arctan(1/m) for integer m >= 2; alternating tail bounded by the next term."""
    total = ApproxReal(0, 0, prec)
    j = 0
    m2 = m * m
    power = m
    while True:
        term = Fraction(1, (2 * j + 1) * power)
        if term < Fraction(1, 1 << (prec + 2)):
            return total.widen(term)
        total = total + (ApproxReal.from_rational(term, prec) if j % 2 == 0 else -ApproxReal.from_rational(term, prec))
        j += 1
        power *= m2


def pi(ctx: PrecisionContext, formula=MACHIN) -> ApproxReal:
    total = ApproxReal(0, 0, ctx.bits)
    for coeff, m in formula:
        total = total + coeff * _arctan_inv(m, ctx.bits)
    return total


# ---------------------------------------------------------------------------
# Bernoulli numbers

_bern_lock = threading.Lock()
_bern: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """B_n (with B_1 = -1/2) from sum_{j<=n} C(n+1, j) B_j = 0."""
    if n < 0 or (n % 2 and n != 1):
        raise ConstantError(f"bernoulli needs n = 1 or a nonnegative even integer, got {n}")
    if n > BERNOULLI_CAP:
        raise ConstantError(f"bernoulli index {n} exceeds the cap {BERNOULLI_CAP}")
    with _bern_lock:
        while len(_bern) <= n:
            m = len(_bern)
            acc = Fraction(0)
            binom = 1  # C(m+1, j)
            for j in range(m):
                acc += binom * _bern[j]
                binom = binom * (m + 1 - j) // (j + 1)
            _bern.append(-acc / (m + 1))
        return _bern[n]


# ---------------------------------------------------------------------------
# zeta and lambda


def _zeta_terms(s: int, M: int, prec: int):
    """Euler-Maclaurin pieces: exact head rationals and the correction terms."""
    head = [Fraction(1, k**s) for k in range(1, M)]
    head.append(Fraction(1, (s - 1) * M ** (s - 1)))
    head.append(Fraction(1, 2 * M**s))
    corrections = []
    rising = s  # (s)_{2j-1}
    fact = 2  # (2j)!
    j = 1
    tiny = Fraction(1, 1 << (prec + 4))
    while True:
        term = bernoulli(2 * j) / fact * rising / Fraction(M ** (s + 2 * j - 1))
        corrections.append(term)
        if abs(term) < tiny or 2 * j + 2 > BERNOULLI_CAP:
            return head, corrections
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        fact *= (2 * j + 1) * (2 * j + 2)
        j += 1


@lru_cache(maxsize=256)
def _zeta_cached(s: int, prec: int, M: int) -> ApproxReal:
    head, corr = _zeta_terms(s, M, prec)
    total = ApproxReal(0, 0, prec)
    for q in head + corr[:-1]:
        total = total + ApproxReal.from_rational(q, prec)
    # remainder after the last kept correction is at most the first omitted
    # term in size; doubled for margin
    return total.widen(2 * abs(corr[-1]))


def zeta_int(s: int, ctx: PrecisionContext, M: int | None = None) -> ApproxReal:
    if not isinstance(s, int) or s < 2:
        raise ConstantError(f"zeta needs an integer s >= 2, got {s}")
    if M is None:
        M = ctx.bits // 6 + 10
    return _zeta_cached(s, ctx.bits, M)


def lambda_int(s: int, ctx: PrecisionContext) -> ApproxReal:
    if not isinstance(s, int) or s < 2:
        raise ConstantError(f"lambda needs an integer s >= 2, got {s}")
    return zeta_int(s, ctx) * (1 - Fraction(1, 2**s))


def t_single(k: int, ctx: PrecisionContext) -> ApproxReal:
    return lambda_int(k, ctx)


# ---------------------------------------------------------------------------
# Catalan


def _catalan_magnitudes(count: int, prec: int) -> list:
    return [ApproxReal.from_rational(Fraction(1, (2 * k + 1) ** 2), prec) for k in range(count)]


def cvz_depth_for(bits: int) -> int:
    return math.ceil(bits * math.log(2) / math.log(float(CVZ_RATE))) + 4


@lru_cache(maxsize=64)
def _catalan_cached(prec: int, depth: int) -> ApproxReal:
    mags = _catalan_magnitudes(depth + CVZ_STEP, prec)
    v = cvz_estimate(mags, depth)
    w = cvz_estimate(mags, depth + CVZ_STEP)
    heuristic = 3 * Fraction(abs(v.mid) + v.rad, 1 << prec) / CVZ_RATE**depth
    return v.widen(4 * max(heuristic, error_bound(v, w)), rigorous=False)


def catalan(ctx: PrecisionContext, depth: int | None = None) -> ApproxReal:
    return _catalan_cached(ctx.bits, depth or cvz_depth_for(ctx.bits))


# ---------------------------------------------------------------------------
# double t-values


def _t_double_series(k1: int, k2: int) -> SeriesDescriptor:
    from .registry.summands import t_double_terms

    return SeriesDescriptor(f"t({k1},{k2})", t_double_terms, PolyDecay(Fraction(k2)), params=(("k1", k1), ("k2", k2)))


def t_double(
    k1: int,
    k2: int,
    ctx: PrecisionContext,
    mode: str = "closed_form_when_available",
    base_N: int = 64,
    depth: int = 7,
    truncation: int = 1 << 14,
) -> ApproxReal:
    """t(k1, k2) = sum over odd n1 < n2 of n1**-k1 n2**-k2."""
    if k2 < 2 or k1 < 1:
        raise ConstantError(f"t({k1},{k2}) needs k1 >= 1 and k2 >= 2")
    if mode == "closed_form_when_available":
        if k1 != k2:
            mode = "direct"
        else:
            t = lambda_int(k1, ctx)
            return (t * t - lambda_int(2 * k1, ctx)) * Fraction(1, 2)
    elif mode == "closed_form":
        if k1 != k2:
            raise ConstantError(f"no closed form for t({k1},{k2}) with k1 != k2")
        return t_double(k1, k2, ctx)
    if mode != "direct":
        raise ConstantError(f"unknown mode {mode!r}")
    if k1 + k2 < 4:
        raise ConstantError(f"direct mode needs k1 + k2 >= 4, got t({k1},{k2})")
    if k1 >= 2:
        return sum_richardson(_t_double_series(k1, k2), base_N, depth, ctx).value
    # k1 = 1: the inner sum grows like log, so truncate and add a labelled tail
    total = inner = ApproxReal(0, 0, ctx.bits)
    for m in range(1, truncation + 1):
        total = total + inner * Fraction(1, (2 * m - 1) ** k2)
        inner = inner + ApproxReal.from_rational(Fraction(1, 2 * m - 1), ctx.bits)
    n = truncation
    tail = Fraction(math.ceil((2 + math.log(2 * n)) * 1000), 1000) / (2 * (k2 - 1) * (2 * n - 1) ** (k2 - 1))
    return total.widen(tail, rigorous=False)


# ---------------------------------------------------------------------------
# dispatch and memo


_memo_lock = threading.Lock()
_memo: dict = {}


def compute(cid: ConstantId, ctx: PrecisionContext) -> ApproxReal:
    key = (cid, ctx.bits)
    with _memo_lock:
        hit = _memo.get(key)
    if hit is not None:
        return hit
    kind, args = cid.kind, cid.args
    if kind == "pi":
        value = pi(ctx)
    elif kind == "zeta":
        value = zeta_int(args[0], ctx)
    elif kind == "lambda":
        value = lambda_int(args[0], ctx)
    elif kind == "catalan":
        value = catalan(ctx)
    elif len(args) == 1:
        value = t_single(args[0], ctx)
    else:
        value = t_double(args[0], args[1], ctx)
    with _memo_lock:
        _memo[key] = value
    return value


# ---------------------------------------------------------------------------
# on-disk cache


@dataclass(frozen=True)
class CachedConstant:
    id: ConstantId
    precision_bits: int
    decimal_value: str
    radius_decimal: str
    engine_version: str
    checksum: str

    def to_ball(self) -> ApproxReal:
        v, r = Fraction(self.decimal_value), Fraction(self.radius_decimal)
        rigorous = not self.engine_version.endswith(":heuristic")
        return ApproxReal.from_interval(v - r, v + r, self.precision_bits, rigorous)


def _checksum(cid: str, bits: int, value: str, radius: str, engine: str) -> str:
    payload = f"id={cid}\nbits={bits}\nvalue={value}\nradius={radius}\nengine={engine}\n"
    return hashlib.sha256(payload.encode()).hexdigest()


def cache_path(cid: ConstantId, cache_dir) -> Path:
    return Path(cache_dir) / f"{cid}.txt"


def cache_put(cid: ConstantId, value: ApproxReal, cache_dir) -> CachedConstant:
    """Write ``value`` unless an entry of at least the same precision exists."""
    path = cache_path(cid, cache_dir)
    try:
        existing = _read_entry(path)
    except CacheCorruptError:
        existing = None
    if existing is not None and existing.precision_bits >= value.prec:
        return existing
    places = math.ceil(value.prec * math.log10(2)) + 2
    val, rad = to_decimal_string(value, places)
    engine = ENGINE_VERSION + (":heuristic" if not value.rigorous else "")
    sha = _checksum(str(cid), value.prec, val, rad, engine)
    entry = CachedConstant(cid, value.prec, val, rad, engine, sha)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".txt")
    with os.fdopen(fd, "w", encoding="utf-8") as fh:
        fh.write(f"id={cid}\nbits={value.prec}\nvalue={val}\nradius={rad}\nengine={engine}\nsha={sha}\n")
    os.replace(tmp, path)
    return entry


def _read_entry(path: Path) -> CachedConstant | None:
    """Parse a cache file; raise CacheCorruptError on a checksum mismatch."""
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        return None
    fields = dict(line.split("=", 1) for line in text.splitlines() if "=" in line)
    try:
        cid = ConstantId.parse(fields["id"])
        bits = int(fields["bits"])
        val, rad, engine, sha = fields["value"], fields["radius"], fields["engine"], fields["sha"]
        Fraction(val), Fraction(rad)
    except (KeyError, ValueError) as exc:
        raise CacheCorruptError(f"{path}: malformed cache entry ({exc})") from exc
    if _checksum(str(cid), bits, val, rad, engine) != sha:
        raise CacheCorruptError(f"{path}: checksum mismatch")
    return CachedConstant(cid, bits, val, rad, engine, sha)


def cache_get(cid: ConstantId, ctx: PrecisionContext, cache_dir, validate: bool = True) -> CachedConstant | None:
    """Entry with at least ``ctx.bits`` of precision, else None.

    With ``validate`` the stored value is checked against a fresh 64-bit
    computation.
    """
    entry = _read_entry(cache_path(cid, cache_dir))
    if entry is None or entry.precision_bits < ctx.bits:
        return None
    if validate:
        check = compute(cid, PrecisionContext(64, 0))
        if not entry.to_ball().overlaps(check):
            raise CacheCorruptError(f"{cid}: cached value disagrees with recomputation")
    return entry


def constant(cid: ConstantId, ctx: PrecisionContext, cache_dir=None) -> ApproxReal:
    """Evaluate ``cid``, going through the cache when a directory is given."""
    if cache_dir is None:
        return compute(cid, ctx)
    try:
        entry = cache_get(cid, ctx, cache_dir)
    except CacheCorruptError as exc:
        log.warning("%s; recomputing", exc)
        entry = None
    if entry is not None:
        return entry.to_ball().at_precision(ctx.bits)
    value = compute(cid, ctx)
    cache_put(cid, value, cache_dir)
    return value


def cache_clear(cache_dir) -> int:
    removed = 0
    for p in Path(cache_dir).glob("*.txt"):
        p.unlink()
        removed += 1
    return removed
