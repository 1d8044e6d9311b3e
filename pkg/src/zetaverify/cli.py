"""Command-line front end.

Configuration is read from an optional ``key=value`` file named by the
``ZETAVERIFY_CONFIG`` environment variable; command-line flags win.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .constants import ConstantError, ConstantId, cache_clear, constant
from .numerics import PrecisionContext, format_significant
from .registry import (
    ASSEMBLIES,
    FAIL,
    PASS,
    RESIDUAL,
    DomainError,
    VerificationError,
    VerificationReport,
    catalog,
    check_assembly,
    lookup,
    sample_params,
    strategy_name,
    verify,
)

TOOL = "zetaverify"
CONFIG_ENV = "ZETAVERIFY_CONFIG"
ERROR = "error"
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
SAMPLES_PER_IDENTITY = 3

log = logging.getLogger(__name__)


class UsageError(Exception):
    pass


@dataclass
class Config:
    default_digits: int = 30
    max_terms: int = 10**6
    cache_dir: Optional[str] = None
    seed: int = 1
    report_format: str = "text"

    def __post_init__(self):
        if self.default_digits < 6:
            raise UsageError("default_digits must be at least 6")
        if self.max_terms < 10**3:
            raise UsageError("max_terms must be at least 1000")
        if self.report_format not in ("text", "json"):
            raise UsageError("report_format must be text or json")

    @classmethod
    def load(cls, path=None) -> "Config":
        path = path or os.environ.get(CONFIG_ENV)
        if not path:
            return cls()
        known = {f.name: f.type for f in fields(cls)}
        values = {}
        try:
            lines = Path(path).read_text().splitlines()
        except OSError as exc:
            raise UsageError(f"cannot read config {path}: {exc}") from None
        for lineno, line in enumerate(lines, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = (s.strip() for s in line.partition("="))
            if not sep or key not in known:
                raise UsageError(f"{path}:{lineno}: expected one of {', '.join(known)} as key=value")
            if key in ("default_digits", "max_terms", "seed"):
                try:
                    values[key] = int(value)
                except ValueError:
                    raise UsageError(f"{path}:{lineno}: {key} must be an integer") from None
            else:
                values[key] = value
        return cls(**values)


# ---------------------------------------------------------------------------
# parsing helpers


def parse_params(text: Optional[str]) -> Optional[dict]:
    if not text:
        return None
    out = {}
    for item in text.split(","):
        key, sep, value = (s.strip() for s in item.partition("="))
        if not sep or not key or not value:
            raise UsageError(f"bad parameter {item!r}; expected name=value")
        out[key] = value
    return out


def _error_report(identity_id: str, params, message: str) -> VerificationReport:
    return VerificationReport(identity_id, params or {}, ERROR, 0, 0, False, 0, "none", {"error": message})


# ---------------------------------------------------------------------------
# output


def totals(reports: Sequence[VerificationReport]) -> dict:
    out = {PASS: 0, FAIL: 0, RESIDUAL: 0, ERROR: 0}
    for r in reports:
        out[r.status] += 1
    out["total"] = len(reports)
    return out


def run_summary(reports: Sequence[VerificationReport], settings: dict) -> dict:
    return {
        "tool": TOOL,
        "version": __version__,
        "settings": settings,
        "reports": [r.to_dict() for r in reports],
        "totals": totals(reports),
    }


def format_report(r: VerificationReport) -> str:
    params = ",".join(f"{k}={v}" for k, v in r.params.items())
    digits = "exact" if r.engine == "exact" and r.status == PASS else f"{r.digits_matched}/{r.digits_requested}"
    line = f"{r.identity_id:32s} {r.status:13s} {digits:>9s}  {r.engine:24s} {'rigorous' if r.rigorous else 'heuristic'}"
    if params:
        line += f"  [{params}]"
    if r.status == RESIDUAL:
        line += f"\n    residual {r.residual}"
        if r.engine_settings.get("anomalous"):
            line += "  (anomalous: residual excludes 0)"
    if r.status == ERROR:
        line += f"\n    {r.engine_settings.get('error')}"
    if "readings" in r.engine_settings:
        line += "\n    readings: " + "; ".join(f"{k}: {v}" for k, v in r.engine_settings["readings"].items())
    return line


def emit(reports: Sequence[VerificationReport], fmt: str, settings: dict, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        json.dump(run_summary(reports, settings), out, indent=2, sort_keys=True)
        out.write("\n")
        return
    for r in reports:
        out.write(format_report(r) + "\n")
    t = totals(reports)
    out.write(
        f"{t['total']} reports: {t[PASS]} pass, {t[FAIL]} fail, {t[RESIDUAL]} residual-only, {t[ERROR]} error\n"
    )


# ---------------------------------------------------------------------------
# commands


def cmd_list(args, cfg: Config) -> int:
    rows = sorted(catalog(), key=lambda i: i.id)
    if args.format == "json":
        data = [
            {"id": i.id, "tag": i.tag, "strategy": strategy_name(i.strategy), "params": list(i.param_names)}
            for i in rows
        ]
        json.dump(data, sys.stdout, indent=2)
        sys.stdout.write("\n")
        return EXIT_OK
    for i in rows:
        print(f"{i.id} | {i.tag} | {strategy_name(i.strategy)} | {','.join(i.param_names) or '-'}")
    return EXIT_OK


def _run_task(task) -> VerificationReport:
    """One unit of work; module-level so worker processes can import it."""
    kind, name, params, digits, seed, max_terms, cache_dir = task
    try:
        if kind == "assembly":
            a = next(a for a in ASSEMBLIES if a.name == name)
            return check_assembly(a, digits, cache_dir)
        return verify(name, params, digits, cache_dir=cache_dir, seed=seed, max_terms=max_terms)
    except (DomainError, VerificationError, ArithmeticError) as exc:
        return _error_report(name, params, str(exc))


def verify_all_tasks(digits: int, seed: int, max_terms: int, cache_dir) -> list:
    tasks = []
    for identity in sorted(catalog(), key=lambda i: i.id):
        if identity.free_params:
            for p in sample_params(identity, seed, SAMPLES_PER_IDENTITY):
                params = {k: str(v) for k, v in p.items()}
                tasks.append(("identity", identity.id, params, digits, seed, max_terms, cache_dir))
        else:
            tasks.append(("identity", identity.id, None, digits, seed, max_terms, cache_dir))
    for a in ASSEMBLIES:
        tasks.append(("assembly", a.name, None, digits, seed, max_terms, cache_dir))
    return tasks


def _warm_cache(digits: int, cache_dir) -> None:
    """Compute shared constants once so workers read them from the cache."""
    if cache_dir is None:
        return
    ids = set()
    for identity in catalog():
        for side in identity.sides:
            if side.closed is not None:
                ids |= side.closed.constants()
    ctx = PrecisionContext.for_digits(max(digits, 50) + 10)
    for cid in sorted(ids, key=str):
        constant(cid, ctx, cache_dir)


def run_all(digits: int, seed: int, jobs: int, max_terms: int = 10**6, cache_dir=None) -> list:
    tasks = verify_all_tasks(digits, seed, max_terms, cache_dir)
    if jobs <= 1:
        return [_run_task(t) for t in tasks]
    _warm_cache(digits, cache_dir)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_task, tasks))


def _settings(args, cfg: Config, digits: int) -> dict:
    return {"digits": digits, "seed": args.seed if args.seed is not None else cfg.seed, "max_terms": cfg.max_terms}


def cmd_verify(args, cfg: Config) -> int:
    digits = args.digits
    seed = args.seed if args.seed is not None else cfg.seed
    lookup(args.id)  # unknown ids fail before any work
    params = parse_params(args.params)
    report = verify(args.id, params, digits, cache_dir=cfg.cache_dir, seed=seed, max_terms=cfg.max_terms)
    emit([report], args.format, _settings(args, cfg, digits or cfg.default_digits))
    return EXIT_FAIL if report.status == FAIL else EXIT_OK


def cmd_verify_all(args, cfg: Config) -> int:
    digits = args.digits or cfg.default_digits
    seed = args.seed if args.seed is not None else cfg.seed
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    reports = run_all(digits, seed, args.jobs, cfg.max_terms, cfg.cache_dir)
    emit(reports, args.format, _settings(args, cfg, digits))
    t = totals(reports)
    return EXIT_FAIL if t[FAIL] or t[ERROR] else EXIT_OK


def cmd_constant(args, cfg: Config) -> int:
    digits = args.digits or cfg.default_digits
    cid = ConstantId.parse(args.name)
    value = constant(cid, PrecisionContext.for_digits(digits + 10), cfg.cache_dir)
    text = format_significant(value, digits)
    if args.format == "json":
        print(json.dumps({"name": str(cid), "digits": digits, "value": text, "rigorous": value.rigorous}))
    else:
        print(text if value.rigorous else f"{text} (heuristic)")
    return EXIT_OK


def cmd_cache_clear(args, cfg: Config) -> int:
    if cfg.cache_dir is None:
        raise UsageError("no cache_dir configured")
    n = cache_clear(cfg.cache_dir)
    print(f"removed {n} cache entries from {cfg.cache_dir}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=None, help="report format")
    common.add_argument("--cache-dir", default=None, help="constants cache directory")

    parser = argparse.ArgumentParser(prog=TOOL, description="Verify zeta-value series identities.")
    parser.add_argument("--version", action="version", version=f"{TOOL} {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", parents=[common], help="show the identity catalog")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("verify", parents=[common], help="verify one identity")
    p.add_argument("id")
    p.add_argument("--digits", type=int)
    p.add_argument("--params", help="comma separated name=value rationals, e.g. n=2,a=3,b=1/2")
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("verify-all", parents=[common], help="verify the whole catalog")
    p.add_argument("--digits", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify_all)

    p = sub.add_parser("constant", parents=[common], help="evaluate a constant")
    p.add_argument("name", help="pi, catalan, zetaN, lambdaN, tK or tK_L")
    p.add_argument("--digits", type=int)
    p.set_defaults(func=cmd_constant)

    p = sub.add_parser("cache", parents=[common], help="manage the constants cache")
    cache_sub = p.add_subparsers(dest="cache_command", required=True)
    c = cache_sub.add_parser("clear", parents=[common], help="delete all cache entries")
    c.set_defaults(func=cmd_cache_clear)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        cfg = Config.load()
        if args.cache_dir:
            cfg.cache_dir = args.cache_dir
        args.format = args.format or cfg.report_format
        if getattr(args, "digits", None) is not None and args.digits < 1:
            raise UsageError("--digits must be positive")
        return args.func(args, cfg)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
    except DomainError as exc:
        print(f"error: out of domain: {exc}", file=sys.stderr)
    except VerificationError as exc:
        print(f"error: engine failure: {exc}", file=sys.stderr)
    except ConstantError as exc:
        print(f"error: {exc}", file=sys.stderr)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
