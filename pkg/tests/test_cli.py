import json
import subprocess
import sys

import pytest

from zetaverify import __version__
from zetaverify.cli import Config, UsageError, main, parse_params, totals
from zetaverify.registry import VerificationReport, catalog


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    rows = out.strip().splitlines()
    assert code == 0
    assert len(rows) == len(catalog())
    ids = [r.split(" | ")[0] for r in rows]
    assert ids == sorted(ids)
    assert any(r.startswith("thm-a | ") and r.split(" | ")[2] == "NumericGeometric" for r in rows)


def test_list_json(capsys):
    code, out, _ = run(capsys, "list", "--format", "json")
    data = json.loads(out)
    assert code == 0 and {"id", "tag", "strategy", "params"} <= set(data[0])


def test_verify_thm_b(capsys):
    code, out, _ = run(capsys, "verify", "thm-b", "--digits", "40")
    assert code == 0
    assert out.startswith("thm-b") and " pass " in out


def test_verify_nine_f_eight_params(capsys):
    code, out, _ = run(
        capsys, "--verbose", "verify", "9f8", "--params", "n=2,a=3,b=1/2,c=1/3,d=2/5,e=3/7,f=1/4"
    )
    assert code == 0
    assert "exact" in out and "printed: pass" in out


def test_verify_unknown_id(capsys):
    code, _, err = run(capsys, "verify", "nosuch")
    assert code == 2 and "unknown identity" in err


def test_verify_out_of_domain(capsys):
    code, _, err = run(capsys, "verify", "wp-transform-x", "--params", "x=1/2")
    assert code == 2 and "out of domain" in err


@pytest.mark.parametrize("bad", ["x", "x=", "=1"])
def test_verify_bad_params_syntax(capsys, bad):
    code, _, err = run(capsys, "verify", "wp-transform-x", "--params", bad)
    assert code == 2 and "bad parameter" in err


def test_verify_fail_exit_code(capsys, monkeypatch):
    import zetaverify.cli as cli

    def failing(*a, **k):
        return VerificationReport("thm-a", {}, "fail", 3, 50, True, 10, "geometric")

    monkeypatch.setattr(cli, "verify", failing)
    code, out, _ = run(capsys, "verify", "thm-a")
    assert code == 1 and "fail" in out


def test_verify_engine_error_exit_code(capsys, monkeypatch):
    import zetaverify.cli as cli
    from zetaverify.registry import VerificationError
    from zetaverify.summation import SummationError

    def broken(*a, **k):
        raise VerificationError("thm-a", SummationError("boom"))

    monkeypatch.setattr(cli, "verify", broken)
    code, _, err = run(capsys, "verify", "thm-a")
    assert code == 2 and "engine failure" in err and "thm-a" in err


def test_verify_conjecture_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "conj-zeilberger-a", "--digits", "12")
    assert code == 0 and "residual-only" in out and "anomalous" in out


def test_verify_json_round_trip(capsys):
    code, out, _ = run(capsys, "verify", "wp-transform-x", "--params", "x=2/5", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["tool"] == "zetaverify" and data["version"] == __version__
    r = VerificationReport.from_dict(data["reports"][0])
    assert VerificationReport.from_dict(json.loads(json.dumps(r.to_dict()))) == r
    assert data["totals"] == {"pass": 1, "fail": 0, "residual-only": 0, "error": 0, "total": 1}
    for key in ("terms_used", "engine", "rigorous", "heuristic_gap"):
        assert key in data["reports"][0]


@pytest.mark.parametrize(
    "name,digits,expected",
    [
        ("zeta3", "20", "1.2020569031595942854"),
        ("pi", "20", "3.1415926535897932385"),
        ("catalan", "15", "0.915965594177219 (heuristic)"),
    ],
)
def test_constant(capsys, name, digits, expected):
    code, out, _ = run(capsys, "constant", name, "--digits", digits)
    assert code == 0 and out.strip() == expected


def test_constant_unknown(capsys):
    code, _, err = run(capsys, "constant", "zeta1")
    assert code == 2 and err


def test_cache_clear(capsys, cache_dir):
    code, _, _ = run(capsys, "constant", "zeta5", "--digits", "30", "--cache-dir", str(cache_dir))
    assert code == 0 and any(cache_dir.iterdir())
    code, out, _ = run(capsys, "cache", "clear", "--cache-dir", str(cache_dir))
    assert code == 0 and "removed 1" in out
    assert not any(cache_dir.iterdir())


def test_cache_clear_without_dir(capsys):
    code, _, err = run(capsys, "cache", "clear")
    assert code == 2 and "cache_dir" in err


def test_config_file(capsys, tmp_path, monkeypatch):
    cfg = tmp_path / "zv.conf"
    cfg.write_text("# comment\ndefault_digits = 12\nreport_format=json\nseed=3\n")
    monkeypatch.setenv("ZETAVERIFY_CONFIG", str(cfg))
    code, out, _ = run(capsys, "constant", "pi")
    assert code == 0 and json.loads(out)["value"] == "3.14159265359"
    # flags win over the file
    code, out, _ = run(capsys, "constant", "pi", "--format", "text", "--digits", "5")
    assert out.strip() == "3.1416"


@pytest.mark.parametrize("text", ["default_digits=3\n", "max_terms=10\n", "colour=red\n", "seed=x\n", "report_format=xml\n"])
def test_config_validation(capsys, tmp_path, monkeypatch, text):
    cfg = tmp_path / "bad.conf"
    cfg.write_text(text)
    monkeypatch.setenv("ZETAVERIFY_CONFIG", str(cfg))
    code, _, err = run(capsys, "list")
    assert code == 2 and err.startswith("error:")


def test_config_defaults():
    c = Config.load()
    assert (c.default_digits, c.max_terms, c.seed, c.report_format) == (30, 10**6, 1, "text")
    with pytest.raises(UsageError):
        Config(default_digits=5)


def test_parse_params():
    assert parse_params("a=1/2, b = 3") == {"a": "1/2", "b": "3"}
    assert parse_params(None) is None


def test_totals_consistent():
    rs = [
        VerificationReport("a", {}, "pass", 1, 1, True, 1, "x"),
        VerificationReport("b", {}, "residual-only", 1, 1, True, 1, "x"),
        VerificationReport("c", {}, "pass", 1, 1, True, 1, "x"),
    ]
    t = totals(rs)
    assert t == {"pass": 2, "fail": 0, "residual-only": 1, "error": 0, "total": 3}


def test_usage_errors_exit_two():
    for argv in ([], ["verify"], ["frobnicate"], ["verify-all", "--jobs", "x"]):
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "zetaverify", "constant", "zeta3", "--digits", "20"],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1.2020569031595942854"
