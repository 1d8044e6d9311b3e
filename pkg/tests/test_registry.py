import inspect
import json
from fractions import Fraction
from itertools import count

import pytest

import oracles as O
from zetaverify.numerics import PrecisionContext
from zetaverify.registry import (
    ASSEMBLIES,
    JET_TRANSITIONS,
    ConjectureResidual,
    DomainError,
    ExactFinite,
    JetPoleError,
    JetTransition,
    NumericRichardson,
    VerificationReport,
    assembly,
    catalog,
    check_assembly,
    jet_transition_check,
    linear_combination_check,
    lookup,
    sample_params,
    transition,
    verify,
)
from zetaverify.registry.closedform import PI, Rat, lam, zeta
from zetaverify.summation import Terminating


def _value(report) -> Fraction:
    return Fraction(report.value.split()[0])


# catalog ---------------------------------------------------------------------


def test_catalog_is_large_and_unique():
    ids = [i.id for i in catalog()]
    assert len(ids) >= 25
    assert len(set(ids)) == len(ids)


def test_every_used_parameter_is_declared():
    for identity in catalog():
        declared = set(identity.param_names)
        for side in identity.sides:
            if side.series is None:
                continue
            p = sample_params(identity, 1, 1)[0] if identity.free_params else {}
            if identity.is_exact:
                p = dict(p, n=2)
                if identity.complete:
                    p = identity.complete(p)
            s = side.series(p)
            assert {name for name, _ in s.params} <= declared
            if identity.is_exact:
                assert isinstance(s.klass, Terminating)


def test_lookup_theorem_a():
    entry = lookup("thm-a")
    assert str(entry.sides[-1].closed) == "127/2 * zeta7" or "zeta7" in str(entry.sides[-1].closed)
    v = entry.sides[-1].closed.evaluate(PrecisionContext.for_digits(40))
    assert abs(v.midpoint - O.frac(O.THM_A)) < Fraction(1, 10**40)


def test_lookup_nine_f_eight():
    entry = lookup("9f8")
    assert isinstance(entry.strategy, ExactFinite)
    assert [p.name for p in entry.params if p.name != "n"] == list("abcdefg")
    assert "n" in entry.param_names
    assert "2+3a=b+c+d+e+f+g-n" in entry.note
    p = entry.complete({"a": 1, "b": 0, "c": 0, "d": 0, "e": 0, "f": 0, "n": 2})
    assert entry.constraint(p)


def test_lookup_unknown():
    with pytest.raises(KeyError):
        lookup("nosuch")
    with pytest.raises(KeyError):
        transition("nosuch")


def test_conjectures_are_residual_only():
    conj = [i for i in catalog() if isinstance(i.strategy, ConjectureResidual)]
    assert {i.id for i in conj} == {"conj-zeilberger-a", "conj-zeilberger-b", "conj-ramanujan-a", "conj-ramanujan-b"}


# sampling --------------------------------------------------------------------


def test_sample_params_x():
    tuples = sample_params("wp-transform-x", seed=1, count=3)
    assert len(tuples) == 3
    for p in tuples:
        assert 0 < p["x"] < 1 and p["x"] != Fraction(1, 2)
        assert p["x"].denominator <= 12


def test_sample_params_deterministic():
    assert sample_params("wp-transform-quadratic", 7, 4) == sample_params("wp-transform-quadratic", 7, 4)
    assert sample_params("wp-transform-quadratic", 7, 4) != sample_params("wp-transform-quadratic", 8, 4)


def test_sample_params_respect_convergence():
    for p in sample_params("wp-transform-quadratic", 3, 10):
        assert 1 + 2 * p["a"] - p["b"] - p["c"] - p["d"] - p["e"] > 0
        assert all(v.denominator <= 12 for v in p.values())


def test_sample_params_needs_parameters():
    with pytest.raises(DomainError):
        sample_params("guillera", 1, 1)


# verify ----------------------------------------------------------------------


def test_verify_guillera():
    r = verify("guillera", digits=50)
    assert r.status == "pass" and r.rigorous
    assert r.digits_matched >= 50
    assert abs(_value(r) - O.frac(O.GUILLERA)) < Fraction(1, 10**50)
    assert r.engine_settings["members"][0]["terms_used"] <= 120


def test_verify_nine_f_eight_n0_is_one():
    r = verify("9f8", {"a": "3", "b": "1/2", "c": "1/3", "d": "2/5", "e": "3/7", "f": "1/4", "n": "0"})
    assert r.status == "pass"
    assert r.value == "1"


def test_verify_nine_f_eight_n3_sampled():
    for p in sample_params("9f8", 5, 3):
        r = verify("9f8", dict(p, n=3))
        assert r.status == "pass"
        assert r.engine_settings["readings"]["printed"] == "pass"


def test_nine_f_eight_reading_report():
    r = verify("9f8", seed=2)
    readings = r.engine_settings["readings"]
    assert readings["printed"] == "pass"
    assert readings["shifted"].startswith("fail")


def test_nine_f_eight_explicit_g_must_balance():
    p = {"a": "3", "b": "1/2", "c": "1/3", "d": "2/5", "e": "3/7", "f": "1/4", "n": "2", "g": "1"}
    with pytest.raises(DomainError, match="2\\+3a"):
        verify("9f8", p)


@pytest.mark.parametrize(
    "iid,params",
    [
        ("wp-transform-x", {"x": "1/2"}),
        ("wp-transform-x", {"x": "1/3", "y": "1"}),
        ("wp-transform-x", {}),
        ("wp-transform-quadratic", {"a": "0", "b": "1", "c": "1", "d": "1", "e": "1"}),
        ("terminating-c-2", {"c": "2", "n": "3"}),
        ("terminating-c-2", {"c": "1/3", "n": "-1"}),
        ("wp-transform-x", {"x": "abc"}),
    ],
)
def test_verify_rejects_bad_params(iid, params):
    with pytest.raises(DomainError):
        verify(iid, params)


def test_verify_conjectures():
    a = verify("conj-zeilberger-a")
    assert a.status == "residual-only"
    assert a.engine_settings["anomalous"]
    assert abs(Fraction(a.residual.split()[0]) - Fraction("106.40276914")) < Fraction(1, 10**6)
    r = verify("conj-ramanujan-b")
    assert r.status == "residual-only"
    assert not r.engine_settings["anomalous"]


def test_richardson_entries_record_tail_slopes():
    r = verify("d-reduced", {"d": "5/3"})
    assert r.status == "pass"
    slopes = [m for m in r.engine_settings["members"] if "tail_slope" in m]
    assert slopes and all(m["tail_slope_ok"] for m in slopes)
    assert not r.rigorous and r.heuristic_gap is not None


def test_richardson_digits_are_capped():
    r = verify("wp-transform-x", {"x": "1/3"}, digits=40)
    assert r.digits_requested == lookup("wp-transform-x").strategy.digits
    assert r.engine_settings["digits_asked"] == 40
    assert r.status == "pass"


def test_precision_monotonicity_at_report_level():
    for d in (20, 40, 60):
        assert verify("thm-a", digits=d).status == "pass"


def test_theorem_d_is_heuristic():
    r = verify("thm-d", digits=25)
    assert r.status == "pass" and not r.rigorous


def test_report_json_round_trip():
    r = verify("wp-transform-bcd", seed=4)
    again = VerificationReport.from_dict(json.loads(json.dumps(r.to_dict())))
    assert again == r


# jet transitions -------------------------------------------------------------


def test_transition_endpoints_exist():
    for t in JET_TRANSITIONS:
        lookup(t.source_id)
        lookup(t.target_id)
        assert t.order in (1, 2)


def test_x_transition_k0():
    for side in ("lhs", "rhs"):
        res = jet_transition_check(transition(f"x-divided-to-zeta7-1:{side}"), 3)
        assert len(res) == 4 and all(c.passed for c in res)
        assert any(c.target != 0 for c in res)


def test_mixed_transition_to_k50():
    res = jet_transition_check(transition("cd-divided-to-zeta7-2:lhs"), 50)
    assert all(c.passed for c in res)


def _constant_source(lift, x):
    for k in count():
        yield lift(Fraction(1, k + 1)) + 0 * x


def _zero_target(lift):
    while True:
        yield lift(0)


def _pole_source(lift, x):
    for k in count():
        yield 1 / (x + k - 3)


def test_constant_source_gives_zero():
    t = JetTransition("const", "thm-a", "thm-a", _constant_source, _zero_target, (("x", Fraction(1, 2)),), (1,), Fraction(1))
    assert all(c.passed and c.coefficient == 0 for c in jet_transition_check(t, 10))


def test_pole_names_k():
    t = JetTransition("pole", "thm-a", "thm-a", _pole_source, _zero_target, (("x", Fraction(0)),), (1,), Fraction(1))
    with pytest.raises(JetPoleError) as info:
        jet_transition_check(t, 10)
    assert info.value.k == 3


# linear combinations ---------------------------------------------------------


def test_assembly_theorem_a():
    r = check_assembly(assembly("assemble-thm-a"))
    assert r.status == "pass" and r.digits_matched >= 50 and r.rigorous
    assert abs(_value(r) - O.frac(O.THM_A)) < Fraction(1, 10**50)


def test_assembly_theorem_c():
    r = linear_combination_check(["zeilberger", "pi2zeta3-component"], [1, 1], 4 * PI**2 * zeta(3) - 36 * zeta(5), 50)
    assert r.status == "pass"
    assert abs(_value(r) - O.frac(O.THM_C)) < Fraction(1, 10**50)


def test_all_assemblies_pass():
    for a in ASSEMBLIES:
        assert check_assembly(a).status == "pass", a.name


def test_zero_combination():
    r = linear_combination_check(["guillera", "thm-a"], [0, 0], Rat(0), 30)
    assert r.status == "pass"


def test_combination_length_mismatch():
    with pytest.raises(ValueError):
        linear_combination_check(["guillera"], [1, 2], Rat(0), 30)


def test_closed_form_printing():
    assert str(64 * lam(3) - 256 * lam(5)) == "64 * lambda3 - 256 * lambda5"
    assert str(Fraction(49, 2) * zeta(3) ** 2) == "(49/2) * zeta3^2"
    assert str(240 * zeta(3) / PI) == "240 * zeta3 / pi"


def test_richardson_strategy_defaults():
    for identity in catalog():
        if isinstance(identity.strategy, NumericRichardson):
            assert identity.strategy.digits >= 6
            assert inspect.isfunction(identity.sides[0].series) or identity.sides[0].closed is not None


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_nine_f_eight_samples_avoid_poles_in_both_readings(seed):
    for p in sample_params("9f8", seed=seed, count=5):
        r = verify("9f8", p)
        assert r.status == "pass"
        assert set(r.engine_settings["readings"]) == {"printed", "shifted"}
