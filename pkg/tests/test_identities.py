import json
from fractions import Fraction as F

import pytest

from degenhyper.identities import (
    ExactEqual,
    IdentitySpec,
    RelTol,
    classical_binomial_suite,
    h2_as_printed,
    registry,
    reports_to_json,
    run_all,
    run_identity,
    stirling_cross_suite,
)

NAMED_RESULTS = ["thm2.1", "thm2.2", "cor2.3", "thm2.4", "thm2.5", "thm2.6", "thm3.1", "cor3.2", "thm3.3", "cor3.4"]
ERRATA = {"E1", "E2", "E3", "E4", "E5", "E6"}


@pytest.fixture(scope="module")
def reports():
    return {r.id: r for r in run_all()}


def test_every_spec_as_expected(reports):
    bad = [r.id for r in reports.values() if not r.as_expected]
    assert bad == []


def test_named_results_registered_and_pass(reports):
    for tid in NAMED_RESULTS:
        assert reports[tid].label == "PASS", tid


def test_each_erratum_has_red_and_green_pair():
    reg = registry()
    for e in ERRATA:
        red = [s for s in reg.values() if s.erratum == e and s.expect_fail]
        green = [s for s in reg.values() if s.erratum == e and not s.expect_fail]
        assert red and green, e
        for spec in red:
            assert spec.witness is not None


def test_red_specs_fail_at_their_witness():
    for spec in registry().values():
        if not spec.expect_fail:
            continue
        single = IdentitySpec(spec.id, spec.description, spec.sides, [spec.witness], spec.comparison)
        assert run_identity(single).status == "FAIL", spec.id


def test_eq35_witness_sides():
    spec = registry()["eq35-as-printed"]
    report = run_identity(IdentitySpec("w", "", spec.sides, [{"n": 1, "lam": F(1, 2)}]))
    assert sorted(report.failures[0].values) == [1, F(5, 4)]
    assert h2_as_printed(1, F(1, 2)) == 1


def test_eq13_report():
    (report,) = run_all(["eq13"])
    assert (report.label, report.points_checked, report.exact) == ("PASS", 11, True)


def test_gamma_residual_bound(reports):
    assert reports["thm2.4"].max_residual < 1e-9


def test_errors_become_failures():
    def boom(p):
        raise ZeroDivisionError("nope")

    spec = IdentitySpec("t", "", [lambda p: 1, boom], [{"n": 1}, {"n": 0}])
    report = run_identity(spec)
    assert report.status == "FAIL"
    assert [f.point for f in report.failures] == [{"n": 0}, {"n": 1}]
    assert "ZeroDivisionError" in report.failures[0].error


def test_exact_comparison_rejects_floats():
    spec = IdentitySpec("t", "", [lambda p: F(1), lambda p: 1.0], [{"n": 0}], ExactEqual())
    assert run_identity(spec).status == "FAIL"


def test_reltol():
    spec = IdentitySpec("t", "", [lambda p: 1.0, lambda p: 1.0 + p["e"]], [{"e": 1e-10}, {"e": 1e-6}], RelTol(1e-8))
    report = run_identity(spec)
    assert len(report.failures) == 1
    assert report.max_residual == pytest.approx(1e-6)


def test_reports_deterministic():
    ids = ["eq13", "eq35-as-printed", "eq37", "thm2.4"]
    assert reports_to_json(run_all(ids)) == reports_to_json(run_all(ids))


def test_json_schema():
    data = json.loads(reports_to_json(run_all(["eq16-as-printed"])))
    (entry,) = data
    assert {"id", "status", "points_checked", "failures", "max_residual"} <= set(entry)
    assert entry["status"] == "FAIL" and entry["expected"] == "FAIL"


def test_unknown_id():
    with pytest.raises(KeyError):
        run_all(["no-such-id"])


def test_suites():
    classical = {r.id: r for r in classical_binomial_suite()}
    assert classical["dixon-eq17"].label == "PASS"
    assert classical["eq16-as-printed"].label == "FAIL-EXPECTED"
    assert all(r.as_expected for r in stirling_cross_suite())
