import json
import random

import pytest

from orthocevia.constructions import CenterKind, to_barycentric, triangle_center
from orthocevia.kernel import Tolerance
from orthocevia.errors import SamplingExhausted, UnknownSuite
from orthocevia.verify import (
    SUITES,
    SuiteConfig,
    default_config,
    replay_trial,
    run_suite,
    run_trial,
    sample_interior_point,
    sample_triangle,
    trial_rng,
)
from orthocevia.verify.report import Check, dumps
from orthocevia.verify.sampling import area_ratio


def test_suite_registry_is_complete():
    assert set(SUITES) == {
        "steiner", "ceva_isogonal", "carnot", "orthology_symmetry", "pedal_orthology", "six_point",
        "power_of_point", "terquem", "main_theorem", "gergonne", "isotomic_touch",
        "isotomic_concurrency", "nagel", "bevan", "counterexample", "gergonne_nagel_conjugacy",
    }


def test_config_validation():
    with pytest.raises(ValueError):
        SuiteConfig(trials=0)
    with pytest.raises(ValueError):
        SuiteConfig(interior_margin=0.5)


def test_sample_triangle_deterministic():
    cfg = SuiteConfig()
    t1 = sample_triangle(trial_rng(42, 17), cfg)
    t2 = sample_triangle(trial_rng(42, 17), cfg)
    assert tuple(t1) == tuple(t2)
    assert tuple(sample_triangle(trial_rng(42, 18), cfg)) != tuple(t1)


def test_sample_triangle_respects_threshold():
    cfg = SuiteConfig()
    for i in range(1000):
        t = sample_triangle(trial_rng(1, i), cfg)
        assert area_ratio(*t) >= cfg.min_area_ratio
        assert all(-1 <= c <= 1 for p in t for c in p)


def test_sample_triangle_exhausts():
    with pytest.raises(SamplingExhausted):
        sample_triangle(trial_rng(0, 0), SuiteConfig(min_area_ratio=0.99))


def test_interior_point_margin():
    rng = random.Random(0)
    t = sample_triangle(rng, SuiteConfig())
    for _ in range(200):
        bary = to_barycentric(t, sample_interior_point(rng, t, 0.1))
        assert min(bary) >= 0.1 - 1e-12 and sum(bary) == pytest.approx(1)
    g = triangle_center(t, CenterKind.CENTROID)
    assert sample_interior_point(rng, t, 1 / 3).dist(g) < 1e-12
    with pytest.raises(ValueError):
        sample_interior_point(rng, t, 0.0)


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("bogus", SuiteConfig(trials=1))


@pytest.mark.parametrize("name", sorted(SUITES))
def test_each_suite_passes_small(name):
    report = run_suite(name, SuiteConfig(trials=60, seed=3))
    assert report.passed, [f.to_dict() for f in report.failures[:2]]
    assert report.trials == 60


def test_reports_reproducible_and_parallel_safe():
    cfg = SuiteConfig(trials=40, seed=9)
    a = run_suite("six_point", cfg).to_json()
    b = run_suite("six_point", cfg).to_json()
    c = run_suite("six_point", cfg, workers=3).to_json()
    assert a == b == c


def test_report_schema():
    doc = json.loads(run_suite("carnot", SuiteConfig(trials=10)).to_json())
    for key in ("suite", "config", "trials", "failures", "max_residuals"):
        assert key in doc
    assert doc["config"]["tolerance"]["rel_eps"] == 1e-9


def test_replay_matches_run():
    cfg = SuiteConfig(trials=5, seed=4)
    tr = run_trial("terquem", cfg, 3)
    again = replay_trial("terquem", json.loads(dumps(tr.inputs)), cfg, 3)
    assert again.residuals == tr.residuals


def test_failures_carry_inputs():
    # absurdly tight tolerance forces failures; each one must replay identically
    cfg = SuiteConfig(trials=20, seed=1, tolerance=Tolerance(rel_eps=1e-30, abs_floor=0.0))
    report = run_suite("steiner", cfg)
    assert report.failures and not report.passed
    f = report.failures[0]
    assert replay_trial("steiner", f.inputs, cfg, f.trial_index).residuals == f.residuals
    assert any(name.startswith("error:") for tr in report.failures for name in tr.residuals)


def test_negative_control_six_point():
    report = run_suite("six_point", SuiteConfig(trials=300, seed=42))
    assert report.rates["control_deviation"]["rate"] >= 0.99
    assert report.min_values["control_deviation"] > 100 * 1e-9


def test_counterexample_skips_equilateral():
    report = run_suite("counterexample", SuiteConfig(trials=100))
    assert report.passed
    assert report.min_values["conj_bevan_vs_incenter"] > 1e-3
    assert report.skips.get("equilateral", 0) == 0


def test_conjugacy_notes():
    report = run_suite("gergonne_nagel_conjugacy", SuiteConfig(trials=200))
    assert report.notes == {"isotomic_reading_holds": True, "isogonal_reading_holds": False}


def test_check_ops():
    assert Check("x", 1.0, 2.0).ok
    assert not Check("x", 1.0, 2.0, op="ge").ok


def test_dumps_seventeen_digits():
    text = dumps({"b": 0.1, "a": float("inf")})
    assert "0.10000000000000001" in text and '"inf"' in text
    assert text.index('"a"') < text.index('"b"')
    assert json.loads(dumps({"v": 1 / 3}))["v"] == 1 / 3
