"""Seeded randomized verification suites.

>>> report = run_suite("steiner", SuiteConfig(trials=50, seed=1))
>>> report.passed
True
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Optional

from ..errors import GeometryError, UnknownSuite
from .report import Check, SuiteReport, TrialReport, dumps
from .sampling import (
    SuiteConfig,
    sample_barycentric,
    sample_interior_point,
    sample_triangle,
    trial_rng,
)
from .suites import SUITES, SkipTrial, Suite, suite_notes

__all__ = [
    "Check", "SUITES", "SkipTrial", "Suite", "SuiteConfig", "SuiteReport", "TrialReport",
    "default_config", "dumps", "get_suite", "replay_trial", "run_suite", "run_trial",
    "sample_barycentric", "sample_interior_point", "sample_triangle", "trial_rng",
]


def get_suite(name: str) -> Suite:
    try:
        return SUITES[name]
    except KeyError:
        raise UnknownSuite(f"unknown suite {name!r}; known: {', '.join(SUITES)}") from None


def default_config(name: str, **overrides: Any) -> SuiteConfig:
    overrides.setdefault("trials", get_suite(name).default_trials)
    return SuiteConfig(**overrides)


def run_trial(name: str, config: SuiteConfig, trial_index: int) -> TrialReport:
    suite = get_suite(name)
    rng = trial_rng(config.seed, trial_index)
    try:
        inputs = suite.sample(rng, config)
    except SkipTrial as exc:
        return TrialReport(trial_index, {}, skipped=str(exc))
    return replay_trial(name, inputs, config, trial_index)


def replay_trial(name: str, inputs: dict, config: SuiteConfig, trial_index: int = 0) -> TrialReport:
    """Evaluate a suite's checks on stored inputs, e.g. from a failure record."""
    suite = get_suite(name)
    try:
        checks = suite.check(inputs, config)
    except SkipTrial as exc:
        return TrialReport(trial_index, inputs, skipped=str(exc))
    except GeometryError as exc:
        # a precondition tripped mid-trial; keep the inputs so it can be replayed
        checks = [Check(f"error:{type(exc).__name__}", math.inf, 0.0)]
    return TrialReport(trial_index, inputs, checks)


def _run_chunk(args) -> list[TrialReport]:
    name, config, indices = args
    return [run_trial(name, config, i) for i in indices]


def run_suite(name: str, config: Optional[SuiteConfig] = None, workers: int = 1) -> SuiteReport:
    suite = get_suite(name)
    if config is None:
        config = default_config(name)
    indices = list(range(config.trials))
    if workers > 1:
        size = -(-len(indices) // workers)
        chunks = [(name, config, indices[i:i + size]) for i in range(0, len(indices), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            trials = [tr for part in pool.map(_run_chunk, chunks) for tr in part]
    else:
        trials = _run_chunk((name, config, indices))
    return _assemble(suite, config, trials)


def _assemble(suite: Suite, config: SuiteConfig, trials: list[TrialReport]) -> SuiteReport:
    trials = sorted(trials, key=lambda tr: tr.trial_index)
    max_values: dict[str, float] = {}
    min_values: dict[str, float] = {}
    hits: dict[str, int] = {}
    totals: dict[str, int] = {}
    skips: dict[str, int] = {}
    failures = []
    for tr in trials:
        if tr.skipped is not None:
            skips[tr.skipped] = skips.get(tr.skipped, 0) + 1
            continue
        for c in tr.checks:
            max_values[c.name] = max(max_values.get(c.name, c.value), c.value)
            min_values[c.name] = min(min_values.get(c.name, c.value), c.value)
            if not c.hard:
                totals[c.name] = totals.get(c.name, 0) + 1
                hits[c.name] = hits.get(c.name, 0) + int(c.ok)
        if not tr.passed:
            failures.append(tr)
    rates = {}
    for check_name, required in suite.rates.items():
        total = totals.get(check_name, 0)
        rate = hits.get(check_name, 0) / total if total else 0.0
        rates[check_name] = {"hits": hits.get(check_name, 0), "total": total,
                             "rate": rate, "required": required,
                             "ok": total > 0 and rate >= required}
    return SuiteReport(
        suite=suite.name,
        config=config.to_dict(),
        trials=len(trials),
        failures=failures,
        max_residuals=max_values,
        min_values=min_values,
        rates=rates,
        skips=skips,
        notes=suite_notes(suite, max_values, config),
    )
