import json
import logging
import time
import random

import pytest

from app.models import SuiteReport
from app.services import algebra
from app.services.properties import (GROUPS, random_behaviour, random_problem,
                                     random_system, run_property_suite)


@pytest.fixture
def suite(config):
    def run(**kwargs) -> SuiteReport:
        kwargs.setdefault("seed", 1)
        kwargs.setdefault("cases", 4)
        return run_property_suite(config=config, **kwargs)

    return run


def trailer(report: SuiteReport) -> dict:
    last = report.render().splitlines()[-1]
    assert last.startswith("# result ")
    return json.loads(last.removeprefix("# result "))


def test_suite_has_no_law_failures(suite):
    report = suite()
    assert report.law_failures == 0
    assert report.outcome("projection.distributes_over_union").passed == 4
    assert report.outcome("reconstruct.hybrid_every_split").passed == 4
    assert trailer(report)["law_failures"] == 0


@pytest.mark.parametrize("group", GROUPS)
def test_each_group_runs_alone(suite, group):
    report = suite(groups=[group], cases=3)
    assert report.law_failures == 0
    assert report.outcomes


def test_suite_is_deterministic(suite):
    assert suite(seed=7).render() == suite(seed=7).render()


def test_claims_are_reported_not_counted(suite):
    report = suite(groups=["necessity"], cases=6)
    kinds = {outcome.kind for outcome in report.outcomes.values()}
    assert kinds <= {"law", "claim"}
    assert report.outcome("claim.necessity_agreement").kind == "claim"
    assert report.law_failures == 0


def test_broken_difference_is_caught(suite, monkeypatch, tmp_path):
    monkeypatch.setattr(algebra, "difference", lambda b1, b2: b1)
    report = suite(groups=["algebra"], cases=30, counterexample_dir=tmp_path)
    outcome = report.outcome("sets.disjoint_difference")
    assert outcome.failed > 0
    assert report.law_failures >= outcome.failed
    assert 0 < len(outcome.counterexamples) <= 3
    files = sorted(tmp_path.glob("sets.disjoint_difference.case*.txt"))
    assert len(files) == len(outcome.files) == len(outcome.counterexamples)
    assert files[0].read_text().startswith("case ")
    assert trailer(report)["law_failures"] == report.law_failures


def test_unexpected_errors_are_law_failures(suite, monkeypatch):
    def broken(*args, **kwargs):
        raise RuntimeError("boom")

    monkeypatch.setattr(algebra, "product", broken)
    report = suite(groups=["algebra"], cases=2)
    assert report.outcome("algebra.no_errors").failed == 2
    assert "RuntimeError: boom" in report.outcome("algebra.no_errors").counterexamples[0]


def test_generators_are_seeded(config):
    first = random_system(random.Random("x"), config)
    second = random_system(random.Random("x"), config)
    assert first == second
    assert 2 <= len(first.subsystems) <= config.GEN_MAX_SUBSYSTEMS


def test_random_problem_tiny(config):
    problem = random_problem(random.Random(3), config, tiny=True)
    assert problem.plant_space.horizon == 1
    assert len(problem.w_p) == len(problem.w_c) == 1


def test_random_behaviour_density_bounds(config):
    problem = random_problem(random.Random(5), config)
    space = problem.plant_space
    assert not random_behaviour(random.Random(0), space, config, density=0.0)
    assert len(random_behaviour(random.Random(0), space, config, density=1.01)) == space.cardinality


def test_full_run_has_no_law_failures(config):
    started = time.perf_counter()
    report = run_property_suite(seed=1, cases=1000, config=config)
    assert time.perf_counter() - started < 60
    assert report.law_failures == 0
    assert report.outcome("reconstruct.hybrid_every_split").passed >= 500
    assert report.outcome("synthesis.sufficiency").passed >= 100


def test_undecomposed_synthesis_is_recorded_as_claims(suite):
    report = suite(groups=["synthesis"], cases=1000)
    decompose = report.outcome("claim.controllers_decompose")
    assert decompose.kind == "claim" and decompose.failed > 0
    agrees = report.outcome("claim.undecomposed_implement_agrees")
    sufficiency = report.outcome("claim.undecomposed_sufficiency")
    assert agrees.kind == sufficiency.kind == "claim"
    assert sufficiency.passed + sufficiency.failed > 0
    assert report.outcome("synthesis.goal_check_reported").failed == 0
    assert report.law_failures == 0


def test_claim_findings_are_logged_once_per_claim(suite, caplog):
    with caplog.at_level(logging.WARNING):
        report = suite(groups=["synthesis"], cases=200)
    warnings = [r for r in caplog.records if r.levelno == logging.WARNING]
    assert {r.name for r in warnings} <= {"app.services.properties"}
    failing = [o for o in report.outcomes.values() if o.kind == "claim" and o.failed]
    assert len(warnings) == len(failing)
