from __future__ import annotations

import pytest

from twistorcheck import DegenerateCase, constraint_system, eigenplane_slopes, projection_rank
from twistorcheck.checks import EXACT, FAIL, FLOAT, PASS, RunConfig, available_checks, run_suite
from twistorcheck.checks.common import execute
from twistorcheck.checks import cp3, f12

FAST = RunConfig(suite="all", backend="both", seed=1, trials=200, tolerance=1e-9)


@pytest.mark.parametrize("entry", available_checks("all"), ids=lambda e: e[1])
def test_registered_check_passes(entry):
    _suite, check_id, supported, claim, runner = entry
    for backend in supported:
        report = execute(check_id, claim, backend,
                         lambda r=runner, b=backend: r(FAST, b))
        assert report.status == PASS, (check_id, backend, report.certificate)


MUTATIONS = [
    (cp3.check_expansions, "coefficient"),
    (cp3.check_orthogonality_forcing, "degenerate-twin"),
    (cp3.check_vertical_normal, "zero-a"),
    (cp3.check_horizontal_normal, "scaled-f"),
    (cp3.check_horizontal_normal, "flipped-sign"),
    (f12.check_constraint_system, "shifted-root"),
    (f12.check_pairing_constraint, "coefficient"),
    (f12.check_gray_residual, "wrong-alpha"),
    (f12.check_horizontal_normal, "scaled-f"),
]


@pytest.mark.parametrize("runner,mutation", MUTATIONS,
                         ids=lambda m: m if isinstance(m, str) else m.__name__)
def test_every_mutation_flips_its_check_to_fail(runner, mutation):
    report = execute("mutated", "", EXACT,
                     lambda: runner(FAST, EXACT, mutation=mutation))
    assert report.status == FAIL


def test_slopes_satisfy_the_quadratic_and_product():
    plus, minus = eigenplane_slopes(0.0, 1.0)
    assert abs(plus - 1.5275252316519465) < 1e-12
    assert abs(plus * minus + 7.0 / 3.0) < 1e-12
    r1, r2 = constraint_system(0.0, 1.0, 1.0, 0.0, 0.0, plus)
    assert abs(r1) < 1e-12 and abs(r2) < 1e-12


def test_degenerate_cases_raise():
    with pytest.raises(DegenerateCase):
        eigenplane_slopes(0.7, 0.0)
    with pytest.raises(DegenerateCase):
        projection_rank((1, 0, 0, 0, 0, 0))


def test_projection_rank_values():
    assert projection_rank((1, 0, 0, 0, 1, 0)) == (4, 4)
    assert projection_rank((0, 0, 0, 0, 0, 2)) == (4, 4)


def test_suite_selection_and_order():
    cfg = RunConfig(suite="cp3", backend="exact", seed=0, trials=10)
    reports = run_suite(cfg)
    assert [r.id for r in reports] == sorted(r.id for r in reports)
    assert all(r.id.startswith("cp3.") for r in reports)
    assert all(r.backend == EXACT for r in reports)


def test_exact_reports_are_seed_independent():
    base = RunConfig(suite="cp3", backend="exact", seed=0, trials=10)
    other = RunConfig(suite="cp3", backend="exact", seed=99, trials=10)
    strip = lambda reports: [(r.id, r.backend, r.status, r.residual, r.certificate)
                             for r in reports]
    assert strip(run_suite(base)) == strip(run_suite(other))


def test_float_reports_are_seed_deterministic():
    cfg = RunConfig(suite="f12", backend="float", seed=7, trials=50)
    strip = lambda reports: [(r.id, r.backend, r.status, r.residual, r.certificate)
                             for r in reports]
    assert strip(run_suite(cfg)) == strip(run_suite(cfg))


def test_exact_pass_implies_float_pass():
    cfg = RunConfig(suite="all", backend="both", seed=3, trials=100)
    reports = run_suite(cfg)
    by_id = {}
    for r in reports:
        by_id.setdefault(r.id, {})[r.backend] = r.status
    for statuses in by_id.values():
        if statuses.get(EXACT) == PASS and FLOAT in statuses:
            assert statuses[FLOAT] == PASS
