"""Named check registry: one entry per verified statement, per suite.

Sensitivity controls (ids ending in ``.control-*``) rerun a check with a
deliberately perturbed constant or convention and PASS exactly when the
perturbed run FAILs; the suite thereby tests that it would catch
single-constant errors.
"""

from __future__ import annotations

from functools import partial

from .common import (
    CheckReport, RunConfig, EXACT, FAIL, FLOAT, PASS, execute,
)
from . import core, cp3, f12

__all__ = [
    "CheckReport", "RunConfig", "available_checks", "run_suite",
    "EXACT", "FLOAT", "PASS", "FAIL",
]

BOTH = (EXACT, FLOAT)
EXACT_ONLY = (EXACT,)


def _control(runner, mutation: str):
    """Wrap a check so that a detected mutation counts as a PASS."""

    def wrapped(cfg: RunConfig, backend: str):
        report = execute("inner", "", backend, lambda:
                         runner(cfg, backend, mutation=mutation))
        if report.status == FAIL:
            detected = report.certificate or report.residual or "mutation detected"
            return {"certificate": f"perturbed run failed as required: {detected}"}
        from .common import CheckFailure
        raise CheckFailure(
            f"perturbed run was not detected (status {report.status})")

    return wrapped


_REGISTRY = (
    # suite, id, backends, claim, runner
    ("prop1", "prop1.constants", BOTH,
     "derived constants (a, b, c) equal (3/8, 1/8, 2) over the 4-sphere and"
     " (3/4, 1/4, 4) over the projective plane, with a = 0 at t = 24/s",
     core.check_constants),
    ("prop1", "prop1.equivalence-cp3", BOTH,
     "the two printed forms of the twistor curvature tensor agree over the"
     " 4-sphere (exact: 24 free components and free vertical Gram)",
     partial(core.check_equivalence, space=core.CP3)),
    ("prop1", "prop1.equivalence-f12", BOTH,
     "the two printed forms of the twistor curvature tensor agree over the"
     " projective plane (exact: 24 free components and free vertical Gram)",
     partial(core.check_equivalence, space=core.F12)),
    ("prop1", "prop1.symmetries-cp3", BOTH,
     "antisymmetry, pair symmetry and the first Bianchi identity hold for the"
     " twistor curvature tensor over the 4-sphere",
     partial(core.check_symmetries, space=core.CP3)),
    ("prop1", "prop1.symmetries-f12", BOTH,
     "antisymmetry, pair symmetry and the first Bianchi identity hold for the"
     " twistor curvature tensor over the projective plane",
     partial(core.check_symmetries, space=core.F12)),
    ("prop1", "prop1.pairing-expansion-cp3", BOTH,
     "the closed expansion of R(j2N, j2X, X, N) equals the tensor for a unit"
     " normal and admissible X over the 4-sphere",
     partial(core.check_pairing_expansion, space=core.CP3)),
    ("prop1", "prop1.pairing-expansion-f12", BOTH,
     "the closed expansion of R(j2N, j2X, X, N) equals the tensor for a unit"
     " normal and admissible X over the projective plane",
     partial(core.check_pairing_expansion, space=core.F12)),

    ("cp3", "cp3.expansions", BOTH,
     "both sphere-case pairing expansions (coefficients 7/8, -17/8, 3/8,"
     " -7/8) and the space-form pullback identity hold",
     cp3.check_expansions),
    ("cp3", "cp3.expansions.control-coefficient", EXACT_ONLY,
     "control: perturbing the expansion coefficient 7/8 to 1 must be caught",
     _control(cp3.check_expansions, "coefficient")),
    ("cp3", "cp3.orthogonality-forcing", BOTH,
     "the pairing symmetry forces g_h(X,N) = g_h(j2X,N) = 0 on eigenvectors,"
     " with quartic ideal-membership certificates",
     cp3.check_orthogonality_forcing),
    ("cp3", "cp3.orthogonality-forcing.control-degenerate-twin", EXACT_ONLY,
     "control: equal expansion coefficients make the constraint vanish"
     " identically and must be caught",
     _control(cp3.check_orthogonality_forcing, "degenerate-twin")),
    ("cp3", "cp3.vertical-normal", BOTH,
     "a vertical unit normal is impossible: the pairing reduces to"
     " (3/8)|X_h|^2 against a forced zero",
     cp3.check_vertical_normal),
    ("cp3", "cp3.vertical-normal.control-zero-a", EXACT_ONLY,
     "control: zeroing the coefficient a removes the contradiction and must"
     " be caught",
     _control(cp3.check_vertical_normal, "zero-a")),
    ("cp3", "cp3.mixed-normal", EXACT_ONLY,
     "a normal with both parts nonzero confines admissible eigenvectors to 2"
     " dimensions, short of the 4 they must span",
     cp3.check_mixed_normal),
    ("cp3", "cp3.horizontal-normal", BOTH,
     "a horizontal normal forces F = -1/2 (0 -1; 1 0), which cannot"
     " anticommute with the rotation generator (certificate FI + IF = id)",
     cp3.check_horizontal_normal),
    ("cp3", "cp3.horizontal-normal.control-scaled-f", EXACT_ONLY,
     "control: a rescaled F block no longer matches the forced value and must"
     " be caught",
     _control(cp3.check_horizontal_normal, "scaled-f")),
    ("cp3", "cp3.horizontal-normal.control-flipped-sign", EXACT_ONLY,
     "control: flipping the curvature-operator sign convention must be caught",
     _control(cp3.check_horizontal_normal, "flipped-sign")),

    ("f12", "f12.roots", BOTH,
     "the slope quadratic has the printed roots; their product"
     " -(7-3ct^2)/(3st^2) is negative, so neither vanishes",
     f12.check_roots),
    ("f12", "f12.constraint-system", BOTH,
     "the constraint system is the complex quadratic in disguise and its"
     " solutions fill exactly the two slope planes",
     f12.check_constraint_system),
    ("f12", "f12.constraint-system.control-shifted-root", EXACT_ONLY,
     "control: shifting the slope off the quadratic root must be caught",
     _control(f12.check_constraint_system, "shifted-root")),
    ("f12", "f12.s-tilde-zero", EXACT_ONLY,
     "degenerate fiber angle: solutions collapse to span(e3, e4), excluding a"
     " mixed normal by the dimension count",
     f12.check_s_tilde_zero),
    ("f12", "f12.pairing-constraint", BOTH,
     "the flag-manifold pairing expansions (7/4, -21/4, 2, -1) hold and the"
     " symmetrized constraint reduces to the coordinate system",
     f12.check_pairing_constraint),
    ("f12", "f12.pairing-constraint.control-coefficient", EXACT_ONLY,
     "control: perturbing the expansion coefficient -21/4 must be caught",
     _control(f12.check_pairing_constraint, "coefficient")),
    ("f12", "f12.projection-rank", EXACT_ONLY,
     "with nonzero vertical normal part the horizontal projection has rank 4"
     " on the orthogonal complement of (N, j2 N)",
     f12.check_projection_rank),
    ("f12", "f12.vertical-normal", BOTH,
     "a vertical unit normal is impossible: the pairing reduces to"
     " (3/4)|X_h|^2 against a forced zero",
     f12.check_vertical_normal),
    ("f12", "f12.gray-residual", BOTH,
     "the nearly Kahler identity on the slope eigenvector leaves"
     " -4 delta^2 h^4 v^4 = 0, impossible for a mixed normal",
     f12.check_gray_residual),
    ("f12", "f12.gray-residual.control-wrong-alpha", EXACT_ONLY,
     "control: a wrong dimension-six constant in the identity must be caught",
     _control(f12.check_gray_residual, "wrong-alpha")),
    ("f12", "f12.horizontal-normal", BOTH,
     "a horizontal normal forces F = (0 -1; 1 0); certificate"
     " FI + IF = -2 id",
     f12.check_horizontal_normal),
    ("f12", "f12.horizontal-normal.control-scaled-f", EXACT_ONLY,
     "control: a rescaled F block no longer matches the forced value and must"
     " be caught",
     _control(f12.check_horizontal_normal, "scaled-f")),
)

SUITES = ("prop1", "cp3", "f12", "all")


def available_checks(suite: str):
    if suite == "all":
        return _REGISTRY
    return tuple(entry for entry in _REGISTRY if entry[0] == suite)


def run_suite(cfg: RunConfig) -> list[CheckReport]:
    """Run the configured suite; reports come back sorted by (id, backend)."""
    backends = (EXACT, FLOAT) if cfg.backend == "both" else (cfg.backend,)
    reports = []
    for _suite, check_id, supported, claim, runner in available_checks(cfg.suite):
        for backend in backends:
            if backend not in supported:
                continue
            reports.append(execute(check_id, claim, backend,
                                   lambda r=runner, b=backend: r(cfg, b)))
    reports.sort(key=lambda rep: (rep.id, rep.backend))
    return reports
