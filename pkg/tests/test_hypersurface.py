from __future__ import annotations

import random
from fractions import Fraction

import pytest

from twistorcheck import (
    NotUnitNormal, commutation_feasible, eigenvector_curvature_constraints,
    phi,
    cp3_context, j2, lift, metric, twistor_vector, vertical,
)
from twistorcheck.hypersurface import (
    ROTATION2, BlockShapeOperator, contact_matrix, mat2_eq, mat2_scale,
    mat5_commutator_is_zero,
)
from twistorcheck.rings import unit_normal_ring
from twistorcheck.twistor import project_orthogonal


def symbolic_unit_pair():
    ring = unit_normal_ring(extra_vars=(), circle=False)
    ctx = cp3_context()
    n = twistor_vector(*(ring.var(f"n{i}") for i in range(1, 7)))
    v = twistor_vector(*(ring.var(f"v{i}") for i in range(1, 7)))
    return ctx, n, project_orthogonal(ctx, v, n)


def test_phi_basic_values():
    ctx = cp3_context()
    n = lift(1, 0, 0, 0)
    assert phi(ctx, n, j2(n)) == twistor_vector(0, 0, 0, 0, 0, 0)
    assert phi(ctx, n, lift(0, 0, 1, 0)) == lift(0, 0, 0, 1)
    assert phi(ctx, n, n) == j2(n)


def test_phi_requires_a_unit_normal():
    ctx = cp3_context()
    with pytest.raises(NotUnitNormal):
        phi(ctx, lift(2, 0, 0, 0), lift(0, 0, 1, 0))


def test_phi_squares_to_minus_identity_on_admissible_vectors():
    ctx, n, x = symbolic_unit_pair()
    assert phi(ctx, n, phi(ctx, n, x)) == -1 * x


def test_phi_is_skew_adjoint_and_metric_preserving():
    # phi is skew on tangent vectors (forced by j2 being an isometry that
    # squares to -id) and an isometry on the orthogonal complement of j2 N
    ctx, n, x = symbolic_unit_pair()
    ring = x.h.components[0].ring
    y_raw = twistor_vector(*(ring.const(c) for c in (1, -2, 3, 0, 2, -1)))
    y_tangent = y_raw - metric(ctx, y_raw, n) * n
    assert metric(ctx, phi(ctx, n, x), y_tangent) \
        + metric(ctx, x, phi(ctx, n, y_tangent)) == 0
    x2 = project_orthogonal(ctx, y_raw, n)
    assert metric(ctx, phi(ctx, n, x), phi(ctx, n, x2)) - metric(ctx, x, x2) == 0


def test_curvature_constraints_on_controlled_inputs():
    ctx = cp3_context()
    n = lift(1, 0, 0, 0)
    zero = twistor_vector(0, 0, 0, 0, 0, 0)
    assert eigenvector_curvature_constraints(ctx, n, zero, Fraction(1), Fraction(2)) \
        == (0, 0)
    # vertical unit eigenvector orthogonal to a horizontal normal: the
    # symmetry residual vanishes, matching the forced pairing values
    r1, _ = eigenvector_curvature_constraints(ctx, n, vertical(1, 0),
                                              Fraction(0), Fraction(0))
    assert r1 == 0


def test_first_constraint_equals_the_flag_pairing_form():
    from twistorcheck.checks.f12 import _admissible_unit_pair, _pairing_sum_form

    ctx, n, x = _admissible_unit_pair()
    r1, _ = eigenvector_curvature_constraints(ctx, n, x, Fraction(0), Fraction(0))
    assert r1 - _pairing_sum_form(ctx, n, x) == 0


def test_germ_data_bundles_the_constraint_inputs():
    from twistorcheck import HypersurfaceGermData

    ctx = cp3_context()
    germ = HypersurfaceGermData(normal=lift(1, 0, 0, 0),
                                hopf_eigenvalue=Fraction(0),
                                eigenvalue=Fraction(0),
                                eigenvector=vertical(1, 0))
    r1, r2 = eigenvector_curvature_constraints(
        ctx, germ.normal, germ.eigenvector, germ.eigenvalue, germ.hopf_eigenvalue)
    assert r1 == 0
    # the second residual records the forced pairing value for this germ
    assert r2 == eigenvector_curvature_constraints(
        ctx, germ.normal, germ.eigenvector, Fraction(0), Fraction(0))[1]


def test_commutation_feasibility_cases():
    rot = ROTATION2
    infeasible_half = mat2_scale(Fraction(-1, 2), rot)
    ok, cert = commutation_feasible(infeasible_half)
    assert not ok and mat2_eq(cert, ((1, 0), (0, 1)), 0.0)
    ok, cert = commutation_feasible(rot)
    assert not ok and mat2_eq(cert, ((-2, 0), (0, -2)), 0.0)
    ok, _ = commutation_feasible(((0, 0), (0, 0)))
    assert ok
    ok, _ = commutation_feasible(((1, 0), (0, -1)))
    assert ok  # anticommutes with the rotation generator


def test_feasibility_is_scale_invariant():
    for f in (mat2_scale(Fraction(-1, 2), ROTATION2), ((1, 0), (0, -1))):
        base_ok, _ = commutation_feasible(f)
        for c in (2, -1, Fraction(1, 4)):
            ok, _ = commutation_feasible(mat2_scale(c, f))
            assert ok == base_ok


def test_block_operator_assembly():
    with pytest.raises(ValueError):
        BlockShapeOperator(0, ((0, 1), (0, 0)), ((0, 0), (0, 0)), ((0, 0), (0, 0)))
    op = BlockShapeOperator(Fraction(1), ((2, 0), (0, 2)),
                            ((1, 0), (0, -1)), ((-1, 0), (0, -1)))
    mat = op.matrix()
    assert all(mat[i][j] == mat[j][i] for i in range(5) for j in range(5))


def test_full_commutator_agrees_with_block_criterion():
    phi5 = contact_matrix()
    # anticommuting F with scalar E, G: the full commutator vanishes
    good = BlockShapeOperator(Fraction(3), ((2, 0), (0, 2)),
                              ((1, 0), (0, -1)), ((-1, 0), (0, -1))).matrix()
    assert mat5_commutator_is_zero(good, phi5, 0.0)
    # the forced block F = -1/2 rotation never commutes, whatever E and G
    rng = random.Random("blocks")
    f = mat2_scale(Fraction(-1, 2), ROTATION2)
    for _ in range(1000):
        e11, e12, e22, g11, g12, g22 = (
            Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(6))
        a5 = BlockShapeOperator(Fraction(rng.randint(-9, 9)),
                                ((e11, e12), (e12, e22)), f,
                                ((g11, g12), (g12, g22))).matrix()
        assert not mat5_commutator_is_zero(a5, phi5, 0.0)
