from __future__ import annotations

import random
from fractions import Fraction

import pytest

from twistorcheck import (
    PreconditionViolated,
    cp3_context, f12_context, j2, lift, metric, normal_pairing_expansion,
    project_orthogonal, twistor_curvature_j1, twistor_curvature_j2,
    twistor_vector, vertical,
)
from twistorcheck.checks.core import _free_context, _symbolic_admissible


def rand_vec(rng):
    return twistor_vector(*(rng.uniform(-1, 1) for _ in range(6)))


def test_purely_vertical_pairing_equals_c():
    for ctx in (cp3_context(), f12_context(Fraction(3, 5), Fraction(4, 5))):
        jp, kp = vertical(1, 0), vertical(0, 1)
        assert twistor_curvature_j2(ctx, jp, kp, jp, kp) == ctx.c
        assert twistor_curvature_j1(ctx, jp, kp, jp, kp) == ctx.c


def test_repeated_argument_vanishes():
    rng = random.Random("repeat")
    ctx = cp3_context()
    for _ in range(100):
        x, z, t = rand_vec(rng), rand_vec(rng), rand_vec(rng)
        assert abs(twistor_curvature_j2(ctx, x, x, z, t)) <= 1e-14


def test_forms_agree_on_horizontal_inputs():
    rng = random.Random("horizontal")
    ctx = f12_context(0.28, 0.96)
    for _ in range(200):
        vecs = [lift(*(rng.uniform(-1, 1) for _ in range(4))) for _ in range(4)]
        assert abs(twistor_curvature_j2(ctx, *vecs)
                   - twistor_curvature_j1(ctx, *vecs)) <= 1e-12


def test_forms_agree_exactly_in_free_components():
    for space in ("cp3", "f12"):
        ctx, vecs = _free_context(space)
        assert twistor_curvature_j2(ctx, *vecs) - twistor_curvature_j1(ctx, *vecs) == 0


def test_forms_agree_on_random_mixed_inputs():
    rng = random.Random("mixed")
    import math
    worst = 0.0
    for _ in range(500):
        theta = rng.uniform(0, 2 * math.pi)
        ctx = f12_context(math.cos(theta), math.sin(theta))
        vecs = [rand_vec(rng) for _ in range(4)]
        worst = max(worst, abs(twistor_curvature_j2(ctx, *vecs)
                               - twistor_curvature_j1(ctx, *vecs)))
    assert worst <= 1e-9


def test_pairing_expansion_examples():
    ctx = cp3_context()
    # vertical unit normal, horizontal unit X
    assert normal_pairing_expansion(ctx, vertical(1, 0), lift(0, 0, 1, 0)) == ctx.a
    # horizontal unit normal, vertical unit X
    assert normal_pairing_expansion(ctx, lift(1, 0, 0, 0), vertical(0, 1)) == ctx.a


def test_pairing_expansion_equals_tensor():
    for space in ("cp3", "f12"):
        ctx, n, x = _symbolic_admissible(space)
        assert (normal_pairing_expansion(ctx, n, x)
                - twistor_curvature_j2(ctx, j2(n), j2(x), x, n)) == 0


def test_pairing_expansion_equals_tensor_float():
    rng = random.Random("pairing")
    ctx = cp3_context()
    from twistorcheck.checks.common import random_admissible_pair
    for _ in range(200):
        n, x = random_admissible_pair(ctx, rng)
        lhs = normal_pairing_expansion(ctx, n, x)
        rhs = twistor_curvature_j2(ctx, j2(n), j2(x), x, n)
        assert abs(lhs - rhs) <= 1e-11


def test_pairing_expansion_enforces_orthogonality():
    ctx = cp3_context()
    with pytest.raises(PreconditionViolated):
        normal_pairing_expansion(ctx, lift(1, 0, 0, 0), lift(1, 0, 0, 0))
    with pytest.raises(PreconditionViolated):
        normal_pairing_expansion(ctx, lift(1, 0, 0, 0), lift(0, 1, 0, 0))


def test_projection_feeds_the_expansion():
    rng = random.Random("proj")
    ctx = f12_context(0.6, 0.8)
    for _ in range(50):
        n = rand_vec(rng)
        scale = metric(ctx, n, n) ** -0.5
        n = scale * n
        x = project_orthogonal(ctx, rand_vec(rng), n)
        normal_pairing_expansion(ctx, n, x)  # preconditions hold by construction
