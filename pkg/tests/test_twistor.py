from __future__ import annotations

import random
from fractions import Fraction

import pytest

from twistorcheck import (
    cp3_context, derive_constants, f12_context, j1, j2, lift, make_context,
    metric, metric_h, metric_v, norm_sq, project_orthogonal, twistor_vector,
    vertical,
)
from twistorcheck.base_curvature import sphere4
from twistorcheck.scalars import PolyRing
from twistorcheck.twistor import TwistorContext, TwistorVector


def symbolic_pair(extra=()):
    names = tuple(extra) + tuple(f"{p}{i}" for p in ("n", "v") for i in range(1, 7))
    ring = PolyRing(names)
    n = twistor_vector(*(ring.var(f"n{i}") for i in range(1, 7)))
    v = twistor_vector(*(ring.var(f"v{i}") for i in range(1, 7)))
    return ring, n, v


def test_derived_constants_values():
    assert derive_constants(12, Fraction(1, 2)) == (
        Fraction(3, 8), Fraction(1, 8), Fraction(2))
    assert derive_constants(24, Fraction(1, 4)) == (
        Fraction(3, 4), Fraction(1, 4), Fraction(4))
    for s in (6, 12, 24, 48):
        a, _, _ = derive_constants(s, Fraction(24, s))
        assert a == 0


def test_derived_constants_reject_nonpositive_inputs():
    with pytest.raises(ValueError):
        derive_constants(-12, Fraction(1, 2))
    with pytest.raises(ValueError):
        derive_constants(12, 0)


def test_contexts():
    ctx = cp3_context()
    assert (ctx.a, ctx.b, ctx.c) == (Fraction(3, 8), Fraction(1, 8), 2)
    assert ctx.t == Fraction(6, 12 * 2) * 2  # t = 6/s = 1/2
    ctx2 = f12_context(Fraction(3, 5), Fraction(4, 5))
    assert (ctx2.a, ctx2.b, ctx2.c) == (Fraction(3, 4), Fraction(1, 4), 4)
    with pytest.raises(ValueError):
        f12_context(Fraction(1), Fraction(1))


def test_metric_split():
    ctx = cp3_context()
    assert metric(ctx, lift(1, 0, 0, 0), vertical(1, 0)) == 0
    assert metric(ctx, lift(1, 0, 0, 0), lift(1, 0, 0, 0)) == 1
    assert metric(ctx, vertical(1, 0), vertical(1, 0)) == 1
    ctx_k = cp3_context(kappa=Fraction(1, 4))
    assert metric(ctx_k, vertical(1, 0), vertical(1, 0)) == Fraction(1, 4)
    assert metric_h(ctx_k, vertical(1, 0), vertical(1, 0)) == 0
    assert metric_v(ctx_k, lift(1, 2, 3, 4), lift(1, 2, 3, 4)) == 0


def test_structures_on_basis_vectors():
    e1 = lift(1, 0, 0, 0)
    assert j2(e1) == lift(0, 1, 0, 0)
    assert j2(vertical(1, 0)) == vertical(0, -1)
    assert j1(vertical(1, 0)) == vertical(0, 1)
    assert j2(j2(vertical(0, 1))) == vertical(0, -1)


def test_structures_agree_horizontally_and_oppose_vertically():
    _, n, v = symbolic_pair()
    horizontal = TwistorVector(n.h, (0, 0))
    vert = vertical(n.v[0], n.v[1])
    assert j1(horizontal) == j2(horizontal)
    assert j1(vert) == -1 * j2(vert)
    assert j1(j1(v)) == -1 * v
    assert j2(j2(v)) == -1 * v


def test_j2_is_an_isometry_symbolically():
    ring, n, v = symbolic_pair(extra=("k",))
    ctx = TwistorContext(sphere4(), Fraction(12), Fraction(1, 2),
                         *derive_constants(12, Fraction(1, 2)),
                         kappa=ring.var("k"))
    assert metric(ctx, j2(n), j2(v)) - metric(ctx, n, v) == 0
    assert metric_h(ctx, j2(n), v) + metric_h(ctx, n, j2(v)) == 0


def test_j2_is_an_isometry_numerically():
    rng = random.Random("isometry")
    ctx = cp3_context()
    worst = 0.0
    for _ in range(10000):
        x = twistor_vector(*(rng.uniform(-1, 1) for _ in range(6)))
        y = twistor_vector(*(rng.uniform(-1, 1) for _ in range(6)))
        worst = max(worst, abs(metric(ctx, j2(x), j2(y)) - metric(ctx, x, y)))
    assert worst <= 1e-12


def test_projection_is_orthogonal_to_n_and_j2n():
    ring, n, v = symbolic_pair()
    ctx = cp3_context()
    x = project_orthogonal(ctx, v, n)
    assert metric(ctx, x, n) == 0
    assert metric(ctx, x, j2(n)) == 0


def test_vector_arithmetic():
    x = twistor_vector(1, 2, 3, 4, 5, 6)
    y = twistor_vector(6, 5, 4, 3, 2, 1)
    assert (x + y) - y == x
    assert 2 * x == x + x
    assert -1 * x == -x
    ctx = make_context(sphere4(), 12, Fraction(1, 2))
    assert norm_sq(ctx, x) == 1 + 4 + 9 + 16 + 25 + 36
