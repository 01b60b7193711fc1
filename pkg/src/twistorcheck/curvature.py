"""Curvature 4-tensor of the nearly Kahler twistor space, in both forms.

``twistor_curvature_j2`` evaluates the form organized around the nearly
Kahler structure j2; ``twistor_curvature_j1`` evaluates the equivalent form
organized around the integrable structure j1 together with the split metric
g = g_h + g_v.  The two agree as multilinear forms; the j1 form serves as
the independent oracle for the j2 form.

``normal_pairing_expansion`` evaluates the closed expansion of
R(j2 N, j2 X, X, N) valid for a unit normal N and X orthogonal to N and
j2 N:

    R^M(dpi(j2 N), dpi(j2 X), dpi(X), dpi(N))
      + (b+2a) g_h(N,X)^2 + (-4a+3b-c) g_h(N, j2 X)^2
      + a (|N_h|^2 |X|^2 + |X_h|^2) - (2a+b) |N_h|^2 |X_h|^2.
"""

from __future__ import annotations

from .base_curvature import base_curvature
from .errors import PreconditionViolated
from .scalars import DEFAULT_TOLERANCE, Scalar, is_zero
from .twistor import (
    TwistorContext, TwistorVector,
    j1, j2, metric, metric_h, metric_v, norm_h_sq, norm_sq,
)


def twistor_curvature_j2(ctx: TwistorContext, x: TwistorVector, y: TwistorVector,
                         z: TwistorVector, t: TwistorVector) -> Scalar:
    a, b, c = ctx.a, ctx.b, ctx.c
    jx, jy, jz = j2(x), j2(y), j2(z)
    gh = metric_h
    g = metric

    value = base_curvature(ctx.base, x.h, y.h, z.h, t.h)
    value = value + 2 * (b + 2 * a) * gh(ctx, jx, y) * gh(ctx, jz, t)
    value = value + (b + 2 * a) * gh(ctx, jx, z) * gh(ctx, jy, t)
    value = value - (b + 2 * a) * gh(ctx, jx, t) * gh(ctx, jy, z)
    value = value + (c - 5 * b) * (gh(ctx, x, z) * gh(ctx, y, t)
                                   - gh(ctx, x, t) * gh(ctx, y, z))
    value = value - 2 * a * gh(ctx, jx, y) * g(ctx, jz, t)
    value = value - 2 * a * g(ctx, jx, y) * gh(ctx, jz, t)
    value = value - a * gh(ctx, jx, z) * g(ctx, jy, t)
    value = value - a * g(ctx, jx, z) * gh(ctx, jy, t)
    value = value + a * gh(ctx, jx, t) * g(ctx, jy, z)
    value = value + a * g(ctx, jx, t) * gh(ctx, jy, z)
    value = value + (b - c) * (gh(ctx, x, z) * g(ctx, y, t)
                               + g(ctx, x, z) * gh(ctx, y, t)
                               - gh(ctx, x, t) * g(ctx, y, z)
                               - g(ctx, x, t) * gh(ctx, y, z))
    value = value + c * (g(ctx, x, z) * g(ctx, y, t) - g(ctx, x, t) * g(ctx, y, z))
    return value


def twistor_curvature_j1(ctx: TwistorContext, x: TwistorVector, y: TwistorVector,
                         z: TwistorVector, t: TwistorVector) -> Scalar:
    a, b, c = ctx.a, ctx.b, ctx.c
    jx, jy, jz = j1(x), j1(y), j1(z)
    gh = metric_h
    gv = metric_v

    value = base_curvature(ctx.base, x.h, y.h, z.h, t.h)
    value = value + 2 * a * gh(ctx, jx, y) * gv(ctx, jz, t)
    value = value + 2 * a * gv(ctx, jx, y) * gh(ctx, jz, t)
    value = value + a * gh(ctx, jx, z) * gv(ctx, jy, t)
    value = value + a * gv(ctx, jx, z) * gh(ctx, jy, t)
    value = value - a * gh(ctx, jx, t) * gv(ctx, jy, z)
    value = value - a * gv(ctx, jx, t) * gh(ctx, jy, z)
    value = value + 2 * b * gh(ctx, jx, y) * gh(ctx, jz, t)
    value = value + b * gh(ctx, jx, z) * gh(ctx, jy, t)
    value = value - b * gh(ctx, jx, t) * gh(ctx, jy, z)
    value = value + b * gh(ctx, x, z) * gv(ctx, y, t)
    value = value + b * gv(ctx, x, z) * gh(ctx, y, t)
    value = value - b * gh(ctx, x, t) * gv(ctx, y, z)
    value = value - b * gv(ctx, x, t) * gh(ctx, y, z)
    value = value - 3 * b * gh(ctx, x, z) * gh(ctx, y, t)
    value = value + c * gv(ctx, x, z) * gv(ctx, y, t)
    value = value + 3 * b * gh(ctx, x, t) * gh(ctx, y, z)
    value = value - c * gv(ctx, x, t) * gv(ctx, y, z)
    return value


def require_admissible(ctx: TwistorContext, n: TwistorVector, x: TwistorVector,
                       tol: float = DEFAULT_TOLERANCE) -> None:
    """Raise unless X is orthogonal to both N and j2 N."""
    if not is_zero(metric(ctx, x, n), tol):
        raise PreconditionViolated("X must be orthogonal to N")
    if not is_zero(metric(ctx, x, j2(n)), tol):
        raise PreconditionViolated("X must be orthogonal to j2 N")


def normal_pairing_expansion(ctx: TwistorContext, n: TwistorVector, x: TwistorVector,
                             tol: float = DEFAULT_TOLERANCE) -> Scalar:
    """Closed expansion of R(j2 N, j2 X, X, N) for admissible X and unit N."""
    require_admissible(ctx, n, x, tol)
    a, b, c = ctx.a, ctx.b, ctx.c
    j2n = j2(n)
    pullback = base_curvature(ctx.base, j2n.h, j2(x).h, x.h, n.h)
    gh_nx = metric_h(ctx, n, x)
    gh_njx = metric_h(ctx, n, j2(x))
    nh2 = norm_h_sq(ctx, n)
    xh2 = norm_h_sq(ctx, x)
    x2 = norm_sq(ctx, x)
    return (pullback
            + (b + 2 * a) * gh_nx * gh_nx
            + (-4 * a + 3 * b - c) * gh_njx * gh_njx
            + a * (nh2 * x2 + xh2)
            - (2 * a + b) * nh2 * xh2)
