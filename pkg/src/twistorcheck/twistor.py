"""Pointwise model of the twistor space over a 4-dimensional base.

Tangent vectors at the working point split into a horizontal part (four
components in the adapted frame, identified with base vectors through their
lifts) and a vertical part (two components on the J+, K+ frame of the
fiber).  The metric is g = g_h + g_v with g_v carrying a Gram value kappa on
the vertical frame (default 1; every obstruction verified here is invariant
under vertical rescaling, and the checks re-run at kappa = t to demonstrate
it).

Two almost complex structures act: j1 is the fiber point I+ on horizontal
vectors and fiber rotation on vertical ones; j2 agrees with j1 horizontally
and is its opposite vertically.  The metric g_{6/s} makes (Z, j2) nearly
Kahler, with derived constants

    a = s/24 - t (s/24)^2,   b = t (s/24)^2,   c = 1/t.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .base_curvature import BaseSpace, cp2bar, sphere4
from .frames import Vector4, dot
from .scalars import DEFAULT_TOLERANCE, Scalar


def derive_constants(s: Scalar, t: Scalar) -> tuple[Scalar, Scalar, Scalar]:
    """The (a, b, c) attached to fiber scale t over a base of scalar curvature s."""
    if isinstance(s, (int, float, Fraction)) and not s > 0:
        raise ValueError("scalar curvature must be positive")
    if isinstance(t, (int, float, Fraction)) and not t > 0:
        raise ValueError("fiber scale must be positive")
    if isinstance(s, int):
        s = Fraction(s)
    if isinstance(t, int):
        t = Fraction(t)
    u = s / 24
    b = t * u * u
    a = u - b
    c = 1 / t
    return a, b, c


@dataclass(frozen=True)
class TwistorContext:
    """Pointwise geometric environment of one twistor space."""

    base: BaseSpace
    s: Scalar
    t: Scalar
    a: Scalar
    b: Scalar
    c: Scalar
    kappa: Scalar = 1


def make_context(base: BaseSpace, s: Scalar, t: Scalar, kappa: Scalar = 1) -> TwistorContext:
    a, b, c = derive_constants(s, t)
    return TwistorContext(base, s, t, a, b, c, kappa)


def cp3_context(kappa: Scalar = 1) -> TwistorContext:
    """Nearly Kahler twistor space of the round 4-sphere (s=12, t=1/2)."""
    return make_context(sphere4(), Fraction(12), Fraction(1, 2), kappa)


def f12_context(c_tilde: Scalar, s_tilde: Scalar, kappa: Scalar = 1,
                tol: float = DEFAULT_TOLERANCE) -> TwistorContext:
    """Nearly Kahler twistor space of the projective plane (s=24, t=1/4)."""
    return make_context(cp2bar(c_tilde, s_tilde, tol), Fraction(24), Fraction(1, 4), kappa)


class TwistorVector:
    """Tangent vector: 4 horizontal components plus 2 vertical ones."""

    __slots__ = ("h", "v")

    def __init__(self, h: Vector4, v):
        self.h = h if isinstance(h, Vector4) else Vector4(h)
        self.v = tuple(v)
        if len(self.v) != 2:
            raise ValueError("the vertical part has exactly 2 components")

    def __add__(self, other):
        return TwistorVector(self.h + other.h,
                             (self.v[0] + other.v[0], self.v[1] + other.v[1]))

    def __sub__(self, other):
        return TwistorVector(self.h - other.h,
                             (self.v[0] - other.v[0], self.v[1] - other.v[1]))

    def __neg__(self):
        return TwistorVector(-self.h, (-self.v[0], -self.v[1]))

    def __rmul__(self, scalar):
        return TwistorVector(scalar * self.h, (scalar * self.v[0], scalar * self.v[1]))

    def __eq__(self, other):
        return (isinstance(other, TwistorVector)
                and self.h == other.h
                and self.v[0] == other.v[0] and self.v[1] == other.v[1])

    __hash__ = None

    def __repr__(self):
        return f"TwistorVector(h={self.h.components}, v={self.v})"


def lift(c1, c2, c3, c4) -> TwistorVector:
    """Horizontal lift of a base vector."""
    return TwistorVector(Vector4(c1, c2, c3, c4), (0, 0))


def vertical(v1, v2) -> TwistorVector:
    """Vertical vector with coordinates on (J+, K+)."""
    return TwistorVector(Vector4(0, 0, 0, 0), (v1, v2))


def twistor_vector(c1, c2, c3, c4, v1, v2) -> TwistorVector:
    return TwistorVector(Vector4(c1, c2, c3, c4), (v1, v2))


ZERO_TWISTOR = twistor_vector(0, 0, 0, 0, 0, 0)


def metric_h(ctx: TwistorContext, x: TwistorVector, y: TwistorVector) -> Scalar:
    return dot(x.h, y.h)


def metric_v(ctx: TwistorContext, x: TwistorVector, y: TwistorVector) -> Scalar:
    return ctx.kappa * (x.v[0] * y.v[0] + x.v[1] * y.v[1])


def metric(ctx: TwistorContext, x: TwistorVector, y: TwistorVector) -> Scalar:
    return metric_h(ctx, x, y) + metric_v(ctx, x, y)


def norm_sq(ctx: TwistorContext, x: TwistorVector) -> Scalar:
    return metric(ctx, x, x)


def norm_h_sq(ctx: TwistorContext, x: TwistorVector) -> Scalar:
    return metric_h(ctx, x, x)


def _rotate_h(x: TwistorVector):
    """Horizontal action of the fiber point I+ (e1->e2, e3->e4)."""
    c = x.h.components
    return Vector4(-c[1], c[0], -c[3], c[2])


def j1(x: TwistorVector) -> TwistorVector:
    """Integrable-side structure: I+ horizontally, fiber rotation vertically."""
    return TwistorVector(_rotate_h(x), (-x.v[1], x.v[0]))


def j2(x: TwistorVector) -> TwistorVector:
    """Nearly Kahler structure: j1 horizontally, -j1 vertically."""
    return TwistorVector(_rotate_h(x), (x.v[1], -x.v[0]))


def horizontal_part(x: TwistorVector) -> TwistorVector:
    return TwistorVector(x.h, (0, 0))


def vertical_part(x: TwistorVector) -> TwistorVector:
    return TwistorVector(Vector4(0, 0, 0, 0), x.v)


def project_orthogonal(ctx: TwistorContext, v: TwistorVector,
                       n: TwistorVector) -> TwistorVector:
    """g(N,N) V - g(V,N) N - g(V,j2 N) j2 N: orthogonal to N and j2 N.

    For nonzero N this parametrizes the full orthogonal complement of
    (N, j2 N) as V ranges over all tangent vectors, exactly (no division),
    because g(N, j2 N) = 0 and g(j2 N, j2 N) = g(N, N) identically.
    """
    j2n = j2(n)
    return (metric(ctx, n, n) * v
            - metric(ctx, v, n) * n
            - metric(ctx, v, j2n) * j2n)


@dataclass
class HypersurfaceGermData:
    """Pointwise data of a candidate commuting hypersurface germ."""

    normal: TwistorVector
    hopf_eigenvalue: Scalar
    eigenvalue: Scalar
    eigenvector: TwistorVector
