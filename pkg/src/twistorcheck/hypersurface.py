"""Pointwise hypersurface machinery.

The induced almost contact structure of a unit normal N is
phi(X) = j2 X - g(j2 X, N) N.  For a candidate shape operator written in
blocks on the ordered basis ({j2N-complement direction}, {two horizontal},
{two vertical}),

    A = | mu  0    0  |          phi = | 0  0   0 |
        | 0   E   F^T |                | 0  I   0 |
        | 0   F   G   |                | 0  0  -I |

with I the 2x2 rotation generator, A phi = phi A holds exactly when E and G
commute with I and F anticommutes with it; FI + IF is the certificate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curvature import require_admissible, twistor_curvature_j2
from .errors import NotUnitNormal
from .scalars import DEFAULT_TOLERANCE, Scalar, is_zero
from .twistor import TwistorContext, TwistorVector, j2, metric, norm_sq

ROTATION2 = ((0, -1), (1, 0))


def phi(ctx: TwistorContext, n: TwistorVector, x: TwistorVector,
        tol: float = DEFAULT_TOLERANCE) -> TwistorVector:
    """Almost contact structure phi X = j2 X - g(j2 X, N) N of a unit normal."""
    if not is_zero(metric(ctx, n, n) - 1, tol):
        raise NotUnitNormal("phi requires g(N, N) = 1")
    jx = j2(x)
    return jx - metric(ctx, jx, n) * n


def eigenvector_curvature_constraints(ctx: TwistorContext, n: TwistorVector,
                                      x: TwistorVector, lam: Scalar, mu: Scalar,
                                      tol: float = DEFAULT_TOLERANCE):
    """Residual pair every commuting germ must annihilate.

    For an eigenvector X (eigenvalue lam) orthogonal to N and j2 N with Hopf
    eigenvalue mu, the curvature pairing satisfies

        R(j2N, X, j2X, N) = -R(j2N, j2X, X, N)
        R(j2N, X, j2X, N) = -lam (lam - mu) |X|^2;

    returns both left-minus-right residuals.
    """
    if not is_zero(metric(ctx, n, n) - 1, tol):
        raise NotUnitNormal("the normal must be a unit vector")
    require_admissible(ctx, n, x, tol)
    j2n, j2x = j2(n), j2(x)
    pairing = twistor_curvature_j2(ctx, j2n, x, j2x, n)
    mirrored = twistor_curvature_j2(ctx, j2n, j2x, x, n)
    return (pairing + mirrored,
            pairing + lam * (lam - mu) * norm_sq(ctx, x))


# -- 2x2 block helpers --------------------------------------------------------

def mat2_mul(a, b):
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def mat2_add(a, b):
    return (
        (a[0][0] + b[0][0], a[0][1] + b[0][1]),
        (a[1][0] + b[1][0], a[1][1] + b[1][1]),
    )


def mat2_scale(s, a):
    return ((s * a[0][0], s * a[0][1]), (s * a[1][0], s * a[1][1]))


def mat2_transpose(a):
    return ((a[0][0], a[1][0]), (a[0][1], a[1][1]))


def mat2_is_zero(a, tol: float = DEFAULT_TOLERANCE) -> bool:
    return all(is_zero(x, tol) for row in a for x in row)


def mat2_eq(a, b, tol: float = DEFAULT_TOLERANCE) -> bool:
    return mat2_is_zero(mat2_add(a, mat2_scale(-1, b)), tol)


def commutation_feasible(f, rotation=ROTATION2, tol: float = DEFAULT_TOLERANCE):
    """Whether the F block admits any commuting extension; certificate FI + IF.

    Feasible exactly when F anticommutes with the rotation generator; the
    returned certificate matrix is zero in that case and a nonzero
    obstruction otherwise.
    """
    certificate = mat2_add(mat2_mul(f, rotation), mat2_mul(rotation, f))
    return mat2_is_zero(certificate, tol), certificate


def commutes_with_rotation(m, rotation=ROTATION2, tol: float = DEFAULT_TOLERANCE) -> bool:
    comm = mat2_add(mat2_mul(m, rotation), mat2_scale(-1, mat2_mul(rotation, m)))
    return mat2_is_zero(comm, tol)


@dataclass
class BlockShapeOperator:
    """Shape-operator candidate in blocks; E and G must be symmetric."""

    mu: Scalar
    e: tuple
    f: tuple
    g: tuple

    def __post_init__(self):
        if not mat2_eq(self.e, mat2_transpose(self.e), 0.0) or \
           not mat2_eq(self.g, mat2_transpose(self.g), 0.0):
            raise ValueError("diagonal blocks of a shape operator are symmetric")

    def matrix(self):
        """Assembled symmetric 5x5 matrix on ({e2}, {e3,e4}, {J+,K+})."""
        e, f, g = self.e, self.f, self.g
        ft = mat2_transpose(f)
        return (
            (self.mu, 0, 0, 0, 0),
            (0, e[0][0], e[0][1], ft[0][0], ft[0][1]),
            (0, e[1][0], e[1][1], ft[1][0], ft[1][1]),
            (0, f[0][0], f[0][1], g[0][0], g[0][1]),
            (0, f[1][0], f[1][1], g[1][0], g[1][1]),
        )


def contact_matrix():
    """phi on the same ordered basis: diag(0, rotation, -rotation)."""
    i = ROTATION2
    return (
        (0, 0, 0, 0, 0),
        (0, i[0][0], i[0][1], 0, 0),
        (0, i[1][0], i[1][1], 0, 0),
        (0, 0, 0, -i[0][0], -i[0][1]),
        (0, 0, 0, -i[1][0], -i[1][1]),
    )


def mat5_mul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(5)) for j in range(5))
        for i in range(5)
    )


def mat5_commutator_is_zero(a, b, tol: float = DEFAULT_TOLERANCE) -> bool:
    ab, ba = mat5_mul(a, b), mat5_mul(b, a)
    return all(is_zero(ab[i][j] - ba[i][j], tol) for i in range(5) for j in range(5))
