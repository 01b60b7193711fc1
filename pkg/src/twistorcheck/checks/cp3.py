"""Obstruction chain over the 4-sphere twistor space.

The chain mirrors the non-existence argument: the two quadratic-form
expansions of the curvature pairings, the orthogonality they force on
eigenvectors, the exclusion of vertical normals (contradiction coefficient
3/8), the dimension count excluding mixed normals, and the block-matrix
contradiction excluding horizontal normals.

Every check accepts an optional ``mutation`` argument used by the shipped
sensitivity controls; a mutated run is expected to FAIL.
"""

from __future__ import annotations

from fractions import Fraction

from ..base_curvature import curvature_operator, sphere4
from ..curvature import normal_pairing_expansion, twistor_curvature_j2
from ..frames import (
    E1, E3, E4, HALF, I_PLUS, J_PLUS, K_PLUS,
    dot, hat, to_split_basis, wedge,
)
from ..hypersurface import ROTATION2, commutation_feasible, mat2_eq, mat2_mul, mat2_scale
from ..linalg import kernel_basis, rank
from ..scalars import PolyRing, is_zero
from ..twistor import (
    TwistorContext, cp3_context, derive_constants, j2, lift, metric, metric_h,
    norm_h_sq, project_orthogonal, twistor_vector, vertical,
)
from .common import (
    EXACT, RunConfig,
    ensure, ensure_zero, random_admissible_pair, render, rng_for,
)

_COEFF_U = Fraction(7, 8)
_COEFF_W = Fraction(-17, 8)
_COEFF_NORM = Fraction(3, 8)
_COEFF_CROSS = Fraction(-7, 8)


def _expansion_display(ctx, n, x, coeff_u, coeff_w):
    """Quadratic form with the printed sphere-case coefficients."""
    u = metric_h(ctx, n, x)
    w = metric_h(ctx, n, j2(x))
    xh2 = norm_h_sq(ctx, x)
    nh2 = norm_h_sq(ctx, n)
    x2 = metric(ctx, x, x)
    return (coeff_u * u * u + coeff_w * w * w
            + _COEFF_NORM * (xh2 + nh2 * x2) + _COEFF_CROSS * xh2 * nh2)


def _sphere_admissible():
    """Symbolic unit normal and generic admissible X over the 4-sphere."""
    from ..rings import unit_normal_ring

    ring = unit_normal_ring(extra_vars=(), circle=False)
    ctx = cp3_context()
    n = twistor_vector(*(ring.var(f"n{i}") for i in range(1, 7)))
    v = twistor_vector(*(ring.var(f"v{i}") for i in range(1, 7)))
    return ctx, n, project_orthogonal(ctx, v, n)


def check_expansions(cfg: RunConfig, backend: str, mutation: str | None = None):
    """Both pairing expansions and the sphere pullback identity."""
    coeff_u = Fraction(1) if mutation == "coefficient" else _COEFF_U
    if backend == EXACT:
        ctx, n, x = _sphere_admissible()
        j2n, j2x = j2(n), j2(x)
        ensure_zero(twistor_curvature_j2(ctx, j2n, j2x, x, n)
                    - _expansion_display(ctx, n, x, coeff_u, _COEFF_W),
                    "first expansion residual")
        ensure_zero(twistor_curvature_j2(ctx, j2n, x, j2x, n)
                    + _expansion_display(ctx, n, x, _COEFF_W, coeff_u),
                    "second expansion residual")
        # pullback of the space-form tensor, free components, no constraints
        free = PolyRing(tuple(f"n{i}" for i in range(1, 7))
                        + tuple(f"v{i}" for i in range(1, 7)))
        ctxf = cp3_context()
        nf_ = twistor_vector(*(free.var(f"n{i}") for i in range(1, 7)))
        xf = twistor_vector(*(free.var(f"v{i}") for i in range(1, 7)))
        from ..base_curvature import base_curvature
        pull = base_curvature(ctxf.base, j2(nf_).h, j2(xf).h, xf.h, nf_.h)
        ghw = metric_h(ctxf, nf_, j2(xf))
        ensure_zero(pull - ghw * ghw, "pullback residual")
        return {"residual": "0", "certificate": "coefficients 7/8, -17/8, 3/8, -7/8"}
    rng = rng_for(cfg.seed, "cp3.expansions")
    ctx = cp3_context()
    worst = 0.0
    for _ in range(max(1, cfg.trials // 10)):
        n, x = random_admissible_pair(ctx, rng)
        j2n, j2x = j2(n), j2(x)
        worst = max(
            worst,
            abs(twistor_curvature_j2(ctx, j2n, j2x, x, n)
                - _expansion_display(ctx, n, x, coeff_u, _COEFF_W)),
            abs(twistor_curvature_j2(ctx, j2n, x, j2x, n)
                + _expansion_display(ctx, n, x, _COEFF_W, coeff_u)),
        )
    ensure_zero(worst, "max expansion residual", cfg.tolerance)
    return {"residual": repr(worst)}


def check_orthogonality_forcing(cfg: RunConfig, backend: str, mutation: str | None = None):
    """Eigenvectors are forced to satisfy g_h(X,N) = g_h(j2X,N) = 0.

    The symmetry constraint on the pairing sum gives alpha (u^2 - w^2) = 0
    with alpha the difference of the two expansion coefficients; applied to
    X + j2 X it gives 4 alpha u w = 0; quartic certificates then force
    u = w = 0 over the reals.
    """
    coeff_u = _COEFF_U
    coeff_w = Fraction(7, 8) if mutation == "degenerate-twin" else _COEFF_W
    alpha = coeff_u - coeff_w
    ensure(alpha != 0,
           "expansion coefficients coincide: the symmetry constraint vanishes"
           " identically and forces nothing",
           residual=alpha)
    if backend == EXACT:
        names = tuple(f"n{i}" for i in range(1, 7)) + tuple(f"v{i}" for i in range(1, 7))
        ring = PolyRing(names)
        ctx = cp3_context()
        n = twistor_vector(*(ring.var(f"n{i}") for i in range(1, 7)))
        v = twistor_vector(*(ring.var(f"v{i}") for i in range(1, 7)))
        x = project_orthogonal(ctx, v, n)
        u = metric_h(ctx, n, x)
        w = metric_h(ctx, n, j2(x))

        def pairing_sum(y):
            return (twistor_curvature_j2(ctx, j2(n), y, j2(y), n)
                    + twistor_curvature_j2(ctx, j2(n), j2(y), y, n))

        ensure_zero(pairing_sum(x) - alpha * (u * u - w * w),
                    "constraint residual for X")
        ensure_zero(pairing_sum(x + j2(x)) - 4 * alpha * u * w,
                    "constraint residual for X + j2 X")
        # forcing certificates: u^4 and w^4 lie in the constraint ideal
        uw = PolyRing(("u", "w"))
        pu, pw = uw.var("u"), uw.var("w")
        ensure_zero(pu ** 4 - (pu * pu * (pu * pu - pw * pw) + (pu * pw) ** 2),
                    "u^4 certificate")
        ensure_zero(pw ** 4 - ((pu * pw) ** 2 - pw * pw * (pu * pu - pw * pw)),
                    "w^4 certificate")
        return {
            "residual": "0",
            "certificate": "u^4 = u^2 (u^2 - w^2) + (uw)^2;"
                           " w^4 = (uw)^2 - w^2 (u^2 - w^2); alpha = 3",
        }
    rng = rng_for(cfg.seed, "cp3.forcing")
    ctx = cp3_context()
    worst = 0.0
    witnessed = False
    for _ in range(max(1, min(cfg.trials, 200))):
        n, x = random_admissible_pair(ctx, rng)
        u = metric_h(ctx, n, x)
        w = metric_h(ctx, n, j2(x))
        total = (twistor_curvature_j2(ctx, j2(n), x, j2(x), n)
                 + twistor_curvature_j2(ctx, j2(n), j2(x), x, n))
        worst = max(worst, abs(total - float(alpha) * (u * u - w * w)))
        if abs(u * u - w * w) > 1e-3 and abs(total) > 1e-4:
            witnessed = True
    ensure_zero(worst, "max forcing residual", cfg.tolerance)
    ensure(witnessed, "no sample violated the symmetry constraint by a"
                      " measurable amount")
    return {"residual": repr(worst)}


def check_vertical_normal(cfg: RunConfig, backend: str, mutation: str | None = None):
    """A vertical unit normal forces a |X_h|^2 = 0 with a = 3/8, impossible
    for the horizontal eigenvectors a vertical normal demands."""
    a_value = Fraction(0) if mutation == "zero-a" else Fraction(3, 8)
    _, b, c = derive_constants(12, Fraction(1, 2))
    ctx = TwistorContext(sphere4(), Fraction(12), Fraction(1, 2),
                         a_value, b, c, kappa=1)
    if backend == EXACT:
        names = ("n5", "n6") + tuple(f"v{i}" for i in range(1, 7))
        base = PolyRing(names)
        n5, n6 = base.var("n5"), base.var("n6")
        ring = base.quotient([n5 * n5 + n6 * n6 - 1])
        n = vertical(ring.var("n5"), ring.var("n6"))
        v = twistor_vector(*(ring.var(f"v{i}") for i in range(1, 7)))
        x = project_orthogonal(ctx, v, n)
        expected = ctx.a * norm_h_sq(ctx, x)
        ensure_zero(twistor_curvature_j2(ctx, j2(n), j2(x), x, n) - expected,
                    "reduction residual (direct tensor)")
        ensure_zero(normal_pairing_expansion(ctx, n, x) - expected,
                    "reduction residual (closed expansion)")
        # the submersion identity pins the eigenvalue of a horizontal
        # eigenvector to zero (assumed input, not re-derived), so the pairing
        # must vanish; a nonzero coefficient a is the contradiction
        ensure(not is_zero(ctx.a),
               "no contradiction: the coefficient of |X_h|^2 vanished",
               residual=ctx.a)
        return {"residual": str(Fraction(3, 8)) + "*|X_h|^2",
                "certificate": "contradiction coefficient a = 3/8 != 0, against"
                               " the zero eigenvalue the submersion forces on"
                               " horizontal eigenvectors (assumed input)"}
    ensure(not is_zero(ctx.a), "no contradiction: the coefficient of |X_h|^2"
                               " vanished", residual=ctx.a)
    value = normal_pairing_expansion(ctx, vertical(1.0, 0.0), lift(0.0, 0.0, 1.0, 0.0),
                                     cfg.tolerance)
    ensure_zero(value - 0.375, "pinned vertical-normal value", 1e-12)
    return {"residual": repr(value - 0.375)}


def check_mixed_normal(cfg: RunConfig, backend: str):
    """A normal with nonzero vertical part confines admissible eigenvectors
    to a 2-dimensional horizontal space, short of the 4 dimensions they must
    span; certified by symbolic block determinants and exact kernels."""
    del backend  # exact-only reasoning
    ring = PolyRing(tuple(f"n{i}" for i in range(1, 7)))
    n = [ring.var(f"n{i}") for i in range(1, 7)]
    # constraint functionals on X: g(X,N), g(X,j2N), g_h(X,N), g_h(j2X,N)
    r1 = (n[0], n[1], n[2], n[3], n[4], n[5])
    r2 = (-n[1], n[0], -n[3], n[2], n[5], -n[4])
    r3 = (n[0], n[1], n[2], n[3], ring.zero, ring.zero)
    r4 = (n[1], -n[0], n[3], -n[2], ring.zero, ring.zero)
    for k in range(6):
        expected = (ring.zero,) * 4 + (n[4], n[5])
        ensure_zero(r1[k] - r3[k] - expected[k], f"row identity r1-r3 [{k}]")
        expected = (ring.zero,) * 4 + (n[5], -n[4])
        ensure_zero(r2[k] + r4[k] - expected[k], f"row identity r2+r4 [{k}]")
    vert_det = n[4] * (-n[4]) - n[5] * n[5]
    ensure_zero(vert_det + (n[4] * n[4] + n[5] * n[5]), "vertical block determinant")
    hnorm = n[0] * n[0] + n[1] * n[1] + n[2] * n[2] + n[3] * n[3]
    ensure_zero(dot(lift(*[n[i] for i in range(4)]).h, lift(n[1], -n[0], n[3], -n[2]).h),
                "horizontal rows orthogonality")
    ensure_zero(sum(c * c for c in r4[:4]) - hnorm, "horizontal row norm")

    samples = [
        (1, 0, 0, 0, 1, 0),
        (2, -1, 3, 5, 1, -2),
        (0, 1, 0, 0, 0, 3),
    ]
    for comps in samples:
        nn = [Fraction(cc) for cc in comps]
        rows = [
            nn,
            [-nn[1], nn[0], -nn[3], nn[2], nn[5], -nn[4]],
            [nn[0], nn[1], nn[2], nn[3], Fraction(0), Fraction(0)],
            [nn[1], -nn[0], nn[3], -nn[2], Fraction(0), Fraction(0)],
        ]
        ensure(rank(rows) == 4, f"constraint rank at N = {comps}")
        basis = kernel_basis(rows, 6)
        ensure(len(basis) == 2, f"solution dimension at N = {comps}")
        for vec in basis:
            ensure(vec[4] == 0 and vec[5] == 0,
                   f"solution not horizontal at N = {comps}")
    # horizontal normal control: the count imposes nothing there
    nn = [Fraction(c) for c in (1, 0, 0, 0, 0, 0)]
    rows = [
        nn,
        [-nn[1], nn[0], -nn[3], nn[2], nn[5], -nn[4]],
        [nn[0], nn[1], nn[2], nn[3], Fraction(0), Fraction(0)],
        [nn[1], -nn[0], nn[3], -nn[2], Fraction(0), Fraction(0)],
    ]
    ensure(rank(rows) == 2, "horizontal-normal control rank")
    return {
        "certificate": "vertical block det = -(n5^2+n6^2); horizontal Gram det"
                       " = (n1^2+..+n4^2)^2; admissible eigenvectors span 2 < 4"
                       " dimensions whenever both parts of N are nonzero",
    }


_F_EXPECTED = ((0, Fraction(1, 2)), (Fraction(-1, 2), 0))
_ID2 = ((1, 0), (0, 1))


def check_horizontal_normal(cfg: RunConfig, backend: str, mutation: str | None = None):
    """With N = e1 horizontal, the vertical shape-operator block is forced to
    F = -1/2 (0 -1; 1 0), which cannot anticommute with the rotation
    generator: certificate FI + IF = identity."""
    sign = -1 if mutation == "flipped-sign" else 1
    base = sphere4()
    op3 = sign * curvature_operator(base, wedge(E3, E1))
    ensure(op3 == wedge(E1, E3), "operator value on e3 ^ e1",
           residual=render(tuple(op3.components)))
    split = to_split_basis(wedge(E1, E3))
    ensure(split[1] == HALF and split[4] == HALF, "split coordinates of e1 ^ e3")
    hat3 = hat(I_PLUS, op3)
    ensure(hat3 == K_PLUS, "hat of the operator value",
           residual=render(tuple(hat3.components)))
    a3v = -HALF * hat3
    op4 = sign * curvature_operator(base, wedge(E4, E1))
    ensure(op4 == wedge(E1, E4), "operator value on e4 ^ e1")
    hat4 = hat(I_PLUS, op4)
    ensure(hat4 == -1 * J_PLUS, "hat of the second operator value")
    a4v = -HALF * hat4
    # columns of the (vertical rows x horizontal columns) block
    col3 = to_split_basis(a3v)[1:3]
    col4 = to_split_basis(a4v)[1:3]
    f_block = ((col3[0], col4[0]), (col3[1], col4[1]))
    if mutation == "scaled-f":
        f_block = mat2_scale(Fraction(1, 2), f_block)
    ensure(mat2_eq(f_block, _F_EXPECTED, 0.0),
           "computed F block differs from -1/2 (0 -1; 1 0)",
           residual=render(f_block))
    feasible, certificate = commutation_feasible(f_block)
    ensure(not feasible, "F block unexpectedly admits a commuting extension")
    ensure(mat2_eq(certificate, _ID2, 0.0), "certificate is not the identity",
           residual=render(certificate))
    # relabeling (e3,e4) and (J+,K+) conjugates everything; still infeasible
    perm = ((0, 1), (1, 0))
    f_conj = mat2_mul(perm, mat2_mul(f_block, perm))
    rot_conj = mat2_mul(perm, mat2_mul(ROTATION2, perm))
    feasible_conj, cert_conj = commutation_feasible(f_conj, rot_conj)
    ensure(not feasible_conj, "relabeled F block became feasible")
    ensure(mat2_eq(cert_conj, _ID2, 0.0), "relabeled certificate changed")
    # rescaled vertical Gram (kappa = t): feasibility is scale-invariant
    for scale in (Fraction(1, 2), 2, -1):
        feas_scaled, _ = commutation_feasible(mat2_scale(scale, f_block))
        ensure(not feas_scaled, f"F scaled by {scale} became feasible")

    if backend != EXACT:
        from ..hypersurface import (
            BlockShapeOperator, contact_matrix, mat5_commutator_is_zero,
        )
        rng = rng_for(cfg.seed, "cp3.horizontal")
        phi5 = contact_matrix()
        f_float = tuple(tuple(float(x) for x in row) for row in f_block)
        for _ in range(max(1, min(cfg.trials, 1000))):
            e11, e12, e22 = (rng.uniform(-2, 2) for _ in range(3))
            g11, g12, g22 = (rng.uniform(-2, 2) for _ in range(3))
            a5 = BlockShapeOperator(
                rng.uniform(-2, 2),
                ((e11, e12), (e12, e22)), f_float, ((g11, g12), (g12, g22)),
            ).matrix()
            ensure(not mat5_commutator_is_zero(a5, phi5, 0.5),
                   "assembled operator commuted with the contact structure")
    return {
        "residual": "0",
        "certificate": "F = -1/2 (0 -1; 1 0); FI + IF = identity",
    }
