"""Curvature tensors of the two base spaces, as 4-tensors and on bivectors.

The round 4-sphere has the space-form tensor

    R(U,V,W,T) = g(V,W) g(U,T) - g(U,W) g(V,T),

the reversed-orientation complex projective plane the five-term tensor

    R(U,V,W,S) = g(U,S)g(V,W) - g(U,W)g(V,S) - g(U,JW)g(V,JS)
                 + g(U,JS)g(V,JW) - 2 g(U,JV)g(W,JS)

with J = ct*I- + st*J- the base complex structure (an anti-self-dual
bivector, ct^2 + st^2 = 1).  Scalar curvatures are 12 and 24 respectively.

Sign convention: g(R(U,V)W, T) = R(U,V,W,T); the operator on bivectors acts
on decomposables through that endomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import WrongBaseSpace
from .frames import (
    E1, E2, E3, E4,
    Bivector, SkewMap4, Vector4, WEDGE_PAIRS,
    I_MINUS, J_MINUS,
    as_skew_map, bivector_of_skew, dot,
)
from .scalars import DEFAULT_TOLERANCE, Scalar, is_zero

SPHERE4 = "sphere4"
CP2BAR = "cp2bar"

_BASIS = (E1, E2, E3, E4)


@dataclass(frozen=True)
class BaseSpace:
    kind: str
    c_tilde: Scalar = None
    s_tilde: Scalar = None


def sphere4() -> BaseSpace:
    return BaseSpace(SPHERE4)


def cp2bar(c_tilde: Scalar, s_tilde: Scalar, tol: float = DEFAULT_TOLERANCE) -> BaseSpace:
    residual = c_tilde * c_tilde + s_tilde * s_tilde - 1
    if not is_zero(residual, tol):
        raise ValueError("base complex structure needs ct^2 + st^2 = 1")
    return BaseSpace(CP2BAR, c_tilde, s_tilde)


def scalar_curvature(base: BaseSpace) -> int:
    return 12 if base.kind == SPHERE4 else 24


def j_cp2(base: BaseSpace) -> SkewMap4:
    """Matrix of the base complex structure ct*I- + st*J-."""
    if base.kind != CP2BAR:
        raise WrongBaseSpace("the base complex structure lives on the projective plane")
    return base.c_tilde * as_skew_map(I_MINUS) + base.s_tilde * as_skew_map(J_MINUS)


def base_curvature(base: BaseSpace, u: Vector4, v: Vector4, w: Vector4, t: Vector4) -> Scalar:
    if base.kind == SPHERE4:
        return dot(v, w) * dot(u, t) - dot(u, w) * dot(v, t)
    if base.kind != CP2BAR:
        raise WrongBaseSpace(f"unknown base space {base.kind!r}")
    jm = j_cp2(base)
    jv, jw, jt = jm.apply(v), jm.apply(w), jm.apply(t)
    return (
        dot(u, t) * dot(v, w)
        - dot(u, w) * dot(v, t)
        - dot(u, jw) * dot(v, jt)
        + dot(u, jt) * dot(v, jw)
        - 2 * dot(u, jv) * dot(w, jt)
    )


def curvature_operator(base: BaseSpace, b: Bivector) -> Bivector:
    """Linear extension of u^v -> the bivector of w -> R(u,v)w."""
    total = None
    for coeff, (i, j) in zip(b.components, WEDGE_PAIRS):
        if is_zero(coeff, 0.0):
            continue
        ei, ej = _BASIS[i - 1], _BASIS[j - 1]
        rows = tuple(
            tuple(base_curvature(base, ei, ej, ek, el) for ek in _BASIS)
            for el in _BASIS
        )
        piece = coeff * bivector_of_skew(SkewMap4(rows))
        total = piece if total is None else total + piece
    if total is None:
        return Bivector((0, 0, 0, 0, 0, 0))
    return total
