"""The quotient rings shipped with the verifier.

Variable order is fixed (graded lex, earlier = more significant) as
ct > st > delta > h > v for the fiber-parameter rings, so normal forms are
reproducible.  ``ct``/``st`` are the cosine/sine coordinates of the base
complex structure in the anti-self-dual plane, ``delta`` a root of the
eigenplane-slope quadratic, ``h``/``v`` the horizontal and vertical norms of
the unit normal.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import PolyRing


def circle_ring(extra_vars=(), inverted=("st",)) -> PolyRing:
    """Q[ct, st, *extra] with ct^2 + st^2 = 1 and st invertible."""
    base = PolyRing(("ct", "st", *extra_vars), inverted=inverted)
    ct, st = base.var("ct"), base.var("st")
    return base.quotient([ct * ct + st * st - 1])


def slope_ring(extra_vars=(), unit_norms: bool = False,
               slope_quadratic: bool = True) -> PolyRing:
    """Ring for the flag-manifold endgame: Q[ct, st, delta, h, v] localized at st.

    Relations: ct^2 + st^2 = 1, optionally the slope quadratic
    3*st^2*delta^2 - 6*ct*st*delta - (7 - 3*ct^2) = 0 (scaled by st^-2 so it
    orients on delta^2), and optionally h^2 + v^2 = 1.
    """
    names = ("ct", "st", "delta", "h", "v", *extra_vars)
    base = PolyRing(names, inverted=("st",))
    ct, st, delta, h, v = (base.var(n) for n in ("ct", "st", "delta", "h", "v"))
    relations = [ct * ct + st * st - 1]
    if slope_quadratic:
        quad = 3 * st * st * delta * delta - 6 * ct * st * delta - 7 + 3 * ct * ct
        relations.append(quad / (3 * st * st))
    if unit_norms:
        relations.append(h * h + v * v - 1)
    return base.quotient(relations)


def unit_normal_ring(kappa=Fraction(1), extra_vars=("ct", "st"),
                     circle: bool = True) -> PolyRing:
    """Ring over free components n1..n6, v1..v6 of two twistor vectors.

    The relation makes N = (n1..n4 | n5, n6) a unit vector for the metric
    with vertical Gram ``kappa``; optionally ct^2 + st^2 = 1 is included for
    the flag-manifold base.
    """
    extra = tuple(extra_vars)
    n_names = tuple(f"n{i}" for i in range(1, 7))
    w_names = tuple(f"v{i}" for i in range(1, 7))
    base = PolyRing(extra + n_names + w_names)
    kappa = Fraction(kappa)
    n = [base.var(name) for name in n_names]
    unit = n[0] * n[0] + n[1] * n[1] + n[2] * n[2] + n[3] * n[3] \
        + kappa * n[4] * n[4] + kappa * n[5] * n[5] - 1
    relations = [unit]
    if circle and "ct" in extra and "st" in extra:
        ct, st = base.var("ct"), base.var("st")
        relations.insert(0, ct * ct + st * st - 1)
    return base.quotient(relations)


def free_components_ring(prefixes=("x", "y", "z", "t"), extra_vars=()) -> PolyRing:
    """Free ring over the 6 components of each named twistor vector."""
    names = tuple(extra_vars) + tuple(
        f"{p}{i}" for p in prefixes for i in range(1, 7)
    )
    return PolyRing(names)


def shipped_rings() -> dict[str, PolyRing]:
    """Every quotient ring the verifier relies on, for confluence testing."""
    return {
        "circle": circle_ring(),
        "slope": slope_ring(),
        "slope-free-delta": slope_ring(slope_quadratic=False, unit_norms=True),
        "slope-unit-norms": slope_ring(unit_norms=True),
        "unit-normal-sphere": unit_normal_ring(extra_vars=(), circle=False),
        "unit-normal-flag": unit_normal_ring(),
        "unit-normal-kappa-quarter": unit_normal_ring(kappa=Fraction(1, 4)),
    }
