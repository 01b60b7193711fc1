"""Linear algebra of an oriented orthonormal 4-frame.

Vectors and bivectors carry generic scalars (rationals, ring elements or
floats).  Bivector components live on the wedge basis
(e1^e2, e1^e3, e1^e4, e2^e3, e2^e4, e3^e4); the split basis
(I+, J+, K+, I-, J-, K-) is

    I+ = e1^e2 + e3^e4      I- = e1^e2 - e3^e4
    J+ = e1^e3 - e2^e4      J- = e1^e3 + e2^e4
    K+ = e1^e4 + e2^e3      K- = -e1^e4 + e2^e3

A bivector acts on vectors through (u^v)(w) = g(u,w) v - g(v,w) u; this is
the unique convention for which I+ maps e1 to e2 and the hat map
P -> [I+, P] takes 1/2 (J+ + J-) to K+.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotAComplexStructure
from .scalars import DEFAULT_TOLERANCE, is_zero

HALF = Fraction(1, 2)

WEDGE_PAIRS = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))
_WEDGE_INDEX = {pair: k for k, pair in enumerate(WEDGE_PAIRS)}


class Vector4:
    """Vector in the adapted orthonormal frame (e1, e2, e3, e4)."""

    __slots__ = ("components",)

    def __init__(self, c1, c2=None, c3=None, c4=None):
        if c2 is None:
            self.components = tuple(c1)
        else:
            self.components = (c1, c2, c3, c4)
        if len(self.components) != 4:
            raise ValueError("a Vector4 has exactly 4 components")

    def __add__(self, other):
        return Vector4(tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other):
        return Vector4(tuple(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self):
        return Vector4(tuple(-a for a in self.components))

    def __rmul__(self, scalar):
        return Vector4(tuple(scalar * a for a in self.components))

    def __eq__(self, other):
        return isinstance(other, Vector4) and all(
            a == b for a, b in zip(self.components, other.components)
        )

    __hash__ = None

    def __repr__(self):
        return f"Vector4{self.components}"


E1 = Vector4(1, 0, 0, 0)
E2 = Vector4(0, 1, 0, 0)
E3 = Vector4(0, 0, 1, 0)
E4 = Vector4(0, 0, 0, 1)
ZERO4 = Vector4(0, 0, 0, 0)


def dot(u: Vector4, v: Vector4):
    a, b = u.components, v.components
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]


class Bivector:
    """Element of Lambda^2 R^4 on the wedge basis."""

    __slots__ = ("components",)

    def __init__(self, components):
        self.components = tuple(components)
        if len(self.components) != 6:
            raise ValueError("a Bivector has exactly 6 components")

    def __add__(self, other):
        return Bivector(tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other):
        return Bivector(tuple(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self):
        return Bivector(tuple(-a for a in self.components))

    def __rmul__(self, scalar):
        return Bivector(tuple(scalar * a for a in self.components))

    def __eq__(self, other):
        return isinstance(other, Bivector) and all(
            a == b for a, b in zip(self.components, other.components)
        )

    __hash__ = None

    def is_zero(self, tol: float = DEFAULT_TOLERANCE) -> bool:
        return all(is_zero(c, tol) for c in self.components)

    def __repr__(self):
        return f"Bivector{self.components}"


ZERO_BIVECTOR = Bivector((0, 0, 0, 0, 0, 0))


def wedge(u: Vector4, v: Vector4) -> Bivector:
    a, b = u.components, v.components
    return Bivector(tuple(
        a[i - 1] * b[j - 1] - a[j - 1] * b[i - 1] for i, j in WEDGE_PAIRS
    ))


def basis_wedge(i: int, j: int) -> Bivector:
    """e_i ^ e_j for 1-based indices i != j."""
    sign = 1
    if i > j:
        i, j, sign = j, i, -1
    comps = [0] * 6
    comps[_WEDGE_INDEX[(i, j)]] = sign
    return Bivector(comps)


def from_split_basis(coeffs) -> Bivector:
    """Bivector with the given (I+, J+, K+, I-, J-, K-) coordinates."""
    ip, jp, kp, im, jm, km = coeffs
    return Bivector((
        ip + im,        # e1^e2
        jp + jm,        # e1^e3
        kp - km,        # e1^e4
        kp + km,        # e2^e3
        -jp + jm,       # e2^e4
        ip - im,        # e3^e4
    ))


def to_split_basis(b: Bivector):
    """Coordinates of ``b`` on (I+, J+, K+, I-, J-, K-)."""
    e12, e13, e14, e23, e24, e34 = b.components
    return (
        HALF * (e12 + e34),
        HALF * (e13 - e24),
        HALF * (e14 + e23),
        HALF * (e12 - e34),
        HALF * (e13 + e24),
        HALF * (e23 - e14),
    )


I_PLUS = from_split_basis((1, 0, 0, 0, 0, 0))
J_PLUS = from_split_basis((0, 1, 0, 0, 0, 0))
K_PLUS = from_split_basis((0, 0, 1, 0, 0, 0))
I_MINUS = from_split_basis((0, 0, 0, 1, 0, 0))
J_MINUS = from_split_basis((0, 0, 0, 0, 1, 0))
K_MINUS = from_split_basis((0, 0, 0, 0, 0, 1))


class SkewMap4:
    """Endomorphism of R^4 stored as 4x4 rows (so(4) when skew)."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(row) for row in rows)
        if len(self.rows) != 4 or any(len(r) != 4 for r in self.rows):
            raise ValueError("a SkewMap4 is a 4x4 matrix")

    def apply(self, v: Vector4) -> Vector4:
        c = v.components
        return Vector4(tuple(
            row[0] * c[0] + row[1] * c[1] + row[2] * c[2] + row[3] * c[3]
            for row in self.rows
        ))

    def compose(self, other: "SkewMap4") -> "SkewMap4":
        cols = list(zip(*other.rows))
        return SkewMap4(tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
            for row in self.rows
        ))

    def commutator(self, other: "SkewMap4") -> "SkewMap4":
        return self.compose(other) - other.compose(self)

    def __add__(self, other):
        return SkewMap4(tuple(
            tuple(a + b for a, b in zip(r1, r2))
            for r1, r2 in zip(self.rows, other.rows)
        ))

    def __sub__(self, other):
        return SkewMap4(tuple(
            tuple(a - b for a, b in zip(r1, r2))
            for r1, r2 in zip(self.rows, other.rows)
        ))

    def __neg__(self):
        return SkewMap4(tuple(tuple(-a for a in row) for row in self.rows))

    def __rmul__(self, scalar):
        return SkewMap4(tuple(tuple(scalar * a for a in row) for row in self.rows))

    def __eq__(self, other):
        return isinstance(other, SkewMap4) and self.rows == other.rows

    __hash__ = None

    def is_skew(self, tol: float = DEFAULT_TOLERANCE) -> bool:
        return all(
            is_zero(self.rows[i][j] + self.rows[j][i], tol)
            for i in range(4) for j in range(i, 4)
        )

    def __repr__(self):
        return f"SkewMap4{self.rows}"


def identity_map() -> SkewMap4:
    return SkewMap4(tuple(tuple(1 if i == j else 0 for j in range(4)) for i in range(4)))


def as_skew_map(b: Bivector) -> SkewMap4:
    """Matrix of the action (u^v)(w) = g(u,w) v - g(v,w) u."""
    m = [[0] * 4 for _ in range(4)]
    for coeff, (i, j) in zip(b.components, WEDGE_PAIRS):
        a, bb = i - 1, j - 1
        m[bb][a] = m[bb][a] + coeff   # e_i maps to coeff * e_j
        m[a][bb] = m[a][bb] - coeff   # e_j maps to -coeff * e_i
    return SkewMap4(m)


def bivector_of_skew(m: SkewMap4) -> Bivector:
    """Inverse of :func:`as_skew_map` on skew matrices."""
    return Bivector(tuple(m.rows[j - 1][i - 1] for i, j in WEDGE_PAIRS))


def squares_to_minus_identity(m: SkewMap4, tol: float = DEFAULT_TOLERANCE) -> bool:
    sq = m.compose(m)
    return all(
        is_zero(sq.rows[i][j] + (1 if i == j else 0), tol)
        for i in range(4) for j in range(4)
    )


def hat(structure: Bivector, p: Bivector, tol: float = DEFAULT_TOLERANCE) -> Bivector:
    """Commutator [I, P] of the skew maps, returned as a bivector.

    ``structure`` must be an orthogonal complex structure; with I+, the map
    kills I+ and the whole anti-self-dual part and lands in span(J+, K+).
    """
    i_map = as_skew_map(structure)
    if not squares_to_minus_identity(i_map, tol):
        raise NotAComplexStructure("hat requires a bivector squaring to -identity")
    return bivector_of_skew(i_map.commutator(as_skew_map(p)))
