"""Exact verification of the hypersurface commutation obstructions on the
two nearly Kahler twistor spaces (over the 4-sphere and over the reversed
projective plane).

The package machine-checks, identity by identity, that no hypersurface of
either space can have its shape operator commute with the induced almost
contact structure.  Scalars are generic: exact rationals and polynomial
quotient rings with canonical normal forms, or binary64 floats under a
tolerance.  The ``verify`` command (or ``python -m twistorcheck``) runs the
named check suites and emits text or JSON reports.
"""

from .base_curvature import (
    BaseSpace, base_curvature, cp2bar, curvature_operator, j_cp2, sphere4,
)
from .checks import CheckReport, RunConfig, run_suite
from .checks.f12 import constraint_system, eigenplane_slopes, projection_rank
from .curvature import (
    normal_pairing_expansion, twistor_curvature_j1, twistor_curvature_j2,
)
from .errors import (
    DegenerateCase, DivisionByNonInvertedSymbol, NonTerminatingReduction,
    NotAComplexStructure, NotUnitNormal, PreconditionViolated,
    TwistorCheckError, WrongBaseSpace,
)
from .frames import (
    Bivector, SkewMap4, Vector4,
    I_MINUS, I_PLUS, J_MINUS, J_PLUS, K_MINUS, K_PLUS,
    as_skew_map, bivector_of_skew, dot, from_split_basis, hat, to_split_basis,
    wedge,
)
from .hypersurface import (
    BlockShapeOperator, commutation_feasible, eigenvector_curvature_constraints,
    phi,
)
from .scalars import Poly, PolyRing, Rational, Scalar, is_zero, normalize
from .twistor import (
    HypersurfaceGermData, TwistorContext, TwistorVector,
    cp3_context, derive_constants, f12_context, j1, j2, lift, make_context,
    metric, metric_h, metric_v, norm_h_sq, norm_sq, project_orthogonal,
    twistor_vector, vertical,
)

__version__ = "0.1.0"
