"""Exception types shared across the package."""


class TwistorCheckError(Exception):
    """Base class for all package-specific errors."""


class NonTerminatingReduction(TwistorCheckError):
    """A rewrite loop exceeded its step budget (misconfigured rule set)."""


class DivisionByNonInvertedSymbol(TwistorCheckError):
    """Division by a ring element that is not an invertible monomial."""


class WrongBaseSpace(TwistorCheckError):
    """An operation specific to one base space was called on the other."""


class NotAComplexStructure(TwistorCheckError):
    """The bivector handed to the hat map does not square to minus identity."""


class NotUnitNormal(TwistorCheckError):
    """A construction requiring a unit normal received a non-unit vector."""


class PreconditionViolated(TwistorCheckError):
    """An orthogonality or normalization precondition does not hold."""


class DegenerateCase(TwistorCheckError):
    """The requested computation is undefined in this degenerate configuration."""
