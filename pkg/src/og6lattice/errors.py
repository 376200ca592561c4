"""Exception hierarchy.

Precondition failures derive from LatticeError (a ValueError); the CLI maps
them to exit code 2.  Internal consistency failures derive from
InternalError (a RuntimeError) and should never be observed.
"""


class LatticeError(ValueError):
    """A documented precondition of an operation does not hold."""


class InternalError(RuntimeError):
    """A postcondition that the mathematics guarantees was violated."""


# lattice construction and vectors
class NotSymmetric(LatticeError):
    pass


class NotEven(LatticeError):
    pass


class Degenerate(LatticeError):
    pass


class LatticeMismatch(LatticeError):
    pass


class ZeroVector(LatticeError):
    pass


class NotPrimitive(LatticeError):
    pass


class NotIsotropic(LatticeError):
    pass


class NotSaturated(LatticeError):
    pass


# isometries
class NotIsometry(LatticeError):
    pass


class NotOrthogonal(LatticeError):
    pass


class ZeroNorm(LatticeError):
    pass


class NotIntegral(LatticeError):
    pass


class NegativeDefinite(LatticeError):
    pass


class NotInOtilde(LatticeError):
    pass


class NormNotTwo(LatticeError):
    pass


class NotIsometryOfComplement(LatticeError):
    pass


# orbits
class NoU2Decomposition(LatticeError):
    pass


class WrongLattice(LatticeError):
    pass


class OrbitMismatch(LatticeError):
    pass


class NotInSOPlus(LatticeError):
    pass


# Mukai / OG6
class NotInDomain(LatticeError):
    pass


class PDNotIsometry(LatticeError):
    pass


class SquareNotTwo(LatticeError):
    pass


class NotInOPlus(LatticeError):
    pass


# cones
class NotHyperbolic(LatticeError):
    pass


class NotPositive(LatticeError):
    pass


class ReferenceOnWall(LatticeError):
    """The reference class k lies on a wall, so it cannot pick a chamber."""


# internal
class NonIntegralResult(InternalError):
    pass


class InternalCaseFailure(InternalError):
    pass


class SearchExhausted(InternalError):
    pass
