"""Exception types raised across the package."""


class Su2CommError(Exception):
    """Base class for every error raised by this package."""


class DegenerateElement(Su2CommError):
    """log was asked for at +1 or -1, where the axis is undefined."""


class NotOnLevelSet(Su2CommError):
    """A pair does not have the requested commutator."""


class NotInYTheta(Su2CommError):
    """The complex part of g is not a real multiple of exp(i theta/2)."""


class AmbiguousAtPZero(Su2CommError):
    """The Q formula is indeterminate at P = 0; use a square-wave table."""


class SquareWaveRequested(Su2CommError):
    """A smooth-wave operation was called on a square-wave id."""


class DegenerateWave(Su2CommError):
    """The wave (theta=0, |P|=1) has no image curve."""


class NotOnWave(Su2CommError):
    """A cylinder or sphere point is not on the requested wave."""


class CentralCommutator(Su2CommError):
    """The commutator is +1 or -1, so no diagonalizing rotation is defined."""


class InconsistentScenario(Su2CommError):
    """A Mayer-Vietoris scenario violates exactness or has bad shapes."""


class UnresolvedExtension(Su2CommError):
    """An extension problem is not pinned down by order and F2 rank."""


class DualityFailure(Su2CommError):
    """A cup-product pairing is not unimodular."""

    def __init__(self, degree: int, message: str = ""):
        self.degree = degree
        super().__init__(message or f"pairing degenerate in degree {degree}")
