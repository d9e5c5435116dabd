"""Exception hierarchy shared by every module of the package."""


class CevaError(Exception):
    """Base class for all errors raised by :mod:`cevatri`."""


class InvalidTriangle(CevaError, ValueError):
    """The side triple does not describe a triangle."""

    def __init__(self, message, inequality=None):
        super().__init__(message)
        self.inequality = inequality


class NonPositiveSide(InvalidTriangle):
    pass


class DegenerateTriangle(InvalidTriangle):
    """Triangle inequality / cone criterion fails (degenerate or impossible)."""


class EquilateralInput(CevaError, ValueError):
    """Operation is only defined for non-equilateral triangles."""


class IsotropicVector(CevaError, ValueError):
    """Squared-side vector is a multiple of [1, 1, 1]."""


class NoSolution(CevaError):
    """Reflection equation has no solution (cone angles differ)."""


class BrocardMismatch(CevaError):
    def __init__(self, omega_t, omega_v):
        super().__init__(
            f"Brocard angles differ: omega_T={omega_t!r}, omega_V={omega_v!r}"
        )
        self.omega_t = omega_t
        self.omega_v = omega_v


class ParamOutsideInterval(CevaError, ValueError):
    """Parameter lies outside the fundamental interval of the triangle."""


class ParamOutsideIntervalWarning(UserWarning):
    pass


class GammaOutOfRange(CevaError, ValueError):
    pass


class VerificationError(CevaError, AssertionError):
    """Two independent computations disagree beyond tolerance."""
