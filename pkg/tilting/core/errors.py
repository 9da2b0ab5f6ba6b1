class TiltingError(Exception):
    """Base class for every failure raised by the engine."""


class DenominatorVanishes(TiltingError, ZeroDivisionError):
    """A generic fraction has a denominator that specializes to zero."""


class IntegralityFailure(TiltingError, ArithmeticError):
    """A generic divided-power matrix is not denominator-free."""


class InconsistentCharacter(TiltingError, ValueError):
    """Peeling a character produced a negative multiplicity."""


class PeelingStalled(TiltingError, RuntimeError):
    """No splittable summand found although the character is too big."""


class AsymmetricForm(TiltingError):
    """No symmetric nondegenerate invariant form in the solution space."""


class LiftUnsolvable(TiltingError):
    """A map out of a Weyl module does not extend to the tilting module."""


class AmbiguousSummand(TiltingError):
    """A homomorphism meets summands of different degree."""


class StrandMismatch(TiltingError, ValueError):
    pass


class CoefficientPole(TiltingError, ZeroDivisionError):
    """A Jones-Wenzl coefficient has a pole in the context."""


class NotIdempotentable(TiltingError):
    pass


class InvalidInput(TiltingError, ValueError):
    pass


class CacheCorrupted(TiltingError):
    pass
