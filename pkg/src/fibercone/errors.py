"""Exception hierarchy shared by all modules."""


class FiberConeError(Exception):
    """Base class for every error raised by this package."""


class InvalidIdeal(FiberConeError, ValueError):
    pass


class ExponentOverflow(FiberConeError, ArithmeticError):
    """An exponent left the signed 64-bit range."""


class NotApplicable(FiberConeError, ValueError):
    """The input does not satisfy the precondition of the operation."""


class NotNormalized(NotApplicable):
    pass


class NotASubideal(FiberConeError, ValueError):
    pass


class BoundTooSmall(FiberConeError, ValueError):
    pass


class InvalidSpec(FiberConeError, ValueError):
    pass


class NotInSemigroup(FiberConeError, ValueError):
    pass


class InfiniteApery(FiberConeError, ValueError):
    """Generators with gcd > 1 give infinitely many gaps."""


class InvalidPrime(FiberConeError, ValueError):
    pass


class ParseError(FiberConeError, ValueError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class InternalInconsistency(FiberConeError, AssertionError):
    """A mathematical self-check failed; this is a bug, not bad input."""
