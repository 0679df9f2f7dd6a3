"""Exception hierarchy shared by every module."""


class KBonacciError(ValueError):
    """Base class for all errors raised by this package."""


class InvalidOrder(KBonacciError):
    pass


class InvalidBranch(KBonacciError):
    pass


class IndexOutOfDomain(KBonacciError):
    pass


class NonInvertibleRecurrence(KBonacciError):
    """Backward stepping needs the last coefficient to be nonzero and the
    division by it to be exact."""


class DimensionMismatch(KBonacciError):
    pass


class NonIntegralCoefficient(KBonacciError):
    """A rational partition weight failed to produce an integer coefficient."""


class NonIntegralSum(KBonacciError):
    """A rational-weighted partition sum failed to be an integer."""


class NoConvergence(KBonacciError):
    pass


class RepeatedRoots(KBonacciError):
    pass


class IllConditioned(KBonacciError):
    pass


class RangeExceeded(KBonacciError):
    pass


class UnknownIdentity(KBonacciError):
    pass


class DomainViolation(KBonacciError):
    pass
