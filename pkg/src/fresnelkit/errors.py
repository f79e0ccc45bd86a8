"""Exception types shared across the package."""


class FresnelKitError(Exception):
    """Base class for all errors raised by fresnelkit."""


class GradeError(FresnelKitError, ValueError):
    """A product or contraction would leave the grades 0..4."""


class SpaceMismatch(FresnelKitError, ValueError):
    """Operands live in incompatible spaces (kind or grade)."""


class PreconditionError(FresnelKitError, ValueError):
    """An operation was called outside its documented domain."""


class NotApplicable(FresnelKitError):
    """A test was requested on an input that does not meet its hypothesis."""


class ConventionError(FresnelKitError, AssertionError):
    """Two routes that must agree by construction did not.

    Raised only if the frozen sign tables are internally inconsistent.
    """


class NoInverse(FresnelKitError, ArithmeticError):
    """Exact inverse does not exist.

    ``rank`` is the exact rank of the offending map; ``determinant`` is
    filled in when a closed-form determinant was available.
    """

    def __init__(self, message, rank=None, determinant=None):
        super().__init__(message)
        self.rank = rank
        self.determinant = determinant
