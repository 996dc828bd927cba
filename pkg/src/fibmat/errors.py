"""Exception types shared across the package."""


class FibmatError(Exception):
    """Base class for all package-specific errors."""


class SizeTooSmall(FibmatError, ValueError):
    """Size parameter below the smallest supported value."""


class ParityMismatch(FibmatError, ValueError):
    """Size parameter has the wrong parity for the requested family."""


class OutOfRange(FibmatError, ValueError):
    """Requested target lies outside the reachable interval."""


class OrderTooLarge(FibmatError, ValueError):
    """Exhaustive enumeration refused; the search space is too big."""


class NoGroupInverse(FibmatError, ArithmeticError):
    """The matrix has no group inverse (rank(A) != rank(A^2))."""


class VerificationError(FibmatError, RuntimeError):
    """An internal exact self-check failed; indicates a bug, never expected."""
