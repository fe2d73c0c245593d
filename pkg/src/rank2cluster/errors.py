"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations

__all__ = [
    "ClusterError",
    "RingMismatchError",
    "InexactDivisionError",
    "ZeroPolynomialError",
    "NotAffineError",
    "WindowExceededError",
    "NotPointedError",
    "UnsupportedIndexError",
    "InvalidLabelError",
    "NotForbiddenError",
    "UnsupportedTypeError",
    "NotInAlgebraError",
    "ExpressionSyntaxError",
]


class ClusterError(Exception):
    """Base class for all errors raised by :mod:`rank2cluster`."""


class RingMismatchError(ClusterError, TypeError):
    """Operands live in different coefficient rings."""


class InexactDivisionError(ClusterError, ArithmeticError):
    """The dividend is not a Laurent multiple of the divisor."""


class ZeroPolynomialError(ClusterError, ValueError):
    """An operation that needs a nonzero polynomial received zero."""


class NotAffineError(ClusterError, ValueError):
    """The operation only exists for affine types (bc = 4)."""


class WindowExceededError(ClusterError, ValueError):
    """A requested cluster index is too far from the chart base."""


class NotPointedError(ClusterError, ValueError):
    """No unique componentwise-minimal exponent with coefficient 1."""


class UnsupportedIndexError(ClusterError, ValueError):
    pass


class InvalidLabelError(ClusterError, ValueError):
    pass


class NotForbiddenError(ClusterError, ValueError):
    """The pair of factors is already compatible; nothing to straighten."""


class UnsupportedTypeError(ClusterError, ValueError):
    """Canonical-basis machinery requested for an indefinite type."""


class NotInAlgebraError(ClusterError, ValueError):
    """Greedy decomposition failed: the input is not in the algebra."""


class ExpressionSyntaxError(ClusterError, ValueError):
    pass
