"""Exception hierarchy shared by all modules."""


class HeckeError(Exception):
    """Base class for every error raised by heckechar."""


class DivisionByZero(HeckeError, ZeroDivisionError):
    pass


class NotPolynomial(HeckeError):
    """A rational function was expected to be a Laurent polynomial but is not."""


class PoleAtPoint(HeckeError):
    pass


class IndexOutOfRange(HeckeError, ValueError):
    pass


class AmbientMismatch(HeckeError, ValueError):
    pass


class NotSquareFree(HeckeError, ValueError):
    pass


class DoesNotFit(HeckeError, ValueError):
    """A cycle type or sequence does not fit in the ambient H_n(q)."""


class MalformedSpec(HeckeError, ValueError):
    pass


class InvalidProduct(HeckeError, ValueError):
    """Murphy-operator indices are not strictly increasing and non-consecutive."""


class SizeMismatch(HeckeError, ValueError):
    pass


class SingularPivot(HeckeError):
    """The coefficient of the unknown reduced trace vanished identically."""
