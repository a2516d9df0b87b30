"""Exception hierarchy shared by the library and the CLI."""


class SpinFermionError(Exception):
    """Base class for every error raised by spinfermion."""


class DivisionByZero(SpinFermionError, ZeroDivisionError):
    """Raised when an exact zero is inverted."""


class DimensionMismatch(SpinFermionError, ValueError):
    """Raised when matrix shapes are not conformable."""


class SingularMatrix(SpinFermionError, ArithmeticError):
    """Raised when a linear solve meets an exactly singular matrix."""


class IncompatibleRepresentation(SpinFermionError, ValueError):
    """Raised when 2s+1 is not a power of two or exceeds the configured cap."""


class RootValidationFailure(SpinFermionError, ArithmeticError):
    """Raised when a UODM root does not power up to its fermion creator."""


class IndexOutOfRange(SpinFermionError, IndexError):
    """Raised for flavor or symmetric-polynomial indices outside their range."""


class RepeatedNodes(SpinFermionError, ValueError):
    """Raised when Vandermonde nodes are not pairwise distinct."""


class ZeroField(SpinFermionError, ValueError):
    """Raised when a field vector with all components zero is rotated."""


class ParseError(SpinFermionError, ValueError):
    """Raised when a serialized scalar, word or document cannot be read."""
