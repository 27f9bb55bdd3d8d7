"""Exception hierarchy shared by all subsystems."""


class LiouvilleError(Exception):
    """Base class for errors raised by this package."""


class DimensionMismatchError(LiouvilleError):
    """Operands live on spaces of different dimension."""


class InputError(LiouvilleError):
    """Malformed or out-of-range input data."""


class DegenerateFamilyError(LiouvilleError):
    """A commuting family failed the Cartan-subalgebra test."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics


class AmbiguousEigenvalueError(LiouvilleError):
    """An eigenvalue sits too close to a classification axis to decide."""

    def __init__(self, message, eigenvalue=None):
        super().__init__(message)
        self.eigenvalue = eigenvalue


class NearDegenerateError(LiouvilleError):
    """Eigenvalue clusters are too tight for a stable eigenbasis."""


class OffLeafError(LiouvilleError):
    """A point does not satisfy the Casimir constraints of the leaf."""


class NonGenericLeafPointError(LiouvilleError):
    """The Poisson tensor degenerates beyond the Casimir corank."""


class RegularPointError(LiouvilleError):
    """The requested construction needs a singular point."""


class InvariantViolationError(LiouvilleError):
    """A structural invariant failed on generated data."""


class ScopeError(LiouvilleError):
    """The input is outside what this engine supports."""
