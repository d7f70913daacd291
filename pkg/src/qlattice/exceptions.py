"""Exception types raised by qlattice.

The CLI maps these onto its exit codes, so the hierarchy is part of the
public contract.
"""


class QLatticeError(ValueError):
    """Base class for all library errors."""


class DimensionMismatch(QLatticeError):
    """Operands live in Hilbert spaces of different dimension."""


class ValidationError(QLatticeError):
    """An input violates a structural requirement (rank, properness, ...)."""


class EvenDimensionError(ValidationError):
    """Displacement operators need 2^-1 mod d, which only exists for odd d."""


class InvalidStateError(QLatticeError):
    """A density matrix is not Hermitian, not unit trace or not PSD."""


class PreconditionError(QLatticeError):
    """An operation was called outside the hypothesis it is defined for."""
