"""Exception types raised across the package."""


class PenkronError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatch(PenkronError):
    """Operands have incompatible shapes."""


class SingularMatrix(PenkronError):
    """A matrix required to be invertible is rank deficient."""


class InconsistentStacking(PenkronError):
    """Overlapping blocks of a stacked trajectory disagree."""


class NotRegular(PenkronError):
    """A pencil required to be regular is singular."""


class CouplingUnsolvable(PenkronError):
    """A block-decoupling Sylvester system is inconsistent.

    This cannot happen for pencils produced by the staircase reduction; it
    signals an upstream bug rather than bad user input.
    """


class DecompositionError(PenkronError):
    """Internal consistency check of a pencil decomposition failed."""


class NotUnique(PenkronError):
    """solve_unique was called on a problem without a unique solution."""


class InconsistentInitial(PenkronError):
    """The initial vector admits no trajectory (forced components nonzero)."""


class InputError(PenkronError):
    """A document or file failed validation; message names the offending field."""
