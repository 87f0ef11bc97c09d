"""Exception types shared across the package."""


class GdcError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(GdcError, ValueError):
    """A design or field parameter violates its constraints."""


class SizeGuardError(GdcError):
    """An exhaustive operation was asked to run beyond its size guard."""


class ConstructionError(GdcError):
    """A deterministic construction failed its post-hoc verification."""


class StallError(ConstructionError):
    """Column balancing found no legal move (triggers a randomized retry)."""


class SynthesisError(GdcError):
    """Generator synthesis exhausted its retry budget.

    The message names the check that kept failing.
    """


class StructuralInfeasibilityError(SynthesisError):
    """The support matrix cannot carry the requested distance over any field."""


class InsufficientSymbolsError(GdcError):
    """Fewer symbols supplied than the decoding operation requires."""


class SingularSystemError(GdcError):
    """A linear system that should be regular turned out singular.

    For verified codes this signals corrupted input symbols.
    """


class RankDeficientError(GdcError):
    """Global decoding failed: the available columns do not reach full rank."""

    def __init__(self, rank: int, needed: int):
        super().__init__(f"available columns have rank {rank}, need {needed}")
        self.rank = rank
        self.needed = needed


class ArtifactError(GdcError):
    """A code artifact file is malformed or fails re-verification."""
