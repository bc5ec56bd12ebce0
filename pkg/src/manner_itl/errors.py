"""Exception types shared across the package."""


class MannerItlError(Exception):
    """Base class for all package errors."""


class MalformedUtterance(MannerItlError):
    """The text matches none of the teacher utterance schemas."""


class DimensionConflict(MalformedUtterance):
    """Two adverbs in one utterance lie on the same behaviour dimension."""


class UnknownAdverb(MannerItlError):
    """An adverb word has no dimension annotation in the vocabulary."""


class InvalidWeight(MannerItlError):
    """An evidence weight fell outside (0, 1]."""


class OutOfRange(MannerItlError):
    """A behaviour-dimension value fell outside [0, 1]."""


class UnsyncedStructure(MannerItlError):
    """The network structure is stale with respect to the learner's state."""


class InsufficientData(MannerItlError):
    """A statistic was requested on fewer than two samples."""


class ConfigError(MannerItlError):
    """A ground-truth or scenario configuration violates its invariants."""
