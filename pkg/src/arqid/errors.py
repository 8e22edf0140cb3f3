"""Exception taxonomy shared across the package.

Plain I/O failures raise the builtin OSError and bad byte sequences raise
UnicodeDecodeError; everything domain-specific derives from ArqidError so
callers can catch one base class.
"""


class ArqidError(Exception):
    """Base class for all domain errors raised by this package."""


class PolarityConflict(ArqidError):
    """A lexicon entry appears in both the positive and negative file of one category."""


class BadParams(ArqidError):
    """A parameter value violates its documented range."""


class EmptyDataset(ArqidError):
    """An operation that needs at least one example received none."""


class SingleClass(ArqidError):
    """A classifier that needs both labels was given only one."""


class DimensionMismatch(ArqidError):
    """Feature matrix and label vector lengths (or widths) disagree."""


class NegativeFeature(ArqidError):
    """A count-based classifier received a negative feature value."""


class TooLarge(ArqidError):
    """Training set exceeds the size guard of the kernel solver."""


class SchemaMismatch(ArqidError):
    """A feature vector's schema fingerprint differs from the model's."""


class LengthMismatch(ArqidError):
    """Two parallel sequences have different lengths."""


class ModelFileError(ArqidError):
    """Base class for model persistence failures."""


class VersionMismatch(ModelFileError):
    """Model file was written by a newer format version."""


class CorruptModel(ModelFileError):
    """Model file is truncated, unparseable, or fails its checksum."""
