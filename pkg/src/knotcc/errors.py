"""Exception types raised across the pipeline."""


class KnotccError(Exception):
    """Base class for all knotcc errors."""


class MalformedWord(KnotccError):
    """A Gauss word fails double-occurrence validity."""


class MalformedPairing(KnotccError):
    """A DT sequence is not a valid odd/even pairing."""


class UnknownLabel(KnotccError):
    """A crossing label is absent from the code."""


class NonRealizable(KnotccError):
    """No planar rotation system exists for the word."""


class InvalidCandidate(KnotccError):
    """Flype candidate positions do not interleave as required."""


class OrbitOverflow(KnotccError):
    """Flype-orbit closure exceeded the safety cap."""


class UnknownDiagram(KnotccError):
    """A reduced DT key is missing from the name table."""


class MissingDependency(KnotccError):
    """A summand value is absent from lower recursion levels."""


class MalformedRow(KnotccError):
    """An ingestion row does not parse as name,code."""


class DuplicateName(KnotccError):
    """Two ingested rows claim the same knot name or DT key."""
