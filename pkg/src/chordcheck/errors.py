"""Exception hierarchy shared by all chordcheck modules."""


class ChordCheckError(ValueError):
    """Base class for every error raised by this package."""


class DimensionMismatch(ChordCheckError):
    pass


class ZeroLengthDirection(ChordCheckError):
    pass


class FormatError(ChordCheckError):
    pass


class DimensionTooSmall(ChordCheckError):
    pass


class TooFewVertices(ChordCheckError):
    pass


class CoincidentEndpoints(ChordCheckError):
    pass


class EmptyInput(ChordCheckError):
    pass


class InvalidOverride(ChordCheckError):
    pass


class DomainError(ChordCheckError):
    pass


class DegenerateDirections(ChordCheckError):
    pass
