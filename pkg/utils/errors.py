"""Exception hierarchy for maps, bijections, diagrams and record parsing."""

from config.constants import ValidationFailure


class MapsError(ValueError):
    """Base class for every input or domain error raised by this package."""


class StructuralError(MapsError):
    """Label sets, faces or pairings do not fit together."""


class ValidationError(MapsError):
    """A map violates one of its type invariants."""

    def __init__(self, reason: ValidationFailure, message: str):
        super().__init__(message)
        self.reason = reason


class SplitRangeError(MapsError):
    pass


class DisconnectedError(MapsError):
    pass


class ClassUndefinedError(MapsError):
    pass


class PreconditionError(MapsError):
    pass


class DomainError(MapsError):
    pass


class InvariantViolation(RuntimeError):
    """An internal invariant failed; indicates a bug rather than bad input."""


class DiagramError(MapsError):
    pass


class NotInteractionStructureError(DiagramError):
    pass


class RecordParseError(MapsError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.detail = message
