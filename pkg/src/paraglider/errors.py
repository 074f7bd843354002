"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class ParagliderError(Exception):
    """Base class for all errors raised by this package."""


class InputError(ParagliderError, ValueError):
    """A caller passed an argument that violates an operation's precondition."""


class Graph6Error(InputError):
    """Malformed graph6 text. ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int, line: int | None = None):
        self.offset = offset
        self.line = line
        where = f"byte {offset}" if line is None else f"line {line}, byte {offset}"
        super().__init__(f"{message} ({where})")


class CapacityError(ParagliderError):
    """Input exceeds the desk-scale cap of an exact routine."""


class CertificateError(ParagliderError):
    """The input graph contains a forbidden induced pattern.

    ``embedding`` holds the witness (an :class:`~paraglider.patterns.Embedding`).
    """

    def __init__(self, message: str, embedding=None):
        self.embedding = embedding
        super().__init__(message)


class StructureViolation(ParagliderError):
    """No case of the structure theorem applied.

    This is a falsification certificate: on valid inputs it must never fire.
    The offending graph is kept on ``graph``.
    """

    def __init__(self, message: str, graph=None):
        self.graph = graph
        super().__init__(message)


class BoundExceeded(ParagliderError):
    """The coloring engine produced more colors than the ceiling bound allows."""

    def __init__(self, message: str, trace=None):
        self.trace = trace
        super().__init__(message)


class GenerationError(ParagliderError):
    """A randomized generator ran out of attempts."""
