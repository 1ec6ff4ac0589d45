"""Exception types shared across the package."""


class TwoMatchingsError(Exception):
    """Base class for every error raised by this package."""


class ParseError(TwoMatchingsError):
    """Input text could not be parsed; carries the offending line number."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class MalformedLine(ParseError):
    pass


class LoopEdge(ParseError):
    pass


class VertexOutOfRange(TwoMatchingsError):
    pass


class NotConnected(TwoMatchingsError):
    pass


class NotBipartite(TwoMatchingsError):
    pass


class NotATree(TwoMatchingsError):
    pass


class NotAForest(TwoMatchingsError):
    pass


class ForeignEdge(TwoMatchingsError):
    pass


class UncoloredStartEdge(TwoMatchingsError):
    pass


class PathNotInColoring(TwoMatchingsError):
    pass


class NotPendant(TwoMatchingsError):
    pass


class NotSiblingPendants(TwoMatchingsError):
    pass


class NotMPP(TwoMatchingsError):
    """The supplied coloring is not a maximum proper partial coloring.

    Maximality failures are detected lazily: a lookup that must succeed for
    maximum colorings came up empty, or a recoloring changed a class size it
    should have preserved.
    """


class NoCaseMatches(TwoMatchingsError):
    pass


class PreconditionViolated(TwoMatchingsError):
    pass


class CertificateFailed(TwoMatchingsError):
    pass


class BudgetExceeded(TwoMatchingsError):
    pass


class LabelOutOfRange(TwoMatchingsError):
    pass


class TooLarge(TwoMatchingsError):
    pass
