"""Exception hierarchy shared by every module."""


class BreduxError(Exception):
    """Base class for all library errors."""


class GraphError(BreduxError, ValueError):
    """Invalid graph construction or vertex reference."""


class ParseError(BreduxError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MalformedHeaderError(ParseError):
    pass


class VertexRangeError(ParseError):
    pass


class DuplicateEdgeError(ParseError):
    pass


class SelfLoopError(ParseError):
    pass


class MalformedEdgeError(ParseError):
    pass


class EnumerationLimitError(BreduxError, ValueError):
    pass


class TransformError(BreduxError, ValueError):
    pass


class RootSearchBoundError(TransformError):
    pass


class ClassMismatchError(BreduxError, TypeError):
    """Weighted input given to an unweighted class recognizer, or vice versa."""


class SolverLimitError(BreduxError, ValueError):
    """Instance exceeds the size cap of an exact solver."""


class ReductionError(BreduxError, ValueError):
    pass


class NotInImageError(ReductionError):
    pass
