"""Exception types raised across the package."""


class MinTrailsError(Exception):
    """Base class for every error raised by mintrails."""


class GraphError(MinTrailsError, ValueError):
    """The arc list does not describe a simple DAG."""


class CycleDetected(GraphError):
    def __init__(self, cycle, message=None):
        self.cycle = tuple(cycle)
        super().__init__(message or f"directed cycle: {' -> '.join(map(str, self.cycle))}")


class SelfLoop(GraphError):
    pass


class DuplicateArc(GraphError):
    pass


class AntiparallelArcs(GraphError):
    pass


class NodeOutOfRange(GraphError):
    pass


class DuplicateLabel(GraphError):
    pass


class InvalidQuery(MinTrailsError, ValueError):
    """X, Y, Z overlap, or X / Y is empty."""


class NoDescendantInZ(MinTrailsError):
    pass


class NotActivated(MinTrailsError):
    pass


class HasConvergingConnection(MinTrailsError):
    pass


class NotLocal(MinTrailsError):
    """The node set does not have local relationships."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class UnknownCheckName(MinTrailsError, KeyError):
    def __str__(self):
        return f"unknown check: {self.args[0]!r}"


class ParseError(MinTrailsError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{where}")
