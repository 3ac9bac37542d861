"""Classified error types for dagiso."""

from typing import Optional


class DagIsoError(Exception):
    """Base exception for all dagiso errors."""
    pass


class ConfigError(DagIsoError):
    """Configuration file or override is invalid."""
    pass


class InputError(DagIsoError):
    """Malformed statement, variable set or query."""
    pass


class ParseError(InputError):
    """Statement file does not follow the grammar."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class UnknownVariable(InputError):
    """Variable is not declared in the universe."""
    pass


class OverlappingSets(InputError):
    """Sides of a statement share a variable."""
    pass


class EmptySide(InputError):
    """Left or right side of a statement is empty."""
    pass


class InvalidQuery(InputError):
    """d-separation query with overlapping or empty sets."""
    pass


class UniverseTooLarge(DagIsoError):
    """Universe exceeds a configured cap."""

    def __init__(self, size: int, cap: int, what: str = "universe"):
        super().__init__(f"{what} has {size} variables, cap is {cap}")
        self.size = size
        self.cap = cap


class TooLarge(UniverseTooLarge):
    """Oracle space exceeds its enumeration cap."""

    def __init__(self, size: int, cap: int, what: str = "oracle space"):
        super().__init__(size, cap, what)


class GraphError(DagIsoError):
    """Graph structure error."""
    pass


class CycleDetected(GraphError):
    """Directed edges form a cycle."""
    pass


class ConflictingOrientation(GraphError):
    """Edge is already directed the other way."""
    pass


class MissingEdge(GraphError):
    """Nodes are not adjacent."""
    pass


class NodeSetMismatch(GraphError):
    """Graphs are defined over different node sets."""
    pass


class ReportError(DagIsoError):
    """Decision record build, seal, or verification error."""

    def __init__(self, message: str, path: Optional[str] = None):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path
