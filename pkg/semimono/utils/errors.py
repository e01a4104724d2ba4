class SemimonoError(Exception):
    """Base class of every error raised on purpose by the package."""


class GraphInputError(SemimonoError, ValueError):
    """An edge list or edge set that does not describe a simple undirected graph."""

    def __init__(self, message: str, line_number: int | None = None):
        super().__init__(message)
        self.line_number = line_number


class VertexError(SemimonoError, KeyError):
    """Unknown vertex label or out-of-range vertex id."""

    def __str__(self) -> str:
        # KeyError quotes its argument otherwise
        return str(self.args[0]) if self.args else ''


class ScenarioError(SemimonoError, ValueError):
    """The (G, x, y) triple violates the edge-addition preconditions."""


class DisconnectedGraphError(ScenarioError):
    def __init__(self, message: str, pair: tuple[str, str] | None = None):
        super().__init__(message)
        self.pair = pair


class SamplingError(SemimonoError, RuntimeError):
    pass


class ClaimPreconditionError(SemimonoError, ValueError):
    """A family claim was requested outside the parameter range it is stated for."""


class OracleLimitError(SemimonoError, ValueError):
    """The geodesic-enumeration oracle was asked for a graph above its order limit."""
