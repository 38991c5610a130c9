# isetverify/errors.py
"""Error types raised by the library, each carrying the CLI exit code it maps to."""


class ToolkitError(Exception):
    """Base class for every error the toolkit raises on purpose."""
    exit_code: int = 2

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class GraphError(ToolkitError, ValueError):
    """Invalid vertex, loop, missing or existing edge, or a graph too wide to represent."""
    exit_code = 2


class Graph6Error(ToolkitError, ValueError):
    """Malformed graph6 input."""
    exit_code = 2

    @classmethod
    def at_line(cls, line_number: int, detail: str) -> "Graph6Error":
        return cls(f"line {line_number}: {detail}")


class PreconditionError(ToolkitError, ValueError):
    """An operation was called on input outside its documented domain."""
    exit_code = 2


class BudgetExceededError(ToolkitError):
    """Enumeration aborted: class budget, wall-clock backstop or vertex cap exceeded."""
    exit_code = 3


# Exit codes used by the CLI besides the ones carried by the errors above.
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
