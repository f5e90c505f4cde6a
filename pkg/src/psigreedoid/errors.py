"""Exception hierarchy shared across the package."""


class GraphError(ValueError):
    """Input graph or vertex set is not acceptable for an operation."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SizeLimitError(GraphError):
    """Refusal to run an exponential routine on a graph above the size guard."""


class NotUnicycleError(GraphError):
    pass


class ForestError(NotUnicycleError):
    """Raised by unique_cycle on an acyclic graph."""


class InvariantViolation(AssertionError):
    """A property that a proven theorem guarantees failed at runtime.

    Seeing one of these means a bug in the implementation (or a
    counterexample to the mathematics), never bad user input.
    """
