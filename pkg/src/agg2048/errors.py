"""Exception types shared across the package."""


class SequenceError(ValueError):
    """A supplied value sequence violates the contract (strictly
    increasing positive integers starting at 1), or a file could not be
    parsed."""


class UnknownSequenceError(SequenceError):
    """Requested builtin sequence name does not exist."""


class ResourceLimitError(RuntimeError):
    """A configured cap (DP table size, BFS frontier, ...) was exceeded."""


class IllegalStepError(ValueError):
    """A replayed step is not legal game play."""


class UnreachableError(ValueError):
    """Asked for a strategy to a position that is not reachable."""
