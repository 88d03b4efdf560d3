"""Exception types shared across the package."""


class GraphError(ValueError):
    """Malformed graph input (loops, out-of-range endpoints, bad format)."""


class GroupError(ValueError):
    """Malformed permutation or group input."""


class CapExceeded(RuntimeError):
    """An exhaustive enumeration would exceed its configured cap."""

    def __init__(self, cap, what="elements"):
        super().__init__(f"enumeration of {what} exceeds cap {cap}")
        self.cap = cap
        self.what = what


class NoCycle(ValueError):
    """The graph is a forest, so it has no cycle at all."""


class SolverTimeout(RuntimeError):
    """The longest-cycle search ran past its time limit."""


class NotTransitive(ValueError):
    """A group action that was required to be transitive is not."""
