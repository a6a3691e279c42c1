class DomainError(ValueError):
    """Input outside an operation's mathematical domain."""


class InvariantBreach(RuntimeError):
    """Two independent computations that must agree did not."""


class ResourceCapError(RuntimeError):
    """A computation would exceed its configured size limit."""
