"""Exception types shared by every module."""


class DomainError(ValueError):
    """An argument lies outside the domain where a formula is defined."""


class ParseError(ValueError):
    """Malformed textual input (partition or class-list syntax)."""


class ResourceError(RuntimeError):
    """A request exceeds the configured size bound of an exhaustive routine."""


class ConsistencyError(AssertionError):
    """An internal invariant failed; indicates a bug, not bad input."""
