"""Exception types shared across the package."""


class CapacityError(RuntimeError):
    """A requested materialization or enumeration exceeds the configured cap."""


class ContractViolation(RuntimeError):
    """A structural guarantee failed to hold; signals a bad caller assertion or a bug."""


class FormatError(ValueError):
    """Malformed EGC, graph, or colour-map input."""
