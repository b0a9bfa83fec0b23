"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside an operation's documented domain."""


class DegenerateBranchError(DomainError):
    """The ancilla |1> branch carries (numerically) zero weight; post-selection cannot succeed."""


class ResourceError(RuntimeError):
    """A request would exceed a hard size guard (e.g. dense unitary extraction)."""
