"""Exception types for the figure renderer."""


class SchemaError(ValueError):
    """The CSV does not match the benchmark-harness schema."""


class DomainError(ValueError):
    """A request is valid in form but has nothing to operate on."""
