class ContextMismatchError(ValueError):
    """Operands live in different variable contexts."""


class ParseError(ValueError):
    pass


class UnitIdealError(ValueError):
    """An operation would produce the unit ideal, which is outside the model."""


class ResourceLimitError(RuntimeError):
    """A configured size cap (lattice size, generator count) was exceeded."""
