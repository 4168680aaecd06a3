"""Exception types shared across the package."""


class DimensionMismatchError(ValueError):
    """Operands live over different surfaces or divisor bases."""


class PreconditionError(ValueError):
    """An operation was called on input violating its stated precondition."""


class CatalogError(ValueError):
    """A catalog file failed to parse or validate; message carries the field path."""
