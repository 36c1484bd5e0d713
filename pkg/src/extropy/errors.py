"""Exception types shared across the package."""


class ExtropyError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(ExtropyError, ValueError):
    """An input violated a documented constraint (range, sum, shape, ...).

    The message always names the violated constraint so callers (and the
    HTTP layer) can surface it without guessing.
    """
