"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """A value violates a documented precondition (bad partition, rank mismatch, ...)."""


class ResourceLimitError(RuntimeError):
    """A requested search exceeds the configured size bounds.

    Raised instead of silently truncating, so callers can distinguish "no
    solutions" from "refused to look".  The CLI maps this to exit code 3.
    """
