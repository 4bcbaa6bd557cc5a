"""Exception types shared across the package.

All three derive from ``ValueError`` so callers that only care about bad
input can catch that.
"""


class ParseError(ValueError):
    """Text could not be parsed into a value."""

    def __init__(self, message, token=None, line=None):
        self.token = token
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        if token is not None:
            message = f"{message}: {token!r}"
        super().__init__(message)


class DimensionError(ValueError):
    """Operands live in different arities n."""


class DomainError(ValueError):
    """An argument lies outside the domain of a partial operation."""
