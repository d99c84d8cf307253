"""Exception types shared across the package."""


class ParameterError(ValueError):
    """Invalid or mutually inconsistent parameters."""


class PreconditionError(ValueError):
    """An operation's input violates a documented precondition."""


class ResourceError(RuntimeError):
    """A bounded exhaustive routine would exceed its configured cap."""


class ParseError(ValueError):
    """Malformed text input. ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
