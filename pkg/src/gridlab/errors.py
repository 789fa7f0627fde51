"""Shared exception types."""


class GridlabError(Exception):
    """Base class for errors raised by this package."""


class SizeLimitError(GridlabError):
    """Input exceeds a documented desk-scale limit of an exact routine."""


class FormatError(GridlabError):
    """Malformed .gr / .td / .emb / certificate file."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ConstructionError(GridlabError):
    """A constructive procedure detected that its own intermediate
    invariants do not hold on the given input."""
