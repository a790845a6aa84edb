"""Shared exception types."""


class GraphError(ValueError):
    """Malformed graph or illegal graph edit (loop, duplicate edge, bad endpoint)."""


class InstanceError(ValueError):
    """Instance data violates an invariant (lengths, signs, missing fields)."""


class DocumentError(ValueError):
    """Instance document cannot be parsed; message carries line/field context."""


class SearchCapExceeded(RuntimeError):
    """A brute-force search was refused because the input exceeds its size cap."""
