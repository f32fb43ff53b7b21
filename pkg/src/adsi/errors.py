class InvalidInputError(ValueError):
    """Array shape or content does not satisfy an operation's preconditions."""


class ParameterError(ValueError):
    """A scalar parameter (beta, alpha, order, ...) is out of its allowed range."""


class FeatureParseError(ValueError):
    """Malformed feature CSV. ``row`` is 1-based, or None for whole-file problems."""

    def __init__(self, message, row=None):
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)
        self.row = row
