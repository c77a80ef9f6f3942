"""Shared exception types."""


class NumericError(RuntimeError):
    """Raised when a computation produces non-finite values or diverges.

    Carries the partial training history, when one exists, so callers can
    dump what was computed before the failure.
    """

    def __init__(self, message, history=None):
        super().__init__(message)
        self.history = history
