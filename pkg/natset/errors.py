"""
Toolkit Errors
Base error class shared by every package, plus the index-set errors
"""


class IdealToolkitError(Exception):
    """Base class for every domain error raised by the toolkit"""

    def __init__(self, message: str, verdict=None):
        """
        Initialize error

        Args:
            message: Human-readable description naming the offending value
            verdict: Verdict that triggered the error (optional)
        """
        super().__init__(message)
        self.verdict = verdict


class HorizonExceeded(IdealToolkitError):
    """A sampled set was queried past its horizon"""


class OutOfRange(IdealToolkitError):
    """The requested element does not exist in a finite set"""


class NotationError(IdealToolkitError):
    """Text could not be parsed into a value"""
