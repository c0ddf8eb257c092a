"""
Sequence Errors
Domain and naming failures of sequence values
"""

from natset.errors import IdealToolkitError


class NotInDomain(IdealToolkitError):
    """A term was requested outside the sequence domain"""


class DomainViolation(IdealToolkitError):
    """A subsequence index set leaves the parent domain"""


class UnknownName(IdealToolkitError):
    """No named sequence is registered under this name"""
