"""
Ideal Errors
Failures of the shrinking-condition selectors
"""

from natset.errors import IdealToolkitError


class UnsupportedShrink(IdealToolkitError):
    """The ideal does not satisfy the requested shrinking condition"""


class NotNonthin(IdealToolkitError):
    """A selector input is not certified outside the ideal"""


class NoFreshBlock(IdealToolkitError):
    """No unused block could be certified for the next selection"""
