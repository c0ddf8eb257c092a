"""
Compactness Errors
Failures of extraction splits and refuter mode selection
"""

from natset.errors import IdealToolkitError


class SplitUndecided(IdealToolkitError):
    """No candidate part of a split is certified outside the ideal"""


class ModeMismatch(IdealToolkitError):
    """The sequence lacks the structure a refutation argument needs"""
