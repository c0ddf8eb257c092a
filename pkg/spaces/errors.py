"""
Space Errors
Shape and metric failures of the concrete spaces
"""

from natset.errors import IdealToolkitError


class ShapeMismatch(IdealToolkitError):
    """A point or neighborhood does not match the space"""


class NoMetric(IdealToolkitError):
    """The space has no metric in this toolkit"""
