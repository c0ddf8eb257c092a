"""
Convergence Errors
Failures of witness conversion and classical extraction
"""

from natset.errors import IdealToolkitError


class WitnessInvalid(IdealToolkitError):
    """An I*-witness does not certify I-convergence"""


class ExtractionStalled(IdealToolkitError):
    """No further index of a classical subsequence could be found"""
