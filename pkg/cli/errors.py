"""
CLI Errors
Invalid run configurations
"""

from natset.errors import IdealToolkitError


class ConfigInvalid(IdealToolkitError):
    """Command-line options that violate the run configuration rules"""
