"""
CLI Module
Command-line front door, run configuration, report rendering and the self-check suite
"""

from .config import RunConfig
from .errors import ConfigInvalid
from .main import build_parser, main
from .self_check import SelfCheckSuite
from .reports import render_fields, render_table

__all__ = ['ConfigInvalid', 'RunConfig', 'SelfCheckSuite', 'build_parser', 'main', 'render_fields', 'render_table']
