"""
Compactness Module
Nonthin convergent subsequence extraction, upgrade to classical witnesses and refutation arguments
"""

from .errors import ModeMismatch, SplitUndecided
from .extractor import CompactnessExtractor
from .refuter import NonthinRefuter, RefuteMode, parse_mode
from .witness import BisectTrace, ExtractionWitness

__all__ = ['BisectTrace', 'CompactnessExtractor', 'ExtractionWitness', 'ModeMismatch', 'NonthinRefuter',
           'RefuteMode', 'SplitUndecided', 'parse_mode']
