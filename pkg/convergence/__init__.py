"""
Convergence Module
I- and I*-convergence verdicts, I*-witnesses, classical extraction and product verdicts
"""

from .engine import BlockCase, ConvergenceEngine
from .errors import ExtractionStalled, WitnessInvalid
from .report import ConvergenceReport, IStarWitness

__all__ = ['BlockCase', 'ConvergenceEngine', 'ConvergenceReport', 'ExtractionStalled', 'IStarWitness',
           'WitnessInvalid']
