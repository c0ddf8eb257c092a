"""
Closure Module
Set descriptions in [0,1] and the I- and I*-closure analyzer
"""

from .analyzer import ClosureAnalyzer, ClosureResult
from .sets import FinitePointSet, IntervalUnion, SetDescription, parse_set, union_of

__all__ = ['ClosureAnalyzer', 'ClosureResult', 'FinitePointSet', 'IntervalUnion', 'SetDescription',
           'parse_set', 'union_of']
