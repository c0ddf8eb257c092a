"""
Sequences Module
Sequences on cofinal index sets, their structures, named generators and notation
"""

from .errors import DomainViolation, NotInDomain, UnknownName
from .named import DEFAULT_FACTORY, SequenceFactory, constant, named_sequence, product_sequence
from .notation import parse_sequence
from .rules import (BlockRule, ConvergentBlocks, EventuallyConstant, ProductBlocks, StaircaseBlocks,
                    as_interval, constant_rule, point_in)
from .sequence import Sequence
from .structures import (BlockConstant, CoordinateSets, Equidistributed, ProductOf, Structure, Termwise,
                         indices_of)

__all__ = [
    'BlockConstant', 'BlockRule', 'ConvergentBlocks', 'CoordinateSets', 'DEFAULT_FACTORY',
    'DomainViolation', 'Equidistributed', 'EventuallyConstant', 'NotInDomain', 'ProductBlocks',
    'ProductOf', 'Sequence', 'SequenceFactory', 'StaircaseBlocks', 'Structure', 'Termwise',
    'UnknownName', 'as_interval', 'constant', 'constant_rule', 'indices_of', 'named_sequence',
    'parse_sequence', 'point_in', 'product_sequence',
]
