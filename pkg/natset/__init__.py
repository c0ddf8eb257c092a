"""
Natset Module
Symbolic index sets over the positive naturals, block decompositions and verdicts
"""

from .decomposition import (DECOMPOSITIONS, THREE_ADIC, TWO_ADIC, BlockSet, Decomposition,
                            Progression, get_decomposition)
from .errors import HorizonExceeded, IdealToolkitError, NotationError, OutOfRange
from .generators import AP, Block, BlockAP, BlockTail, Generator, Sampled, Spread, Tail
from .index_set import BlockProfile, IndexSet, SetOperation, combine
from .notation import format_index_set, parse_index_set
from .verdict import BlockSignature, Truth, Verdict

__all__ = [
    'AP', 'Block', 'BlockAP', 'BlockProfile', 'BlockSet', 'BlockSignature', 'BlockTail',
    'DECOMPOSITIONS', 'Decomposition', 'Generator', 'HorizonExceeded', 'IdealToolkitError',
    'IndexSet', 'NotationError', 'OutOfRange', 'Progression', 'Sampled', 'SetOperation',
    'Spread', 'THREE_ADIC', 'TWO_ADIC', 'Tail', 'Truth', 'Verdict', 'combine',
    'format_index_set', 'get_decomposition', 'parse_index_set',
]
