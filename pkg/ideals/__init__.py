"""
Ideals Module
Decidable ideal families, restriction, dual filter and shrinking-condition selectors
"""

from .errors import NoFreshBlock, NotNonthin, UnsupportedShrink
from .families import (DENSITY, FIN, DecAIdeal, DecBIdeal, DensityIdeal, FinIdeal, Ideal,
                       RestrictionIdeal, filter_member, restrict)
from .notation import parse_ideal
from .shrink import ShrinkSelector, ShrinkWitness

__all__ = [
    'DENSITY', 'DecAIdeal', 'DecBIdeal', 'DensityIdeal', 'FIN', 'FinIdeal', 'Ideal',
    'NoFreshBlock', 'NotNonthin', 'RestrictionIdeal', 'ShrinkSelector', 'ShrinkWitness',
    'UnsupportedShrink', 'filter_member', 'parse_ideal', 'restrict',
]
