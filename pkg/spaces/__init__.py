"""
Spaces Module
Unit interval, Cantor cube and finite products with neighborhood bases and epsilon-nets
"""

from .errors import NoMetric, ShapeMismatch
from .model import (ALL_ONES, ALL_ZEROS, CANTOR_CUBE, UNIT_INTERVAL, Ball, Box, CantorCube, CubePoint,
                    Cylinder, FiniteProduct, Interval, UnitInterval, basis_family, basis_schedule,
                    check_point, distance, eps_net, format_point, in_nbhd)
from .notation import parse_interval, parse_nbhd, parse_point, parse_rational, split_arguments

__all__ = [
    'ALL_ONES', 'ALL_ZEROS', 'Ball', 'Box', 'CANTOR_CUBE', 'CantorCube', 'CubePoint', 'Cylinder',
    'FiniteProduct', 'Interval', 'NoMetric', 'ShapeMismatch', 'UNIT_INTERVAL', 'UnitInterval',
    'basis_family', 'basis_schedule', 'check_point', 'distance', 'eps_net', 'format_point',
    'in_nbhd', 'parse_interval', 'parse_nbhd', 'parse_point', 'parse_rational', 'split_arguments',
]
