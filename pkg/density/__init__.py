"""
Density Module
Exact natural densities, prefix densities, profiles and density tables
"""

from .calculator import DensityCalculator, DensityKind, DensityResult

__all__ = ['DensityCalculator', 'DensityKind', 'DensityResult']
