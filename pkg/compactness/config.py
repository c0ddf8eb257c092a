"""
Compactness Configuration
Extraction depth and refuter sweep parameters
"""

import os
from fractions import Fraction

# Bisection levels (final interval width 2^-depth)
BISECT_DEPTH = int(os.getenv('IDEAL_BISECT_DEPTH', 12))

# Candidate limits swept by the density refuter
REFUTER_XI_GRID = tuple(Fraction(k, 12) for k in range(13))

# Ball radii swept by the density refuter
REFUTER_EPSILONS = tuple(Fraction(e) for e in os.getenv('IDEAL_REFUTER_EPSILONS', '1/10,1/20,1/40').split(','))

# Horizon of prefix-count scans in the density refuter
REFUTER_HORIZON = int(os.getenv('IDEAL_REFUTER_HORIZON', 10 ** 4))

# Coordinates examined by the cube refuters
CUBE_PATTERN_DEPTH = int(os.getenv('IDEAL_CUBE_PATTERN_DEPTH', 10))

# Horizon of measured prefix densities for the cube density argument
CUBE_DENSITY_HORIZON = int(os.getenv('IDEAL_CUBE_DENSITY_HORIZON', 2 ** 16))
