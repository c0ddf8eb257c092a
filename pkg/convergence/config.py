"""
Convergence Configuration
Basis depth and scan limits of the convergence engine
"""

import os

# Number of basis neighborhoods tested per report
DEFAULT_DEPTH = int(os.getenv('IDEAL_DEFAULT_DEPTH', 8))

# Largest index scanned by classical extraction
STALL_HORIZON = int(os.getenv('IDEAL_STALL_HORIZON', 2 ** 16))

# Indices of M listed in an I*-witness
WITNESS_PREFIX = int(os.getenv('IDEAL_WITNESS_PREFIX', 10))
