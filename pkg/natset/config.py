"""
Index Set Configuration
Horizons and limits for the symbolic index-set algebra
"""

import os

# Sampled fallback
SAMPLED_HORIZON = int(os.getenv('IDEAL_SAMPLED_HORIZON', 2 ** 17))  # horizon for sets without a closed form

# Difference of progressions
DIFFERENCE_PIECE_LIMIT = int(os.getenv('IDEAL_DIFFERENCE_PIECE_LIMIT', 4096))  # residue pieces before degrading

# Decomposition used when notation names none
DEFAULT_DECOMPOSITION = os.getenv('IDEAL_DEFAULT_DECOMPOSITION', '2adic')
