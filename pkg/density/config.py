"""
Density Configuration
Horizons used for empirical density profiles and density tables
"""

import os

# Profiles reported for sets without a closed-form density
PROFILE_HORIZONS = tuple(int(n) for n in os.getenv('IDEAL_PROFILE_HORIZONS', '4096,16384,65536').split(','))

# Rows of the density table (2^10 .. 2^17 by default)
TABLE_HORIZONS = tuple(int(n) for n in os.getenv(
    'IDEAL_TABLE_HORIZONS', ','.join(str(2 ** k) for k in range(10, 18))).split(','))
