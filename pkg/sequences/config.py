"""
Sequences Configuration
Horizons for sampled exceptional sets and domain checks
"""

import os

# Horizon of exceptional sets that have no closed form
EXCEPTIONAL_HORIZON = int(os.getenv('IDEAL_EXCEPTIONAL_HORIZON', 2 ** 14))

# Depth of the subset check behind subsequence()
DOMAIN_CHECK_HORIZON = int(os.getenv('IDEAL_DOMAIN_CHECK_HORIZON', 10 ** 4))
