"""
Ideals Configuration
Limits for the shrinking-condition selectors
"""

import os

# Highest block index a selector may scan for a fresh block
MAX_BLOCK_SCAN = int(os.getenv('IDEAL_MAX_BLOCK_SCAN', 4096))
