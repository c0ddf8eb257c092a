"""
Closure Configuration
Grid and depth used by the closure analyzer
"""

import os

# Denominator q of the rational grid {k/q} scanned by the closedness check
GRID_DENOMINATOR = int(os.getenv('IDEAL_GRID_DENOMINATOR', 24))

# Basis neighborhoods tested when a witness sequence is verified
CLOSURE_DEPTH = int(os.getenv('IDEAL_CLOSURE_DEPTH', 6))
