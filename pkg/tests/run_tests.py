#!/usr/bin/env python3
"""
Test Runner Script
Runs the toolkit test suite with pytest
"""

import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))


def run_tests(extra=None):
    """Run all tests"""
    import pytest
    print("Running tests with pytest...")
    return pytest.main([
        'tests/',
        '-v',
        '--tb=short',
        '--color=yes',
    ] + list(extra or []))


if __name__ == '__main__':
    exit_code = run_tests(sys.argv[1:])
    sys.exit(exit_code)
