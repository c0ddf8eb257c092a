"""
Pytest configuration and fixtures for the toolkit tests
"""

import sys
from fractions import Fraction
from pathlib import Path

import pytest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from cli import main as cli_main
from convergence import ConvergenceEngine
from ideals import DENSITY, FIN, DecAIdeal, DecBIdeal
from natset import TWO_ADIC
from sequences import DEFAULT_FACTORY


@pytest.fixture(scope="session")
def decomposition():
    """Canonical 2-adic decomposition"""
    return TWO_ADIC


@pytest.fixture(scope="session")
def dec_a():
    return DecAIdeal(TWO_ADIC)


@pytest.fixture(scope="session")
def dec_b():
    return DecBIdeal(TWO_ADIC)


@pytest.fixture(scope="session")
def all_ideals(dec_a, dec_b):
    """The four base ideal families"""
    return [FIN, DENSITY, dec_a, dec_b]


@pytest.fixture(scope="session")
def engine():
    return ConvergenceEngine()


@pytest.fixture(scope="session")
def inverse_blocks():
    """Block values 1/j on block j"""
    return DEFAULT_FACTORY.build('inverseBlocks')


@pytest.fixture(scope="session")
def ud_sequence():
    return DEFAULT_FACTORY.build('udSequence')


@pytest.fixture(scope="session")
def prod_diag_density():
    return DEFAULT_FACTORY.build('prodDiagDensity')


@pytest.fixture(scope="session")
def prod_diag_blocks():
    return DEFAULT_FACTORY.build('prodDiagBlocks')


@pytest.fixture(scope="session")
def half():
    return Fraction(1, 2)


@pytest.fixture(scope="function")
def run_cli(capsys):
    """Run the command line and return (exit status, stdout, stderr)"""
    def runner(*argv):
        status = cli_main(list(argv))
        captured = capsys.readouterr()
        return status, captured.out, captured.err
    return runner
