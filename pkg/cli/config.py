"""
CLI Configuration
Run configuration built from parsed arguments, and self-check suite sizes
"""

import os
from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import ConfigInvalid

# Smallest sampling horizon accepted on the command line
MIN_HORIZON = 2 ** 10

# Report formats
REPORT_FORMATS = ('text', 'structured')

# Generated block-constant sequences per domain in the implication-chain check
SUITE_CHAIN_RULES = int(os.getenv('IDEAL_SUITE_CHAIN_RULES', 30))

# Random interval unions per ideal in the closure property check
SUITE_CLOSURE_INSTANCES = int(os.getenv('IDEAL_SUITE_CLOSURE_INSTANCES', 50))

# Random points tested per interval union
SUITE_CLOSURE_POINTS = int(os.getenv('IDEAL_SUITE_CLOSURE_POINTS', 3))

# Seed of the closure property check
SUITE_SEED = int(os.getenv('IDEAL_SUITE_SEED', 20240601))


@dataclass(frozen=True)
class RunConfig:
    """Validated options of one command-line run"""

    command: str
    sequence: Optional[str] = None
    ideal: Optional[str] = None
    limit: Optional[str] = None
    index_set: Optional[str] = None
    set_text: Optional[str] = None
    point: Optional[str] = None
    mode: Optional[str] = None
    depth: Optional[int] = None
    horizon: Optional[int] = None
    output: Optional[str] = None
    report_format: str = 'text'
    faults: Tuple[str, ...] = ()
    upgrade: bool = False
    grid: bool = False
    verbose: bool = False

    def __post_init__(self):
        if self.depth is not None and self.depth < 1:
            raise ConfigInvalid(f"--depth must be at least 1, got {self.depth}")
        if self.horizon is not None and self.horizon < MIN_HORIZON:
            raise ConfigInvalid(f"--horizon must be at least {MIN_HORIZON}, got {self.horizon}")
        if self.report_format not in REPORT_FORMATS:
            raise ConfigInvalid(f"--format must be one of {', '.join(REPORT_FORMATS)}, got {self.report_format}")

    @classmethod
    def from_args(cls, args) -> 'RunConfig':
        """Build a RunConfig from an argparse namespace"""
        return cls(
            command=args.command,
            sequence=getattr(args, 'seq', None),
            ideal=getattr(args, 'ideal', None),
            limit=getattr(args, 'limit', None),
            index_set=getattr(args, 'index_set', None),
            set_text=getattr(args, 'set_text', None),
            point=getattr(args, 'point', None),
            mode=getattr(args, 'mode', None),
            depth=args.depth,
            horizon=args.horizon,
            output=args.output,
            report_format=args.format,
            faults=tuple(args.inject_fault or ()),
            upgrade=getattr(args, 'upgrade', False),
            grid=getattr(args, 'grid', False),
            verbose=args.verbose,
        )

    def require(self, *names: str) -> None:
        missing = [name for name in names if getattr(self, name) is None]
        if missing:
            raise ConfigInvalid(f"{self.command} needs {', '.join('--' + n.replace('_', '-') for n in missing)}")
