"""
Command-Line Interface
analyze, extract, refute, closure, density-table and verify-paper

Exit status: 0 on a definitive result, 2 when the verdict is Unknown,
1 on errors; verify-paper exits 0 only when every check passes.
"""

import argparse
import logging
import sys
from typing import List, Optional

from closure import ClosureAnalyzer, parse_set
from compactness import CompactnessExtractor, NonthinRefuter, parse_mode
from compactness.config import BISECT_DEPTH
from convergence import ConvergenceEngine
from convergence.config import DEFAULT_DEPTH
from density import DensityCalculator
from ideals import parse_ideal
from natset import IdealToolkitError, parse_index_set
from sequences import SequenceFactory, parse_sequence
from spaces import CantorCube, parse_point

from .config import REPORT_FORMATS, RunConfig
from .errors import ConfigInvalid
from .self_check import SelfCheckSuite
from .reports import EXIT_DEFINITIVE, EXIT_ERROR, emit, render_fields, render_table, verdict_exit

logger = logging.getLogger(__name__)


class _ArgumentParser(argparse.ArgumentParser):
    """Argument errors become ConfigInvalid so they exit with status 1"""

    def error(self, message):
        raise ConfigInvalid(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--horizon', type=int, default=None, help='Sampling horizon (>= 1024)')
    common.add_argument('--depth', type=int, default=None, help='Basis depth / extraction levels')
    common.add_argument('--format', choices=REPORT_FORMATS, default='text', help='Report format')
    common.add_argument('--output', default=None, help='Write the report to this file')
    common.add_argument('--inject-fault', action='append', dest='inject_fault', metavar='NAME',
                        help='Corrupt a named sequence generator (repeatable)')
    common.add_argument('--verbose', action='store_true', help='Log progress to stderr')

    parser = _ArgumentParser(prog='python -m cli', description='Ideal convergence toolkit')
    sub = parser.add_subparsers(dest='command', required=True, parser_class=_ArgumentParser)

    analyze = sub.add_parser('analyze', parents=[common], help='I- or I*-convergence report')
    analyze.add_argument('--seq', required=True, help="Sequence, e.g. 'paper:inverseBlocks'")
    analyze.add_argument('--ideal', required=True, help="Ideal, e.g. 'decB(2adic)'")
    analyze.add_argument('--limit', required=True, help="Target point, e.g. 'rat(0)'")
    analyze.add_argument('--mode', choices=('I', 'I*'), default='I')

    extract = sub.add_parser('extract', parents=[common], help='Nonthin convergent subsequence')
    extract.add_argument('--seq', required=True)
    extract.add_argument('--ideal', required=True)
    extract.add_argument('--mode', choices=('bisect', 'net', 'product'), default='bisect')
    extract.add_argument('--upgrade', action='store_true', help='Upgrade the witness to an I*-witness')

    refute = sub.add_parser('refute', parents=[common], help='Refute nonthin convergent subsequences')
    refute.add_argument('--seq', required=True)
    refute.add_argument('--ideal', required=True)
    refute.add_argument('--mode', required=True,
                        help='densityBound, blockRecurrence, cubeBlockRecurrence or cubeDensityDiag')

    closure = sub.add_parser('closure', parents=[common], help='I-closure membership')
    closure.add_argument('--set', dest='set_text', required=True, help="e.g. 'intervals{(0,1)}'")
    closure.add_argument('--point', default=None, help="Point of [0,1], e.g. 'rat(0)'")
    closure.add_argument('--ideal', required=True)
    closure.add_argument('--mode', choices=('I', 'I*'), default='I')
    closure.add_argument('--grid', action='store_true', help='Check closedness on the rational grid')

    table = sub.add_parser('density-table', parents=[common], help='CSV of prefix densities')
    table.add_argument('--set', dest='index_set', required=True, help="Index set, e.g. 'block(3)'")

    sub.add_parser('verify-paper', parents=[common], help='Run the self-check suite')
    return parser


def _engine(cfg: RunConfig) -> ConvergenceEngine:
    return ConvergenceEngine(horizon=cfg.horizon) if cfg.horizon else ConvergenceEngine()


def run_analyze(cfg: RunConfig, factory: SequenceFactory) -> int:
    seq = parse_sequence(cfg.sequence, factory)
    ideal = parse_ideal(cfg.ideal)
    xi = parse_point(cfg.limit)
    engine = _engine(cfg)
    depth = cfg.depth or DEFAULT_DEPTH
    rows = []
    if cfg.mode == 'I*':
        report, witness = engine.i_star_converges(seq, ideal, xi, depth)
        rows = report.fields() + (witness.fields() if witness is not None else [])
    elif isinstance(seq.space, CantorCube):
        report = engine.product_verdict(seq, ideal, xi, depth)
        rows = report.fields()
    else:
        report = engine.i_converges(seq, ideal, xi, depth)
        rows = report.fields()
    emit(render_fields(rows, cfg.report_format), cfg.output)
    return verdict_exit(report.overall)


def run_extract(cfg: RunConfig, factory: SequenceFactory) -> int:
    seq = parse_sequence(cfg.sequence, factory)
    ideal = parse_ideal(cfg.ideal)
    extractor = CompactnessExtractor(_engine(cfg))
    if cfg.mode == 'net':
        witness = extractor.net_extract(seq, ideal, cfg.depth or DEFAULT_DEPTH)
    elif cfg.mode == 'product':
        witness = extractor.product_extract(seq, ideal, cfg.depth or DEFAULT_DEPTH)
    else:
        witness = extractor.bisect_extract(seq, ideal, cfg.depth or BISECT_DEPTH)
    rows = witness.fields()
    if cfg.upgrade:
        rows += extractor.upgrade_to_star(seq, witness, ideal).fields()
    emit(render_fields(rows, cfg.report_format), cfg.output)
    return EXIT_DEFINITIVE


def run_refute(cfg: RunConfig, factory: SequenceFactory) -> int:
    seq = parse_sequence(cfg.sequence, factory)
    ideal = parse_ideal(cfg.ideal)
    mode = parse_mode(cfg.mode)
    refuter = NonthinRefuter(horizon=cfg.horizon) if cfg.horizon else NonthinRefuter()
    verdict = refuter.refute(seq, ideal, mode)
    rows = [('mode', mode.value), ('sequence', seq.label), ('ideal', ideal.to_text()),
            ('verdict', verdict.value.value), ('certificate', verdict.certificate)]
    emit(render_fields(rows, cfg.report_format), cfg.output)
    return verdict_exit(verdict)


def run_closure(cfg: RunConfig, factory: SequenceFactory) -> int:
    A = parse_set(cfg.set_text)
    ideal = parse_ideal(cfg.ideal)
    analyzer = ClosureAnalyzer(_engine(cfg), cfg.depth) if cfg.depth else ClosureAnalyzer(_engine(cfg))
    star = cfg.mode == 'I*'
    if cfg.grid:
        verdict = analyzer.is_closed_on_grid(A, ideal, star=star)
        rows = [('mode', cfg.mode), ('set', A.to_text()), ('ideal', ideal.to_text()),
                ('closed_on_grid', verdict.value.value), ('certificate', verdict.certificate)]
    else:
        cfg.require('point')
        x = parse_point(cfg.point)
        decide = analyzer.i_star_closure_member if star else analyzer.i_closure_member
        result = decide(A, x, ideal)
        verdict = result.verdict
        rows = [('ideal', ideal.to_text())] + result.fields()
    emit(render_fields(rows, cfg.report_format), cfg.output)
    return verdict_exit(verdict)


def run_density_table(cfg: RunConfig, factory: SequenceFactory) -> int:
    index_set = parse_index_set(cfg.index_set)
    table = DensityCalculator().density_table(index_set)
    emit(table.to_csv(index=False), cfg.output)
    return EXIT_DEFINITIVE


def run_self_check(cfg: RunConfig, factory: SequenceFactory) -> int:
    table = SelfCheckSuite(factory, cfg.horizon, cfg.depth).run()
    passed = int(table['passed'].sum())
    summary = [('checks', len(table)), ('passed', passed), ('failed', len(table) - passed)]
    text = render_fields(summary, cfg.report_format) + render_table(table, cfg.report_format, 'check')
    emit(text, cfg.output)
    if passed != len(table):
        for row in table[~table['passed']].itertuples():
            print(f"FAILED {row.check}: {row.certificate}", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_DEFINITIVE


COMMANDS = {
    'analyze': run_analyze,
    'extract': run_extract,
    'refute': run_refute,
    'closure': run_closure,
    'density-table': run_density_table,
    'verify-paper': run_self_check,
}


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one command

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        Exit status
    """
    try:
        args = build_parser().parse_args(argv)
        cfg = RunConfig.from_args(args)
    except IdealToolkitError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    logging.basicConfig(
        level=logging.INFO if cfg.verbose else logging.WARNING,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    try:
        factory = SequenceFactory(cfg.faults)
        return COMMANDS[cfg.command](cfg, factory)
    except (IdealToolkitError, ValueError) as e:
        logger.debug(f"{cfg.command} failed", exc_info=True)
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == '__main__':
    sys.exit(main())
