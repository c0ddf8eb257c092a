"""
Closure Analyzer Module
I- and I*-closure membership in [0,1] by witness construction or a separating ball

A point listed in A is reached by the constant sequence. A boundary point is
reached by values inside A tending to it, laid out over the blocks when the
ideal contains every block piece and termwise otherwise. A point at positive
distance from A is separated by a ball that every sequence in A misses.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from convergence import ConvergenceEngine, ConvergenceReport
from ideals import DecAIdeal, DecBIdeal, Ideal
from natset import IndexSet, Verdict
from sequences import BlockConstant, ConvergentBlocks, Sequence, Termwise, constant
from spaces import ShapeMismatch, format_point

from .config import CLOSURE_DEPTH, GRID_DENOMINATOR
from .sets import SetDescription

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClosureResult:
    """Closure verdict with the witness sequence or the separating radius"""

    mode: str
    set_text: str
    point: Fraction
    verdict: Verdict
    witness: Optional[Sequence] = None
    report: Optional[ConvergenceReport] = None
    radius: Optional[Fraction] = None

    def fields(self) -> List[Tuple[str, object]]:
        rows = [
            ('mode', self.mode),
            ('set', self.set_text),
            ('point', format_point(self.point)),
            ('verdict', self.verdict.value.value),
            ('certificate', self.verdict.certificate),
            ('witness', self.witness.label if self.witness is not None else '-'),
            ('separating_radius', self.radius if self.radius is not None else '-'),
        ]
        if self.report is not None:
            rows.extend((f"witness_{key}", value) for key, value in self.report.fields())
        return rows


class ClosureAnalyzer:
    """Decides closure membership for set descriptions in [0,1]"""

    def __init__(self, engine: Optional[ConvergenceEngine] = None, depth: int = CLOSURE_DEPTH):
        """
        Initialize closure analyzer

        Args:
            engine: Convergence engine verifying witness sequences
            depth: Basis neighborhoods tested per witness
        """
        self.engine = engine or ConvergenceEngine()
        self.depth = depth

    # ------------------------------------------------------------------
    # helpers

    def _check_point(self, x) -> Fraction:
        if not isinstance(x, (Fraction, int)) or isinstance(x, bool):
            raise ShapeMismatch(f"closure is decided in [0,1], got point {format_point(x)}")
        x = Fraction(x)
        if not 0 <= x <= 1:
            raise ShapeMismatch(f"{x} is not a point of [0,1]")
        return x

    def _separated(self, A: SetDescription, x: Fraction, mode: str) -> Optional[ClosureResult]:
        distance = A.distance_to(x)
        if distance is None:
            verdict = Verdict.false('closure/empty', "the empty set carries no sequence")
            return ClosureResult(mode, A.to_text(), x, verdict)
        if distance > 0:
            radius = distance / 2
            verdict = Verdict.false('closure/separated',
                                    f"ball({x}, {radius}) misses {A}; every sequence in A has the whole "
                                    f"domain L as exceptional set, and L is not in I/L")
            return ClosureResult(mode, A.to_text(), x, verdict, radius=radius)
        return None

    def _approaching(self, A: SetDescription, x: Fraction, ideal: Optional[Ideal]) -> Optional[Sequence]:
        approach = A.approach(x)
        if approach is None:
            return None
        scale, offset = approach
        rule = ConvergentBlocks(x, scale, offset)
        base = ideal.base() if ideal is not None else None
        if isinstance(base, (DecAIdeal, DecBIdeal)):
            structure = BlockConstant(rule, base.decomposition)
            label = f"blocks {rule.to_text()}"
        else:
            structure = Termwise(rule)
            label = f"terms {rule.to_text()}"
        return Sequence(IndexSet.naturals(), structure, label)

    def _decide(self, A: SetDescription, x, ideal: Ideal, mode: str, budget: Optional[int]) -> ClosureResult:
        x = self._check_point(x)
        separated = self._separated(A, x, mode)
        if separated is not None:
            logger.info(f"{mode}-closure of {A} at {x}: {separated.verdict}")
            return separated
        if A.contains(x):
            witness, rule = constant(x), 'closure/constant'
            reason = f"{x} lies in A and the constant sequence converges to it"
        else:
            witness = self._approaching(A, x, ideal if mode == 'I' else None)
            rule = 'closure/approach'
            reason = f"values of A tend to {x}"
        if witness is None:
            verdict = Verdict.unknown(None, 'closure/no-schema', f"no witness schema reaches {x} from {A}")
            return ClosureResult(mode, A.to_text(), x, verdict)
        if mode == 'I':
            report = self.engine.i_converges(witness, ideal, x, budget or self.depth)
        else:
            report, _ = self.engine.i_star_converges(witness, ideal, x, budget or self.depth)
        if report.overall.is_true:
            verdict = Verdict.true(rule, f"{reason}: {witness.label}; {report.overall.certificate}")
        else:
            verdict = Verdict.unknown(report.overall.horizon, rule,
                                      f"witness {witness.label} not certified: {report.overall.certificate}")
        logger.info(f"{mode}-closure of {A} at {x} under {ideal}: {verdict}")
        return ClosureResult(mode, A.to_text(), x, verdict, witness, report)

    # ------------------------------------------------------------------
    # operations

    def i_closure_member(self, A: SetDescription, x, ideal: Ideal, budget: Optional[int] = None) -> ClosureResult:
        """
        Decide x in the I-closure of A

        Args:
            A: Set description in [0,1]
            x: Point of [0,1]
            ideal: Ideal
            budget: Basis neighborhoods the witness is checked on (the analyzer depth when omitted)

        Returns:
            ClosureResult; True carries a witness sequence in A and its convergence report

        Raises:
            ShapeMismatch: for points outside [0,1]
        """
        return self._decide(A, x, ideal, 'I', budget)

    def i_star_closure_member(self, A: SetDescription, x, ideal: Ideal,
                              budget: Optional[int] = None) -> ClosureResult:
        """Decide x in the I*-closure of A with constant or classically convergent witnesses"""
        return self._decide(A, x, ideal, 'I*', budget)

    def is_closed_on_grid(self, A: SetDescription, ideal: Ideal, denominator: int = GRID_DENOMINATOR,
                          star: bool = False) -> Verdict:
        """
        Check that no grid point k/q outside A lies in the closure of A

        Args:
            A: Set description
            ideal: Ideal
            denominator: Grid denominator q
            star: Use the I*-closure instead of the I-closure

        Returns:
            Verdict: False names the first grid point outside A reached by a witness
        """
        decide = self.i_star_closure_member if star else self.i_closure_member
        undecided = []
        checked = 0
        for k in range(denominator + 1):
            x = Fraction(k, denominator)
            if A.contains(x):
                continue
            checked += 1
            result = decide(A, x, ideal)
            if result.verdict.is_true:
                return Verdict.false('closure/grid', f"{x} lies outside {A} but in its closure: "
                                                     f"{result.verdict.certificate}")
            if result.verdict.is_unknown:
                undecided.append(str(x))
        if undecided:
            return Verdict.unknown(None, 'closure/grid', f"undecided grid points {', '.join(undecided)}")
        return Verdict.true('closure/grid', f"none of the {checked} grid points k/{denominator} outside {A} "
                                            f"is in its closure")
