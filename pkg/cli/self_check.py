"""
Self-Check Suite
Runs every worked example end to end and tabulates pass/fail with certificates

Each check returns (passed, certificate). A check that raises an unexpected
toolkit error fails with the error message as certificate.
"""

import logging
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

import numpy as np
import pandas as pd

from closure import ClosureAnalyzer, FinitePointSet, IntervalUnion, union_of
from compactness import CompactnessExtractor, NonthinRefuter, RefuteMode
from convergence import ConvergenceEngine, ExtractionStalled
from ideals import DENSITY, FIN, DecAIdeal, DecBIdeal, ShrinkSelector, UnsupportedShrink
from natset import IdealToolkitError, IndexSet, parse_index_set
from sequences import (BlockConstant, ConvergentBlocks, EventuallyConstant, Sequence, SequenceFactory)
from spaces import ALL_ONES, Interval, basis_family

from .config import SUITE_CHAIN_RULES, SUITE_CLOSURE_INSTANCES, SUITE_CLOSURE_POINTS, SUITE_SEED

logger = logging.getLogger(__name__)

CheckResult = Tuple[bool, str]

CHAIN_DOMAINS = ('nat', 'tail(3)', 'ap(2,2)', 'ap(1,3)')


def _expect_unsupported(action: Callable[[], object], what: str) -> CheckResult:
    try:
        action()
    except UnsupportedShrink as e:
        return True, f"{what}: {e}"
    return False, f"{what} did not raise UnsupportedShrink"


class SelfCheckSuite:
    """Named checks over the worked examples"""

    def __init__(self, factory: Optional[SequenceFactory] = None, horizon: Optional[int] = None,
                 depth: Optional[int] = None):
        """
        Initialize self-check suite

        Args:
            factory: Named-sequence factory (a corrupted one makes rows fail)
            horizon: Sampling horizon for the engine and the density sweep
            depth: Basis depth of convergence reports
        """
        self.factory = factory or SequenceFactory()
        self.depth = depth or 8
        self.engine = ConvergenceEngine(horizon=horizon) if horizon else ConvergenceEngine()
        self.extractor = CompactnessExtractor(self.engine)
        self.refuter = NonthinRefuter(horizon=horizon) if horizon else NonthinRefuter()
        self.selector = ShrinkSelector()
        self.closure = ClosureAnalyzer(self.engine)
        self.decA = DecAIdeal()
        self.decB = DecBIdeal()
        self.checks: List[Tuple[str, str, Callable[[], CheckResult]]] = [
            ('bisection_extraction', 'inverse blocks: decB compactness of [0,1]', self.bisection_extraction),
            ('no_star_upgrade', 'inverse blocks: decB lacks condition A', self.no_star_upgrade),
            ('star_convergence_fails', 'inverse blocks: I-convergent, not I*-convergent', self.star_convergence_fails),
            ('block_recurrence', 'inverse blocks: no nonthin classical subsequence', self.block_recurrence),
            ('ud_not_convergent', 'equidistributed: not density-convergent', self.ud_not_convergent),
            ('ud_density_bound', 'equidistributed: hits of eps-balls <= 2 eps n + O(1)', self.ud_density_bound),
            ('ud_no_bisection', 'equidistributed: [0,1] not density-compact', self.ud_no_bisection),
            ('cube_density_chain', 'cube: nested A_m with d(A_m) -> 0', self.cube_density_chain),
            ('cube_density_no_extraction', 'cube: not density-compact',
             self.cube_density_no_extraction),
            ('cube_block_extraction', 'cube staircase: limit all ones', self.cube_block_extraction),
            ('cube_block_recurrence', 'cube staircase: no classical limit', self.cube_block_recurrence),
            ('shrink_a_selectors', 'condition A: decA only', self.shrink_a_selectors),
            ('shrink_b_selectors', 'condition B: decA and decB', self.shrink_b_selectors),
            ('implication_chain', 'I* => I, I => classical extraction', self.implication_chain),
            ('closure_properties', 'closure: empty set, union, I* within I, equals classical closure',
             self.closure_properties),
        ]

    # ------------------------------------------------------------------
    # block values 1/j

    def bisection_extraction(self) -> CheckResult:
        seq = self.factory.build('inverseBlocks')
        witness = self.extractor.bisect_extract(seq, self.decB, 10)
        ok = (witness.nonthin.is_false and witness.report.overall.is_true
              and abs(witness.xi) <= Fraction(1, 2 ** 10))
        return ok, f"K = {witness.K}, xi = {witness.xi}; {witness.report.overall.certificate}"

    def no_star_upgrade(self) -> CheckResult:
        seq = self.factory.build('inverseBlocks')
        witness = self.extractor.bisect_extract(seq, self.decB, 4)
        return _expect_unsupported(lambda: self.extractor.upgrade_to_star(seq, witness, self.decB),
                                   'upgrade under decB')

    def star_convergence_fails(self) -> CheckResult:
        seq = self.factory.build('inverseBlocks')
        i_report = self.engine.i_converges(seq, self.decB, Fraction(0), self.depth)
        star_report, _ = self.engine.i_star_converges(seq, self.decB, Fraction(0), self.depth)
        ok = i_report.overall.is_true and star_report.overall.is_false
        return ok, f"I: {i_report.overall.value.value}; I*: {star_report.overall.certificate}"

    def block_recurrence(self) -> CheckResult:
        verdict = self.refuter.refute(self.factory.build('inverseBlocks'), self.decB, RefuteMode.BLOCK_RECURRENCE)
        return verdict.is_true, verdict.certificate

    # ------------------------------------------------------------------
    # equidistributed sequence

    def ud_not_convergent(self) -> CheckResult:
        report = self.engine.i_converges(self.factory.build('udSequence'), DENSITY, Fraction(1, 2), self.depth)
        return report.overall.is_false, report.overall.certificate

    def ud_density_bound(self) -> CheckResult:
        verdict = self.refuter.refute(self.factory.build('udSequence'), DENSITY, RefuteMode.DENSITY_BOUND)
        return verdict.is_true, verdict.certificate

    def ud_no_bisection(self) -> CheckResult:
        seq = self.factory.build('udSequence')
        return _expect_unsupported(lambda: self.extractor.bisect_extract(seq, DENSITY), 'bisection under density')

    # ------------------------------------------------------------------
    # product examples

    def cube_density_chain(self) -> CheckResult:
        verdict = self.refuter.refute(self.factory.build('prodDiagDensity'), DENSITY, RefuteMode.CUBE_DENSITY_DIAG)
        return verdict.is_true, verdict.certificate

    def cube_density_no_extraction(self) -> CheckResult:
        seq = self.factory.build('prodDiagDensity')
        return _expect_unsupported(lambda: self.extractor.product_extract(seq, DENSITY),
                                   'diagonal extraction under density')

    def cube_block_extraction(self) -> CheckResult:
        witness = self.extractor.product_extract(self.factory.build('prodDiagBlocks'), self.decB, 6)
        ok = witness.xi == ALL_ONES and witness.report.overall.is_true
        return ok, f"xi = {witness.xi}; {witness.report.overall.certificate}"

    def cube_block_recurrence(self) -> CheckResult:
        verdict = self.refuter.refute(self.factory.build('prodDiagBlocks'), self.decB,
                                      RefuteMode.CUBE_BLOCK_RECURRENCE)
        return verdict.is_true, verdict.certificate

    # ------------------------------------------------------------------
    # shrinking selectors

    def shrink_a_selectors(self) -> CheckResult:
        nat = IndexSet.naturals()
        witness = self.selector.shrink_a(self.decA, [nat, nat, nat], [1, 2, 3])
        finite = all(part.is_finite_set().is_true for part in witness.parts)
        ok = finite and witness.union_verdict.is_false
        notes = [f"decA: {len(witness.parts)} finite parts, union {witness.union_verdict.value.value}"]
        for ideal in (DENSITY, FIN, self.decB):
            refused, note = _expect_unsupported(lambda: self.selector.shrink_a(ideal, [nat], [1]), str(ideal))
            ok = ok and refused
            notes.append(note)
        return ok, '; '.join(notes)

    def shrink_b_selectors(self) -> CheckResult:
        chain = [parse_index_set(text) for text in
                 ('nat - block(1)', 'nat - block(1) - block(2)', 'nat - block(1) - block(2) - block(3)')]
        ok = True
        notes = []
        for ideal in (self.decA, self.decB):
            witness = self.selector.shrink_b(ideal, chain)
            ok = ok and witness.union_verdict.is_false
            notes.append(f"{ideal}: blocks {witness.blocks}, union {witness.union_verdict.value.value}")
        for ideal in (DENSITY, FIN):
            refused, note = _expect_unsupported(lambda: self.selector.shrink_b(ideal, chain), str(ideal))
            ok = ok and refused
            notes.append(note)
        return ok, '; '.join(notes)

    # ------------------------------------------------------------------
    # implication chain

    def _chain_rules(self):
        limits = [Fraction(k, 4) for k in range(5)]
        rules = []
        for limit in limits:
            scale = (1 - limit) / 2 if limit < 1 else Fraction(-1, 2)
            close = Fraction(1, 2 ** 11) if limit < 1 else Fraction(-1, 2 ** 11)
            rules.extend([
                ConvergentBlocks(limit, scale, Fraction(0)),
                ConvergentBlocks(limit, scale, Fraction(1)),
                ConvergentBlocks(limit, close, Fraction(0)),
                EventuallyConstant((1 - limit,), limit),
                EventuallyConstant((), limit),
                EventuallyConstant((Fraction(0), Fraction(1, 2), Fraction(1)), limit),
            ])
        return rules[:SUITE_CHAIN_RULES]

    def _extraction_outcome(self, seq: Sequence, ideal, xi) -> Tuple[str, str]:
        """('extracted' | 'deferred' | 'broken', detail) for classical extraction with k=10"""
        try:
            indices = self.engine.classical_extract(seq, ideal, xi, 10)
        except ExtractionStalled as e:
            for nbhd in basis_family(seq.space, xi, 10):
                if seq.hit_set(nbhd, self.engine.horizon).is_finite_set().is_true:
                    return 'broken', f"{seq} under {ideal}: only finitely many terms in {nbhd} ({e})"
            # every V_j is still hit infinitely often past the stall horizon
            return 'deferred', str(e)
        if len(indices) != 10:
            return 'broken', f"{seq} under {ideal}: {len(indices)} indices"
        return 'extracted', ', '.join(map(str, indices))

    def implication_chain(self) -> CheckResult:
        outcomes = {'extracted': 0, 'deferred': 0}
        cases = star_true = plain_true = plain_only = 0
        failures = []
        ideals = (FIN, DENSITY, self.decA, self.decB)
        for rule in self._chain_rules():
            for domain_text in CHAIN_DOMAINS:
                domain = parse_index_set(domain_text)
                seq = Sequence(domain, BlockConstant(rule), f"{rule} on {domain_text}")
                for ideal in ideals:
                    cases += 1
                    star, _ = self.engine.i_star_converges(seq, ideal, rule.limit, self.depth)
                    plain = self.engine.i_converges(seq, ideal, rule.limit, self.depth)
                    if star.overall.is_true:
                        star_true += 1
                        if not plain.overall.is_true:
                            failures.append(f"{seq} under {ideal}: I* holds, I is {plain.overall.value.value}")
                    if not plain.overall.is_true:
                        continue
                    plain_true += 1
                    plain_only += not star.overall.is_true
                    outcome, detail = self._extraction_outcome(seq, ideal, rule.limit)
                    if outcome == 'broken':
                        failures.append(detail)
                    else:
                        outcomes[outcome] += 1
        summary = (f"{cases} cases, {star_true} I*-convergent, {plain_true} I-convergent ({plain_only} without I*), "
                   f"{outcomes['extracted']} extracted with k=10, {outcomes['deferred']} past the stall horizon, "
                   f"{len(failures)} broken chains")
        return not failures, summary + (f"; first: {failures[0]}" if failures else '')

    # ------------------------------------------------------------------
    # closure properties

    def _random_union(self, rng: np.random.Generator) -> IntervalUnion:
        intervals = []
        for _ in range(int(rng.integers(1, 4))):
            lo, hi = sorted(int(v) for v in rng.integers(0, 13, size=2))
            closed = rng.integers(0, 2, size=2)
            intervals.append(Interval(Fraction(lo, 12), Fraction(hi, 12), bool(closed[0]), bool(closed[1])))
        return IntervalUnion(tuple(intervals))

    def closure_properties(self) -> CheckResult:
        rng = np.random.default_rng(SUITE_SEED)
        failures = []
        checked = 0
        empty = FinitePointSet()
        for ideal in (FIN, DENSITY, self.decA, self.decB):
            for _ in range(SUITE_CLOSURE_INSTANCES):
                A, B = self._random_union(rng), self._random_union(rng)
                both = union_of(A, B)
                for k in rng.integers(0, 25, size=SUITE_CLOSURE_POINTS):
                    x = Fraction(int(k), 24)
                    checked += 1
                    in_a = self.closure.i_closure_member(A, x, ideal).verdict
                    in_b = self.closure.i_closure_member(B, x, ideal).verdict
                    in_both = self.closure.i_closure_member(both, x, ideal).verdict
                    star = self.closure.i_star_closure_member(A, x, ideal).verdict
                    classical = A.distance_to(x) == 0
                    if not in_a.is_definitive or in_a.is_true != classical:
                        failures.append(f"{A} at {x} under {ideal}: {in_a.value.value}, classical {classical}")
                    if in_both.is_true != (in_a.is_true or in_b.is_true):
                        failures.append(f"union {both} at {x} under {ideal}")
                    if star.is_true and not in_a.is_true:
                        failures.append(f"I*-closure exceeds I-closure for {A} at {x} under {ideal}")
                    if self.closure.i_closure_member(empty, x, ideal).verdict.is_true:
                        failures.append(f"empty set has {x} in its closure under {ideal}")
        summary = f"{checked} points over {4 * SUITE_CLOSURE_INSTANCES} interval unions, {len(failures)} failures"
        return not failures, summary + (f"; first: {failures[0]}" if failures else '')

    # ------------------------------------------------------------------

    def run(self) -> pd.DataFrame:
        """
        Run every check in order

        Returns:
            DataFrame with columns check, anchor, passed, certificate
        """
        rows = []
        for name, anchor, check in self.checks:
            try:
                passed, certificate = check()
            except IdealToolkitError as e:
                passed, certificate = False, f"{type(e).__name__}: {e}"
            level = logging.INFO if passed else logging.WARNING
            logger.log(level, f"Check {name}: {'pass' if passed else 'FAIL'} ({certificate})")
            rows.append({'check': name, 'anchor': anchor, 'passed': bool(passed), 'certificate': certificate})
        return pd.DataFrame(rows, columns=['check', 'anchor', 'passed', 'certificate'])
