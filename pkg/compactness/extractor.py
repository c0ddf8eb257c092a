"""
Compactness Extractor Module
Nonthin convergent subsequences by nested splitting and shrinking-condition assembly

Each level splits the current cell, keeps a part whose index set is certified
outside the ideal, and hands the nested chain to a shrink selector that
assembles a nonthin K.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Tuple

from convergence import ConvergenceEngine, IStarWitness, WitnessInvalid
from convergence.config import DEFAULT_DEPTH, WITNESS_PREFIX
from ideals import Ideal, NotNonthin, ShrinkSelector, UnsupportedShrink, filter_member, restrict
from natset import IndexSet
from sequences import Sequence
from spaces import (Box, CantorCube, CubePoint, Cylinder, FiniteProduct, Interval, NoMetric, ShapeMismatch,
                    UnitInterval, basis_family, eps_net, format_point)

from .config import BISECT_DEPTH
from .errors import SplitUndecided
from .witness import BisectTrace, ExtractionWitness

logger = logging.getLogger(__name__)

UNIT = Interval(Fraction(0), Fraction(1))


def _cell_contains(cell, point) -> bool:
    if isinstance(cell, Box):
        return all(_cell_contains(part, p) for part, p in zip(cell.parts, point))
    return cell.contains(point)


def _cell_midpoint(cell):
    if isinstance(cell, Box):
        return tuple(_cell_midpoint(part) for part in cell.parts)
    return cell.midpoint


def _unit_cell(space):
    if isinstance(space, UnitInterval):
        return UNIT
    if isinstance(space, FiniteProduct):
        return Box(tuple(_unit_cell(f) for f in space.factors))
    raise NoMetric(f"{space.to_text()} has no metric cells")


def _meet_cell(cell, center, eps: Fraction):
    """Closed eps-cell around a net center, cut to the current cell (None when empty)"""
    if isinstance(cell, Box):
        parts = [_meet_cell(part, c, eps) for part, c in zip(cell.parts, center)]
        return None if any(p is None for p in parts) else Box(tuple(parts))
    piece = cell.intersect(Interval(center - eps, center + eps))
    return None if piece.is_empty() else piece


class CompactnessExtractor:
    """Builds extraction witnesses for ideals with shrinking conditions"""

    def __init__(self, engine: Optional[ConvergenceEngine] = None,
                 selector: Optional[ShrinkSelector] = None):
        """
        Initialize compactness extractor

        Args:
            engine: Convergence engine used for reports on K
            selector: Shrink selector assembling K from the nested chain
        """
        self.engine = engine or ConvergenceEngine()
        self.selector = selector or ShrinkSelector()

    # ------------------------------------------------------------------
    # helpers

    def _check_start(self, seq: Sequence, ideal: Ideal) -> Ideal:
        if not ideal.supports_shrink_b:
            raise UnsupportedShrink(f"{ideal} does not satisfy shrinking condition (B); "
                                    f"nested splits cannot be assembled into a nonthin set")
        ambient = self.engine.ambient_ideal(ideal, seq.domain)
        start = ambient.member(seq.domain)
        if not start.is_false:
            raise NotNonthin(f"the domain {seq.domain} is not certified outside {ambient}: {start.certificate}",
                             verdict=start)
        return ambient

    def _choose(self, ambient: Ideal, candidates: List[Tuple[str, object, IndexSet]], level: int):
        """First candidate whose index set is certified outside the ideal"""
        verdicts = []
        for label, cell, D in candidates:
            verdict = ambient.member(D)
            verdicts.append(verdict)
            if verdict.is_false:
                logger.info(f"Level {level}: keeping {label} {cell} ({verdict.certificate})")
                return label, cell, D, verdict
        summary = '; '.join(f"{label}: {v.value.value}" for (label, _, _), v in zip(candidates, verdicts))
        raise SplitUndecided(f"level {level}: no part certified outside {ambient} ({summary})",
                             verdict=verdicts[-1] if verdicts else None)

    def _limit(self, seq: Sequence, cell):
        hint = seq.structure.limit_hint
        if hint is not None and _cell_contains(cell, hint):
            return hint
        return _cell_midpoint(cell)

    def _assemble(self, seq: Sequence, ideal: Ideal, ambient: Ideal, mode: str, chain: List[IndexSet],
                  cells, verdicts, choices, xi, depth: int, cell=None) -> ExtractionWitness:
        shrink = self.selector.shrink_b(ambient, chain)
        K = shrink.union_set
        sub = seq.subsequence(K)
        if mode == 'product':
            report = self.engine.product_verdict(sub, ideal, xi, depth)
        else:
            report = self.engine.i_converges(sub, ideal, xi, depth)
        trace = BisectTrace(tuple(cells), tuple(chain), tuple(verdicts), tuple(choices))
        witness = ExtractionWitness(mode, K, xi, trace, report, shrink, shrink.union_verdict, cell)
        if not witness.converges:
            logger.warning(f"Subsequence on {K} is not certified to converge to {format_point(xi)}: "
                           f"{report.overall.certificate}")
        logger.info(f"{mode} extraction for {seq} under {ideal}: K = {K}, xi = {format_point(xi)}")
        return witness

    # ------------------------------------------------------------------
    # operations

    def bisect_extract(self, seq: Sequence, ideal: Ideal, depth: int = BISECT_DEPTH) -> ExtractionWitness:
        """
        Nested-interval extraction in [0,1]

        Args:
            seq: Sequence in the unit interval
            ideal: Ideal with shrinking condition (B)
            depth: Bisection levels

        Returns:
            ExtractionWitness with the bisection trace

        Raises:
            UnsupportedShrink: ideal without condition (B)
            NotNonthin: domain not certified outside the ideal
            SplitUndecided: neither half certified outside the ideal
        """
        if not isinstance(seq.space, UnitInterval):
            raise ShapeMismatch(f"bisection needs a sequence in [0,1], got {seq.space.to_text()}")
        ambient = self._check_start(seq, ideal)
        cell = UNIT
        chain, cells, verdicts, choices = [], [], [], []
        for level in range(1, depth + 1):
            lower, upper = cell.halves()
            label, cell, D, verdict = self._choose(ambient, [
                ('lower', lower, seq.hit_set(lower, self.engine.horizon)),
                ('upper', upper, seq.hit_set(upper, self.engine.horizon)),
            ], level)
            chain.append(D)
            cells.append(cell)
            verdicts.append(verdict)
            choices.append(label)
        xi = self._limit(seq, cell)
        return self._assemble(seq, ideal, ambient, 'bisect', chain, cells, verdicts, choices, xi,
                              min(depth, DEFAULT_DEPTH), cell)

    def net_extract(self, seq: Sequence, ideal: Ideal, depth: int = 8) -> ExtractionWitness:
        """
        Epsilon-net extraction in [0,1] and its finite powers

        Args:
            seq: Sequence in a metric space
            ideal: Ideal with shrinking condition (B)
            depth: Levels; level n uses radius 1/n

        Returns:
            ExtractionWitness; the final cell has diameter at most 2/depth

        Raises:
            NoMetric: for spaces without epsilon-nets
        """
        cell = _unit_cell(seq.space)
        ambient = self._check_start(seq, ideal)
        chain, cells, verdicts, choices = [], [], [], []
        for level in range(1, depth + 1):
            eps = Fraction(1, level)
            candidates = []
            for index, center in enumerate(eps_net(seq.space, eps)):
                piece = _meet_cell(cell, center, eps)
                if piece is not None:
                    candidates.append((f"center {index} ({format_point(center)})", piece,
                                       seq.hit_set(piece, self.engine.horizon)))
            label, cell, D, verdict = self._choose(ambient, candidates, level)
            chain.append(D)
            cells.append(cell)
            verdicts.append(verdict)
            choices.append(label)
        xi = self._limit(seq, cell)
        return self._assemble(seq, ideal, ambient, 'net', chain, cells, verdicts, choices, xi, depth, cell)

    def product_extract(self, seq: Sequence, ideal: Ideal, coords: int = 8) -> ExtractionWitness:
        """
        Diagonal extraction in the Cantor cube

        Args:
            seq: Cube sequence
            ideal: Ideal with shrinking condition (B)
            coords: Coordinates fixed by the nested chain

        Returns:
            ExtractionWitness whose report is the coordinate-wise product verdict
        """
        if not isinstance(seq.space, CantorCube):
            raise ShapeMismatch(f"diagonal extraction needs a cube sequence, got {seq.space.to_text()}")
        ambient = self._check_start(seq, ideal)
        bits: List[int] = []
        chain, cells, verdicts, choices = [], [], [], []
        for i in range(1, coords + 1):
            candidates = []
            for bit in (1, 0):
                cylinder = Cylinder(tuple(enumerate(bits + [bit], start=1)))
                candidates.append((f"bit {bit}", cylinder, seq.hit_set(cylinder, self.engine.horizon)))
            label, cylinder, D, verdict = self._choose(ambient, candidates, i)
            bits.append(int(label.split()[-1]))
            chain.append(D)
            cells.append(cylinder)
            verdicts.append(verdict)
            choices.append(label)
        hint = seq.structure.limit_hint
        if isinstance(hint, CubePoint) and hint.bits(coords) == tuple(bits):
            xi = hint
        else:
            xi = CubePoint(tuple(bits), bits[-1] if bits else 1)
        return self._assemble(seq, ideal, ambient, 'product', chain, cells, verdicts, choices, xi, coords)

    def upgrade_to_star(self, seq: Sequence, witness: ExtractionWitness, ideal: Ideal,
                        depth: int = 8) -> IStarWitness:
        """
        Finite pieces K_m of D_m = {n in K : x_n in V_m} whose union converges classically

        Args:
            seq: Sequence the witness was extracted from
            witness: ExtractionWitness
            ideal: Ideal with shrinking condition (A)
            depth: Number of basis neighborhoods V_m

        Returns:
            IStarWitness with M = K' = union of the K_m

        Raises:
            UnsupportedShrink: ideal without condition (A)
            WitnessInvalid: when the extraction witness or the upgraded witness does not check out
        """
        if not ideal.supports_shrink_a:
            raise UnsupportedShrink(f"{ideal} does not satisfy shrinking condition (A)")
        if not seq.space.first_countable:
            raise WitnessInvalid(f"{seq.space.to_text()} is not first countable")
        ambient = self.engine.ambient_ideal(ideal, seq.domain)
        nonthin = ambient.member(witness.K)
        if not nonthin.is_false:
            raise WitnessInvalid(f"K = {witness.K} is not certified outside {ambient}: {nonthin.certificate}",
                                 verdict=nonthin)
        if not witness.converges:
            raise WitnessInvalid(f"the subsequence on K is not certified to converge: "
                                 f"{witness.report.overall.certificate}", verdict=witness.report.overall)
        sub = seq.subsequence(witness.K)
        chain = [sub.hit_set(v, self.engine.horizon) for v in basis_family(seq.space, witness.xi, depth)]
        shrink = self.selector.shrink_a(ambient, chain, sizes=list(range(1, depth + 1)))
        M = shrink.union_set
        on_M = seq.subsequence(M)
        in_filter = filter_member(restrict(ideal, M), M, M)
        bound = max((max(p.finite) for p in shrink.parts if p.finite), default=0)
        upgraded = IStarWitness(M, M, witness.xi,
                                f"K' = union of finite K_m with K_m inside V_m; past {bound} every term of K' "
                                f"lies in the last tested neighborhood", in_filter, False,
                                tuple(M.head(WITNESS_PREFIX)))
        check = self.engine.i_star_to_i(on_M, upgraded, ideal, depth)
        if not check.is_true:
            raise WitnessInvalid(f"upgraded witness is not certified by the I*-to-I check: {check.certificate}",
                                 verdict=check)
        logger.info(f"Upgraded extraction on {witness.K} to classical witness M = {M}: {check}")
        return upgraded
