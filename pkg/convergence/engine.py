"""
Convergence Engine Module
I- and I*-convergence verdicts, witness conversion, classical extraction and product verdicts

Tested basis neighborhoods give per-neighborhood verdicts. An overall True
needs an argument that covers every radius at once; block-constant and
classically convergent sequences supply one.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from ideals import (FIN, DecAIdeal, DecBIdeal, DensityIdeal, FinIdeal, Ideal, RestrictionIdeal,
                    filter_member, restrict)
from natset import BlockProfile, BlockSet, Decomposition, HorizonExceeded, IndexSet, Truth, Verdict
from sequences import Sequence
from sequences.config import EXCEPTIONAL_HORIZON
from spaces import (CantorCube, Cylinder, FiniteProduct, ShapeMismatch, basis_family, basis_schedule,
                    check_point, format_point)

from .config import DEFAULT_DEPTH, STALL_HORIZON, WITNESS_PREFIX
from .errors import ExtractionStalled, WitnessInvalid
from .report import ConvergenceReport, IStarWitness

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BlockCase:
    """Block structure of a block-constant sequence relative to a target point"""

    decomposition: Decomposition
    differ: BlockSet
    profile: BlockProfile
    uniform: bool

    @property
    def relevant(self) -> BlockSet:
        """Blocks met by the domain whose value is not the target"""
        return self.differ.intersect(self.profile.met)

    @property
    def wandering(self) -> BlockSet:
        """Blocks met infinitely by the domain whose value is not the target"""
        return self.differ.intersect(self.profile.infinite)

    def converges_off(self, removed: BlockSet) -> bool:
        """Terms converge classically once the blocks in `removed` are dropped"""
        return self.uniform or self.relevant.difference(removed).is_finite


class ConvergenceEngine:
    """Decides I- and I*-convergence of sequences"""

    def __init__(self, horizon: int = EXCEPTIONAL_HORIZON, stall_horizon: int = STALL_HORIZON):
        """
        Initialize convergence engine

        Args:
            horizon: Sampling horizon of exceptional sets without a closed form
            stall_horizon: Largest index scanned by classical extraction
        """
        self.horizon = horizon
        self.stall_horizon = stall_horizon

    # ------------------------------------------------------------------
    # helpers

    def ambient_ideal(self, ideal: Ideal, domain: IndexSet) -> Ideal:
        """The ideal restricted to the sequence domain"""
        if domain.is_naturals:
            return ideal
        if isinstance(ideal, RestrictionIdeal) and ideal.domain == domain:
            return ideal
        return restrict(ideal, domain)

    def _block_case(self, seq: Sequence, xi) -> Optional[BlockCase]:
        rule = seq.block_rule
        if rule is None or seq.domain.is_sampled:
            return None
        profile = seq.domain.block_profile(seq.decomposition)
        if not profile.exact:
            return None
        return BlockCase(seq.decomposition, rule.differ(xi), profile, rule.uniformly_finite(xi))

    def _family(self, ambient: Ideal, case: BlockCase) -> Optional[str]:
        """'every' when the dual filter keeps almost all of every infinite piece, 'cofinite' for block ideals"""
        base = ambient.base()
        if isinstance(base, (FinIdeal, DensityIdeal)):
            return 'every'
        if isinstance(base, (DecAIdeal, DecBIdeal)) and base.decomposition == case.decomposition:
            return 'cofinite'
        return None

    def _trivial_note(self, ambient: Ideal) -> str:
        if isinstance(ambient, RestrictionIdeal) and ambient.nontrivial is not None \
                and ambient.nontrivial.is_false:
            return "; restriction is trivial (the domain belongs to the ideal)"
        return ''

    def _symbolic(self, seq: Sequence, ambient: Ideal, xi) -> Optional[Verdict]:
        """An all-radii argument for I-convergence, if one applies"""
        finite_domain = seq.domain.is_finite_set()
        if finite_domain.is_true:
            return Verdict.true('i/finite-domain',
                                f"domain {seq.domain} is finite, so every exceptional set is finite (thin)")
        termwise = seq.structure.termwise_rule
        if termwise is not None and termwise.limit == xi:
            return Verdict.true('i/classical',
                                f"terms converge classically to {format_point(xi)}; "
                                f"every exceptional set is finite")
        case = self._block_case(seq, xi)
        if case is None or not case.converges_off(BlockSet()):
            return None
        pieces = ambient.contains_block_pieces(seq.domain, case.relevant, case.decomposition)
        if not pieces.is_true:
            return None
        reason = ('block values converge to the target' if case.uniform
                  else f"only blocks {case.relevant.describe()} carry other values")
        return Verdict.true('i/block-symbolic',
                            f"{reason}; every exceptional set is the domain inside finitely many blocks "
                            f"of {case.relevant.describe()} and {pieces.detail}{self._trivial_note(ambient)}")

    def _basis(self, seq: Sequence, xi, depth: int):
        check_point(seq.space, xi)
        return basis_family(seq.space, xi, depth)

    def _overall(self, per_basis, symbolic: Optional[Verdict], depth: int) -> Verdict:
        refuted = next(((u, v) for u, v in per_basis if v.is_false), None)
        if refuted is not None:
            u, v = refuted
            return Verdict.false('i/basis', f"exceptional set of {u} is not in the ideal: {v.certificate}")
        if symbolic is not None:
            return symbolic
        horizons = [v.horizon for _, v in per_basis if v.horizon is not None]
        horizon = max(horizons) if horizons else None
        if all(v.is_true for _, v in per_basis):
            return Verdict.unknown(horizon, 'i/tested',
                                   f"all {depth} tested neighborhoods pass; no argument covers every radius")
        return Verdict.unknown(horizon, 'i/undecided', "some exceptional sets are undecided")

    # ------------------------------------------------------------------
    # operations

    def i_converges(self, seq: Sequence, ideal: Ideal, xi, depth: int = DEFAULT_DEPTH) -> ConvergenceReport:
        """
        Decide I-convergence of a sequence to xi

        Args:
            seq: Sequence
            ideal: Ideal (restricted to the sequence domain internally)
            xi: Target point
            depth: Number of basis neighborhoods tested

        Returns:
            ConvergenceReport with mode 'I'
        """
        ambient = self.ambient_ideal(ideal, seq.domain)
        per_basis = []
        for nbhd in self._basis(seq, xi, depth):
            exceptional = seq.exceptional_set(nbhd, self.horizon)
            per_basis.append((nbhd, ambient.member(exceptional)))
        overall = self._overall(per_basis, self._symbolic(seq, ambient, xi), depth)
        logger.info(f"I-convergence of {seq} to {format_point(xi)} under {ambient}: {overall}")
        return ConvergenceReport('I', seq.label, ambient.to_text(), xi, basis_schedule(seq.space),
                                 tuple(per_basis), overall)

    def _witness(self, seq: Sequence, ambient: Ideal, xi) -> Optional[IStarWitness]:
        domain = seq.domain
        if domain.is_finite_set().is_true:
            M, reason = domain, "finite domain; the subsequence along M is finite"
        elif seq.structure.termwise_rule is not None and seq.structure.termwise_rule.limit == xi:
            M, reason = domain, f"terms converge classically to {format_point(xi)}"
        else:
            case = self._block_case(seq, xi)
            if case is None:
                return None
            removed = case.wandering
            if not removed.is_finite or not case.converges_off(removed):
                return None
            M = domain if removed.is_empty else domain.difference(
                IndexSet.from_block_set(removed, case.decomposition))
            reason = (f"M drops the blocks {removed.describe()}; every remaining block met infinitely "
                      f"has value {format_point(xi)} and the others meet M finitely")
        verdict = filter_member(ambient, M, domain)
        if not verdict.is_true:
            logger.debug(f"Candidate M = {M} not certified in the dual filter: {verdict.certificate}")
            return None
        thin = ambient.member(M).is_true
        return IStarWitness(M, domain, xi, reason, verdict, thin, tuple(M.head(WITNESS_PREFIX)))

    def _refute_star(self, seq: Sequence, ambient: Ideal, xi) -> Optional[Verdict]:
        case = self._block_case(seq, xi)
        if case is None:
            return None
        family = self._family(ambient, case)
        wandering = case.wandering
        rule = seq.block_rule
        if family == 'every' and not wandering.is_empty:
            j = wandering.lowest(1)[0]
            piece = seq.domain.intersect(IndexSet.block(j, case.decomposition))
            density = piece.exact_density()
            if isinstance(ambient.base(), DensityIdeal) and not density:
                return None
            return Verdict.false('i-star/every-piece',
                                 f"every M in the dual filter keeps all but a null part of the piece in block {j} "
                                 f"(density {density}), where every term is {format_point(rule.value(j))} "
                                 f"!= {format_point(xi)}")
        if family == 'cofinite' and not wandering.is_finite:
            return Verdict.false('i-star/block-signature',
                                 f"every M in the dual filter is infinite in all but finitely many of the blocks "
                                 f"{wandering.describe()}, each repeating a value other than {format_point(xi)}")
        return None

    def i_star_converges(self, seq: Sequence, ideal: Ideal, xi,
                         depth: int = DEFAULT_DEPTH) -> Tuple[ConvergenceReport, Optional[IStarWitness]]:
        """
        Decide I*-convergence of a sequence to xi

        Args:
            seq: Sequence
            ideal: Ideal (restricted to the sequence domain internally)
            xi: Target point
            depth: Number of basis neighborhoods tested

        Returns:
            (ConvergenceReport with mode 'I*', witness or None)
        """
        ambient = self.ambient_ideal(ideal, seq.domain)
        i_report = self.i_converges(seq, ideal, xi, depth)
        witness = None
        if i_report.overall.is_false:
            per_basis = i_report.per_basis
            overall = Verdict.false('i-star/i-fails', f"I*-convergence implies I-convergence, which fails: "
                                                      f"{i_report.overall.certificate}")
        else:
            witness = self._witness(seq, ambient, xi)
            if witness is not None:
                per_basis = tuple((u, FIN.member(seq.exceptional_set(u, self.horizon).intersect(witness.M)))
                                  for u, _ in i_report.per_basis)
                thin = '; M is thin (a member of the ideal)' if witness.thin else ''
                overall = Verdict.true('i-star/witness', f"M = {witness.M} is in the dual filter; "
                                                         f"{witness.tail_limit_certificate}{thin}")
            else:
                per_basis = i_report.per_basis
                overall = self._refute_star(seq, ambient, xi) or Verdict.unknown(
                    i_report.overall.horizon, 'i-star/undecided', "no witness M and no impossibility argument")
        logger.info(f"I*-convergence of {seq} to {format_point(xi)} under {ambient}: {overall}")
        report = ConvergenceReport('I*', seq.label, ambient.to_text(), xi, basis_schedule(seq.space),
                                   tuple(per_basis), overall)
        return report, witness

    def i_star_to_i(self, seq: Sequence, witness: IStarWitness, ideal: Ideal,
                    depth: int = DEFAULT_DEPTH) -> Verdict:
        """
        Turn an I*-witness into an I-convergence certificate

        For each basis neighborhood U the indices of M with x_n outside U form
        a finite head of M, so A(U) ⊆ head ∪ (domain ∖ M).

        Args:
            seq: Sequence
            witness: IStarWitness for seq under the ideal
            ideal: Ideal
            depth: Number of basis neighborhoods checked

        Returns:
            Verdict True with the inclusion trace (Unknown when exceptional sets are sampled)

        Raises:
            WitnessInvalid: when M is not in the dual filter or the inclusion fails
        """
        ambient = self.ambient_ideal(ideal, seq.domain)
        in_filter = filter_member(ambient, witness.M, seq.domain)
        if not in_filter.is_true:
            raise WitnessInvalid(f"M = {witness.M} is not certified in the dual filter of {ambient}: "
                                 f"{in_filter.certificate}", verdict=in_filter)
        xi = witness.limit
        head, trace, truncated = 0, [], None
        for nbhd in self._basis(seq, xi, depth):
            inside = seq.exceptional_set(nbhd, self.horizon).intersect(witness.M)
            finite = inside.is_finite_set()
            if finite.is_false:
                raise WitnessInvalid(f"{nbhd}: infinitely many indices of M have terms outside it "
                                     f"({finite.detail})", verdict=finite)
            if finite.is_unknown:
                elements = inside.elements_upto(min(self.horizon, inside.horizon))
                truncated = inside.horizon
            else:
                elements = sorted(inside.finite)
            size = witness.M.prefix_count(max(elements)) if elements else 0
            trace.append(f"{nbhd}: A(U) within the first {size} indices of M and domain minus M")
            head = max(head, size)
        detail = f"head size {head}; " + '; '.join(trace)
        if truncated is not None:
            return Verdict.unknown(truncated, 'i-star-to-i', detail)
        return Verdict.true('i-star-to-i', detail)

    def _next_index(self, hits: IndexSet, after: int) -> Optional[int]:
        later = hits.intersect(IndexSet.tail(after + 1))
        if later.is_empty():
            return None
        try:
            n = later.nth(1)
        except HorizonExceeded:
            return None
        return n if n <= self.stall_horizon else None

    def classical_extract(self, seq: Sequence, ideal: Ideal, xi, k: int) -> List[int]:
        """
        Indices n_1 < ... < n_k with x_{n_j} in the j-th basis neighborhood

        Args:
            seq: Sequence
            ideal: Ideal under which seq I-converges to xi
            xi: Target point
            k: Number of indices

        Returns:
            Strictly increasing indices

        Raises:
            ExtractionStalled: when I-convergence is refuted or no index is found below the stall horizon
        """
        report = self.i_converges(seq, ideal, xi, k)
        if not (report.overall.is_true or (report.overall.is_unknown and report.all_tested_true)):
            raise ExtractionStalled(f"{seq} is not known to I-converge to {format_point(xi)}: "
                                    f"{report.overall.certificate}", verdict=report.overall)
        if not seq.space.first_countable:
            raise ExtractionStalled(f"{seq.space.to_text()} is not first countable")
        indices: List[int] = []
        for j, nbhd in enumerate(basis_family(seq.space, xi, k), start=1):
            n = self._next_index(seq.hit_set(nbhd, self.horizon), indices[-1] if indices else 0)
            if n is None:
                raise ExtractionStalled(f"no index after {indices[-1] if indices else 0} with a term in {nbhd} "
                                        f"below {self.stall_horizon}")
            logger.debug(f"n_{j} = {n}: x_n = {format_point(seq.structure.value_at(n))} in {nbhd}")
            indices.append(n)
        return indices

    def product_verdict(self, seq: Sequence, ideal: Ideal, xi,
                        coord_depth: int = DEFAULT_DEPTH) -> ConvergenceReport:
        """
        Coordinate-wise convergence for cube and product sequences

        Args:
            seq: Sequence in the Cantor cube or a finite product
            ideal: Ideal
            xi: Target point
            coord_depth: Number of cube coordinates tested

        Returns:
            ConvergenceReport with mode 'product'; entries are per coordinate

        Raises:
            ShapeMismatch: for sequences in the unit interval
        """
        check_point(seq.space, xi)
        ambient = self.ambient_ideal(ideal, seq.domain)
        per_coordinate = []
        if isinstance(seq.space, CantorCube):
            for c in range(1, coord_depth + 1):
                cylinder = Cylinder(((c, xi.bit(c)),))
                per_coordinate.append((cylinder, ambient.member(seq.exceptional_set(cylinder, self.horizon))))
            overall = self._overall(per_coordinate, self._symbolic(seq, ambient, xi), coord_depth)
        elif isinstance(seq.space, FiniteProduct):
            components = getattr(seq.structure, 'components', None)
            if components is None:
                raise ShapeMismatch(f"{seq} has no coordinate structure")
            factor_reports = []
            for i, (component, target) in enumerate(zip(components, xi), start=1):
                projected = Sequence(seq.domain, component, f"{seq.label}[{i}]")
                if isinstance(projected.space, CantorCube):
                    factor = self.product_verdict(projected, ideal, target, coord_depth)
                else:
                    factor = self.i_converges(projected, ideal, target, coord_depth)
                factor_reports.append(factor)
                per_coordinate.append((f"coordinate {i}", factor.overall))
            values = [r.overall.value for r in factor_reports]
            if Truth.FALSE in values:
                overall = Verdict.false('product/coordinate', next(
                    f"coordinate {i}: {r.overall.certificate}"
                    for i, r in enumerate(factor_reports, start=1) if r.overall.is_false))
            elif all(v is Truth.TRUE for v in values):
                overall = Verdict.true('product/coordinates',
                                       "every coordinate converges; a box exceptional set is the finite union "
                                       "of coordinate exceptional sets")
            else:
                overall = Verdict.unknown(None, 'product/undecided', "some coordinates are undecided")
        else:
            raise ShapeMismatch(f"{seq.space.to_text()} has no coordinates")
        logger.info(f"Product verdict for {seq} at {format_point(xi)} under {ambient}: {overall}")
        return ConvergenceReport('product', seq.label, ambient.to_text(), xi,
                                 'coordinate projections', tuple(per_coordinate), overall)
