"""
Ideal Families Module
Decidable ideals on the naturals: Fin, Density, DecA, DecB and restrictions
"""

import logging
from dataclasses import dataclass, field
from typing import Optional

from density import DensityCalculator
from natset import TWO_ADIC, BlockSet, Decomposition, IndexSet, Truth, Verdict

logger = logging.getLogger(__name__)


def _profile_detail(index_set: IndexSet) -> str:
    profile = DensityCalculator().profile(index_set)
    return ', '.join(f"N={N}: {float(d):.4f}" for N, d in profile)


class Ideal:
    """Common interface of the ideal families"""

    supports_shrink_a = False
    supports_shrink_b = False
    decomposition: Optional[Decomposition] = None

    def member(self, index_set: IndexSet) -> Verdict:
        """
        Decide A ∈ I

        Args:
            index_set: Candidate set A

        Returns:
            Verdict with the deciding rule as certificate
        """
        raise NotImplementedError

    def contains_block_pieces(self, domain: IndexSet, blocks: BlockSet,
                              decomposition: Decomposition) -> Verdict:
        """Decide whether every piece domain ∩ Δ_j (j in blocks) belongs to the ideal"""
        raise NotImplementedError

    def base(self) -> 'Ideal':
        return self

    def to_text(self) -> str:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.to_text()


def _pieces_by_profile(ideal: Ideal, domain: IndexSet, blocks: BlockSet,
                       decomposition: Decomposition) -> Verdict:
    """Fin/Density: a block piece belongs iff the domain meets that block only finitely"""
    if domain.is_sampled:
        return Verdict.unknown(domain.horizon, f"{ideal}/block-pieces", f"domain {domain} is sampled")
    profile = domain.block_profile(decomposition)
    bad = profile.infinite.intersect(blocks)
    if bad.is_empty:
        return Verdict.true(f"{ideal}/block-pieces",
                            f"domain meets blocks {blocks.describe()} only finitely")
    j = bad.lowest(1)[0]
    piece = domain.intersect(IndexSet.block(j, decomposition))
    return Verdict.false(f"{ideal}/block-pieces",
                         f"piece of the domain in block {j} is infinite with density {piece.exact_density()}")


@dataclass(frozen=True)
class FinIdeal(Ideal):
    """Finite subsets of the naturals"""

    def member(self, index_set):
        verdict = index_set.is_finite_set()
        if verdict.is_true:
            return Verdict.true('fin', f"finite set ({verdict.detail})")
        if verdict.is_false:
            return Verdict.false('fin', verdict.detail)
        return Verdict.unknown(verdict.horizon, 'fin', f"{verdict.detail}; prefix profile {_profile_detail(index_set)}")

    def contains_block_pieces(self, domain, blocks, decomposition):
        return _pieces_by_profile(self, domain, blocks, decomposition)

    def to_text(self):
        return 'fin'


@dataclass(frozen=True)
class DensityIdeal(Ideal):
    """Sets of natural density zero"""

    def member(self, index_set):
        exact = index_set.exact_density()
        if exact is not None:
            if exact == 0:
                return Verdict.true('density', "exact density 0")
            return Verdict.false('density', f"exact density {exact} > 0")
        lower, upper = index_set.density_bounds()
        if lower > 0:
            return Verdict.false('density', f"certified density at least {lower} > 0")
        if upper == 0:
            return Verdict.true('density', "certified density 0")
        return Verdict.unknown(index_set.horizon, 'density', f"prefix profile {_profile_detail(index_set)}")

    def contains_block_pieces(self, domain, blocks, decomposition):
        return _pieces_by_profile(self, domain, blocks, decomposition)

    def to_text(self):
        return 'density'


@dataclass(frozen=True)
class DecAIdeal(Ideal):
    """Sets meeting at most finitely many blocks"""

    decomposition: Decomposition = field(default=TWO_ADIC)

    supports_shrink_a = True
    supports_shrink_b = True

    def member(self, index_set):
        profile = index_set.block_profile(self.decomposition)
        rule = self.to_text()
        if not profile.met.is_finite:
            return Verdict.false(rule, f"meets infinitely many blocks: {profile.met.describe()}")
        if not profile.exact:
            return Verdict.unknown(index_set.horizon, rule,
                                   f"closed part meets blocks {profile.met.describe()}; "
                                   f"prefix profile {_profile_detail(index_set)}")
        return Verdict.true(rule, f"meets finitely many blocks: {profile.met.describe()}")

    def contains_block_pieces(self, domain, blocks, decomposition):
        if decomposition != self.decomposition:
            return Verdict.unknown(None, f"{self}/block-pieces", f"pieces of {decomposition.name} blocks")
        return Verdict.true(f"{self}/block-pieces", "every block piece meets a single block")

    def to_text(self):
        return f"decA({self.decomposition.name})"


@dataclass(frozen=True)
class DecBIdeal(Ideal):
    """Sets meeting only finitely many blocks in an infinite set (I₁)"""

    decomposition: Decomposition = field(default=TWO_ADIC)

    supports_shrink_b = True

    def member(self, index_set):
        profile = index_set.block_profile(self.decomposition)
        rule = self.to_text()
        if not profile.infinite.is_finite:
            return Verdict.false(rule, f"infinite in every block from {profile.infinite.tail_from} on "
                                       f"(blocks {profile.infinite.describe()})")
        if index_set.is_sampled:
            return Verdict.unknown(index_set.horizon, rule,
                                   f"closed part infinite in blocks {profile.infinite.describe()}; "
                                   f"prefix profile {_profile_detail(index_set)}")
        count = len(profile.infinite.finite)
        noun = 'block' if count == 1 else 'blocks'
        return Verdict.true(rule, f"infinite in exactly {count} {noun} {profile.infinite.describe()} "
                                  f"(finitely many blocks met infinitely; the rest met finitely)")

    def contains_block_pieces(self, domain, blocks, decomposition):
        if decomposition != self.decomposition:
            return Verdict.unknown(None, f"{self}/block-pieces", f"pieces of {decomposition.name} blocks")
        return Verdict.true(f"{self}/block-pieces", "every block piece is infinite in at most one block")

    def to_text(self):
        return f"decB({self.decomposition.name})"


@dataclass(frozen=True)
class RestrictionIdeal(Ideal):
    """I/_M: members of the base ideal contained in M"""

    parent: Ideal
    domain: IndexSet
    nontrivial: Optional[Verdict] = field(default=None, compare=False)

    @property
    def supports_shrink_a(self):
        return self.parent.supports_shrink_a

    @property
    def supports_shrink_b(self):
        return self.parent.supports_shrink_b

    @property
    def decomposition(self):
        return self.parent.decomposition

    def base(self):
        return self.parent.base()

    def member(self, index_set):
        subset = index_set.subset_verdict(self.domain)
        if subset.is_false:
            return Verdict.false(self.to_text(), f"not contained in the domain: {subset.detail}")
        inner = self.parent.member(index_set)
        if subset.is_unknown and not inner.is_false:
            return Verdict.unknown(subset.horizon, self.to_text(), f"{subset.detail}; {inner.certificate}")
        return Verdict(inner.value, f"restrict/{inner.rule}", inner.detail, inner.horizon)

    def contains_block_pieces(self, domain, blocks, decomposition):
        inside = domain.subset_verdict(self.domain)
        if not inside.is_true:
            return Verdict.unknown(inside.horizon, f"{self}/block-pieces",
                                   f"pieces of {domain} not certified inside {self.domain}")
        return self.parent.contains_block_pieces(domain, blocks, decomposition)

    def to_text(self):
        return f"restrict({self.parent}, {self.domain})"


FIN = FinIdeal()
DENSITY = DensityIdeal()


def restrict(ideal: Ideal, domain: IndexSet) -> RestrictionIdeal:
    """
    Restrict an ideal to a domain

    Args:
        ideal: Base ideal
        domain: Index set M

    Returns:
        RestrictionIdeal carrying the nontriviality verdict (M ∉ I)
    """
    membership = ideal.member(domain)
    flipped = {Truth.TRUE: Truth.FALSE, Truth.FALSE: Truth.TRUE, Truth.UNKNOWN: Truth.UNKNOWN}
    nontrivial = Verdict(flipped[membership.value], 'nontrivial', membership.certificate, membership.horizon)
    if membership.is_true:
        logger.warning(f"Restriction of {ideal} to {domain} is trivial: {membership.certificate}")
    return RestrictionIdeal(ideal, domain, nontrivial)


def filter_member(ideal: Ideal, index_set: IndexSet, domain: Optional[IndexSet] = None) -> Verdict:
    """
    Decide A ∈ F(I) relative to a domain, i.e. domain ∖ A ∈ I

    Args:
        ideal: Ideal
        index_set: Candidate filter set A
        domain: Ambient set (default: all naturals)

    Returns:
        Verdict of the complement's membership, noting the subset check
    """
    domain = domain if domain is not None else IndexSet.naturals()
    subset = index_set.subset_verdict(domain)
    complement = domain.difference(index_set)
    verdict = ideal.member(complement)
    check = 'exact' if subset.is_definitive else f"checked to {subset.horizon}"
    if subset.is_false:
        logger.warning(f"Filter candidate {index_set} is not inside {domain}: {subset.detail}")
    detail = f"complement {complement} -> {verdict.certificate}; subset check {check}"
    return Verdict(verdict.value, f"filter/{ideal}", detail, verdict.horizon)

