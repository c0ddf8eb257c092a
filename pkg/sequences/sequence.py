"""
Sequence Module
Sequences indexed by a domain of naturals, with subsequences and exceptional sets
"""

import logging
from dataclasses import dataclass
from typing import Optional

from natset import IndexSet, Verdict

from .config import DOMAIN_CHECK_HORIZON, EXCEPTIONAL_HORIZON
from .errors import DomainViolation, NotInDomain
from .structures import Structure

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Sequence:
    """x = (x_n) for n in the domain"""

    domain: IndexSet
    structure: Structure
    label: str

    @property
    def space(self):
        return self.structure.space

    @property
    def block_rule(self):
        return self.structure.block_rule

    @property
    def decomposition(self):
        return self.structure.decomposition

    def eval_at(self, n: int):
        """
        Term x_n

        Args:
            n: Index in the domain

        Returns:
            The point x_n

        Raises:
            NotInDomain: when n is not in the domain
        """
        if n < 1 or not self.domain.contains(n):
            raise NotInDomain(f"{n} is not in the domain {self.domain} of {self.label}")
        return self.structure.value_at(n)

    def subsequence(self, index_set: IndexSet, check_horizon: int = DOMAIN_CHECK_HORIZON) -> 'Sequence':
        """
        Restrict the sequence to a subset of its domain

        Args:
            index_set: Subset K of the domain
            check_horizon: Depth of the subset check for sampled sets

        Returns:
            Sequence on K with the same terms

        Raises:
            DomainViolation: when K is certified (or seen below the horizon) to leave the domain
        """
        subset = index_set.subset_verdict(self.domain, check_horizon)
        if subset.is_false:
            raise DomainViolation(f"{index_set} is not inside the domain of {self.label}: {subset.detail}",
                                  verdict=subset)
        if subset.is_unknown:
            logger.warning(f"Subsequence domain {index_set} checked against {self.label} "
                           f"up to {subset.horizon} only")
        if index_set.is_finite_set().is_true:
            logger.warning(f"Subsequence of {self.label} on finite domain {index_set}: "
                           f"every ideal containing Fin makes it converge trivially")
        domain = index_set if self.domain.is_naturals else self.domain.intersect(index_set)
        return Sequence(domain, self.structure, f"{self.label} | restrict {index_set}")

    def hit_set(self, region, horizon: int = EXCEPTIONAL_HORIZON) -> IndexSet:
        """Indices of the domain with x_n in the region (neighborhood or interval)"""
        return self.domain.intersect(self.structure.inside(region, horizon))

    def exceptional_set(self, nbhd, horizon: int = EXCEPTIONAL_HORIZON) -> IndexSet:
        """
        A(U) = {n in the domain : x_n ∉ U}

        Args:
            nbhd: Neighborhood of matching shape
            horizon: Sampling horizon when no closed form exists

        Returns:
            IndexSet, exact whenever the structure allows it
        """
        result = self.domain.intersect(self.structure.outside(nbhd, horizon))
        logger.debug(f"A({nbhd}) for {self.label} = {result}")
        return result

    def finite_domain(self) -> Verdict:
        return self.domain.is_finite_set()

    def limit_hint(self) -> Optional[object]:
        return self.structure.limit_hint

    def to_text(self) -> str:
        return self.label

    def __str__(self) -> str:
        return self.label
