"""
Density Calculator Module
Natural density of index sets: exact on closed forms, profiled otherwise
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

import pandas as pd

from natset import HorizonExceeded, IndexSet

from .config import PROFILE_HORIZONS, TABLE_HORIZONS

logger = logging.getLogger(__name__)


class DensityKind(Enum):
    """How a density was obtained"""
    EXACT = "exact"
    PROFILE = "profile"


@dataclass(frozen=True)
class DensityResult:
    """Exact density, or exact prefix densities at a list of horizons"""

    kind: DensityKind
    value: Optional[Fraction] = None
    profile: Tuple[Tuple[int, Fraction], ...] = ()

    @property
    def is_exact(self) -> bool:
        return self.kind is DensityKind.EXACT

    @property
    def horizons(self) -> Tuple[int, ...]:
        return tuple(N for N, _ in self.profile)

    @property
    def estimate(self) -> Fraction:
        """Exact value, or the prefix density at the largest horizon"""
        if self.is_exact:
            return self.value
        return self.profile[-1][1]

    def describe(self) -> str:
        if self.is_exact:
            return f"exact {self.value}"
        points = ', '.join(f"N={N}: {d} (~{float(d):.4f})" for N, d in self.profile)
        return f"profile [{points}]"


class DensityCalculator:
    """Computes natural densities and prefix densities of index sets"""

    def __init__(self, profile_horizons: Sequence[int] = PROFILE_HORIZONS):
        """
        Initialize density calculator

        Args:
            profile_horizons: Horizons at which sampled sets are profiled
        """
        self.profile_horizons = tuple(sorted(profile_horizons))

    def prefix_density(self, index_set: IndexSet, N: int) -> Fraction:
        """
        Exact |A ∩ [1,N]| / N

        Args:
            index_set: Set to measure
            N: Prefix length (>= 1)

        Returns:
            Prefix density as a Fraction

        Raises:
            HorizonExceeded: when a sampled set cannot be evaluated up to N
        """
        if N < 1:
            raise ValueError(f"prefix density needs N >= 1, got {N}")
        return Fraction(index_set.prefix_count(N), N)

    def profile(self, index_set: IndexSet, horizons: Optional[Iterable[int]] = None) -> Tuple[Tuple[int, Fraction], ...]:
        """Prefix densities at the horizons the set can be evaluated to"""
        limit = index_set.horizon
        wanted = sorted(horizons) if horizons is not None else list(self.profile_horizons)
        usable = [N for N in wanted if limit is None or N <= limit]
        if not usable and limit is not None:
            usable = [limit]
        return tuple((N, self.prefix_density(index_set, N)) for N in usable)

    def density_of(self, index_set: IndexSet) -> DensityResult:
        """
        Natural density of an index set

        Args:
            index_set: Set to measure

        Returns:
            DensityResult (Exact for closed forms, Profile for sampled sets)
        """
        exact = index_set.exact_density()
        if exact is not None:
            logger.debug(f"Exact density of {index_set}: {exact}")
            return DensityResult(DensityKind.EXACT, value=exact)
        result = DensityResult(DensityKind.PROFILE, profile=self.profile(index_set))
        logger.info(f"Density of {index_set} profiled: {result.describe()}")
        return result

    def density_table(self, index_set: IndexSet, horizons: Sequence[int] = TABLE_HORIZONS) -> pd.DataFrame:
        """
        Prefix counts and densities at several horizons

        Args:
            index_set: Set to tabulate
            horizons: Prefix lengths

        Returns:
            DataFrame with columns N, count, density_num, density_den, density
        """
        rows = []
        for N in horizons:
            try:
                count = index_set.prefix_count(N)
            except HorizonExceeded:
                logger.warning(f"Skipping N={N}: past the horizon of {index_set}")
                continue
            density = Fraction(count, N)
            rows.append({
                'N': N,
                'count': count,
                'density_num': density.numerator,
                'density_den': density.denominator,
                'density': float(density),
            })
        return pd.DataFrame(rows, columns=['N', 'count', 'density_num', 'density_den', 'density'])
