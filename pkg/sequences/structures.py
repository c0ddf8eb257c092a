"""
Sequence Structures Module
How a sequence computes its terms and the index sets where terms enter or miss a region
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt, lcm
from typing import Callable, Optional, Tuple

import numpy as np

from natset import AP, TWO_ADIC, BlockSet, Decomposition, IndexSet, Sampled, Tail
from spaces import CANTOR_CUBE, UNIT_INTERVAL, Box, CubePoint, Cylinder, FiniteProduct, ShapeMismatch

from .rules import BlockRule, ProductBlocks, as_interval

logger = logging.getLogger(__name__)


def indices_of(blocks: BlockSet) -> IndexSet:
    """A BlockSet read as a set of term indices"""
    gens = [Tail(blocks.tail_from)] if blocks.tail_from is not None else []
    return IndexSet.build(finite=blocks.finite, generators=gens)


class Structure:
    """Common interface of sequence structures"""

    space = UNIT_INTERVAL
    block_rule: Optional[BlockRule] = None
    termwise_rule: Optional[BlockRule] = None
    decomposition: Optional[Decomposition] = None

    def value_at(self, n: int):
        raise NotImplementedError

    def inside(self, region, horizon: int) -> IndexSet:
        """Indices n (over all naturals) with x_n in the region"""
        raise NotImplementedError

    def outside(self, region, horizon: int) -> IndexSet:
        """Indices n (over all naturals) with x_n outside the region"""
        raise NotImplementedError

    @property
    def limit_hint(self):
        return None

    def to_text(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class BlockConstant(Structure):
    """x_n = rule(j) for n in block j"""

    rule: BlockRule
    decomposition: Decomposition = field(default=TWO_ADIC)

    @property
    def space(self):
        return self.rule.space

    @property
    def block_rule(self):
        return self.rule

    @property
    def limit_hint(self):
        return self.rule.limit

    def value_at(self, n):
        return self.rule.value(self.decomposition.block_of(n))

    def inside(self, region, horizon):
        return IndexSet.from_block_set(self.rule.blocks_in(region), self.decomposition)

    def outside(self, region, horizon):
        return IndexSet.from_block_set(self.rule.blocks_in(region).complement(), self.decomposition)

    def to_text(self):
        return f"blockconstant({self.rule.to_text()} on {self.decomposition.name})"


@dataclass(frozen=True)
class Termwise(Structure):
    """x_n = rule(n): a classically convergent sequence"""

    rule: BlockRule

    @property
    def space(self):
        return self.rule.space

    @property
    def termwise_rule(self):
        return self.rule

    @property
    def limit_hint(self):
        return self.rule.limit

    def value_at(self, n):
        return self.rule.value(n)

    def inside(self, region, horizon):
        return indices_of(self.rule.blocks_in(region))

    def outside(self, region, horizon):
        return indices_of(self.rule.blocks_in(region).complement())

    def to_text(self):
        return f"termwise({self.rule.to_text()})"


def _interval_length(region) -> Fraction:
    iv = as_interval(region)
    return max(Fraction(0), min(iv.hi, Fraction(1)) - max(iv.lo, Fraction(0)))


@dataclass(frozen=True)
class Equidistributed(Structure):
    """
    Block m (m >= 2) lists k/(m-1) for k = 0..m-1; block 1 is {0}

    0, 0, 1, 0, 1/2, 1, 0, 1/3, 2/3, 1, ...
    """

    label: str = 'udSequence'

    def value_at(self, n):
        m = (isqrt(8 * n + 1) - 1) // 2
        if m * (m + 1) // 2 < n:
            m += 1
        if m == 1:
            return Fraction(0)
        k = n - m * (m - 1) // 2 - 1
        return Fraction(k, m - 1)

    def block_positions(self, N: int) -> Tuple[np.ndarray, np.ndarray]:
        """Block m(n) of each index 0..N and the position r(n) = 1..m(n) inside it"""
        n = np.arange(N + 1, dtype=np.int64)
        m = ((np.sqrt(8 * n + 1) - 1) // 2).astype(np.int64)
        m = np.where(m * (m + 1) // 2 < n, m + 1, m)
        m = np.where((m - 1) * m // 2 >= n, m - 1, m)
        m = np.maximum(m, 1)
        return m, n - (m - 1) * m // 2

    def terms(self, N: int) -> Tuple[np.ndarray, np.ndarray]:
        """Numerators and denominators of x_0..x_N (index 0 unused)"""
        m, r = self.block_positions(N)
        k = np.where(m == 1, 0, r - 1)
        den = np.maximum(m - 1, 1)
        return k, den

    def hit_mask(self, region, N: int) -> np.ndarray:
        iv = as_interval(region)
        num, den = self.terms(N)
        lo_p, lo_q = iv.lo.numerator, iv.lo.denominator
        hi_p, hi_q = iv.hi.numerator, iv.hi.denominator
        above = num * lo_q >= lo_p * den if iv.lo_closed else num * lo_q > lo_p * den
        below = num * hi_q <= hi_p * den if iv.hi_closed else num * hi_q < hi_p * den
        mask = above & below
        mask[0] = False
        return mask

    def inside(self, region, horizon):
        length = _interval_length(region)
        return IndexSet.build(generators=[Sampled(
            f"{self.label} in {region}", horizon,
            lambda n: as_interval(region).contains(self.value_at(n)),
            lambda N: self.hit_mask(region, N),
            declared_density=length)])

    def outside(self, region, horizon):
        length = _interval_length(region)

        def miss_mask(N):
            mask = ~self.hit_mask(region, N)
            mask[0] = False
            return mask

        return IndexSet.build(generators=[Sampled(
            f"{self.label} outside {region}", horizon,
            lambda n: not as_interval(region).contains(self.value_at(n)),
            miss_mask,
            declared_density=1 - length)])

    def to_text(self):
        return self.label


@dataclass(frozen=True)
class CoordinateSets(Structure):
    """Cube sequence: coordinate m of x_n is 1 iff (n-1) mod 2m < width(m)"""

    width: Callable[[int], int] = field(default=lambda m: m, compare=False)
    label: str = 'prodDiagDensity'

    space = CANTOR_CUBE

    def period(self, m: int) -> int:
        return 2 * m

    def bit(self, n: int, m: int) -> int:
        return 1 if (n - 1) % (2 * m) < self.width(m) else 0

    def bit_array(self, n: np.ndarray, m: int) -> np.ndarray:
        return ((n - 1) % (2 * m) < self.width(m)).astype(np.int64)

    def one_set(self, m: int) -> IndexSet:
        return IndexSet.build(generators=[AP(r, 2 * m) for r in range(1, self.width(m) + 1)])

    def zero_set(self, m: int) -> IndexSet:
        return IndexSet.build(generators=[AP(r, 2 * m) for r in range(self.width(m) + 1, 2 * m + 1)])

    def value_at(self, n):
        prefix = tuple(self.bit(n, m) for m in range(1, n))
        tail = 1 if self.width(n) >= n else self.bit(n, n)
        return CubePoint(prefix, tail)

    def _constraints(self, region):
        if not isinstance(region, Cylinder):
            raise ShapeMismatch(f"{region} is not a cylinder")
        return region.constraints

    def pattern_density(self, constraints) -> Fraction:
        """Exact density of {n : bit_c(n) = b for every (c, b)} over one common period"""
        if not constraints:
            return Fraction(1)
        L = lcm(*(self.period(c) for c, _ in constraints))
        n = np.arange(1, L + 1, dtype=np.int64)
        mask = np.ones(L, dtype=bool)
        for c, b in constraints:
            mask &= self.bit_array(n, c) == b
        return Fraction(int(np.count_nonzero(mask)), L)

    def inside(self, region, horizon):
        constraints = self._constraints(region)

        def mask(N):
            n = np.arange(N + 1, dtype=np.int64)
            hits = np.ones(N + 1, dtype=bool)
            for c, b in constraints:
                hits &= self.bit_array(n, c) == b
            hits[0] = False
            return hits

        return IndexSet.build(generators=[Sampled(
            f"{self.label} in {region}", horizon,
            lambda k: all(self.bit(k, c) == b for c, b in constraints),
            mask, declared_density=self.pattern_density(constraints))])

    def outside(self, region, horizon):
        result = IndexSet.empty()
        for c, b in self._constraints(region):
            result = result.union(self.zero_set(c) if b == 1 else self.one_set(c))
        return result

    def to_text(self):
        return self.label


@dataclass(frozen=True)
class ProductOf(Structure):
    """Tuple-valued sequence built from component structures on a shared domain"""

    components: Tuple[Structure, ...]

    @property
    def space(self):
        return FiniteProduct(tuple(c.space for c in self.components))

    @property
    def block_rule(self):
        rules = [c.block_rule for c in self.components]
        decs = {c.decomposition for c in self.components}
        if any(r is None for r in rules) or len(decs) != 1:
            return None
        return ProductBlocks(tuple(rules))

    @property
    def decomposition(self):
        decs = {c.decomposition for c in self.components}
        return decs.pop() if len(decs) == 1 else None

    @property
    def limit_hint(self):
        hints = tuple(c.limit_hint for c in self.components)
        return None if any(h is None for h in hints) else hints

    def _parts(self, region):
        if not isinstance(region, Box) or len(region.parts) != len(self.components):
            raise ShapeMismatch(f"{region} does not match a {len(self.components)}-fold product")
        return zip(self.components, region.parts)

    def value_at(self, n):
        return tuple(c.value_at(n) for c in self.components)

    def inside(self, region, horizon):
        result = IndexSet.naturals()
        for component, part in self._parts(region):
            result = result.intersect(component.inside(part, horizon))
        return result

    def outside(self, region, horizon):
        result = IndexSet.empty()
        for component, part in self._parts(region):
            result = result.union(component.outside(part, horizon))
        return result

    def to_text(self):
        return 'product(' + '; '.join(c.to_text() for c in self.components) + ')'
