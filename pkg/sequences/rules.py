"""
Block Rules Module
Value maps on block indices with exact preimages of neighborhoods

A rule assigns a point to every block index j >= 1. Preimages of balls,
intervals, cylinders and boxes are computed exactly as BlockSets.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Optional, Tuple

from natset import BlockSet
from spaces import (ALL_ONES, CANTOR_CUBE, UNIT_INTERVAL, Ball, Box, CubePoint, Cylinder, FiniteProduct,
                    Interval, ShapeMismatch, check_point, format_point, in_nbhd)

logger = logging.getLogger(__name__)


def point_in(space, point, region) -> bool:
    """Membership in a neighborhood or a (possibly closed) interval"""
    if isinstance(region, Interval):
        return region.contains(point)
    return in_nbhd(space, point, region)


def as_interval(region) -> Interval:
    if isinstance(region, Interval):
        return region
    if isinstance(region, Ball):
        return region.as_interval()
    raise ShapeMismatch(f"{region} is not an interval neighborhood")


class BlockRule:
    """Point-valued map on block indices"""

    space = UNIT_INTERVAL
    injective = False

    def value(self, j: int):
        raise NotImplementedError

    def blocks_in(self, region) -> BlockSet:
        """Block indices whose value lies in the region"""
        raise NotImplementedError

    @property
    def limit(self):
        """Limit of the values along the block index (None when there is none)"""
        return None

    def blocks_equal(self, xi) -> BlockSet:
        raise NotImplementedError

    def differ(self, xi) -> BlockSet:
        return self.blocks_equal(xi).complement()

    def uniformly_finite(self, xi) -> bool:
        """Every neighborhood of xi misses only finitely many block values"""
        return self.limit == xi or self.differ(xi).is_finite

    def to_text(self) -> str:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class ConvergentBlocks(BlockRule):
    """Value limit + scale/(j + offset) on block j"""

    limit_value: Fraction
    scale: Fraction = Fraction(1)
    offset: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ('limit_value', 'scale', 'offset'):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.offset <= -1:
            raise ValueError(f"offset must exceed -1, got {self.offset}")
        if not 0 <= self.limit_value <= 1 or not 0 <= self.value(1) <= 1:
            raise ValueError(f"values of {self.to_text()} leave [0,1]")

    @property
    def injective(self):
        return self.scale != 0

    @property
    def limit(self):
        return self.limit_value

    def value(self, j):
        return self.limit_value + self.scale / (j + self.offset)

    def blocks_in(self, region):
        iv = as_interval(region)
        if self.scale == 0:
            return BlockSet.everything() if iv.contains(self.limit_value) else BlockSet()
        sign = 1 if self.scale > 0 else -1
        sides = [abs(e - self.limit_value) for e in (iv.lo, iv.hi) if sign * (e - self.limit_value) > 0]
        gap = min(sides) if sides else Fraction(1)
        eventual = iv.contains(self.limit_value + sign * gap / 2)
        # from j0 on every value lies strictly between the limit and the nearest endpoint on its side
        j0 = max(1, floor(abs(self.scale) / gap - self.offset) + 1)
        finite = frozenset(j for j in range(1, j0) if iv.contains(self.value(j)))
        return BlockSet(finite, j0 if eventual else None)

    def blocks_equal(self, xi):
        xi = Fraction(xi)
        if self.scale == 0:
            return BlockSet.everything() if xi == self.limit_value else BlockSet()
        if xi == self.limit_value:
            return BlockSet()
        j = self.scale / (xi - self.limit_value) - self.offset
        return BlockSet.of([int(j)]) if j.denominator == 1 and j >= 1 else BlockSet()

    def to_text(self):
        return f"{self.limit_value}+{self.scale}/(j+{self.offset})"


@dataclass(frozen=True)
class EventuallyConstant(BlockRule):
    """Listed values on the first blocks, then `tail` on every later block"""

    prefix: Tuple = ()
    tail: object = Fraction(0)
    space: object = field(default=UNIT_INTERVAL)

    def __post_init__(self):
        for point in self.prefix + (self.tail,):
            check_point(self.space, point)

    @property
    def limit(self):
        return self.tail

    def value(self, j):
        if j <= len(self.prefix):
            return self.prefix[j - 1]
        return self.tail

    def blocks_in(self, region):
        finite = frozenset(j for j, v in enumerate(self.prefix, start=1) if point_in(self.space, v, region))
        tail = len(self.prefix) + 1 if point_in(self.space, self.tail, region) else None
        return BlockSet(finite, tail)

    def blocks_equal(self, xi):
        finite = frozenset(j for j, v in enumerate(self.prefix, start=1) if v == xi)
        return BlockSet(finite, len(self.prefix) + 1 if self.tail == xi else None)

    def to_text(self):
        listed = ', '.join(format_point(v) for v in self.prefix)
        return f"[{listed}] then {format_point(self.tail)}"


@dataclass(frozen=True)
class StaircaseBlocks(BlockRule):
    """Cube values: coordinates below j are 1, the rest 0"""

    space = CANTOR_CUBE
    injective = True

    @property
    def limit(self):
        return ALL_ONES

    def value(self, j):
        return CubePoint((1,) * (j - 1), 0)

    def blocks_in(self, region):
        if not isinstance(region, Cylinder):
            raise ShapeMismatch(f"{region} is not a cylinder")
        result = BlockSet.everything()
        for coordinate, bit in region.constraints:
            allowed = BlockSet.from_block(coordinate + 1) if bit == 1 else BlockSet.of(range(1, coordinate + 1))
            result = result.intersect(allowed)
        return result

    def blocks_equal(self, xi):
        if xi.tail == 0 and all(b == 1 for b in xi.prefix):
            return BlockSet.of([len(xi.prefix) + 1])
        return BlockSet()

    def to_text(self):
        return 'staircase'


@dataclass(frozen=True)
class ProductBlocks(BlockRule):
    """Component rules evaluated on the same block index"""

    rules: Tuple[BlockRule, ...]

    @property
    def space(self):
        return FiniteProduct(tuple(r.space for r in self.rules))

    @property
    def injective(self):
        return any(r.injective for r in self.rules)

    @property
    def limit(self):
        limits = tuple(r.limit for r in self.rules)
        return None if any(x is None for x in limits) else limits

    def value(self, j):
        return tuple(r.value(j) for r in self.rules)

    def blocks_in(self, region):
        if not isinstance(region, Box) or len(region.parts) != len(self.rules):
            raise ShapeMismatch(f"{region} does not match a {len(self.rules)}-fold product")
        result = BlockSet.everything()
        for rule, part in zip(self.rules, region.parts):
            result = result.intersect(rule.blocks_in(part))
        return result

    def blocks_equal(self, xi):
        result = BlockSet.everything()
        for rule, component in zip(self.rules, xi):
            result = result.intersect(rule.blocks_equal(component))
        return result

    def uniformly_finite(self, xi):
        return all(r.uniformly_finite(x) for r, x in zip(self.rules, xi))

    def to_text(self):
        return '(' + '; '.join(r.to_text() for r in self.rules) + ')'


def constant_rule(point) -> EventuallyConstant:
    """Rule with the same value on every block"""
    if isinstance(point, CubePoint):
        return EventuallyConstant((), point, CANTOR_CUBE)
    if isinstance(point, tuple):
        return EventuallyConstant((), point, FiniteProduct(tuple(
            CANTOR_CUBE if isinstance(p, CubePoint) else UNIT_INTERVAL for p in point)))
    return EventuallyConstant((), Fraction(point), UNIT_INTERVAL)
