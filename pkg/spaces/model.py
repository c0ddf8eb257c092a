"""
Space Model Module
Unit interval, Cantor cube and finite products with their points and neighborhoods
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from .errors import NoMetric, ShapeMismatch

logger = logging.getLogger(__name__)


# ----------------------------------------------------------------------
# spaces

@dataclass(frozen=True)
class UnitInterval:
    """[0,1] with the usual metric"""

    first_countable = True
    metric_available = True

    def to_text(self) -> str:
        return 'I'


@dataclass(frozen=True)
class CantorCube:
    """{0,1}^ω with the product topology"""

    first_countable = True
    metric_available = False

    def to_text(self) -> str:
        return 'cube'


@dataclass(frozen=True)
class FiniteProduct:
    """Finite product of spaces"""

    factors: Tuple['Space', ...]

    first_countable = True

    def __post_init__(self):
        if not self.factors:
            raise ShapeMismatch("A finite product needs at least one factor")

    @property
    def metric_available(self) -> bool:
        return all(f.metric_available for f in self.factors)

    def to_text(self) -> str:
        return 'product(' + ', '.join(f.to_text() for f in self.factors) + ')'


Space = Union[UnitInterval, CantorCube, FiniteProduct]

UNIT_INTERVAL = UnitInterval()
CANTOR_CUBE = CantorCube()


# ----------------------------------------------------------------------
# points

@dataclass(frozen=True)
class CubePoint:
    """Eventually constant bit sequence: prefix bits, then `tail` forever"""

    prefix: Tuple[int, ...] = ()
    tail: int = 1

    def __post_init__(self):
        if self.tail not in (0, 1) or any(b not in (0, 1) for b in self.prefix):
            raise ShapeMismatch(f"Cube points are bit sequences, got {self.prefix};{self.tail}")
        prefix = list(self.prefix)
        while prefix and prefix[-1] == self.tail:
            prefix.pop()
        object.__setattr__(self, 'prefix', tuple(prefix))

    def bit(self, coordinate: int) -> int:
        """Bit at a 1-based coordinate"""
        if coordinate < 1:
            raise ShapeMismatch(f"Cube coordinates start at 1, got {coordinate}")
        if coordinate <= len(self.prefix):
            return self.prefix[coordinate - 1]
        return self.tail

    def bits(self, depth: int) -> Tuple[int, ...]:
        return tuple(self.bit(i) for i in range(1, depth + 1))

    def to_text(self) -> str:
        if not self.prefix:
            return 'ones' if self.tail == 1 else 'zeros'
        return f"cube({''.join(str(b) for b in self.prefix)};{self.tail})"

    def __str__(self) -> str:
        return self.to_text()


ALL_ONES = CubePoint((), 1)
ALL_ZEROS = CubePoint((), 0)

Point = Union[Fraction, CubePoint, Tuple]


def format_point(point) -> str:
    if isinstance(point, CubePoint):
        return point.to_text()
    if isinstance(point, tuple):
        return 'pair(' + ', '.join(format_point(p) for p in point) + ')'
    return f"rat({point})"


# ----------------------------------------------------------------------
# neighborhoods

@dataclass(frozen=True)
class Interval:
    """Rational interval with open or closed ends"""

    lo: Fraction
    hi: Fraction
    lo_closed: bool = True
    hi_closed: bool = True

    def contains(self, x: Fraction) -> bool:
        above = x >= self.lo if self.lo_closed else x > self.lo
        below = x <= self.hi if self.hi_closed else x < self.hi
        return above and below

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def halves(self) -> Tuple['Interval', 'Interval']:
        """Closed lower and upper halves sharing the midpoint"""
        mid = self.midpoint
        return Interval(self.lo, mid), Interval(mid, self.hi)

    def is_empty(self) -> bool:
        if self.lo == self.hi:
            return not (self.lo_closed and self.hi_closed)
        return self.lo > self.hi

    def intersect(self, other: 'Interval') -> 'Interval':
        if self.lo > other.lo or (self.lo == other.lo and not self.lo_closed):
            lo, lo_closed = self.lo, self.lo_closed
        else:
            lo, lo_closed = other.lo, other.lo_closed
        if self.hi < other.hi or (self.hi == other.hi and not self.hi_closed):
            hi, hi_closed = self.hi, self.hi_closed
        else:
            hi, hi_closed = other.hi, other.hi_closed
        return Interval(lo, hi, lo_closed, hi_closed)

    def distance_to(self, x: Fraction) -> Fraction:
        """Distance from x to the closure of the interval"""
        if x < self.lo:
            return self.lo - x
        if x > self.hi:
            return x - self.hi
        return Fraction(0)

    def to_text(self) -> str:
        left = '[' if self.lo_closed else '('
        right = ']' if self.hi_closed else ')'
        return f"{left}{self.lo},{self.hi}{right}"

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class Ball:
    """Open ball of the interval metric"""

    center: Fraction
    radius: Fraction

    def __post_init__(self):
        if self.radius <= 0:
            raise ShapeMismatch(f"Ball radius must be positive, got {self.radius}")

    def as_interval(self) -> Interval:
        return Interval(self.center - self.radius, self.center + self.radius, False, False)

    def to_text(self) -> str:
        return f"ball({self.center}, {self.radius})"

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class Cylinder:
    """Finitely many prescribed coordinates of the cube"""

    constraints: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        coords = [c for c, _ in self.constraints]
        if len(set(coords)) != len(coords):
            raise ShapeMismatch(f"Cylinder coordinates must be distinct: {coords}")
        if any(c < 1 or b not in (0, 1) for c, b in self.constraints):
            raise ShapeMismatch(f"Invalid cylinder constraints {self.constraints}")
        object.__setattr__(self, 'constraints', tuple(sorted(self.constraints)))

    @classmethod
    def of(cls, mapping) -> 'Cylinder':
        return cls(tuple(dict(mapping).items()))

    def to_text(self) -> str:
        return 'cyl{' + ','.join(f"{c}:{b}" for c, b in self.constraints) + '}'

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class Box:
    """Product of factor neighborhoods"""

    parts: Tuple['Nbhd', ...]

    def to_text(self) -> str:
        return 'box(' + ', '.join(p.to_text() for p in self.parts) + ')'

    def __str__(self) -> str:
        return self.to_text()


Nbhd = Union[Ball, Cylinder, Box]


# ----------------------------------------------------------------------
# operations

def check_point(space: Space, point) -> None:
    """Raise ShapeMismatch unless the point lives in the space"""
    if isinstance(space, UnitInterval):
        if not isinstance(point, (Fraction, int)) or isinstance(point, bool) or not 0 <= point <= 1:
            raise ShapeMismatch(f"{point!r} is not a rational point of [0,1]")
    elif isinstance(space, CantorCube):
        if not isinstance(point, CubePoint):
            raise ShapeMismatch(f"{point!r} is not a cube point")
    else:
        if not isinstance(point, tuple) or len(point) != len(space.factors):
            raise ShapeMismatch(f"{point!r} does not match {space.to_text()}")
        for factor, p in zip(space.factors, point):
            check_point(factor, p)


def in_nbhd(space: Space, point, nbhd: Nbhd) -> bool:
    """
    Exact neighborhood membership

    Args:
        space: Ambient space
        point: Point of the space
        nbhd: Neighborhood of matching shape

    Returns:
        True when the point lies in the neighborhood

    Raises:
        ShapeMismatch: when the neighborhood does not fit the space
    """
    if isinstance(space, UnitInterval):
        if not isinstance(nbhd, Ball):
            raise ShapeMismatch(f"{nbhd} is not an interval neighborhood")
        return abs(Fraction(point) - nbhd.center) < nbhd.radius
    if isinstance(space, CantorCube):
        if not isinstance(nbhd, Cylinder):
            raise ShapeMismatch(f"{nbhd} is not a cylinder")
        return all(point.bit(c) == b for c, b in nbhd.constraints)
    if not isinstance(nbhd, Box) or len(nbhd.parts) != len(space.factors):
        raise ShapeMismatch(f"{nbhd} does not match {space.to_text()}")
    return all(in_nbhd(f, p, u) for f, p, u in zip(space.factors, point, nbhd.parts))


def basis_family(space: Space, point, depth: int) -> List[Nbhd]:
    """
    Decreasing neighborhood basis truncated at `depth`

    Args:
        space: Ambient space
        point: Center point
        depth: Number of neighborhoods (>= 1)

    Returns:
        Balls of radius 2^-k, depth-k cylinders, or component-wise boxes
    """
    if depth < 1:
        raise ValueError(f"basis depth must be >= 1, got {depth}")
    check_point(space, point)
    if isinstance(space, UnitInterval):
        return [Ball(Fraction(point), Fraction(1, 2 ** k)) for k in range(1, depth + 1)]
    if isinstance(space, CantorCube):
        return [Cylinder(tuple((i, point.bit(i)) for i in range(1, k + 1))) for k in range(1, depth + 1)]
    columns = [basis_family(f, p, depth) for f, p in zip(space.factors, point)]
    return [Box(tuple(col[k] for col in columns)) for k in range(depth)]


def basis_schedule(space: Space) -> str:
    if isinstance(space, UnitInterval):
        return 'balls of radius 2^-k'
    if isinstance(space, CantorCube):
        return 'cylinders fixing coordinates 1..k'
    return 'boxes of ' + ', '.join(basis_schedule(f) for f in space.factors)


def distance(space: Space, p, q) -> Fraction:
    """Interval metric, max metric on products"""
    if isinstance(space, UnitInterval):
        return abs(Fraction(p) - Fraction(q))
    if isinstance(space, CantorCube) or not space.metric_available:
        raise NoMetric(f"{space.to_text()} has no metric")
    return max(distance(f, a, b) for f, a, b in zip(space.factors, p, q))


def eps_net(space: Space, eps: Fraction) -> List:
    """
    Finite set of centers whose eps-balls cover the space

    Args:
        space: Metric space
        eps: Positive rational radius

    Returns:
        Centers {0, eps, 2eps, ...} ∩ [0,1] (cartesian products for product spaces)

    Raises:
        NoMetric: for the Cantor cube
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    if isinstance(space, UnitInterval):
        return [k * eps for k in range(int(1 / eps) + 1) if k * eps <= 1]
    if isinstance(space, CantorCube):
        raise NoMetric("The Cantor cube has no epsilon-nets in this toolkit")
    return [tuple(c) for c in itertools.product(*(eps_net(f, eps) for f in space.factors))]
