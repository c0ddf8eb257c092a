"""
Set Descriptions
Finite point sets and finite unions of rational intervals inside [0,1]

    points{0, 1/2}   intervals{(0,1/3), [1/2,1]}   empty
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from natset import NotationError
from spaces import Interval, parse_interval, parse_point, split_arguments


@dataclass(frozen=True)
class FinitePointSet:
    """Finitely many points of [0,1]"""

    points: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        points = tuple(sorted(set(Fraction(p) for p in self.points)))
        if any(not 0 <= p <= 1 for p in points):
            raise NotationError(f"Points lie in [0,1], got {points}")
        object.__setattr__(self, 'points', points)

    @property
    def is_empty(self) -> bool:
        return not self.points

    def contains(self, x: Fraction) -> bool:
        return x in self.points

    def distance_to(self, x: Fraction) -> Optional[Fraction]:
        """Distance from x to the set (None for the empty set)"""
        return min((abs(p - x) for p in self.points), default=None)

    def approach(self, x: Fraction) -> Optional[Tuple[Fraction, Fraction]]:
        # finite sets are closed: nothing outside them is approached
        return None

    def as_intervals(self) -> 'IntervalUnion':
        return IntervalUnion(tuple(Interval(p, p) for p in self.points))

    def to_text(self) -> str:
        return 'points{' + ', '.join(str(p) for p in self.points) + '}'

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class IntervalUnion:
    """Finite union of rational intervals inside [0,1]"""

    intervals: Tuple[Interval, ...] = ()

    def __post_init__(self):
        for interval in self.intervals:
            if interval.lo < 0 or interval.hi > 1 or interval.lo > interval.hi:
                raise NotationError(f"Intervals must lie in [0,1], got {interval}")
        kept = tuple(dict.fromkeys(i for i in self.intervals if not i.is_empty()))
        object.__setattr__(self, 'intervals', kept)

    @property
    def is_empty(self) -> bool:
        return not self.intervals

    def contains(self, x: Fraction) -> bool:
        return any(i.contains(x) for i in self.intervals)

    def distance_to(self, x: Fraction) -> Optional[Fraction]:
        return min((i.distance_to(x) for i in self.intervals), default=None)

    def approach(self, x: Fraction) -> Optional[Tuple[Fraction, Fraction]]:
        """
        Direction of approach to a boundary point outside the set

        Returns:
            (scale, offset) with x + scale/(j + offset) inside one interval for every j >= 1,
            or None when no interval has x as an open endpoint
        """
        for interval in self.intervals:
            if interval.lo == interval.hi:
                continue
            if x == interval.lo:
                return interval.width, Fraction(1)
            if x == interval.hi:
                return -interval.width, Fraction(1)
        return None

    def as_intervals(self) -> 'IntervalUnion':
        return self

    def to_text(self) -> str:
        return 'intervals{' + ', '.join(i.to_text() for i in self.intervals) + '}'

    def __str__(self) -> str:
        return self.to_text()


SetDescription = Union[FinitePointSet, IntervalUnion]


def union_of(a: SetDescription, b: SetDescription) -> SetDescription:
    """Union of two descriptions, staying finite when both are"""
    if isinstance(a, FinitePointSet) and isinstance(b, FinitePointSet):
        return FinitePointSet(a.points + b.points)
    return IntervalUnion(a.as_intervals().intervals + b.as_intervals().intervals)


def parse_set(text: str) -> SetDescription:
    """
    Parse a set description

    Args:
        text: 'points{...}', 'intervals{...}' or 'empty'

    Returns:
        FinitePointSet or IntervalUnion

    Raises:
        NotationError: on malformed input
    """
    text = text.strip()
    if text == 'empty':
        return FinitePointSet()
    if text.startswith('points{') and text.endswith('}'):
        return FinitePointSet(tuple(parse_point(p) for p in split_arguments(text[7:-1])))
    if text.startswith('intervals{') and text.endswith('}'):
        return IntervalUnion(tuple(parse_interval(i) for i in split_arguments(text[10:-1])))
    raise NotationError(f"Unknown set description '{text}' (use points{{...}}, intervals{{...}} or empty)")

