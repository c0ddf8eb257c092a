"""
Decomposition Module
Residue progressions, block sets and the valuation decompositions of the naturals
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import FrozenSet, Iterable, List, Optional, Tuple

from sympy import multiplicity
from sympy.ntheory.modular import solve_congruence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Progression:
    """Residue class {n >= start : n = residue mod modulus}"""

    residue: int
    modulus: int
    start: int = 1

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"Progression modulus must be positive, got {self.modulus}")
        object.__setattr__(self, 'residue', self.residue % self.modulus)
        object.__setattr__(self, 'start', max(1, self.start))

    @property
    def first(self) -> int:
        """Smallest element"""
        return self.start + (self.residue - self.start) % self.modulus

    @property
    def density(self) -> Fraction:
        return Fraction(1, self.modulus)

    def contains(self, n: int) -> bool:
        return n >= self.start and n % self.modulus == self.residue

    def count(self, N: int) -> int:
        """Number of elements in [1, N]"""
        first = self.first
        if N < first:
            return 0
        return (N - first) // self.modulus + 1

    def nth(self, k: int) -> int:
        return self.first + (k - 1) * self.modulus

    def starting_at(self, start: int) -> 'Progression':
        return Progression(self.residue, self.modulus, max(self.start, start))

    def compatible(self, other: 'Progression') -> bool:
        """True when the two residue classes share elements"""
        return (self.residue - other.residue) % gcd(self.modulus, other.modulus) == 0

    def meet(self, other: 'Progression') -> Optional['Progression']:
        """
        Intersect two progressions

        Args:
            other: Progression to intersect with

        Returns:
            The intersection as a progression, or None when empty
        """
        if not self.compatible(other):
            return None
        start = max(self.start, other.start)
        if self.modulus % other.modulus == 0:
            return Progression(self.residue, self.modulus, start)
        if other.modulus % self.modulus == 0:
            return Progression(other.residue, other.modulus, start)
        solved = solve_congruence((self.residue, self.modulus), (other.residue, other.modulus))
        if solved is None:
            return None
        residue, modulus = solved
        return Progression(int(residue), int(modulus), start)

    def subset_of(self, other: 'Progression') -> bool:
        return (self.modulus % other.modulus == 0
                and self.first % other.modulus == other.residue
                and self.first >= other.start)

    def same_set(self, other: 'Progression') -> bool:
        return self.modulus == other.modulus and self.first == other.first


@dataclass(frozen=True)
class BlockSet:
    """Set of block indices of the form finite ∪ [tail_from, ∞)"""

    finite: FrozenSet[int] = frozenset()
    tail_from: Optional[int] = None

    def __post_init__(self):
        finite = frozenset(j for j in self.finite if j >= 1)
        if self.tail_from is not None:
            tail = max(1, self.tail_from)
            while tail - 1 in finite:
                tail -= 1
            finite = frozenset(j for j in finite if j < tail)
            object.__setattr__(self, 'tail_from', tail)
        object.__setattr__(self, 'finite', finite)

    @classmethod
    def of(cls, blocks: Iterable[int]) -> 'BlockSet':
        return cls(frozenset(blocks))

    @classmethod
    def from_block(cls, j: int) -> 'BlockSet':
        return cls(frozenset(), j)

    @classmethod
    def everything(cls) -> 'BlockSet':
        return cls(frozenset(), 1)

    def contains(self, j: int) -> bool:
        return j in self.finite or (self.tail_from is not None and j >= self.tail_from)

    @property
    def is_finite(self) -> bool:
        return self.tail_from is None

    @property
    def is_empty(self) -> bool:
        return self.tail_from is None and not self.finite

    def union(self, other: 'BlockSet') -> 'BlockSet':
        tails = [t for t in (self.tail_from, other.tail_from) if t is not None]
        return BlockSet(self.finite | other.finite, min(tails) if tails else None)

    def intersect(self, other: 'BlockSet') -> 'BlockSet':
        finite = {j for j in self.finite if other.contains(j)}
        finite |= {j for j in other.finite if self.contains(j)}
        if self.tail_from is None or other.tail_from is None:
            return BlockSet(frozenset(finite))
        return BlockSet(frozenset(finite), max(self.tail_from, other.tail_from))

    def complement(self) -> 'BlockSet':
        if self.tail_from is not None:
            return BlockSet(frozenset(j for j in range(1, self.tail_from) if j not in self.finite))
        top = max(self.finite, default=0)
        return BlockSet(frozenset(j for j in range(1, top + 1) if j not in self.finite), top + 1)

    def difference(self, other: 'BlockSet') -> 'BlockSet':
        return self.intersect(other.complement())

    def lowest(self, count: int, above: int = 0) -> List[int]:
        """First `count` members greater than `above`"""
        found = []
        for j in sorted(self.finite):
            if j > above and len(found) < count:
                found.append(j)
        if self.tail_from is not None:
            j = max(self.tail_from, above + 1)
            while len(found) < count:
                if j not in found:
                    found.append(j)
                j += 1
        return sorted(found)[:count]

    def members_upto(self, J: int) -> List[int]:
        return [j for j in range(1, J + 1) if self.contains(j)]

    def describe(self) -> str:
        parts = []
        if self.finite:
            parts.append('{' + ','.join(str(j) for j in sorted(self.finite)) + '}')
        if self.tail_from is not None:
            parts.append(f"[{self.tail_from},inf)")
        return ' u '.join(parts) if parts else '{}'


@dataclass(frozen=True)
class Decomposition:
    """
    Partition of the naturals into blocks by p-adic valuation

    Block j holds the n whose exponent of `base` equals j-1; for base 2 these
    are the odd multiples of 2^(j-1).
    """

    name: str
    base: int = field(default=2)

    def block_of(self, n: int) -> int:
        if n < 1:
            raise ValueError(f"Block index requested for non-positive {n}")
        if self.base == 2:
            return (n & -n).bit_length()
        return int(multiplicity(self.base, n)) + 1

    def block_start(self, j: int) -> int:
        """Smallest element of block j"""
        return self.base ** (j - 1)

    def block_progressions(self, j: int) -> Tuple[Progression, ...]:
        step = self.base ** (j - 1)
        return tuple(Progression(r * step, step * self.base) for r in range(1, self.base))

    def tail_progression(self, j: int) -> Progression:
        """Union of all blocks from j on (multiples of base^(j-1))"""
        return Progression(0, self.base ** (j - 1))

    def block_density(self, j: int) -> Fraction:
        return Fraction(self.base - 1, self.base ** j)

    def last_block_upto(self, N: int) -> int:
        """Largest j whose block has an element <= N"""
        j = 1
        while self.block_start(j + 1) <= N:
            j += 1
        return j

    def blocks_met(self, progression: Progression) -> BlockSet:
        """
        Blocks a progression meets (every met block is met infinitely)

        Args:
            progression: Residue progression

        Returns:
            BlockSet of the blocks met
        """
        e = int(multiplicity(self.base, progression.modulus))
        power = self.base ** e
        rest = progression.residue % power
        if rest == 0:
            return BlockSet.from_block(e + 1)
        return BlockSet.of([int(multiplicity(self.base, rest)) + 1])

    def to_text(self) -> str:
        return self.name


TWO_ADIC = Decomposition('2adic', 2)
THREE_ADIC = Decomposition('3adic', 3)

DECOMPOSITIONS = {
    TWO_ADIC.name: TWO_ADIC,
    THREE_ADIC.name: THREE_ADIC,
}


def get_decomposition(name: Optional[str] = None) -> Decomposition:
    """
    Look up a registered decomposition

    Args:
        name: Registry name (default: canonical 2-adic)

    Returns:
        Decomposition instance
    """
    from .config import DEFAULT_DECOMPOSITION
    from .errors import NotationError

    key = name or DEFAULT_DECOMPOSITION
    if key not in DECOMPOSITIONS:
        raise NotationError(f"Unknown decomposition '{key}' (known: {', '.join(sorted(DECOMPOSITIONS))})")
    return DECOMPOSITIONS[key]
