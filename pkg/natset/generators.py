"""
Generators Module
Infinite generators of the index-set normal form
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

import numpy as np

from .decomposition import TWO_ADIC, BlockSet, Decomposition, Progression
from .errors import HorizonExceeded

logger = logging.getLogger(__name__)


def _decomposition_suffix(decomposition: Decomposition) -> str:
    return '' if decomposition == TWO_ADIC else f";{decomposition.name}"


class Generator:
    """Common interface of the normal-form generators"""

    sampled = False
    spread = False

    def progressions(self) -> Tuple[Progression, ...]:
        """Disjoint residue progressions whose union is the generator"""
        return ()

    def contains(self, n: int) -> bool:
        return any(p.contains(n) for p in self.progressions())

    def first_element(self) -> Optional[int]:
        firsts = [p.first for p in self.progressions()]
        return min(firsts) if firsts else None

    def advance(self, past: int) -> Optional['Generator']:
        """Same generator restricted to elements greater than `past` (None when unsupported)"""
        return None

    def to_text(self) -> str:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class Tail(Generator):
    """{n : n >= start}"""

    start: int

    def progressions(self):
        return (Progression(0, 1, self.start),)

    def advance(self, past):
        return Tail(max(self.start, past + 1))

    def to_text(self):
        return f"tail({self.start})"


@dataclass(frozen=True)
class AP(Generator):
    """{a, a+d, a+2d, ...}"""

    a: int
    d: int

    def __post_init__(self):
        if self.a < 1 or self.d < 1:
            raise ValueError(f"ap({self.a},{self.d}) needs a >= 1 and d >= 1")

    def progressions(self):
        return (Progression(self.a % self.d, self.d, self.a),)

    def advance(self, past):
        if past < self.a:
            return self
        return AP(self.a + self.d * ((past - self.a) // self.d + 1), self.d)

    def to_text(self):
        return f"ap({self.a},{self.d})"


@dataclass(frozen=True)
class Block(Generator):
    """Block j of a decomposition"""

    j: int
    decomposition: Decomposition = field(default=TWO_ADIC)

    def __post_init__(self):
        if self.j < 1:
            raise ValueError(f"block index must be >= 1, got {self.j}")

    def progressions(self):
        return self.decomposition.block_progressions(self.j)

    def advance(self, past):
        return BlockTail(self.j, past + 1, self.decomposition)

    def to_text(self):
        return f"block({self.j}{_decomposition_suffix(self.decomposition)})"


@dataclass(frozen=True)
class BlockTail(Generator):
    """Block j from n0 on"""

    j: int
    n0: int
    decomposition: Decomposition = field(default=TWO_ADIC)

    def progressions(self):
        return tuple(p.starting_at(self.n0) for p in self.decomposition.block_progressions(self.j))

    def advance(self, past):
        return BlockTail(self.j, max(self.n0, past + 1), self.decomposition)

    def to_text(self):
        return f"blocktail({self.j},{self.n0}{_decomposition_suffix(self.decomposition)})"


@dataclass(frozen=True)
class BlockAP(Generator):
    """Block j intersected with ap(a,d)"""

    j: int
    a: int
    d: int
    decomposition: Decomposition = field(default=TWO_ADIC)

    def progressions(self):
        base = Progression(self.a % self.d, self.d, self.a)
        pieces = (base.meet(p) for p in self.decomposition.block_progressions(self.j))
        return tuple(p for p in pieces if p is not None)

    def advance(self, past):
        if past < self.a:
            return self
        return BlockAP(self.j, self.a + self.d * ((past - self.a) // self.d + 1), self.d, self.decomposition)

    def to_text(self):
        return f"blockap({self.j},{self.a},{self.d}{_decomposition_suffix(self.decomposition)})"


@dataclass(frozen=True)
class Spread(Generator):
    """
    The first `per` elements of ap(a,d) inside every block j >= from_block

    Meets every block it touches in a finite set, so it can meet infinitely
    many blocks while having density 0.
    """

    a: int
    d: int
    from_block: int
    per: int = 1
    decomposition: Decomposition = field(default=TWO_ADIC)

    spread = True

    @property
    def base_progression(self) -> Progression:
        return Progression(self.a % self.d, self.d, self.a)

    def blocks_met(self) -> BlockSet:
        return self.decomposition.blocks_met(self.base_progression).intersect(
            BlockSet.from_block(self.from_block))

    def block_elements(self, j: int) -> List[int]:
        """Elements of the spread inside block j"""
        if j < self.from_block:
            return []
        pieces = [self.base_progression.meet(p) for p in self.decomposition.block_progressions(j)]
        candidates = []
        for piece in pieces:
            if piece is not None:
                candidates.extend(piece.nth(k) for k in range(1, self.per + 1))
        return sorted(candidates)[:self.per]

    def elements_upto(self, N: int) -> List[int]:
        found = []
        j = self.from_block
        while self.decomposition.block_start(j) <= N:
            found.extend(n for n in self.block_elements(j) if n <= N)
            j += 1
        return sorted(found)

    def elements_in_blocks(self, blocks: List[int]) -> List[int]:
        found = []
        for j in blocks:
            found.extend(self.block_elements(j))
        return sorted(found)

    def progressions(self):
        return ()

    def contains(self, n: int) -> bool:
        if n < 1:
            return False
        return n in self.block_elements(self.decomposition.block_of(n))

    def first_element(self):
        met = self.blocks_met()
        if met.is_empty:
            return None
        return self.block_elements(met.lowest(1)[0])[0]

    def raised_to(self, from_block: int) -> 'Spread':
        return Spread(self.a, self.d, max(self.from_block, from_block), self.per, self.decomposition)

    def to_text(self):
        return (f"spread({self.a},{self.d},{self.from_block},{self.per}"
                f"{_decomposition_suffix(self.decomposition)})")


@dataclass(frozen=True)
class Sampled(Generator):
    """
    Opaque set known only through a membership predicate up to a horizon

    `declared_density` is set only when the producer can certify the natural
    density of the set (e.g. hit sets of an equidistributed sequence).
    """

    label: str
    horizon: int
    predicate: Callable[[int], bool] = field(compare=False, repr=False)
    mask_fn: Optional[Callable[[int], np.ndarray]] = field(default=None, compare=False, repr=False)
    declared_density: Optional[Fraction] = None

    sampled = True

    def contains(self, n: int) -> bool:
        if n > self.horizon:
            raise HorizonExceeded(f"sampled<{self.label}> queried at {n} past horizon {self.horizon}")
        return bool(self.predicate(n))

    def mask(self, N: int) -> np.ndarray:
        """Boolean membership array indexed 0..N (index 0 unused)"""
        if N > self.horizon:
            raise HorizonExceeded(f"sampled<{self.label}> scanned to {N} past horizon {self.horizon}")
        if self.mask_fn is not None:
            return np.asarray(self.mask_fn(N), dtype=bool)
        arr = np.zeros(N + 1, dtype=bool)
        arr[1:] = np.fromiter((bool(self.predicate(n)) for n in range(1, N + 1)), dtype=bool, count=N)
        return arr

    def first_element(self):
        hits = np.nonzero(self.mask(self.horizon))[0]
        return int(hits[0]) if len(hits) else None

    def to_text(self):
        return f"sampled<{self.label}>@{self.horizon}"


def generator_for(progression: Progression) -> Generator:
    """Smallest typed generator for a bare progression"""
    if progression.modulus == 1:
        return Tail(progression.first)
    return AP(progression.first, progression.modulus)
