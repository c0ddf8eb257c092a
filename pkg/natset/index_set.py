"""
Index Set Module
Symbolic subsets of the positive naturals in closed normal form

A set is (finite part) ∪ (generators) minus (excluded finite part). Every
generator except Sampled has exact membership, prefix counts and density.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np

from .config import DIFFERENCE_PIECE_LIMIT, SAMPLED_HORIZON
from .decomposition import TWO_ADIC, BlockSet, Decomposition, Progression
from .errors import HorizonExceeded, OutOfRange
from .generators import (AP, Block, BlockAP, BlockTail, Generator, Sampled, Spread, Tail,
                         generator_for)
from .verdict import BlockSignature, Verdict

logger = logging.getLogger(__name__)

ABSORB_SCAN_LIMIT = 4096


class SetOperation(Enum):
    """Binary operations accepted by combine()"""
    UNION = "union"
    DIFFERENCE = "difference"
    INTERSECT = "intersect"


@dataclass(frozen=True)
class BlockProfile:
    """Blocks a set meets infinitely / at all"""
    infinite: BlockSet
    met: BlockSet
    exact: bool


def _reduce(progressions: Iterable[Progression]) -> List[Progression]:
    """Drop duplicate progressions and those contained in another"""
    kept: List[Progression] = []
    for p in sorted(set(progressions), key=lambda q: (q.modulus, q.first)):
        if not any(p.subset_of(q) for q in kept):
            kept.append(p)
    return kept


def _union_count(progressions: Sequence[Progression], N: int) -> int:
    """|⋃ P ∩ [1,N]| by inclusion-exclusion, pruning empty intersections"""
    progs = [p for p in _reduce(progressions) if p.first <= N]
    total = 0
    for i, p in enumerate(progs):
        stack = [(i, p, 1)]
        while stack:
            k, inter, sign = stack.pop()
            total += sign * inter.count(N)
            for m in range(k + 1, len(progs)):
                nxt = inter.meet(progs[m])
                if nxt is not None and nxt.first <= N:
                    stack.append((m, nxt, -sign))
    return total


def _union_density(progressions: Sequence[Progression]) -> Fraction:
    progs = _reduce(progressions)
    total = Fraction(0)
    for i, p in enumerate(progs):
        stack = [(i, p, 1)]
        while stack:
            k, inter, sign = stack.pop()
            total += sign * inter.density
            for m in range(k + 1, len(progs)):
                nxt = inter.meet(progs[m])
                if nxt is not None:
                    stack.append((m, nxt, -sign))
    return total


def _same_sets(left: Sequence[Progression], right: Sequence[Progression]) -> bool:
    if len(left) != len(right):
        return False
    key = lambda p: (p.first, p.modulus)
    return all(a.same_set(b) for a, b in zip(sorted(left, key=key), sorted(right, key=key)))


def _blocks_of(generator: Generator, decomposition: Decomposition) -> BlockSet:
    met = BlockSet()
    for p in generator.progressions():
        met = met.union(decomposition.blocks_met(p))
    return met


def _absorbing_block(generator: Generator, decomposition: Decomposition) -> Optional[int]:
    """Smallest t with Δ_j ⊆ generator for every j >= t, if any"""
    for q in generator.progressions():
        if q.residue != 0:
            continue
        t = 1
        while t <= ABSORB_SCAN_LIMIT:
            power = decomposition.block_start(t)
            if power % q.modulus == 0 and power >= q.start:
                return t
            if power > q.modulus and power > q.start:
                break
            t += 1
    return None


@dataclass(frozen=True)
class IndexSet:
    """Subset of the positive naturals: finite ∪ generators − excluded"""

    finite: frozenset = frozenset()
    generators: Tuple[Generator, ...] = ()
    excluded: frozenset = frozenset()

    # ------------------------------------------------------------------
    # construction

    @classmethod
    def build(cls, finite: Iterable[int] = (), generators: Iterable[Generator] = (),
              excluded: Iterable[int] = ()) -> 'IndexSet':
        """
        Build a normalized index set

        Args:
            finite: Explicit elements
            generators: Infinite generators
            excluded: Elements removed from the union

        Returns:
            IndexSet in normal form
        """
        finite_set: Set[int] = {int(n) for n in finite if n >= 1}
        excluded_set: Set[int] = {int(n) for n in excluded if n >= 1}
        gens: List[Generator] = []
        for g in generators:
            if g.spread:
                met = g.blocks_met()
                if met.is_empty:
                    continue
                if met.is_finite:
                    finite_set.update(g.elements_in_blocks(sorted(met.finite)))
                    continue
            elif not g.sampled and not g.progressions():
                continue
            if g not in gens:
                gens.append(g)

        def covered(n: int, skip: Optional[int] = None) -> Optional[bool]:
            unknown = False
            for idx, g in enumerate(gens):
                if idx == skip:
                    continue
                try:
                    if g.contains(n):
                        return True
                except HorizonExceeded:
                    unknown = True
            return None if unknown else False

        for n in sorted(finite_set & excluded_set):
            finite_set.discard(n)
            if covered(n) is False:
                excluded_set.discard(n)
        excluded_set = {x for x in excluded_set if covered(x) is not False}

        changed = True
        while changed:
            changed = False
            for idx, g in enumerate(gens):
                if g.sampled or g.spread:
                    continue
                first = g.first_element()
                if first is None or first not in excluded_set or covered(first, skip=idx) is not False:
                    continue
                advanced = g.advance(first)
                if advanced is None:
                    continue
                gens[idx] = advanced
                excluded_set.discard(first)
                changed = True

        final: List[Generator] = []
        for g in gens:
            if (g.sampled or g.spread or g.progressions()) and g not in final:
                final.append(g)
        return cls(frozenset(finite_set), tuple(final), frozenset(excluded_set))

    @classmethod
    def empty(cls) -> 'IndexSet':
        return cls()

    @classmethod
    def finite_set(cls, elements: Iterable[int]) -> 'IndexSet':
        return cls.build(finite=elements)

    @classmethod
    def naturals(cls) -> 'IndexSet':
        return cls.build(generators=[Tail(1)])

    @classmethod
    def tail(cls, start: int) -> 'IndexSet':
        return cls.build(generators=[Tail(start)])

    @classmethod
    def ap(cls, a: int, d: int) -> 'IndexSet':
        return cls.build(generators=[AP(a, d)])

    @classmethod
    def block(cls, j: int, decomposition: Decomposition = TWO_ADIC) -> 'IndexSet':
        return cls.build(generators=[Block(j, decomposition)])

    @classmethod
    def blocks(cls, js: Iterable[int], decomposition: Decomposition = TWO_ADIC) -> 'IndexSet':
        return cls.build(generators=[Block(j, decomposition) for j in js])

    @classmethod
    def block_tail(cls, j: int, n0: int, decomposition: Decomposition = TWO_ADIC) -> 'IndexSet':
        return cls.build(generators=[BlockTail(j, n0, decomposition)])

    @classmethod
    def block_ap(cls, j: int, a: int, d: int, decomposition: Decomposition = TWO_ADIC) -> 'IndexSet':
        return cls.build(generators=[BlockAP(j, a, d, decomposition)])

    @classmethod
    def spread(cls, a: int, d: int, from_block: int, per: int = 1,
               decomposition: Decomposition = TWO_ADIC) -> 'IndexSet':
        return cls.build(generators=[Spread(a, d, from_block, per, decomposition)])

    @classmethod
    def sampled(cls, predicate: Callable[[int], bool], horizon: int = SAMPLED_HORIZON,
                label: str = 'predicate', mask: Optional[Callable[[int], np.ndarray]] = None,
                declared_density: Optional[Fraction] = None) -> 'IndexSet':
        return cls.build(generators=[Sampled(label, horizon, predicate, mask, declared_density)])

    @classmethod
    def from_block_set(cls, blocks: BlockSet, decomposition: Decomposition = TWO_ADIC) -> 'IndexSet':
        """Union of the blocks Δ_j for j in `blocks`"""
        gens: List[Generator] = [Block(j, decomposition) for j in sorted(blocks.finite)]
        if blocks.tail_from is not None:
            gens.append(generator_for(decomposition.tail_progression(blocks.tail_from)))
        return cls.build(generators=gens)

    # ------------------------------------------------------------------
    # structure

    @property
    def is_sampled(self) -> bool:
        return any(g.sampled for g in self.generators)

    @property
    def horizon(self) -> Optional[int]:
        horizons = [g.horizon for g in self.generators if g.sampled]
        return min(horizons) if horizons else None

    def progressions(self) -> List[Progression]:
        found: List[Progression] = []
        for g in self.generators:
            if not g.sampled and not g.spread:
                found.extend(g.progressions())
        return found

    def spreads(self) -> List[Spread]:
        return [g for g in self.generators if g.spread]

    def sampled_parts(self) -> List[Sampled]:
        return [g for g in self.generators if g.sampled]

    @property
    def is_naturals(self) -> bool:
        return (not self.excluded and not self.is_sampled
                and any(p.modulus == 1 and p.first == 1 for p in self.progressions()))

    # ------------------------------------------------------------------
    # queries

    def contains(self, n: int) -> bool:
        """
        Exact membership

        Args:
            n: Positive natural

        Returns:
            True when n belongs to the set

        Raises:
            HorizonExceeded: when only a sampled part could decide past its horizon
        """
        if n < 1:
            raise ValueError(f"membership is defined for n >= 1, got {n}")
        if n in self.excluded:
            return False
        if n in self.finite:
            return True
        exact = [g for g in self.generators if not g.sampled]
        if any(g.contains(n) for g in exact):
            return True
        return any(g.contains(n) for g in self.generators if g.sampled)

    def __contains__(self, n: int) -> bool:
        return self.contains(n)

    def membership_mask(self, N: int) -> np.ndarray:
        """Boolean array indexed 0..N; entry n is membership of n"""
        arr = np.zeros(N + 1, dtype=bool)
        for p in self.progressions():
            first = p.first
            if first > N:
                continue
            if p.modulus > N:
                arr[first] = True
            else:
                arr[first::p.modulus] = True
        for s in self.spreads():
            for n in s.elements_upto(N):
                arr[n] = True
        for g in self.sampled_parts():
            arr |= g.mask(N)
        for n in self.finite:
            if n <= N:
                arr[n] = True
        for x in self.excluded:
            if x <= N:
                arr[x] = False
        arr[0] = False
        return arr

    def prefix_count(self, N: int) -> int:
        """
        Exact |S ∩ [1, N]|

        Args:
            N: Prefix length

        Returns:
            Number of elements not exceeding N
        """
        if N < 1:
            return 0
        if self.is_sampled:
            if N > self.horizon:
                raise HorizonExceeded(f"prefix count to {N} past horizon {self.horizon} of {self}")
            return int(np.count_nonzero(self.membership_mask(N)))
        progs = self.progressions()
        total = _union_count(progs, N)
        spread_elements: Set[int] = set()
        for s in self.spreads():
            spread_elements.update(s.elements_upto(N))
        total += sum(1 for n in spread_elements if not any(p.contains(n) for p in progs))
        total += sum(1 for n in self.finite
                     if n <= N and n not in spread_elements and not any(p.contains(n) for p in progs))
        total -= sum(1 for x in self.excluded if x <= N)
        return total

    def nth(self, k: int) -> int:
        """
        k-th smallest element

        Args:
            k: Rank (1-based)

        Returns:
            The element

        Raises:
            OutOfRange: finite set with fewer than k elements
            HorizonExceeded: sampled set without k elements below its horizon
        """
        if k < 1:
            raise ValueError(f"rank must be >= 1, got {k}")
        if self.is_sampled:
            hits = np.flatnonzero(self.membership_mask(self.horizon))
            if len(hits) >= k:
                return int(hits[k - 1])
            raise HorizonExceeded(f"only {len(hits)} elements of {self} below horizon {self.horizon}")
        if not self.generators:
            elements = sorted(self.finite)
            if len(elements) < k:
                raise OutOfRange(f"{self} has {len(elements)} elements, requested element {k}")
            return elements[k - 1]
        low, high = 0, 1
        while self.prefix_count(high) < k:
            low, high = high, high * 2
        while high - low > 1:
            mid = (low + high) // 2
            if self.prefix_count(mid) >= k:
                high = mid
            else:
                low = mid
        return high

    def head(self, k: int) -> List[int]:
        """Up to k smallest elements"""
        found = []
        for rank in range(1, k + 1):
            try:
                found.append(self.nth(rank))
            except OutOfRange:
                break
        return found

    def elements_upto(self, N: int) -> List[int]:
        return [int(n) for n in np.flatnonzero(self.membership_mask(N))]

    def is_empty(self) -> Optional[bool]:
        """Exact emptiness for closed forms, None for sampled sets"""
        if self.is_sampled:
            return None
        return not self.finite and not self.generators

    def is_finite_set(self) -> Verdict:
        """
        Decide finiteness

        Returns:
            Verdict: True iff the normal form has no infinite generator
        """
        infinite = [g for g in self.generators if not g.sampled]
        if infinite:
            return Verdict.false('infinite-generator', f"{infinite[0]} is infinite")
        if self.is_sampled:
            declared = [g.declared_density for g in self.sampled_parts() if g.declared_density]
            if declared:
                return Verdict.false('declared-density', f"density {max(declared)} > 0 forces infinitely many elements")
            return Verdict.unknown(self.horizon, 'sampled', 'finiteness cannot be certified by sampling')
        return Verdict.true('finite-normal-form', f"{len(self.finite)} explicit elements, no generator")

    def block_signature(self, decomposition: Decomposition, j: int) -> BlockSignature:
        """
        Classify S ∩ Δ_j

        Args:
            decomposition: Block decomposition
            j: Block index (>= 1)

        Returns:
            BlockSignature
        """
        if j < 1:
            raise ValueError(f"block index must be >= 1, got {j}")
        if any(decomposition.blocks_met(p).contains(j) for p in self.progressions()):
            return BlockSignature.INFINITE
        elements = {n for n in self.finite if decomposition.block_of(n) == j}
        foreign = False
        for s in self.spreads():
            if s.decomposition == decomposition:
                elements.update(s.block_elements(j))
            else:
                # blocks of another decomposition are unbounded, so the meet can be infinite
                foreign = True
        elements -= self.excluded
        if self.is_sampled or foreign:
            return BlockSignature.UNKNOWN
        return BlockSignature.FINITE_NONEMPTY if elements else BlockSignature.EMPTY

    def block_profile(self, decomposition: Decomposition) -> BlockProfile:
        """Blocks met infinitely and blocks met at all"""
        infinite = BlockSet()
        for p in self.progressions():
            infinite = infinite.union(decomposition.blocks_met(p))
        met = infinite.union(BlockSet.of(decomposition.block_of(n) for n in self.finite))
        exact = not self.is_sampled
        for s in self.spreads():
            if s.decomposition == decomposition:
                met = met.union(s.blocks_met())
            else:
                # counted elsewhere: blocks of another decomposition
                exact = False
        return BlockProfile(infinite, met, exact)

    def exact_density(self) -> Optional[Fraction]:
        """Natural density of a closed form (None for sampled sets)"""
        if self.is_sampled:
            return None
        return _union_density(self.progressions())

    def density_bounds(self) -> Tuple[Fraction, Optional[Fraction]]:
        """Certified (lower, upper) natural-density bounds; upper is None when unknown"""
        exact = _union_density(self.progressions())
        declared = [g.declared_density for g in self.sampled_parts()]
        lower = max([exact] + [d for d in declared if d is not None])
        if any(d is None for d in declared):
            return lower, None
        return lower, min(Fraction(1), exact + sum(declared, Fraction(0)))

    def subset_verdict(self, other: 'IndexSet', horizon: int = SAMPLED_HORIZON) -> Verdict:
        """Decide self ⊆ other (exact for closed forms, truncated otherwise)"""
        rest = self.difference(other)
        if not rest.is_sampled:
            if rest.is_empty():
                return Verdict.true('subset', f"{self} ⊆ {other}")
            return Verdict.false('subset', f"{rest.nth(1)} lies in {self} but not in {other}")
        depth = min(horizon, rest.horizon)
        hits = np.flatnonzero(rest.membership_mask(depth))
        if len(hits):
            return Verdict.false('subset', f"{int(hits[0])} lies in {self} but not in {other}")
        return Verdict.unknown(depth, 'subset-truncated', f"no counterexample to {self} ⊆ {other} below {depth}")

    # ------------------------------------------------------------------
    # algebra

    def union(self, other: 'IndexSet') -> 'IndexSet':
        def outside(x: int, s: 'IndexSet') -> bool:
            try:
                return not s.contains(x)
            except HorizonExceeded:
                return True
        excluded = {x for x in self.excluded | other.excluded if outside(x, self) and outside(x, other)}
        return IndexSet.build(self.finite | other.finite, self.generators + other.generators, excluded)

    def intersect(self, other: 'IndexSet') -> 'IndexSet':
        if other.is_naturals:
            return self
        if self.is_naturals:
            return other
        if self.is_sampled or other.is_sampled:
            return _sampled_combination(SetOperation.INTERSECT, self, other)
        finite = {n for n in self.finite if other.contains(n)}
        finite |= {n for n in other.finite if self.contains(n)}
        gens: List[Generator] = []
        for g in self.generators:
            for h in other.generators:
                met = _meet_generators(g, h)
                if met is None:
                    return _sampled_combination(SetOperation.INTERSECT, self, other)
                met_gens, met_finite = met
                gens.extend(met_gens)
                finite |= {n for n in met_finite if self.contains(n) and other.contains(n)}
        return IndexSet.build(finite, gens, self.excluded | other.excluded)

    def difference(self, other: 'IndexSet') -> 'IndexSet':
        if self.is_sampled or other.is_sampled:
            return _sampled_combination(SetOperation.DIFFERENCE, self, other)
        if not other.generators:
            return IndexSet.build(self.finite, self.generators, self.excluded | other.finite)
        kept: Set[int] = {n for n in self.finite if not other.contains(n)}
        kept |= {x for x in other.excluded if self.contains(x)}
        heads: Set[int] = set()
        excluded: Set[int] = set(self.excluded) | set(other.finite)
        gens: List[Generator] = []
        for g in self.generators:
            pieces = [g]
            for h in other.generators:
                nxt: List[Generator] = []
                for piece in pieces:
                    cut = _subtract_generator(piece, h)
                    if cut is None:
                        return _sampled_combination(SetOperation.DIFFERENCE, self, other)
                    cut_gens, cut_heads, cut_excluded = cut
                    nxt.extend(cut_gens)
                    heads.update(cut_heads)
                    excluded.update(cut_excluded)
                pieces = nxt
            gens.extend(pieces)
        kept |= {n for n in heads if not other.contains(n) and self.contains(n)}
        excluded -= kept
        return IndexSet.build(kept, gens, excluded)

    def restricted_to_blocks(self, blocks: BlockSet, decomposition: Decomposition) -> 'IndexSet':
        return self.intersect(IndexSet.from_block_set(blocks, decomposition))

    # ------------------------------------------------------------------
    # text

    def to_text(self) -> str:
        parts = []
        if self.finite:
            parts.append('fin{' + ','.join(str(n) for n in sorted(self.finite)) + '}')
        parts.extend(g.to_text() for g in self.generators)
        text = ' + '.join(parts) if parts else 'fin{}'
        if self.excluded:
            text += ' - fin{' + ','.join(str(n) for n in sorted(self.excluded)) + '}'
        return text

    def __str__(self) -> str:
        return self.to_text()


def combine(op, left: IndexSet, right: IndexSet) -> IndexSet:
    """
    Apply a set operation

    Args:
        op: SetOperation or its name ('union', 'difference', 'intersect')
        left: Left operand
        right: Right operand

    Returns:
        Resulting IndexSet (sampled when no closed form exists)
    """
    op = SetOperation(op) if not isinstance(op, SetOperation) else op
    if op is SetOperation.UNION:
        return left.union(right)
    if op is SetOperation.DIFFERENCE:
        return left.difference(right)
    return left.intersect(right)


def _sampled_combination(op: SetOperation, left: IndexSet, right: IndexSet) -> IndexSet:
    horizons = [h for h in (left.horizon, right.horizon) if h is not None] + [SAMPLED_HORIZON]
    horizon = min(horizons)
    if op is SetOperation.INTERSECT:
        predicate = lambda n: left.contains(n) and right.contains(n)
        mask = lambda N: left.membership_mask(N) & right.membership_mask(N)
    elif op is SetOperation.DIFFERENCE:
        predicate = lambda n: left.contains(n) and not right.contains(n)
        mask = lambda N: left.membership_mask(N) & ~right.membership_mask(N)
    else:
        predicate = lambda n: left.contains(n) or right.contains(n)
        mask = lambda N: left.membership_mask(N) | right.membership_mask(N)
    label = f"{op.value}({left}, {right})"
    logger.warning(f"No closed form for {label}; degrading to sampled at horizon {horizon}")
    return IndexSet.build(generators=[Sampled(label, horizon, predicate, mask)])


def _typed_meet(g: Generator, h: Generator) -> Optional[Generator]:
    for x, y in ((g, h), (h, g)):
        if isinstance(x, Tail) and isinstance(y, Block):
            return BlockTail(y.j, x.start, y.decomposition)
        if isinstance(x, Tail) and isinstance(y, BlockTail):
            return BlockTail(y.j, max(x.start, y.n0), y.decomposition)
        if isinstance(x, AP) and isinstance(y, Block):
            return BlockAP(y.j, x.a, x.d, y.decomposition)
    return None


def _meet_generators(g: Generator, h: Generator):
    """Closed-form g ∩ h as (generators, finite elements), or None"""
    if g.spread or h.spread:
        if g.spread and h.spread:
            return ([g], []) if g == h else None
        spread, other = (g, h) if g.spread else (h, g)
        return _meet_spread(spread, other)
    pieces = [p.meet(q) for p in g.progressions() for q in h.progressions()]
    pieces = [p for p in pieces if p is not None]
    if not pieces:
        return [], []
    if _same_sets(pieces, g.progressions()):
        return [g], []
    if _same_sets(pieces, h.progressions()):
        return [h], []
    typed = _typed_meet(g, h)
    if typed is not None and _same_sets(typed.progressions(), pieces):
        return [typed], []
    return [generator_for(p) for p in pieces], []


def _meet_spread(spread: Spread, other: Generator):
    decomposition = spread.decomposition
    other_blocks = _blocks_of(other, decomposition)
    spread_blocks = spread.blocks_met()
    if other_blocks.is_finite:
        blocks = sorted(spread_blocks.intersect(other_blocks).finite)
        return [], [n for n in spread.elements_in_blocks(blocks) if other.contains(n)]
    t = _absorbing_block(other, decomposition)
    if t is None:
        return None
    low = [j for j in range(spread.from_block, t) if spread_blocks.contains(j)]
    return [spread.raised_to(t)], [n for n in spread.elements_in_blocks(low) if other.contains(n)]


def _subtract_generator(g: Generator, h: Generator):
    """Closed-form g − h as (generators, kept finite elements, excluded elements), or None"""
    if g.spread:
        if h.spread:
            return ([], [], []) if g == h else None
        decomposition = g.decomposition
        h_blocks = _blocks_of(h, decomposition)
        if h_blocks.is_finite:
            blocks = sorted(g.blocks_met().intersect(h_blocks).finite)
            return [g], [], [n for n in g.elements_in_blocks(blocks) if h.contains(n)]
        t = _absorbing_block(h, decomposition)
        if t is None:
            return None
        low = [j for j in range(g.from_block, t) if g.blocks_met().contains(j)]
        return [], [n for n in g.elements_in_blocks(low) if not h.contains(n)], []
    if h.spread:
        g_blocks = _blocks_of(g, h.decomposition)
        if not g_blocks.is_finite:
            return None
        blocks = sorted(h.blocks_met().intersect(g_blocks).finite)
        return [g], [], [n for n in h.elements_in_blocks(blocks) if g.contains(n)]

    current = list(g.progressions())
    heads: List[int] = []
    touched = False
    for q in h.progressions():
        nxt: List[Progression] = []
        for p in current:
            r = p.meet(q)
            if r is None:
                nxt.append(p)
                continue
            touched = True
            if r.start > p.first:
                head_size = (r.start - p.first + p.modulus - 1) // p.modulus
                if head_size > DIFFERENCE_PIECE_LIMIT:
                    return None
                heads.extend(p.first + t * p.modulus for t in range(head_size))
            ratio = r.modulus // p.modulus
            if ratio - 1 > DIFFERENCE_PIECE_LIMIT:
                return None
            for t in range(ratio):
                residue = (p.residue + t * p.modulus) % r.modulus
                if residue != r.residue:
                    nxt.append(Progression(residue, r.modulus, r.start))
        current = nxt
    if not touched:
        return [g], [], []
    return [generator_for(p) for p in current], heads, []
