"""
Shrink Selector Module
Witness construction for the shrinking conditions (A) and (B)

Given non-members A_1..A_k (extended stationarily by A_i = A_k for i > k),
the selectors choose members B_i ⊆ A_i whose union is a non-member.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Set, Tuple

from natset import BlockSet, Decomposition, IndexSet, Spread, Verdict

from .config import MAX_BLOCK_SCAN
from .errors import NoFreshBlock, NotNonthin, UnsupportedShrink
from .families import Ideal, RestrictionIdeal

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ShrinkWitness:
    """Selected parts B_i, the union B, and the verdicts certifying them"""

    condition: str
    parts: Tuple[IndexSet, ...]
    tail: IndexSet
    union_set: IndexSet
    per_part: Tuple[Verdict, ...]
    tail_verdict: Verdict
    union_verdict: Verdict
    blocks: Tuple[Tuple[int, ...], ...]

    def reverify(self, ideal: Ideal) -> bool:
        """Re-run membership on every part and on the union"""
        again = [ideal.member(part).value for part in self.parts]
        return (again == [v.value for v in self.per_part]
                and ideal.member(self.union_set).value == self.union_verdict.value)


class ShrinkSelector:
    """Chooses shrinking-condition witnesses for DecA / DecB ideals"""

    def __init__(self, max_block_scan: int = MAX_BLOCK_SCAN):
        """
        Initialize shrink selector

        Args:
            max_block_scan: Highest block index searched for a fresh block
        """
        self.max_block_scan = max_block_scan

    def _prepare(self, ideal: Ideal, sets: Sequence[IndexSet], supported: bool,
                 condition: str) -> Tuple[Ideal, List[IndexSet]]:
        if not supported:
            raise UnsupportedShrink(f"{ideal} does not satisfy shrinking condition ({condition})")
        if not sets:
            raise ValueError("shrink selectors need at least one set")
        base = ideal
        prepared = list(sets)
        while isinstance(base, RestrictionIdeal):
            prepared = [A.intersect(base.domain) for A in prepared]
            base = base.parent
        for i, A in enumerate(prepared, start=1):
            verdict = base.member(A)
            if not verdict.is_false:
                raise NotNonthin(f"A_{i} = {A} is not certified outside {ideal}: {verdict.certificate}",
                                 verdict=verdict)
        return base, prepared

    def _fresh_blocks(self, candidates: BlockSet, used: Set[int], count: int, what: str) -> List[int]:
        fresh = candidates.difference(BlockSet.of(used)).lowest(count)
        if len(fresh) < count or (fresh and fresh[-1] > self.max_block_scan):
            raise NoFreshBlock(f"no fresh block for {what} among {candidates.describe()} "
                               f"(used {sorted(used)}, scan limit {self.max_block_scan})")
        return fresh

    def _finish(self, ideal: Ideal, condition: str, parts: List[IndexSet], tail: IndexSet,
                blocks: List[Tuple[int, ...]]) -> ShrinkWitness:
        union = tail
        for part in parts:
            union = union.union(part)
        per_part = tuple(ideal.member(part) for part in parts)
        union_verdict = ideal.member(union)
        if not union_verdict.is_false or not all(v.is_true for v in per_part):
            raise NoFreshBlock(f"selection for condition ({condition}) could not be certified: "
                               f"union {union_verdict.certificate}", verdict=union_verdict)
        witness = ShrinkWitness(condition, tuple(parts), tail, union, per_part,
                                ideal.member(tail), union_verdict, tuple(blocks))
        logger.info(f"Shrinking condition ({condition}) for {ideal}: union {union} -> {union_verdict}")
        return witness

    def shrink_a(self, ideal: Ideal, sets: Sequence[IndexSet],
                 sizes: Optional[Sequence[int]] = None) -> ShrinkWitness:
        """
        Finite parts B_i ⊆ A_i with a non-member union

        Args:
            ideal: Ideal satisfying condition (A)
            sets: Non-members A_1..A_k
            sizes: |B_i| (default i)

        Returns:
            ShrinkWitness; B_i meets sizes_i blocks untouched by earlier parts
        """
        base, prepared = self._prepare(ideal, sets, ideal.supports_shrink_a, 'A')
        sizes = list(sizes) if sizes is not None else list(range(1, len(prepared) + 1))
        if len(sizes) != len(prepared) or any(s < 1 for s in sizes):
            raise ValueError(f"sizes {sizes} must be positive and match the {len(prepared)} sets")
        decomposition = base.decomposition
        used: Set[int] = set()
        parts, blocks = [], []
        for i, (A, size) in enumerate(zip(prepared, sizes), start=1):
            chosen, chosen_blocks = [], []
            candidates = A.block_profile(decomposition).met
            while len(chosen) < size:
                j = self._fresh_blocks(candidates, used, 1, f"A_{i}")[0]
                used.add(j)
                piece = A.intersect(IndexSet.block(j, decomposition))
                if piece.is_empty():
                    continue
                chosen.append(piece.nth(1))
                chosen_blocks.append(j)
            parts.append(IndexSet.finite_set(chosen))
            blocks.append(tuple(chosen_blocks))
            logger.debug(f"B_{i} = {sorted(chosen)} in blocks {chosen_blocks}")
        tail = self._spread_tail(prepared[-1], decomposition, used)
        return self._finish(ideal, 'A', parts, tail, blocks)

    def _spread_tail(self, A: IndexSet, decomposition: Decomposition, used: Set[int]) -> IndexSet:
        """One element of A in each block past the used ones"""
        floor = max(used, default=0) + 1
        excluded_top = max(A.excluded, default=0)
        while decomposition.block_start(floor) <= excluded_top:
            floor += 1
        for p in A.progressions():
            met = decomposition.blocks_met(p)
            if met.tail_from is not None:
                spread = Spread(p.first, p.modulus, max(floor, met.tail_from), 1, decomposition)
                return IndexSet.build(generators=[spread])
        for s in A.spreads():
            if s.decomposition == decomposition and not s.blocks_met().is_finite:
                return IndexSet.build(generators=[Spread(s.a, s.d, max(floor, s.from_block), 1, decomposition)])
        raise NoFreshBlock(f"{A} has no part meeting infinitely many blocks")

    def shrink_b(self, ideal: Ideal, sets: Sequence[IndexSet]) -> ShrinkWitness:
        """
        Block pieces B_i = A_i ∩ Δ_{j_i} over fresh blocks

        Args:
            ideal: Ideal satisfying condition (B)
            sets: Non-members A_1..A_k

        Returns:
            ShrinkWitness; lowest fresh block wins
        """
        base, prepared = self._prepare(ideal, sets, ideal.supports_shrink_b, 'B')
        decomposition = base.decomposition
        finite_pieces_ok = base.supports_shrink_a
        used: Set[int] = set()
        parts, blocks = [], []
        for i, A in enumerate(prepared, start=1):
            profile = A.block_profile(decomposition)
            candidates = profile.met if finite_pieces_ok else profile.infinite
            while True:
                j = self._fresh_blocks(candidates, used, 1, f"A_{i}")[0]
                used.add(j)
                piece = A.intersect(IndexSet.block(j, decomposition))
                if not piece.is_empty():
                    break
            parts.append(piece)
            blocks.append((j,))
            logger.debug(f"B_{i} = {piece} (block {j})")
        last = prepared[-1]
        start = max(used) + 1
        tail = last.intersect(IndexSet.from_block_set(BlockSet.from_block(start), decomposition))
        return self._finish(ideal, 'B', parts, tail, blocks)
