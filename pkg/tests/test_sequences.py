"""
Test Sequences
Tests named sequences, block rules, exceptional sets, subsequences and notation
"""

from fractions import Fraction

import pytest

from ideals import DENSITY, DecBIdeal
from natset import BlockSet, IndexSet, NotationError
from sequences import (ConvergentBlocks, DomainViolation, EventuallyConstant, NotInDomain, SequenceFactory,
                       StaircaseBlocks, UnknownName, constant, parse_sequence, product_sequence)
from spaces import ALL_ONES, CANTOR_CUBE, Ball, Cylinder, CubePoint, FiniteProduct, Interval


class TestBlockRules:
    """Test value maps on block indices"""

    def test_convergent_blocks_preimage(self):
        rule = ConvergentBlocks(Fraction(0))
        blocks = rule.blocks_in(Ball(Fraction(0), Fraction(1, 4)))
        assert blocks == BlockSet.from_block(5)
        assert rule.blocks_equal(Fraction(1, 3)) == BlockSet.of([3])
        assert rule.uniformly_finite(Fraction(0))
        assert rule.injective

    def test_convergent_blocks_closed_interval(self):
        rule = ConvergentBlocks(Fraction(0))
        blocks = rule.blocks_in(Interval(Fraction(1, 4), Fraction(1, 2)))
        assert blocks.members_upto(10) == [2, 3, 4]
        assert blocks.is_finite

    def test_convergent_blocks_range_checked(self):
        with pytest.raises(ValueError):
            ConvergentBlocks(Fraction(1), Fraction(1))

    def test_eventually_constant(self):
        rule = EventuallyConstant((Fraction(1), Fraction(1, 2)), Fraction(0))
        blocks = rule.blocks_in(Ball(Fraction(0), Fraction(1, 4)))
        assert blocks == BlockSet.from_block(3)
        assert rule.blocks_equal(Fraction(1, 2)) == BlockSet.of([2])

    def test_staircase(self):
        rule = StaircaseBlocks()
        assert rule.value(3) == CubePoint((1, 1), 0)
        assert rule.blocks_in(Cylinder(((2, 1),))) == BlockSet.from_block(3)
        assert rule.blocks_in(Cylinder(((2, 0),))).members_upto(10) == [1, 2]
        assert rule.limit == ALL_ONES


class TestNamedSequences:
    """Test the four named sequences"""

    def test_inverse_blocks_terms(self, inverse_blocks):
        assert inverse_blocks.eval_at(1) == 1
        assert inverse_blocks.eval_at(12) == Fraction(1, 3)

    def test_inverse_blocks_exceptional_set(self, inverse_blocks, dec_b):
        exceptional = inverse_blocks.exceptional_set(Ball(Fraction(0), Fraction(1, 4)))
        assert exceptional.exact_density() == Fraction(15, 16)
        assert dec_b.member(exceptional).is_true
        assert DENSITY.member(exceptional).is_false

    def test_ud_sequence_terms(self, ud_sequence):
        assert [ud_sequence.eval_at(n) for n in range(1, 7)] == [0, 0, 1, 0, Fraction(1, 2), 1]
        num, den = ud_sequence.structure.terms(6)
        assert [Fraction(int(a), int(b)) for a, b in zip(num[1:], den[1:])] == [0, 0, 1, 0, Fraction(1, 2), 1]

    def test_ud_sequence_hit_set(self, ud_sequence):
        zeros = ud_sequence.hit_set(Interval(Fraction(0), Fraction(0)))
        assert zeros.prefix_count(10) == 4

    def test_ud_sequence_declared_density(self, ud_sequence):
        """Terms outside ball(0, 1/10) have declared density 9/10"""
        exceptional = ud_sequence.exceptional_set(Ball(Fraction(0), Fraction(1, 10)))
        assert exceptional.is_sampled
        assert exceptional.density_bounds()[0] == Fraction(9, 10)
        assert DENSITY.member(exceptional).is_false

    def test_prod_diag_density_terms(self, prod_diag_density):
        assert prod_diag_density.eval_at(1) == ALL_ONES
        assert prod_diag_density.eval_at(2) == CubePoint((0,), 1)
        assert prod_diag_density.space == CANTOR_CUBE

    def test_prod_diag_density_cylinders(self, prod_diag_density):
        structure = prod_diag_density.structure
        assert structure.pattern_density(((1, 1), (2, 1))) == Fraction(1, 4)
        exceptional = prod_diag_density.exceptional_set(Cylinder(((1, 1),)))
        assert exceptional.exact_density() == Fraction(1, 2)

    def test_prod_diag_blocks(self, prod_diag_blocks):
        assert prod_diag_blocks.eval_at(4) == CubePoint((1, 1), 0)
        exceptional = prod_diag_blocks.exceptional_set(Cylinder(((1, 1),)))
        assert exceptional.elements_upto(9) == [1, 3, 5, 7, 9]
        assert DecBIdeal().member(exceptional).is_true

    def test_fault_injection(self):
        factory = SequenceFactory(['inverseBlocks'])
        assert factory.build('inverseBlocks').block_rule.limit == Fraction(1, 2)
        assert factory.build('udSequence').eval_at(3) == 1
        with pytest.raises(UnknownName):
            SequenceFactory(['bogus'])
        with pytest.raises(UnknownName):
            factory.build('bogus')


class TestSubsequences:
    """Test restriction to subsets of the domain"""

    def test_subsequence_domain(self, inverse_blocks):
        odd = inverse_blocks.subsequence(IndexSet.ap(1, 2))
        assert odd.eval_at(3) == 1
        with pytest.raises(NotInDomain):
            odd.eval_at(2)

    def test_subsequence_outside_domain(self, inverse_blocks):
        odd = inverse_blocks.subsequence(IndexSet.ap(1, 2))
        with pytest.raises(DomainViolation):
            odd.subsequence(IndexSet.ap(2, 4))

    def test_subsequence_exceptional_set_shrinks(self, inverse_blocks):
        odd = inverse_blocks.subsequence(IndexSet.ap(1, 2))
        exceptional = odd.exceptional_set(Ball(Fraction(0), Fraction(1, 4)))
        assert exceptional.exact_density() == Fraction(1, 2)


class TestSequenceNotation:
    """Test the textual sequence form"""

    def test_named_with_restriction(self):
        seq = parse_sequence('paper:inverseBlocks | restrict ap(1,2)')
        assert 'restrict ap(1,2)' in seq.label
        assert seq.domain.elements_upto(6) == [1, 3, 5]

    def test_constant(self):
        seq = parse_sequence('const rat(1/2)')
        assert seq.eval_at(17) == Fraction(1, 2)
        assert seq.label == constant(Fraction(1, 2)).label

    def test_product(self):
        seq = parse_sequence('product(paper:inverseBlocks ; const ones)')
        assert isinstance(seq.space, FiniteProduct)
        assert seq.eval_at(2) == (Fraction(1, 2), ALL_ONES)
        assert seq.block_rule is not None

    def test_product_needs_two(self, inverse_blocks):
        with pytest.raises(ValueError):
            product_sequence(inverse_blocks)

    @pytest.mark.parametrize('text', ['nonsense', 'product(const 0)', 'const rat(1/2) | shift 2'])
    def test_malformed(self, text):
        with pytest.raises(NotationError):
            parse_sequence(text)

    def test_unknown_named(self):
        with pytest.raises(UnknownName):
            parse_sequence('paper:bogus')
