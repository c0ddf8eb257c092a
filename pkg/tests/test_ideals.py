"""
Test Ideals
Tests membership in Fin, Density, DecA and DecB, restrictions, filters and the shrink selectors
"""

import pytest

from ideals import (DENSITY, FIN, DecAIdeal, DecBIdeal, NotNonthin, RestrictionIdeal, ShrinkSelector,
                    UnsupportedShrink, filter_member, parse_ideal, restrict)
from natset import THREE_ADIC, TWO_ADIC, BlockSet, IndexSet, NotationError


class TestMembership:
    """Test the four base families on closed-form sets"""

    def test_fin(self):
        assert FIN.member(IndexSet.finite_set([1, 5, 9])).is_true
        assert FIN.member(IndexSet.ap(1, 2)).is_false

    def test_density(self):
        assert DENSITY.member(IndexSet.spread(1, 1, 2)).is_true
        verdict = DENSITY.member(IndexSet.block(3))
        assert verdict.is_false
        assert '1/8' in verdict.detail

    def test_dec_a(self, dec_a):
        assert dec_a.member(IndexSet.block(3)).is_true
        assert dec_a.member(IndexSet.ap(1, 2)).is_true
        assert dec_a.member(IndexSet.spread(1, 1, 2)).is_false

    def test_dec_b(self, dec_b):
        assert dec_b.member(IndexSet.spread(1, 1, 2)).is_true
        assert dec_b.member(IndexSet.blocks([1, 2])).is_true
        verdict = dec_b.member(IndexSet.naturals())
        assert verdict.is_false
        assert 'every block' in verdict.detail

    def test_families_are_distinct(self, dec_a, dec_b):
        """A spread lies in DecB and Density but not DecA; block 1 lies in DecB but not Density"""
        spread = IndexSet.spread(1, 1, 2)
        assert dec_b.member(spread).is_true and dec_a.member(spread).is_false
        block = IndexSet.block(1)
        assert dec_b.member(block).is_true and DENSITY.member(block).is_false
        print("   ✅ DecA, DecB and Density separated")

    def test_sampled_set_is_unknown_for_fin(self):
        sampled = IndexSet.sampled(lambda n: n % 5 == 0, horizon=2048)
        verdict = FIN.member(sampled)
        assert verdict.is_unknown
        assert verdict.horizon == 2048

    def test_block_pieces(self, dec_b):
        naturals = IndexSet.naturals()
        assert dec_b.contains_block_pieces(naturals, BlockSet.everything(), TWO_ADIC).is_true
        assert dec_b.contains_block_pieces(naturals, BlockSet.of([1]), THREE_ADIC).is_unknown


class TestRestriction:
    """Test I restricted to a domain"""

    def test_restriction_to_odd_numbers(self):
        restricted = restrict(DENSITY, IndexSet.block(1))
        assert isinstance(restricted, RestrictionIdeal)
        assert restricted.nontrivial.is_true
        inside = restricted.member(IndexSet.ap(1, 4))
        assert inside.is_false
        assert inside.rule == 'restrict/density'
        outside = restricted.member(IndexSet.ap(2, 4))
        assert outside.is_false
        assert 'not contained in the domain' in outside.detail

    def test_trivial_restriction(self):
        trivial = restrict(DENSITY, IndexSet.spread(1, 1, 2))
        assert trivial.nontrivial.is_false

    def test_base_and_capabilities(self, dec_a):
        restricted = restrict(dec_a, IndexSet.tail(3))
        assert restricted.base() == dec_a
        assert restricted.supports_shrink_a and restricted.supports_shrink_b
        assert restricted.decomposition == TWO_ADIC


class TestFilter:
    """Test filter membership through the complement"""

    def test_complement_in_dec_b(self, dec_b):
        evens = IndexSet.naturals().difference(IndexSet.block(1))
        assert filter_member(dec_b, evens).is_true

    def test_complement_not_in_density(self):
        verdict = filter_member(DENSITY, IndexSet.block(1))
        assert verdict.is_false
        assert verdict.rule == 'filter/density'


class TestNotation:
    """Test the textual ideal form"""

    def test_named_ideals(self):
        assert parse_ideal('fin') is FIN
        assert parse_ideal('density') is DENSITY
        assert parse_ideal('decB(2adic)') == DecBIdeal(TWO_ADIC)
        assert parse_ideal('decA(3adic)') == DecAIdeal(THREE_ADIC)
        assert parse_ideal('decA()') == DecAIdeal(TWO_ADIC)

    def test_restriction_text(self):
        ideal = parse_ideal('restrict(decB(2adic), tail(2))')
        assert isinstance(ideal, RestrictionIdeal)
        assert ideal.base() == DecBIdeal(TWO_ADIC)
        assert 2 in ideal.domain and 1 not in ideal.domain

    @pytest.mark.parametrize('text', ['decC(2adic)', 'restrict(fin)', 'decB(7adic)', 'ideal'])
    def test_malformed(self, text):
        with pytest.raises(NotationError):
            parse_ideal(text)


class TestShrinkSelectors:
    """Test the shrinking-condition witnesses"""

    def test_shrink_a_fresh_blocks(self, dec_a):
        witness = ShrinkSelector().shrink_a(dec_a, [IndexSet.naturals()] * 3, sizes=[1, 2, 3])
        assert witness.blocks == ((1,), (2, 3), (4, 5, 6))
        assert witness.parts[0].elements_upto(10) == [1]
        assert witness.parts[1].elements_upto(10) == [2, 4]
        assert witness.parts[2].elements_upto(40) == [8, 16, 32]
        assert all(v.is_true for v in witness.per_part)
        assert witness.union_verdict.is_false
        assert witness.reverify(dec_a)
        print("   ✅ condition (A) witness with parts in blocks 1..6")

    def test_shrink_b_block_pieces(self, dec_b):
        witness = ShrinkSelector().shrink_b(dec_b, [IndexSet.naturals(), IndexSet.naturals()])
        assert witness.blocks == ((1,), (2,))
        assert witness.parts[0].exact_density() == IndexSet.block(1).exact_density()
        assert witness.union_verdict.is_false
        assert witness.tail.elements_upto(12) == [4, 8, 12]

    def test_shrink_b_with_dec_a(self, dec_a):
        witness = ShrinkSelector().shrink_b(dec_a, [IndexSet.naturals()])
        assert witness.blocks == ((1,),)
        assert witness.union_verdict.is_false

    def test_shrink_b_through_restriction(self, dec_b):
        restricted = restrict(dec_b, IndexSet.tail(3))
        witness = ShrinkSelector().shrink_b(restricted, [IndexSet.naturals()])
        assert witness.blocks == ((1,),)
        assert witness.parts[0].elements_upto(9) == [3, 5, 7, 9]

    @pytest.mark.parametrize('ideal', [FIN, DENSITY, DecBIdeal(TWO_ADIC)])
    def test_shrink_a_unsupported(self, ideal):
        with pytest.raises(UnsupportedShrink):
            ShrinkSelector().shrink_a(ideal, [IndexSet.naturals()])

    @pytest.mark.parametrize('ideal', [FIN, DENSITY])
    def test_shrink_b_unsupported(self, ideal):
        with pytest.raises(UnsupportedShrink):
            ShrinkSelector().shrink_b(ideal, [IndexSet.naturals()])

    def test_member_input_rejected(self, dec_a):
        with pytest.raises(NotNonthin) as excinfo:
            ShrinkSelector().shrink_a(dec_a, [IndexSet.block(3)])
        assert excinfo.value.verdict.is_true

    def test_sizes_must_match(self, dec_a):
        with pytest.raises(ValueError):
            ShrinkSelector().shrink_a(dec_a, [IndexSet.naturals()], sizes=[1, 2])
