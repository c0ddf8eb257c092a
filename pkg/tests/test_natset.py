"""
Test Index Sets
Tests the normal form, membership, prefix counts, block structure and notation
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from natset import (THREE_ADIC, TWO_ADIC, BlockSet, BlockSignature, HorizonExceeded, IndexSet,
                    NotationError, OutOfRange, Truth, Verdict, combine, get_decomposition,
                    parse_index_set)


class TestDecomposition:
    """Test the 2-adic and 3-adic block decompositions"""

    def test_block_of_two_adic(self, decomposition):
        """Block j holds the odd multiples of 2^(j-1)"""
        assert decomposition.block_of(1) == 1
        assert decomposition.block_of(7) == 1
        assert decomposition.block_of(12) == 3
        assert decomposition.block_of(8) == 4

    def test_block_of_three_adic(self):
        assert THREE_ADIC.block_of(9) == 3
        assert THREE_ADIC.block_of(6) == 2
        assert THREE_ADIC.block_of(5) == 1

    def test_block_density(self, decomposition):
        assert decomposition.block_density(1) == Fraction(1, 2)
        assert decomposition.block_density(3) == Fraction(1, 8)
        assert THREE_ADIC.block_density(2) == Fraction(2, 9)

    def test_block_of_rejects_zero(self, decomposition):
        with pytest.raises(ValueError):
            decomposition.block_of(0)

    def test_registry(self):
        assert get_decomposition() == TWO_ADIC
        assert get_decomposition('3adic') == THREE_ADIC
        with pytest.raises(NotationError):
            get_decomposition('5adic')

    @given(st.integers(min_value=1, max_value=10 ** 6))
    def test_block_index_matches_valuation(self, n):
        """n / 2^(j-1) is odd for j = block_of(n)"""
        j = TWO_ADIC.block_of(n)
        assert (n >> (j - 1)) % 2 == 1
        assert n % (1 << (j - 1)) == 0


class TestBlockSet:
    """Test finite ∪ tail block sets"""

    def test_tail_absorbs_adjacent_finite_blocks(self):
        blocks = BlockSet(frozenset({2, 4}), 5)
        assert blocks.tail_from == 4
        assert blocks.finite == frozenset({2})

    def test_complement_of_tail(self):
        blocks = BlockSet(frozenset({1}), 4).complement()
        assert blocks.is_finite
        assert blocks.members_upto(10) == [2, 3]

    def test_lowest(self):
        blocks = BlockSet(frozenset({3}), 6)
        assert blocks.lowest(3) == [3, 6, 7]
        assert blocks.lowest(2, above=3) == [6, 7]

    def test_difference_and_describe(self):
        blocks = BlockSet.everything().difference(BlockSet.of([1, 2]))
        assert blocks.tail_from == 3
        assert blocks.describe() == '[3,inf)'
        assert BlockSet().describe() == '{}'
        assert BlockSet().is_empty


class TestIndexSetQueries:
    """Test membership, counts and ranks"""

    def test_block_membership(self):
        block3 = IndexSet.block(3)
        assert 4 in block3
        assert 12 in block3
        assert 20 in block3
        assert 8 not in block3
        assert block3.prefix_count(20) == 3
        assert block3.exact_density() == Fraction(1, 8)

    def test_ap_counts_and_rank(self):
        ap = IndexSet.ap(3, 4)
        assert ap.prefix_count(10) == 2
        assert ap.nth(3) == 11
        assert ap.head(3) == [3, 7, 11]
        assert ap.exact_density() == Fraction(1, 4)

    def test_finite_rank_out_of_range(self):
        finite = IndexSet.finite_set([5, 9])
        assert finite.nth(2) == 9
        with pytest.raises(OutOfRange):
            finite.nth(3)
        assert finite.head(5) == [5, 9]

    def test_membership_rejects_zero(self):
        with pytest.raises(ValueError):
            IndexSet.naturals().contains(0)

    def test_finiteness(self):
        assert IndexSet.finite_set([1, 2, 3]).is_finite_set().is_true
        assert IndexSet.ap(1, 2).is_finite_set().is_false
        assert IndexSet.empty().is_empty() is True
        assert IndexSet.tail(4).is_empty() is False

    def test_block_signature(self, decomposition):
        odds = IndexSet.ap(1, 2)
        assert odds.block_signature(decomposition, 1) is BlockSignature.INFINITE
        assert odds.block_signature(decomposition, 2) is BlockSignature.EMPTY
        single = IndexSet.finite_set([2])
        assert single.block_signature(decomposition, 2) is BlockSignature.FINITE_NONEMPTY

    def test_block_profile_of_naturals(self, decomposition):
        profile = IndexSet.naturals().block_profile(decomposition)
        assert profile.infinite.tail_from == 1
        assert profile.exact

    def test_spread_meets_every_block_finitely(self, decomposition):
        spread = IndexSet.spread(1, 1, 2)
        profile = spread.block_profile(decomposition)
        assert profile.infinite.is_empty
        assert not profile.met.is_finite
        assert spread.exact_density() == 0
        assert spread.block_signature(decomposition, 3) is BlockSignature.FINITE_NONEMPTY

    def test_spread_over_other_blocks_is_undecided(self, decomposition):
        spread = IndexSet.spread(1, 1, 2, decomposition=THREE_ADIC)
        assert spread.block_signature(decomposition, 1) is BlockSignature.UNKNOWN
        assert spread.block_signature(THREE_ADIC, 1) is BlockSignature.EMPTY

    @given(st.integers(min_value=1, max_value=500))
    @settings(max_examples=50)
    def test_prefix_count_matches_mask(self, N):
        text_set = parse_index_set('fin{1,2} + ap(3,4) + block(2) - fin{6}')
        assert text_set.prefix_count(N) == len(text_set.elements_upto(N))


class TestIndexSetAlgebra:
    """Test union, intersection and difference"""

    def test_difference_of_naturals_and_first_block(self):
        evens = IndexSet.naturals().difference(IndexSet.block(1))
        assert 4 in evens
        assert 3 not in evens
        assert evens.exact_density() == Fraction(1, 2)

    def test_intersection_with_block(self):
        both = IndexSet.ap(1, 2).intersect(IndexSet.block(1))
        assert both.exact_density() == Fraction(1, 2)
        assert both.elements_upto(9) == [1, 3, 5, 7, 9]

    def test_union_density(self):
        union = IndexSet.block(1).union(IndexSet.block(2))
        assert union.exact_density() == Fraction(3, 4)

    def test_combine_by_name(self):
        result = combine('union', IndexSet.finite_set([1]), IndexSet.finite_set([4]))
        assert result.elements_upto(10) == [1, 4]

    def test_subset_verdict(self):
        assert IndexSet.block(3).subset_verdict(IndexSet.ap(4, 8)).is_true
        verdict = IndexSet.ap(1, 2).subset_verdict(IndexSet.block(2))
        assert verdict.is_false
        assert '1' in verdict.detail

    def test_from_block_set(self):
        tail = IndexSet.from_block_set(BlockSet.from_block(3))
        assert tail.exact_density() == Fraction(1, 4)
        assert 8 in tail and 6 not in tail


class TestSampledSets:
    """Test sets known only through a predicate"""

    def test_sampled_membership_and_horizon(self):
        thirds = IndexSet.sampled(lambda n: n % 3 == 0, horizon=300, label='thirds')
        assert thirds.is_sampled
        assert thirds.is_empty() is None
        assert thirds.prefix_count(30) == 10
        assert thirds.nth(2) == 6
        with pytest.raises(HorizonExceeded):
            thirds.prefix_count(301)

    def test_sampled_finiteness_from_declared_density(self):
        declared = IndexSet.sampled(lambda n: n % 2 == 0, horizon=100, declared_density=Fraction(1, 2))
        assert declared.is_finite_set().is_false
        undeclared = IndexSet.sampled(lambda n: n % 2 == 0, horizon=100)
        assert undeclared.is_finite_set().is_unknown
        assert undeclared.density_bounds()[1] is None


class TestNotation:
    """Test the textual index-set form"""

    def test_parse_mixed_expression(self):
        parsed = parse_index_set('fin{1,2} + ap(3,4) + block(2) - fin{6}')
        assert parsed.elements_upto(10) == [1, 2, 3, 7, 10]
        assert parsed.exact_density() == Fraction(1, 2)
        print("   ✅ mixed expression parsed")

    def test_parse_block_with_decomposition(self):
        parsed = parse_index_set('block(2;3adic)')
        assert parsed.elements_upto(20) == [3, 6, 12, 15]

    def test_text_reparses_to_same_elements(self):
        original = parse_index_set('tail(5) - fin{7} + fin{2}')
        again = parse_index_set(original.to_text())
        assert again.elements_upto(40) == original.elements_upto(40)

    @pytest.mark.parametrize('text', ['', 'ap(1)', 'fin{0}', 'block(1', 'nat +', 'unknown(3)', 'sampled(1)'])
    def test_malformed_text(self, text):
        with pytest.raises(NotationError):
            parse_index_set(text)


class TestVerdict:
    """Test three-valued verdicts"""

    def test_certificates(self):
        assert Verdict.true('rule', 'why').certificate == 'rule: why'
        unknown = Verdict.unknown(1024, 'sampled', 'open')
        assert unknown.is_unknown and not unknown.is_definitive
        assert '(horizon 1024)' in unknown.certificate
        assert Verdict.of(False, 'x').value is Truth.FALSE
