"""
Test Compactness
Tests nonthin extraction by bisection, nets and diagonal cylinders, the I* upgrade and the refuters
"""

from fractions import Fraction

import pytest

from compactness import (CompactnessExtractor, ModeMismatch, NonthinRefuter, RefuteMode, parse_mode)
from ideals import DENSITY, FIN, NotNonthin, UnsupportedShrink
from convergence import WitnessInvalid
from natset import IndexSet, Verdict
from sequences import SequenceFactory, constant
from spaces import ALL_ONES, Interval, NoMetric, ShapeMismatch

ZERO = Fraction(0)


@pytest.fixture(scope="module")
def extractor():
    return CompactnessExtractor()


@pytest.fixture(scope="module")
def refuter():
    return NonthinRefuter(cube_depth=4, cube_horizon=4096)


class TestBisection:
    """Test nested-interval extraction"""

    def test_inverse_blocks_under_dec_b(self, extractor, inverse_blocks, dec_b):
        witness = extractor.bisect_extract(inverse_blocks, dec_b, 3)
        assert witness.mode == 'bisect'
        assert witness.trace.choices == ('lower', 'lower', 'lower')
        assert witness.cell == Interval(ZERO, Fraction(1, 8))
        assert witness.xi == ZERO
        assert witness.shrink.blocks == ((2,), (4,), (8,))
        assert witness.nonthin.is_false
        assert witness.converges
        assert witness.report.overall.is_true
        print("   ✅ nonthin K found with limit 0")

    def test_trace_fields(self, extractor, inverse_blocks, dec_b):
        witness = extractor.bisect_extract(inverse_blocks, dec_b, 2)
        fields = dict(witness.fields())
        assert fields['xi'] == 'rat(0)'
        assert fields['trace_choice[1]'] == 'lower'
        assert len(witness.trace) == 2

    @pytest.mark.parametrize('ideal', [FIN, DENSITY])
    def test_ideals_without_condition_b(self, extractor, inverse_blocks, ideal):
        with pytest.raises(UnsupportedShrink):
            extractor.bisect_extract(inverse_blocks, ideal, 3)

    def test_thin_domain(self, extractor, inverse_blocks, dec_b):
        thin = inverse_blocks.subsequence(IndexSet.block(2))
        with pytest.raises(NotNonthin):
            extractor.bisect_extract(thin, dec_b, 3)

    def test_cube_sequence_rejected(self, extractor, prod_diag_blocks, dec_b):
        with pytest.raises(ShapeMismatch):
            extractor.bisect_extract(prod_diag_blocks, dec_b, 3)


class TestNetAndDiagonal:
    """Test epsilon-net and diagonal cylinder extraction"""

    def test_net_extract(self, extractor, inverse_blocks, dec_b):
        witness = extractor.net_extract(inverse_blocks, dec_b, 3)
        assert witness.mode == 'net'
        assert witness.cell == Interval(ZERO, Fraction(1, 3))
        assert witness.xi == ZERO
        assert witness.converges

    def test_net_needs_metric(self, extractor, prod_diag_blocks, dec_b):
        with pytest.raises(NoMetric):
            extractor.net_extract(prod_diag_blocks, dec_b, 2)

    def test_product_extract(self, extractor, prod_diag_blocks, dec_b):
        witness = extractor.product_extract(prod_diag_blocks, dec_b, 4)
        assert witness.xi == ALL_ONES
        assert witness.trace.choices == ('bit 1',) * 4
        assert witness.shrink.blocks == ((2,), (3,), (4,), (5,))
        assert witness.report.mode == 'product'
        assert witness.report.overall.is_true

    def test_product_extract_needs_cube(self, extractor, inverse_blocks, dec_b):
        with pytest.raises(ShapeMismatch):
            extractor.product_extract(inverse_blocks, dec_b, 3)


class TestUpgrade:
    """Test the upgrade of an extraction witness to an I*-witness"""

    def test_upgrade_under_dec_a(self, extractor, inverse_blocks, dec_a):
        witness = extractor.bisect_extract(inverse_blocks, dec_a, 3)
        upgraded = extractor.upgrade_to_star(inverse_blocks, witness, dec_a, 3)
        assert upgraded.M.elements_upto(2048) == [8, 128, 256, 512, 1024, 2048]
        assert upgraded.limit == ZERO
        assert upgraded.filter_verdict.is_true
        print("   ✅ K' assembled from finite pieces in fresh blocks")

    def test_no_upgrade_under_dec_b(self, extractor, inverse_blocks, dec_b):
        witness = extractor.bisect_extract(inverse_blocks, dec_b, 3)
        with pytest.raises(UnsupportedShrink):
            extractor.upgrade_to_star(inverse_blocks, witness, dec_b, 3)

    def test_uncertified_check_is_rejected(self, inverse_blocks, dec_a, monkeypatch):
        extractor = CompactnessExtractor()
        witness = extractor.bisect_extract(inverse_blocks, dec_a, 3)
        monkeypatch.setattr(extractor.engine, 'i_star_to_i',
                            lambda *args, **kwargs: Verdict.unknown(4096, 'i-star-to-i', 'sampled head'))
        with pytest.raises(WitnessInvalid):
            extractor.upgrade_to_star(inverse_blocks, witness, dec_a, 3)


class TestRefuter:
    """Test the refutation arguments"""

    def test_density_bound(self, refuter, ud_sequence):
        verdict = refuter.refute(ud_sequence, DENSITY, RefuteMode.DENSITY_BOUND)
        assert verdict.is_true
        table = refuter.density_sweep(ud_sequence)
        assert len(table) == 13 * 3
        assert table['bound_ok'].all()
        assert table['within_tolerance'].all()

    def test_density_bound_needs_density_ideal(self, refuter, ud_sequence, dec_b):
        with pytest.raises(ModeMismatch):
            refuter.refute(ud_sequence, dec_b, 'densityBound')

    def test_density_bound_needs_equidistributed(self, refuter, inverse_blocks):
        with pytest.raises(ModeMismatch):
            refuter.refute(inverse_blocks, DENSITY, 'densityBound')

    def test_block_recurrence(self, refuter, inverse_blocks, dec_b):
        verdict = refuter.refute(inverse_blocks, dec_b, 'blockRecurrence')
        assert verdict.is_true
        assert 'witness blocks 1' in verdict.detail

    def test_block_recurrence_on_thin_domain(self, refuter, inverse_blocks, dec_b):
        thin = inverse_blocks.subsequence(IndexSet.block(3))
        assert refuter.refute(thin, dec_b, 'blockRecurrence').is_false

    def test_block_recurrence_needs_injective_rule(self, refuter, dec_b):
        with pytest.raises(ModeMismatch):
            refuter.refute(constant(Fraction(1, 2)), dec_b, 'blockRecurrence')

    def test_cube_block_recurrence(self, refuter, prod_diag_blocks, dec_b):
        verdict = refuter.refute(prod_diag_blocks, dec_b, 'cubeBlockRecurrence')
        assert verdict.is_true
        assert 'coordinates 1, 2, 3, 4' in verdict.detail

    def test_cube_density_table(self, refuter, prod_diag_density):
        table = refuter.cube_density_table(prod_diag_density)
        assert list(table['chain_density']) == ['1/2', '1/4', '1/6', '1/12']
        assert list(table['bit']) == [1, 1, 1, 1]
        assert table['agrees'].all()

    def test_cube_density_diag(self, refuter, prod_diag_density):
        assert refuter.refute(prod_diag_density, DENSITY, 'cubeDensityDiag').is_true

    def test_cube_density_diag_corrupted(self, refuter):
        corrupted = SequenceFactory(['prodDiagDensity']).build('prodDiagDensity')
        verdict = refuter.refute(corrupted, DENSITY, 'cubeDensityDiag')
        assert verdict.is_false
        assert 'm=3' in verdict.detail

    def test_cube_density_diag_needs_coordinate_sets(self, refuter, prod_diag_blocks):
        with pytest.raises(ModeMismatch):
            refuter.refute(prod_diag_blocks, DENSITY, 'cubeDensityDiag')

    def test_unknown_mode(self):
        with pytest.raises(ModeMismatch):
            parse_mode('bogus')

    def test_density_sweep_tolerance_is_exact(self, refuter, ud_sequence):
        table = refuter.density_sweep(ud_sequence)
        row = table[(table['xi'] == 'rat(1/2)') & (table['eps'] == '1/10')].iloc[0]
        deviation = Fraction(int(row['hits']), int(row['N'])) - Fraction(1, 5)
        assert deviation ** 2 * int(row['N']) <= 4
        assert row['within_tolerance']

    def test_cube_density_at_depth_ten(self, prod_diag_density):
        deep = NonthinRefuter(cube_depth=10)
        table = deep.cube_density_table(prod_diag_density)
        assert table.loc[table['m'] == 9, 'chain_density'].item() == '1/210'
        assert table['nested'].all()
        assert table['within_reciprocal'].all()
        assert not table.loc[table['m'] == 9, 'within_power'].item()
        verdict = deep.refute(prod_diag_density, DENSITY, 'cubeDensityDiag')
        assert verdict.is_true
        assert 'levels above 2^-(m-1): 9' in verdict.detail
        print("   ✅ nested chain certified through m=10")
