"""
Test Convergence Engine
Tests I- and I*-convergence verdicts, witness conversion, classical extraction and product verdicts
"""

from fractions import Fraction

import pytest

from convergence import ConvergenceEngine, ExtractionStalled, WitnessInvalid
from convergence.report import IStarWitness
from ideals import DENSITY, FIN, RestrictionIdeal
from natset import IndexSet, Verdict
from sequences import ConvergentBlocks, Sequence, Termwise, constant, parse_sequence
from spaces import ALL_ONES, ShapeMismatch

ZERO = Fraction(0)


class TestIConvergence:
    """Test I-convergence verdicts"""

    def test_inverse_blocks_under_dec_b(self, engine, inverse_blocks, dec_b):
        report = engine.i_converges(inverse_blocks, dec_b, ZERO, 6)
        assert report.overall.is_true
        assert report.overall.rule == 'i/block-symbolic'
        assert report.depth == 6
        assert report.all_tested_true
        print("   ✅ inverseBlocks converges to 0 under decB")

    def test_inverse_blocks_under_dec_a(self, engine, inverse_blocks, dec_a):
        assert engine.i_converges(inverse_blocks, dec_a, ZERO, 4).overall.is_true

    @pytest.mark.parametrize('ideal', [FIN, DENSITY])
    def test_inverse_blocks_under_fin_and_density(self, engine, inverse_blocks, ideal):
        report = engine.i_converges(inverse_blocks, ideal, ZERO, 4)
        assert report.overall.is_false
        nbhd, verdict = report.first_false
        assert nbhd.radius == Fraction(1, 2)
        assert verdict.is_false

    def test_wrong_limit(self, engine, inverse_blocks, dec_b):
        assert engine.i_converges(inverse_blocks, dec_b, Fraction(1, 2), 4).overall.is_false

    def test_constant_sequence(self, engine):
        report = engine.i_converges(constant(Fraction(1, 2)), FIN, Fraction(1, 2), 3)
        assert report.overall.is_true

    def test_termwise_sequence(self, engine):
        seq = Sequence(IndexSet.naturals(), Termwise(ConvergentBlocks(ZERO)), 'terms 1/n')
        report = engine.i_converges(seq, FIN, ZERO, 5)
        assert report.overall.is_true
        assert report.overall.rule == 'i/classical'

    def test_ud_sequence_not_convergent(self, engine, ud_sequence):
        report = engine.i_converges(ud_sequence, DENSITY, Fraction(1, 2), 3)
        assert report.overall.is_false
        assert report.first_false[0].radius == Fraction(1, 4)

    def test_finite_domain(self, engine, inverse_blocks):
        seq = inverse_blocks.subsequence(IndexSet.finite_set([3, 5, 7]))
        report = engine.i_converges(seq, FIN, Fraction(1, 2), 3)
        assert report.overall.is_true
        assert report.overall.rule == 'i/finite-domain'

    def test_point_must_fit_space(self, engine, inverse_blocks, dec_b):
        with pytest.raises(ShapeMismatch):
            engine.i_converges(inverse_blocks, dec_b, ALL_ONES, 3)

    def test_report_fields(self, engine, inverse_blocks, dec_b):
        fields = dict(engine.i_converges(inverse_blocks, dec_b, ZERO, 2).fields())
        assert fields['mode'] == 'I'
        assert fields['ideal'] == 'decB(2adic)'
        assert fields['limit'] == 'rat(0)'
        assert fields['overall'] == 'true'
        assert 'basis_certificate[1]' in fields

    def test_restriction_to_domain(self, engine, inverse_blocks):
        third = inverse_blocks.subsequence(IndexSet.block(3))
        report = engine.i_converges(third, FIN, Fraction(1, 3), 4)
        assert report.overall.is_true
        assert report.ideal.startswith('restrict(fin')
        assert isinstance(engine.ambient_ideal(FIN, third.domain), RestrictionIdeal)


class TestIStarConvergence:
    """Test I*-convergence and its witnesses"""

    def test_inverse_blocks_fails_under_dec_b(self, engine, inverse_blocks, dec_b):
        report, witness = engine.i_star_converges(inverse_blocks, dec_b, ZERO, 4)
        assert witness is None
        assert report.overall.is_false
        assert report.overall.rule == 'i-star/block-signature'
        print("   ✅ I-convergent but not I*-convergent")

    def test_i_failure_propagates(self, engine, inverse_blocks):
        report, witness = engine.i_star_converges(inverse_blocks, FIN, ZERO, 3)
        assert witness is None
        assert report.overall.rule == 'i-star/i-fails'

    def test_constant_witness(self, engine):
        seq = constant(Fraction(1, 2))
        report, witness = engine.i_star_converges(seq, FIN, Fraction(1, 2), 3)
        assert report.overall.is_true
        assert witness.M.is_naturals
        assert not witness.thin
        assert witness.enumerated_prefix(3) == [1, 2, 3]

    def test_restricted_subsequence_witness(self, engine, inverse_blocks):
        third = inverse_blocks.subsequence(IndexSet.block(3))
        report, witness = engine.i_star_converges(third, FIN, Fraction(1, 3), 3)
        assert report.overall.is_true
        assert witness.M.elements_upto(30) == [4, 12, 20, 28]

    def test_star_to_i(self, engine):
        seq = constant(Fraction(1, 2))
        _, witness = engine.i_star_converges(seq, FIN, Fraction(1, 2), 3)
        verdict = engine.i_star_to_i(seq, witness, FIN, 4)
        assert verdict.is_true
        assert 'head size 0' in verdict.detail

    def test_star_to_i_rejects_bad_witness(self, engine, inverse_blocks, dec_b):
        block_one = IndexSet.block(1)
        bogus = IStarWitness(block_one, IndexSet.naturals(), ZERO, 'bogus', Verdict.true('x'), False)
        with pytest.raises(WitnessInvalid):
            engine.i_star_to_i(inverse_blocks, bogus, dec_b, 3)


class TestClassicalExtraction:
    """Test extraction of classically convergent subsequences"""

    def test_inverse_blocks_indices(self, engine, inverse_blocks, dec_b):
        indices = engine.classical_extract(inverse_blocks, dec_b, ZERO, 3)
        assert indices == [4, 16, 256]

    def test_refuted_convergence_stalls(self, engine, inverse_blocks):
        with pytest.raises(ExtractionStalled):
            engine.classical_extract(inverse_blocks, FIN, ZERO, 3)

    def test_stall_horizon(self, inverse_blocks, dec_b):
        short = ConvergenceEngine(stall_horizon=100)
        with pytest.raises(ExtractionStalled):
            short.classical_extract(inverse_blocks, dec_b, ZERO, 3)


class TestProductVerdict:
    """Test coordinate-wise verdicts"""

    def test_staircase_under_dec_b(self, engine, prod_diag_blocks, dec_b):
        report = engine.product_verdict(prod_diag_blocks, dec_b, ALL_ONES, 4)
        assert report.mode == 'product'
        assert report.overall.is_true
        assert len(report.per_basis) == 4

    def test_coordinate_sets_under_density(self, engine, prod_diag_density):
        report = engine.product_verdict(prod_diag_density, DENSITY, ALL_ONES, 4)
        assert report.overall.is_false

    def test_staircase_under_fin(self, engine, prod_diag_blocks):
        assert engine.product_verdict(prod_diag_blocks, FIN, ALL_ONES, 3).overall.is_false

    def test_finite_product(self, engine, dec_b):
        seq = parse_sequence('product(paper:inverseBlocks ; const ones)')
        report = engine.product_verdict(seq, dec_b, (ZERO, ALL_ONES), 3)
        assert report.overall.is_true
        assert [str(label) for label, _ in report.per_basis] == ['coordinate 1', 'coordinate 2']

    def test_interval_has_no_coordinates(self, engine, inverse_blocks, dec_b):
        with pytest.raises(ShapeMismatch):
            engine.product_verdict(inverse_blocks, dec_b, ZERO, 3)
