"""
Test Command Line
Tests each subcommand, exit statuses, report formats and the self-check suite
"""

import re

import pytest

from cli import RunConfig, SelfCheckSuite, render_fields
from cli.errors import ConfigInvalid

INVERSE = 'paper:inverseBlocks'
DEC_B = 'decB(2adic)'


class TestRunConfig:
    """Test option validation"""

    def test_horizon_minimum(self):
        with pytest.raises(ConfigInvalid):
            RunConfig(command='analyze', horizon=1000)
        assert RunConfig(command='analyze', horizon=1024).horizon == 1024

    def test_depth_positive(self):
        with pytest.raises(ConfigInvalid):
            RunConfig(command='analyze', depth=0)

    def test_require(self):
        with pytest.raises(ConfigInvalid):
            RunConfig(command='closure').require('point')

    def test_structured_rendering_keeps_order(self):
        text = render_fields([('b', 1), ('a', 'x\ny')], 'structured')
        assert text == 'b: 1\na: x y\n'


class TestAnalyze:
    """Test the analyze command"""

    def test_block_convergence(self, run_cli):
        status, out, _ = run_cli('analyze', '--seq', INVERSE, '--ideal', DEC_B, '--limit', 'rat(0)',
                                 '--depth', '4', '--format', 'structured')
        assert status == 0
        assert 'overall: true' in out
        assert 'ideal: decB(2adic)' in out
        print("   ✅ analyze reports I-convergence")

    def test_star_mode(self, run_cli):
        status, out, _ = run_cli('analyze', '--seq', INVERSE, '--ideal', DEC_B, '--limit', 'rat(0)',
                                 '--mode', 'I*', '--depth', '4', '--format', 'structured')
        assert status == 0
        assert 'overall: false' in out

    def test_cube_sequence_uses_product_verdict(self, run_cli):
        status, out, _ = run_cli('analyze', '--seq', 'paper:prodDiagBlocks', '--ideal', DEC_B,
                                 '--limit', 'ones', '--depth', '3', '--format', 'structured')
        assert status == 0
        assert 'mode: product' in out

    def test_unknown_ideal(self, run_cli):
        status, _, err = run_cli('analyze', '--seq', INVERSE, '--ideal', 'decC', '--limit', 'rat(0)')
        assert status == 1
        assert err.startswith('error:')

    def test_small_horizon(self, run_cli):
        status, _, err = run_cli('analyze', '--seq', INVERSE, '--ideal', DEC_B, '--limit', 'rat(0)',
                                 '--horizon', '100')
        assert status == 1
        assert '--horizon' in err

    def test_missing_argument(self, run_cli):
        status, _, err = run_cli('analyze', '--seq', INVERSE)
        assert status == 1
        assert 'error:' in err

    def test_output_file(self, run_cli, tmp_path):
        target = tmp_path / 'report.txt'
        status, out, _ = run_cli('analyze', '--seq', INVERSE, '--ideal', DEC_B, '--limit', 'rat(0)',
                                 '--depth', '2', '--format', 'structured', '--output', str(target))
        assert status == 0
        assert out == ''
        assert 'overall: true' in target.read_text(encoding='utf-8')


class TestOtherCommands:
    """Test extract, refute, closure and density-table"""

    def test_extract(self, run_cli):
        status, out, _ = run_cli('extract', '--seq', INVERSE, '--ideal', DEC_B, '--depth', '3',
                                 '--format', 'structured')
        assert status == 0
        assert 'xi: rat(0)' in out
        assert 'report_overall: true' in out

    def test_extract_under_density_fails(self, run_cli):
        status, _, err = run_cli('extract', '--seq', 'paper:udSequence', '--ideal', 'density', '--depth', '3')
        assert status == 1
        assert 'UnsupportedShrink' in err

    def test_refute(self, run_cli):
        status, out, _ = run_cli('refute', '--seq', INVERSE, '--ideal', DEC_B, '--mode', 'blockRecurrence',
                                 '--format', 'structured')
        assert status == 0
        assert 'verdict: true' in out

    def test_refute_unknown_mode(self, run_cli):
        status, _, err = run_cli('refute', '--seq', INVERSE, '--ideal', DEC_B, '--mode', 'bogus')
        assert status == 1
        assert 'ModeMismatch' in err

    def test_closure_point(self, run_cli):
        status, out, _ = run_cli('closure', '--set', 'intervals{(0,1)}', '--point', 'rat(0)', '--ideal', DEC_B,
                                 '--depth', '3', '--format', 'structured')
        assert status == 0
        assert 'verdict: true' in out

    def test_closure_needs_point(self, run_cli):
        status, _, err = run_cli('closure', '--set', 'points{0}', '--ideal', 'fin')
        assert status == 1
        assert '--point' in err

    def test_density_table(self, run_cli):
        status, out, _ = run_cli('density-table', '--set', 'block(3)')
        lines = out.splitlines()
        assert status == 0
        assert lines[0] == 'N,count,density_num,density_den,density'
        assert lines[1].endswith(',1,8,0.125')


class TestSelfCheck:
    """Test the verify-paper suite"""

    def test_all_checks_pass_and_are_deterministic(self, run_cli):
        status, first, err = run_cli('verify-paper', '--format', 'structured')
        assert status == 0, err
        assert 'failed: 0' in first
        _, second, _ = run_cli('verify-paper', '--format', 'structured')
        assert first == second
        print("   ✅ self-check suite passes and is byte-identical across runs")

    def test_fault_injection_fails_rows(self, run_cli):
        status, out, err = run_cli('verify-paper', '--format', 'structured', '--inject-fault', 'inverseBlocks')
        assert status == 1
        assert 'FAILED bisection_extraction' in err
        assert 'failed: 0' not in out

    def test_implication_chain_extracts_without_star(self):
        ok, summary = SelfCheckSuite().implication_chain()
        assert ok, summary
        without_star = int(re.search(r'\((\d+) without I\*\)', summary).group(1))
        extracted = int(re.search(r'(\d+) extracted with k=10', summary).group(1))
        assert without_star > 0
        assert extracted > 0
        assert summary.endswith('0 broken chains')
