"""
Test Closure Analyzer
Tests I- and I*-closure membership and the closedness check on a rational grid
"""

from fractions import Fraction

import pytest

from closure import ClosureAnalyzer, FinitePointSet, IntervalUnion, parse_set, union_of
from ideals import DENSITY, FIN
from natset import NotationError
from spaces import ALL_ONES, Interval, ShapeMismatch


@pytest.fixture(scope="module")
def analyzer(engine):
    return ClosureAnalyzer(engine, depth=4)


class TestSetDescriptions:
    """Test set text and unions"""

    def test_parse_points(self):
        points = parse_set('points{1/2, 0, 1/2}')
        assert points == FinitePointSet((Fraction(0), Fraction(1, 2)))
        assert points.to_text() == 'points{0, 1/2}'

    def test_parse_intervals(self):
        union = parse_set('intervals{(0,1/3), [1/2,1]}')
        assert union.contains(Fraction(3, 4))
        assert not union.contains(Fraction(0))
        assert union.distance_to(Fraction(2, 5)) == Fraction(1, 10)

    def test_empty(self):
        assert parse_set('empty').is_empty

    @pytest.mark.parametrize('text', ['points{2}', 'intervals{[0,2]}', 'circle(0)'])
    def test_malformed(self, text):
        with pytest.raises(NotationError):
            parse_set(text)

    def test_union(self):
        both = union_of(parse_set('points{0}'), parse_set('points{1}'))
        assert isinstance(both, FinitePointSet)
        mixed = union_of(parse_set('points{0}'), parse_set('intervals{(1/2,1)}'))
        assert isinstance(mixed, IntervalUnion)
        assert mixed.contains(Fraction(0))


class TestClosureMembership:
    """Test closure membership verdicts and their witnesses"""

    def test_open_endpoint_under_dec_b(self, analyzer, dec_b):
        result = analyzer.i_closure_member(parse_set('intervals{(0,1)}'), Fraction(0), dec_b)
        assert result.verdict.is_true
        assert result.verdict.rule == 'closure/approach'
        assert result.witness.label.startswith('blocks')
        assert result.report.overall.is_true
        print("   ✅ 0 reached by a block-constant witness")

    def test_open_endpoint_under_fin(self, analyzer):
        result = analyzer.i_closure_member(parse_set('intervals{(0,1/2)}'), Fraction(1, 2), FIN)
        assert result.verdict.is_true
        assert result.witness.label.startswith('terms')

    def test_member_point(self, analyzer):
        result = analyzer.i_closure_member(parse_set('points{1/2}'), Fraction(1, 2), FIN)
        assert result.verdict.is_true
        assert result.verdict.rule == 'closure/constant'

    def test_separated_point(self, analyzer):
        result = analyzer.i_closure_member(parse_set('points{0}'), Fraction(1), DENSITY)
        assert result.verdict.is_false
        assert result.radius == Fraction(1, 2)
        assert dict(result.fields())['separating_radius'] == Fraction(1, 2)

    def test_empty_set(self, analyzer, dec_b):
        result = analyzer.i_closure_member(parse_set('empty'), Fraction(0), dec_b)
        assert result.verdict.is_false
        assert result.verdict.rule == 'closure/empty'

    def test_star_closure_uses_termwise_witness(self, analyzer, dec_b):
        result = analyzer.i_star_closure_member(parse_set('intervals{(0,1)}'), Fraction(0), dec_b)
        assert result.mode == 'I*'
        assert result.verdict.is_true
        assert result.witness.label.startswith('terms')

    def test_budget_sets_checked_neighborhoods(self, analyzer, dec_b):
        result = analyzer.i_closure_member(parse_set('intervals{(0,1)}'), Fraction(0), dec_b, budget=2)
        assert result.verdict.is_true
        assert len(result.report.per_basis) == 2
        star = analyzer.i_star_closure_member(parse_set('points{1/2}'), Fraction(1, 2), FIN, budget=3)
        assert len(star.report.per_basis) == 3

    @pytest.mark.parametrize('point', [Fraction(3, 2), ALL_ONES])
    def test_point_outside_interval(self, analyzer, point):
        with pytest.raises(ShapeMismatch):
            analyzer.i_closure_member(parse_set('points{0}'), point, FIN)


class TestClosedOnGrid:
    """Test the closedness check"""

    def test_finite_set_is_closed(self, analyzer):
        verdict = analyzer.is_closed_on_grid(parse_set('points{0, 1/2}'), FIN, denominator=4)
        assert verdict.is_true

    def test_closed_interval(self, analyzer, dec_b):
        closed = IntervalUnion((Interval(Fraction(0), Fraction(1, 2)),))
        assert analyzer.is_closed_on_grid(closed, dec_b, denominator=4).is_true

    def test_open_endpoint_is_not_closed(self, analyzer, dec_b):
        verdict = analyzer.is_closed_on_grid(parse_set('intervals{(0,1/2)}'), dec_b, denominator=4)
        assert verdict.is_false
        assert 'lies outside' in verdict.detail

    def test_star_check(self, analyzer):
        verdict = analyzer.is_closed_on_grid(parse_set('intervals{(1/4,1/2)}'), FIN, denominator=4, star=True)
        assert verdict.is_false
