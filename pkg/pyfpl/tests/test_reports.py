from fractions import Fraction
import json

import pytest
import sympy
from pyfpl.reports import FormulaResult, ReconciliationReport, \
    ReconciliationRow, exact_ratio, format_value


class TestFormatValue:
    @pytest.mark.parametrize('value, text', [
        (Fraction(6, 4), '3/2'), (Fraction(4, 2), '2'), (7, '7'),
        (None, None), (True, 'True'), (sympy.Rational(-1, 3), '-1/3')])
    def test_value_has_known_text(self, value, text):
        assert format_value(value) == text

    def test_symbol_uses_sympy_text(self):
        assert format_value(sympy.Symbol('x') + 1) == 'x + 1'


class TestExactRatio:
    def test_ratio_is_exact(self):
        assert exact_ratio(3, 4) == Fraction(3, 4)

    def test_zero_denominator_gives_none(self):
        assert exact_ratio(1, 0) is None

    def test_missing_side_gives_none(self):
        assert exact_ratio(None, 1) is None

    def test_symbolic_ratio_simplifies_to_fraction(self):
        x = sympy.Symbol('x')
        assert exact_ratio(2 * x, 4 * x) == Fraction(1, 2)


class TestReconciliationRow:
    def test_equal_sides(self):
        assert ReconciliationRow('a', Fraction(1, 2), Fraction(2, 4)).equal

    def test_factor_is_rhs_over_lhs(self):
        assert ReconciliationRow('a', 2, 6).factor == 3

    def test_zero_lhs_has_no_factor(self):
        assert ReconciliationRow('a', 0, 6).factor is None

    def test_symbolic_sides_compare_after_expansion(self):
        x = sympy.Symbol('x')
        assert ReconciliationRow('a', (x + 1) ** 2, x ** 2 + 2 * x + 1).equal

    def test_dict_writes_rationals_as_text(self):
        assert ReconciliationRow('(1,2)', Fraction(1, 3), 1).to_dict() == {
            'coupling': '(1,2)', 'lhs': '1/3', 'rhs': '1', 'equal': False,
            'factor': '3'}


class TestReconciliationReport:
    @pytest.fixture
    def failing(self):
        yield ReconciliationReport(
            'demo', 2, [ReconciliationRow('a', 1, 1),
                        ReconciliationRow('b', 1, 2)],
            theorem=True, notes={'fit': Fraction(1, 2)})

    def test_one_bad_row_fails_the_report(self, failing):
        assert not failing.passed

    def test_empty_report_passes(self):
        assert ReconciliationReport('demo', 0, []).passed

    def test_json_has_known_keys(self, failing):
        report = json.loads(failing.to_json())
        assert report['identity'] == 'demo' and report['pass'] is False
        assert report['theorem'] is True
        assert len(report['states']) == 2
        assert report['notes'] == {'fit': '1/2'}

    def test_csv_has_header_and_one_line_per_row(self, failing):
        lines = failing.to_csv().splitlines()
        assert lines[0] == 'identity,size,coupling,lhs,rhs,equal,factor'
        assert lines[2] == 'demo,2,b,1,2,False,2'

    def test_text_marks_the_failure(self, failing):
        text = failing.to_text()
        assert text.startswith('demo at size 2: FAIL')
        assert 'b: 1 != 2 (factor 2)' in text
        assert 'fit: 1/2' in text

    def test_bad_row_raises_type_error(self):
        with pytest.raises(TypeError):
            ReconciliationReport('demo', 1, [(1, 1)])


class TestFormulaResult:
    @pytest.mark.parametrize('printed, oracle, status', [
        (7, 7, 'match'), (7, 14, 'mismatch'), (7, None, 'oracle-unavailable')])
    def test_status(self, printed, oracle, status):
        assert FormulaResult('demo', (3,), printed, oracle).status == status

    def test_factor_is_oracle_over_printed(self):
        assert FormulaResult('demo', (3,), 7, 14).factor == 2

    def test_dict_has_known_values(self):
        assert FormulaResult('demo', (3, 1), Fraction(1, 2), 1).to_dict() == {
            'name': 'demo', 'args': [3, 1], 'printed': '1/2', 'oracle': '1',
            'status': 'mismatch', 'factor': '2'}
