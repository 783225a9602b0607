from fractions import Fraction
import logging

import pytest
import sympy
from pyfpl.formulas import a_ht, a_ht_printed, a_v, a_v_factor, asm_count, \
    catalan, cspp_ratio_check, even_ht_formula, formula_bank, half_factorial, \
    half_unit, ht_factorization, kratt_check, kratt_product, macmahon_box, \
    p_cs_hole, p_cssc, p_cstc, p_qcssc, proposition_check, proposition_names, \
    shifted_factorial, tabulate_uu


class TestProducts:
    def test_catalan(self):
        assert [catalan(n) for n in range(6)] == [1, 1, 2, 5, 14, 42]

    def test_asm_count(self):
        assert [asm_count(n) for n in range(7)] == \
            [1, 1, 2, 7, 42, 429, 7436]

    @pytest.mark.parametrize('a, b, c, count', [(1, 1, 1, 2), (1, 1, 3, 4),
                                                (2, 2, 2, 20),
                                                (3, 3, 3, 980)])
    def test_macmahon_box(self, a, b, c, count):
        assert macmahon_box(a, b, c) == count

    def test_shifted_factorial_of_half(self):
        assert shifted_factorial(Fraction(1, 2), 2) == Fraction(3, 4)

    def test_empty_shifted_factorial_is_1(self):
        assert shifted_factorial(7, 0) == 1

    def test_negative_factor_count_raises_value_error(self):
        with pytest.raises(ValueError):
            shifted_factorial(1, -1)

    def test_half_factorial_carries_the_unit(self):
        assert half_factorial(0) == half_unit / 2
        assert half_factorial(-1) == half_unit

    def test_half_factorial_below_minus_half_raises_value_error(self):
        with pytest.raises(ValueError):
            half_factorial(-2)


class TestSymmetricCounts:
    @pytest.mark.parametrize('size, count', [(1, 1), (2, 2), (3, 3), (4, 10),
                                             (5, 25), (6, 140)])
    def test_recurrence_gives_htasm_number(self, size, count):
        assert a_ht_printed(size) == count

    def test_recurrence_matches_enumeration(self):
        assert a_ht(4).status == 'match'

    def test_zero_size_raises_value_error(self):
        with pytest.raises(ValueError):
            a_ht_printed(0)

    def test_printed_vs_count_at_size_1(self):
        assert a_v(1).status == 'match'

    @pytest.mark.parametrize('size, factor', [(3, Fraction(1, 2)),
                                              (5, Fraction(1, 4))])
    def test_printed_vs_count_is_off(self, size, factor, caplog):
        with caplog.at_level(logging.WARNING):
            result = a_v(size)
        assert result.status == 'mismatch' and result.factor == factor
        assert 'disagrees' in caplog.text

    def test_even_vs_size_raises_value_error(self):
        with pytest.raises(ValueError):
            a_v(4)

    def test_vs_factor_at_0(self):
        result = a_v_factor(0)
        assert result.printed == Fraction(2, 3) and result.oracle == 2


class TestPlanePartitionCounts:
    @pytest.mark.parametrize('m, value', [(0, 1), (1, 2)])
    def test_holey_count_has_known_value(self, m, value):
        assert p_cs_hole(m) == value

    def test_other_hole_raises_value_error(self):
        with pytest.raises(ValueError):
            p_cs_hole(1, 3)

    def test_cstc_at_0_matches(self):
        assert p_cstc(0).status == 'match'

    def test_cstc_at_2_is_exact(self):
        result = p_cstc(2)
        assert result.printed == 1 and result.oracle == 3

    def test_odd_cstc_raises_value_error(self):
        with pytest.raises(ValueError):
            p_cstc(1)

    @pytest.mark.parametrize('size', [0, 2, 4, 6])
    def test_cssc_matches(self, size):
        assert p_cssc(size).status == 'match'

    @pytest.mark.parametrize('size, value', [(1, 1), (3, 2), (5, 14)])
    def test_qcssc_matches(self, size, value):
        result = p_qcssc(size)
        assert result.status == 'match' and result.printed == value

    def test_even_qcssc_raises_value_error(self):
        with pytest.raises(ValueError):
            p_qcssc(4)


class TestKrattenthaler:
    def test_product_at_two_rows(self):
        assert kratt_product(0, 2) == 9

    @pytest.mark.parametrize('ell', [0, 1, 2])
    def test_empty_product_is_1(self, ell):
        assert kratt_product(ell, 0) == 1

    def test_check_uses_the_determinant(self):
        assert kratt_check(0, 2).oracle == Fraction(25, 4)

    def test_uu_table(self):
        assert tabulate_uu(1) == {0: 1, 1: Fraction(5, 4)}


class TestFactorization:
    @pytest.mark.parametrize('size, value', [(1, 1), (3, 2), (5, 6), (7, 30)])
    def test_odd_factorization(self, size, value):
        assert ht_factorization(size) == value

    @pytest.mark.parametrize('size, value', [(4, 5), (6, 20)])
    def test_even_factorization(self, size, value):
        assert ht_factorization(size) == value

    def test_corrected_factorization_at_2(self):
        assert ht_factorization(2) == 4
        assert ht_factorization(2, corrected=True) == 2

    def test_even_formula_matches_at_4(self):
        assert even_ht_formula(4).status == 'match'

    def test_even_quotient_over_the_limit_has_no_oracle(self):
        assert even_ht_formula(6, limit=1).status == 'oracle-unavailable'

    def test_even_formula_is_off_at_2(self):
        result = even_ht_formula(2)
        assert result.status == 'mismatch' and result.factor == Fraction(1, 2)

    def test_odd_size_raises_value_error(self):
        with pytest.raises(ValueError):
            even_ht_formula(3)


class TestPropositions:
    def test_names(self):
        assert proposition_names() == ['eq1', 'eq2', 'eq3', 'eq4', 'eq5',
                                       'remark']

    @pytest.mark.parametrize('which', ['eq1', 'eq2', 'eq3', 'eq4', 'eq5',
                                       'remark'])
    def test_scaled_and_tiling_rows_hold_at_n_1(self, which):
        report = proposition_check(which, 1)
        rows = [r for r in report.rows
                if r.label.endswith(('scaled', 'tilings'))]
        assert len(rows) == 2 and all(r.equal for r in rows)

    def test_eq1_printed_row_is_off_by_a_power_of_2(self):
        report = proposition_check('eq1', 2)
        printed = [r for r in report.rows if r.label.endswith('printed')]
        assert [r.factor for r in printed] == [2, 4]
        assert not report.passed

    def test_eq1_scaled_rows_hold_at_n_2(self):
        report = proposition_check('eq1', 2)
        assert all(r.equal for r in report.rows if r.label.endswith('scaled'))
        assert report.notes == {'scale(1)': 2, 'scale(2)': 4}

    def test_unknown_name_raises_value_error(self):
        with pytest.raises(ValueError):
            proposition_check('eq9')


class TestCsppRatio:
    def test_ratio_at_2_is_5(self):
        report = cspp_ratio_check(2)
        assert report.notes['ratio'] == 5 and report.rows[0].equal

    def test_ratio_misses_the_doubled_side(self):
        report = cspp_ratio_check(1)
        assert report.rows[0].equal and not report.rows[1].equal


class TestFormulaBank:
    @pytest.fixture
    def bank(self):
        yield formula_bank(1)

    def test_bank_has_every_formula(self, bank):
        assert len(bank) == 30
        assert {r.name for r in bank} == {
            'asm_count', 'a_ht', 'a_v', 'a_v_factor', 'p_cstc', 'p_cssc',
            'p_qcssc', 'kratt_product', 'macmahon_box', 'even_ht_formula'}

    def test_every_result_has_an_oracle(self, bank):
        assert all(r.status in ('match', 'mismatch') for r in bank)

    def test_printed_values_are_not_symbolic(self, bank):
        assert not any(isinstance(r.printed, sympy.Basic) for r in bank)
