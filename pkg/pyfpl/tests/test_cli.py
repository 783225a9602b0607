import argparse
from fractions import Fraction
import json

import pytest
from pyfpl.cli import RunConfig, main, parse_rational


class TestParseRational:
    @pytest.mark.parametrize('text, value', [('1/2', Fraction(1, 2)),
                                             ('3', Fraction(3)),
                                             ('-2/4', Fraction(-1, 2))])
    def test_text_has_known_value(self, text, value):
        assert parse_rational(text) == value

    @pytest.mark.parametrize('text', ['1.5', '1e3', 'half', '1/0'])
    def test_bad_text_raises_argument_type_error(self, text):
        with pytest.raises(argparse.ArgumentTypeError):
            parse_rational(text)


class TestRunConfig:
    def test_limit_size_follows_the_symmetry(self):
        assert RunConfig('enumerate', 3).limit_size == 7
        assert RunConfig('enumerate', 3, ht=True).limit_size == 7

    def test_weights_default_to_the_grid(self):
        assert len(RunConfig('tables', 1).weights) == 4

    def test_given_weights_replace_the_grid(self):
        config = RunConfig('tables', 1, x=Fraction(1, 2), y=Fraction(1))
        assert config.weights == ((Fraction(1, 2), Fraction(1)),)

    def test_zero_workers_raise_value_error(self):
        with pytest.raises(ValueError):
            RunConfig('enumerate', 3, workers=0)

    def test_limits_above_the_package_limits_raise_value_error(self):
        with pytest.raises(ValueError):
            RunConfig('enumerate', 3, limit_size=8)
        with pytest.raises(ValueError):
            RunConfig('tables', 1, limit_vertices=129)

    def test_unknown_format_raises_value_error(self):
        with pytest.raises(ValueError):
            RunConfig('enumerate', 3, output_format='xml')

    @pytest.mark.parametrize('identity, size, grid', [('rs', 5, 5),
                                                    ('refined', 3, 6),
                                                    ('bijection', 2, 4),
                                                    ('determinants', 3, None)])
    def test_grid_size_follows_the_identity(self, identity, size, grid):
        assert RunConfig('verify', size, identity=identity).grid_size == grid

    def test_zero_size_raises_value_error(self):
        with pytest.raises(ValueError):
            RunConfig('enumerate', 0)


class TestEnumerate:
    def test_text_has_total_in_title(self, capsys):
        assert main(['enumerate', '--size', '3']) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == 'A(3) = 7' and len(lines) == 7

    def test_ht_total(self, capsys):
        assert main(['enumerate', '--size', '4', '--ht']) == 0
        assert capsys.readouterr().out.startswith('A_HT(4) = 10\n')

    def test_json_rows_sum_to_total(self, capsys):
        assert main(['enumerate', '-n', '4', '--format', 'json']) == 0
        table = json.loads(capsys.readouterr().out)
        assert table['table'] == 'A(4) = 42'
        assert sum(int(row['count']) for row in table['rows']) == 42

    def test_size_over_limit_exits_with_2(self, capsys):
        assert main(['enumerate', '--size', '4', '--limit-size', '3']) == 2
        assert capsys.readouterr().err.startswith('pyfpl: error:')

    def test_zero_size_exits_with_2(self):
        assert main(['enumerate', '--size', '0']) == 2


class TestVerify:
    def test_rs_passes(self, capsys):
        assert main(['verify', 'rs', '--size', '3']) == 0
        report = json.loads(capsys.readouterr().out)
        assert report['pass'] is True and report['identity'] == 'rs'

    def test_conjecture_never_fails_the_run(self):
        assert main(['verify', 'dg', '--size', '4']) == 0

    def test_printed_proposition_never_fails_the_run(self, capsys):
        assert main(['verify', 'proposition', '--which', 'eq1', '--n',
                     '2']) == 0
        assert json.loads(capsys.readouterr().out)['pass'] is False

    def test_text_report(self, capsys):
        assert main(['verify', 'bijection', '--size', '1', '--format',
                     'text']) == 0
        assert capsys.readouterr().out.startswith('bijection at size 1: pass')

    def test_unknown_identity_exits_with_2(self):
        with pytest.raises(SystemExit) as error:
            main(['verify', 'nope'])
        assert error.value.code == 2

    def test_zero_workers_exit_with_2(self, capsys):
        assert main(['verify', 'rs', '--workers', '0']) == 2
        assert 'at least 1' in capsys.readouterr().err

    def test_size_over_the_limit_size_exits_with_2(self, capsys):
        assert main(['verify', 'rs', '--size', '5', '--limit-size',
                     '3']) == 2
        assert capsys.readouterr().err.startswith('pyfpl: error:')

    def test_doubled_grid_over_the_limit_exits_with_2(self):
        assert main(['verify', 'refined', '--size', '4']) == 2

    def test_determinants_pass_at_three_teeth(self, capsys):
        assert main(['verify', 'determinants', '--size', '3']) == 0
        assert json.loads(capsys.readouterr().out)['pass'] is True

    def test_region_over_the_vertex_limit_exits_with_1(self, capsys):
        assert main(['verify', 'determinants', '--size', '3',
                     '--limit-vertices', '64']) == 1
        assert 'pyfpl: failed:' in capsys.readouterr().err


class TestTables:
    def test_csv_has_one_line_per_entry(self, capsys):
        assert main(['tables', '--size', '1']) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == 'ell,n,x,y,determinant,tilings'
        assert len(lines) == 1 + 3 * 4 * 2

    def test_given_weights(self, capsys):
        assert main(['tables', '--size', '1', '--x', '1/2', '--y', '1']) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 1 + 3 * 2
        assert '0,1,1/2,1,3/2,3/2' in lines

    def test_decimal_weight_exits_with_2(self):
        with pytest.raises(SystemExit) as error:
            main(['tables', '--x', '1.5', '--y', '1'])
        assert error.value.code == 2

    def test_lone_weight_exits_with_2(self):
        assert main(['tables', '--size', '1', '--x', '1/2']) == 2

    def test_out_writes_the_file(self, tmp_path, capsys):
        path = tmp_path / 'tables.csv'
        assert main(['tables', '--size', '1', '--out', str(path)]) == 0
        assert capsys.readouterr().out == ''
        assert path.read_text().startswith('ell,n,x,y,determinant,tilings')


class TestFormulas:
    def test_json_lists_the_bank(self, capsys):
        assert main(['formulas', '--size', '1', '--format', 'json']) == 0
        assert len(json.loads(capsys.readouterr().out)) == 30
