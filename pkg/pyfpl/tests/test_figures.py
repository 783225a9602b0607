from fractions import Fraction

import pytest
from pyfpl.figures import figure_names, format_edge, format_edges, \
    load_figure, normalize_edge, parse_edges, parse_weighted_edges


class TestNormalizeEdge:
    def test_endpoints_are_sorted(self):
        assert normalize_edge(((2, 1), (1, 1))) == ((1, 1), (2, 1))

    def test_sorted_edge_is_unchanged(self):
        assert normalize_edge(((0, 3), (1, 3))) == ((0, 3), (1, 3))


class TestParseEdges:
    @pytest.fixture
    def text(self):
        yield '# a comment\n\n(1,0)-(1,1)\n(2,1)-(1,1) w=1/2\n'

    def test_comments_and_blank_lines_are_skipped(self, text):
        assert parse_edges(text) == [((1, 0), (1, 1)), ((1, 1), (2, 1))]

    def test_weights_are_exact(self, text):
        assert parse_weighted_edges(text)[((1, 1), (2, 1))] == Fraction(1, 2)

    def test_missing_weight_is_1(self, text):
        assert parse_weighted_edges(text)[((1, 0), (1, 1))] == 1

    def test_bad_line_raises_value_error(self):
        with pytest.raises(ValueError):
            parse_edges('(1,0)-(1,1)\n(1,0)--(1,1)\n')


class TestFormatEdges:
    def test_unit_weight_is_omitted(self):
        assert format_edge(((1, 1), (0, 1))) == '(0,1)-(1,1)'

    def test_fraction_weight_is_written(self):
        assert format_edge(((0, 1), (1, 1)), Fraction(1, 2)) == \
            '(0,1)-(1,1) w=1/2'

    def test_text_parses_back(self):
        edges = [((1, 1), (2, 1)), ((0, 1), (1, 1))]
        weights = {((1, 1), (2, 1)): Fraction(3, 2)}
        assert parse_weighted_edges(format_edges(edges, weights)) == {
            ((0, 1), (1, 1)): Fraction(1), ((1, 1), (2, 1)): Fraction(3, 2)}


class TestLoadFigure:
    def test_figure_names_are_known(self):
        assert figure_names() == ['fixed_edges_even_12', 'fixed_edges_odd_13',
                                  'fpl_size_8', 'region_g_4']

    @pytest.mark.parametrize('name, count', [('fpl_size_8', 72),
                                             ('fixed_edges_even_12', 84),
                                             ('fixed_edges_odd_13', 98),
                                             ('region_g_4', 55)])
    def test_figure_has_known_edge_count(self, name, count):
        assert len(load_figure(name)) == count

    def test_unknown_figure_raises_file_not_found_error(self):
        with pytest.raises(FileNotFoundError):
            load_figure('fig_99')
