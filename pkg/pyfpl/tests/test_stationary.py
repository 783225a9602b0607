from fractions import Fraction

import pytest
from pyfpl.couplings import pi0
from pyfpl.determinants import RationalMatrix
from pyfpl.stationary import ChainSpec, ht_chain, plain_chain, solve_chain, \
    stationary, transition_matrix, verify_dg, verify_pushforward, \
    verify_rarest, verify_refined, verify_rs


class TestChainSpec:
    def test_plain_chain_has_catalan_states(self):
        chain = plain_chain(3)
        assert len(chain.states) == 5 and len(chain.generators) == 6

    @pytest.mark.parametrize('size, states', [(2, 2), (3, 3), (4, 6), (5, 10)])
    def test_ht_chain_has_one_state_per_coupling(self, size, states):
        chain = ht_chain(size)
        assert len(chain.states) == states and \
            len(chain.generators) == size

    def test_no_states_raise_value_error(self):
        with pytest.raises(ValueError):
            ChainSpec([], [('g', lambda s: s)])

    def test_repeated_state_raises_value_error(self):
        with pytest.raises(ValueError):
            ChainSpec(['a', 'a'], [('g', lambda s: s)])


class TestTransitionMatrix:
    def test_single_state_stays(self):
        assert transition_matrix(plain_chain(1)).tolist() == [[Fraction(1)]]

    @pytest.mark.parametrize('n', [2, 3, 4])
    def test_rows_are_probability_vectors(self, n):
        matrix = transition_matrix(plain_chain(n))
        assert all(sum(row) == 1 for row in matrix.tolist())

    def test_escaping_generator_raises_value_error(self):
        chain = ChainSpec(['a', 'b'], [('g', lambda s: 'c')], 'demo')
        with pytest.raises(ValueError, match='The generator g'):
            transition_matrix(chain)


class TestStationary:
    def test_two_couplings_are_equally_likely(self):
        result = solve_chain(plain_chain(2))
        assert list(result.distribution.values()) == [Fraction(1, 2)] * 2

    def test_size_3_has_known_distribution(self):
        result = solve_chain(plain_chain(3))
        assert sorted(result.distribution.values()) == \
            [Fraction(1, 7)] * 3 + [Fraction(2, 7)] * 2

    def test_parallel_arches_are_rarest(self):
        result = solve_chain(plain_chain(4))
        assert result[pi0(4)] == min(result.distribution.values()) == \
            Fraction(1, 42)

    @pytest.mark.parametrize('n', [1, 2, 3, 4])
    def test_solution_is_exact(self, n):
        assert solve_chain(plain_chain(n)).is_exact

    def test_states_default_to_indices(self):
        p = RationalMatrix([[0, 1], [Fraction(1, 3), Fraction(2, 3)]])
        assert stationary(p).distribution == {0: Fraction(1, 4),
                                              1: Fraction(3, 4)}

    def test_reducible_chain_raises_value_error(self):
        with pytest.raises(ValueError, match='reducible'):
            stationary(RationalMatrix.identity(2), ['a', 'b'])

    def test_non_stochastic_matrix_raises_value_error(self):
        with pytest.raises(ValueError):
            stationary(RationalMatrix([[1, 1], [0, 1]]))

    def test_wrong_state_count_raises_value_error(self):
        with pytest.raises(ValueError):
            stationary(RationalMatrix.identity(1), ['a', 'b'])


class TestVerify:
    @pytest.mark.parametrize('size', [1, 2, 3, 4, 5])
    def test_rs_passes(self, size):
        report = verify_rs(size)
        assert report.passed and report.theorem

    def test_rs_reports_the_fpl_total(self):
        assert verify_rs(4).notes['fpls'] == 42

    @pytest.mark.parametrize('size', range(1, 7))
    def test_dg_passes(self, size):
        assert verify_dg(size).passed

    def test_dg_is_not_a_theorem(self):
        report = verify_dg(4)
        assert not report.theorem and report.notes['htfpls'] == 10
        assert len(report.rows) == 6

    @pytest.mark.parametrize('n, ratio', [(1, 2), (2, 5), (3, 20)])
    def test_refined_passes_with_cspp_ratio(self, n, ratio):
        report = verify_refined(n)
        assert report.passed and report.notes['ratio'] == ratio

    @pytest.mark.parametrize('n', [1, 2, 3])
    def test_pushforward_passes(self, n):
        assert verify_pushforward(n).passed

    @pytest.mark.parametrize('n', [1, 2, 3, 4, 5])
    def test_rarest_passes(self, n):
        report = verify_rarest(n)
        assert report.passed and len(report.rows) == n
