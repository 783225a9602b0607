import logging

import numpy as np
import pytest
from pyfpl.couplings import Coupling, pi0, punctured_fiber, rotate_coupling
from pyfpl.figures import load_figure, normalize_edge
from pyfpl.fpl import EdgeConstraint, FplGrid, boundary_labels, \
    boundary_positions, count_by_coupling, count_ht_by_coupling, \
    enumerate_fpls, enumerate_ht_fpls, enumerate_vs_fpls, fixed_edges_even, \
    fixed_edges_odd, fixed_fpl_edges, is_half_turn_symmetric, \
    is_vertically_symmetric, nonfixed_graph, nonfixed_quotient_graph
from pyfpl.regions import count_matchings, enumerate_matchings


class TestBoundary:
    def test_size_1_labels(self):
        assert boundary_labels(1) == {(0, 1): 1, (2, 1): 2}

    @pytest.mark.parametrize('size', range(1, 6))
    def test_there_are_4n_stubs_and_2n_labels(self, size):
        assert len(boundary_positions(size)) == 4 * size
        assert sorted(boundary_labels(size).values()) == \
            list(range(1, 2 * size + 1))

    def test_top_left_stub_is_label_1(self):
        assert boundary_labels(3)[(0, 3)] == 1


class TestFplGrid:
    @pytest.fixture
    def size_1(self):
        yield FplGrid(np.array([[1], [1]]), np.array([[0, 0]]))

    @pytest.fixture
    def size_8(self):
        yield FplGrid.from_edges(8, load_figure('fpl_size_8'))

    def test_size_1_has_one_arc(self, size_1):
        assert size_1.coupling == Coupling((2, 1))

    def test_size_1_is_half_turn_symmetric(self, size_1):
        assert is_half_turn_symmetric(size_1)

    def test_size_1_is_vertically_symmetric(self, size_1):
        assert is_vertically_symmetric(size_1)

    def test_arrays_are_read_only(self, size_1):
        with pytest.raises(ValueError):
            size_1.horizontal[0, 0] = 0

    def test_list_input_raises_type_error(self):
        with pytest.raises(TypeError):
            FplGrid([[1], [1]], [[0, 0]])

    def test_bad_shape_raises_value_error(self):
        with pytest.raises(ValueError):
            FplGrid(np.array([[1, 1]]), np.array([[0, 0]]))

    def test_degree_0_vertex_raises_value_error(self):
        with pytest.raises(ValueError):
            FplGrid(np.array([[0], [0]]), np.array([[0, 0]]))

    def test_broken_boundary_raises_value_error(self):
        with pytest.raises(ValueError):
            FplGrid(np.array([[0], [0]]), np.array([[1, 1]]))

    def test_figure_fpl_has_size_8(self, size_8):
        assert size_8.size == 8

    def test_figure_fpl_edges_round_trip(self, size_8):
        assert size_8.edges == sorted(normalize_edge(e) for e in
                                      load_figure('fpl_size_8'))

    def test_figure_fpl_coupling_has_8_arcs(self, size_8):
        assert size_8.coupling.size == 8

    def test_figure_fpl_has_the_drawn_coupling(self, size_8):
        assert size_8.coupling == Coupling.from_pairs([
            (1, 16), (2, 3), (4, 5), (6, 7), (8, 9), (10, 15), (11, 14),
            (12, 13)])

    def test_figure_fpl_has_one_closed_loop(self, size_8):
        assert size_8.loop_count == 1

    def test_has_edge(self, size_8):
        assert size_8.has_edge(((1, 0), (1, 1)))
        assert not size_8.has_edge(((2, 0), (2, 1)))

    def test_edge_outside_grid_raises_value_error(self, size_8):
        with pytest.raises(ValueError):
            size_8.has_edge(((0, 0), (0, 1)))

    def test_even_fpl_cannot_be_mirrored(self, size_8):
        with pytest.raises(ValueError):
            size_8.mirrored()

    def test_rotated_twice_is_identity(self, size_8):
        assert size_8.rotated().rotated() == size_8


class TestEnumerateFpls:
    @pytest.mark.parametrize('size, count', [(1, 1), (2, 2), (3, 7), (4, 42),
                                             (5, 429)])
    def test_count_is_asm_number(self, size, count):
        assert sum(1 for _ in enumerate_fpls(size)) == count

    def test_fpls_are_distinct(self):
        fpls = list(enumerate_fpls(4))
        assert len(set(fpls)) == 42

    def test_enumeration_is_deterministic(self):
        assert list(enumerate_fpls(4)) == list(enumerate_fpls(4))

    def test_half_turn_maps_labels_by_n(self):
        for f in enumerate_fpls(3):
            assert f.rotated().coupling == rotate_coupling(f.coupling, 3)

    def test_three_of_seven_are_half_turn_symmetric(self):
        assert sum(1 for f in enumerate_fpls(3)
                   if is_half_turn_symmetric(f)) == 3

    def test_size_over_limit_raises_value_error(self):
        with pytest.raises(ValueError):
            enumerate_fpls(8)

    def test_zero_size_raises_value_error(self):
        with pytest.raises(ValueError):
            enumerate_fpls(0)

    def test_loop_count_of_size_1_is_0(self):
        assert next(enumerate_fpls(1)).loop_count == 0

    def test_some_size_4_fpl_has_a_loop(self):
        assert any(f.loop_count for f in enumerate_fpls(4))


class TestEnumerateSymmetricFpls:
    @pytest.mark.parametrize('size, count', [(1, 1), (2, 2), (3, 3), (4, 10),
                                             (5, 25)])
    def test_count_is_htasm_number(self, size, count):
        assert sum(1 for _ in enumerate_ht_fpls(size)) == count

    def test_every_yield_is_half_turn_symmetric(self):
        assert all(is_half_turn_symmetric(f) for f in enumerate_ht_fpls(5))

    @pytest.mark.parametrize('size, count', [(1, 1), (3, 1), (5, 3), (2, 0)])
    def test_count_is_vsasm_number(self, size, count):
        assert sum(1 for _ in enumerate_vs_fpls(size)) == count

    def test_every_yield_is_vertically_symmetric(self):
        assert all(is_vertically_symmetric(f) and f.mirrored() == f
                   for f in enumerate_vs_fpls(5))


class TestCountByCoupling:
    def test_size_2_has_two_couplings_once_each(self):
        assert list(count_by_coupling(2).values()) == [1, 1]

    def test_size_3_has_known_counts(self):
        assert sorted(count_by_coupling(3).values()) == [1, 1, 1, 2, 2]

    @pytest.mark.parametrize('size', range(1, 6))
    def test_pi0_is_carried_once(self, size):
        assert count_by_coupling(size)[pi0(size)] == 1

    def test_tallies_do_not_depend_on_workers(self):
        assert count_by_coupling(4, workers=2) == count_by_coupling(4)

    def test_ht_tallies_sum_to_htasm_number(self):
        assert sum(count_ht_by_coupling(4).values()) == 10

    def test_ht_tallies_do_not_depend_on_workers(self):
        assert count_ht_by_coupling(4, workers=2) == count_ht_by_coupling(4)


class TestEdgeConstraint:
    @pytest.fixture
    def corner(self):
        yield EdgeConstraint([((1, 1), (2, 1)), ((1, 1), (1, 2))])

    def test_saturated_vertex_forces_its_other_edges_out(self, corner):
        assert ((0, 1), (1, 1)) in corner.forced_absent
        assert ((1, 0), (1, 1)) in corner.forced_absent

    def test_corner_conflicts_with_occupied_stub(self, corner):
        assert not corner.is_consistent(3)

    def test_inconsistent_constraint_yields_nothing(self, corner, caplog):
        with caplog.at_level(logging.WARNING):
            assert list(enumerate_fpls(3, corner)) == []
        assert 'inconsistent' in caplog.text

    def test_edge_outside_grid_is_a_conflict(self):
        constraint = EdgeConstraint([((5, 5), (6, 5))])
        assert constraint.conflicts(2)

    def test_empty_stub_forced_in_is_a_conflict(self):
        constraint = EdgeConstraint([((1, 0), (1, 1))])
        assert constraint.conflicts(1) == \
            ['The empty stub ((1, 0), (1, 1)) is forced in.']

    def test_bad_edge_raises_type_error(self):
        with pytest.raises(TypeError):
            EdgeConstraint([(1, 2)])

    def test_forcing_an_edge_in_and_out_splits_the_enumeration(self):
        edge = ((1, 1), (1, 2))
        present = list(enumerate_fpls(3, EdgeConstraint([edge])))
        absent = list(enumerate_fpls(3, EdgeConstraint([], [edge])))
        assert all(f.has_edge(edge) for f in present)
        assert not any(f.has_edge(edge) for f in absent)
        assert len(present) + len(absent) == 7


class TestFixedEdges:
    def test_even_edges_match_figure(self):
        assert fixed_edges_even(6).forced_present == \
            set(load_figure('fixed_edges_even_12'))

    def test_odd_edges_match_figure(self):
        assert fixed_edges_odd(6).forced_present == \
            set(load_figure('fixed_edges_odd_13'))

    @pytest.mark.parametrize('n', range(1, 7))
    def test_even_edges_meet_every_vertex_once(self, n):
        degrees = fixed_edges_even(n).vertex_degrees()
        assert all(degrees[(x, y)] == 1 for x in range(1, 2 * n + 1)
                   for y in range(1, 2 * n + 1))

    @pytest.mark.parametrize('n', range(1, 7))
    def test_even_edges_are_half_turn_invariant(self, n):
        constraint = fixed_edges_even(n)
        assert constraint.rotated(2 * n) == constraint

    @pytest.mark.parametrize('n', range(0, 7))
    def test_odd_edges_are_half_turn_invariant(self, n):
        constraint = fixed_edges_odd(n)
        assert constraint.rotated(2 * n + 1) == constraint

    @pytest.mark.parametrize('n', range(0, 7))
    def test_odd_edges_are_consistent(self, n):
        assert fixed_edges_odd(n).is_consistent(2 * n + 1)

    def test_zero_even_index_raises_value_error(self):
        with pytest.raises(ValueError):
            fixed_edges_even(0)

    @pytest.mark.parametrize('n, count', [(1, 2), (2, 5), (3, 20)])
    def test_even_htfpls_count_cspps(self, n, count):
        assert sum(1 for _ in enumerate_ht_fpls(
            2 * n, fixed_edges_even(n))) == count

    def test_even_htfpls_have_couplings_over_the_arches(self):
        fiber = {pp.underlying for pp in punctured_fiber(pi0(2))}
        assert all(f.coupling in fiber
                   for f in enumerate_ht_fpls(4, fixed_edges_even(2)))

    @pytest.mark.parametrize('n, count', [(1, 2), (2, 6)])
    def test_odd_htfpls_have_known_count(self, n, count):
        assert sum(1 for _ in enumerate_ht_fpls(
            2 * n + 1, fixed_edges_odd(n))) == count


class TestNonfixedGraphs:
    @pytest.mark.parametrize('n', [1, 2, 3])
    def test_even_graph_is_the_free_part(self, n):
        constraint = fixed_edges_even(n)
        graph = nonfixed_graph(2 * n, constraint)
        assert graph.number_of_nodes() == 0 or \
            all(constraint.vertex_degrees()[v] < 2 for v in graph)

    @pytest.mark.parametrize('n, count', [(1, 2), (2, 5), (3, 20)])
    def test_even_quotient_matchings_count_cspps(self, n, count):
        assert count_matchings(nonfixed_quotient_graph(n, 'even')) == count

    @pytest.mark.parametrize('n, count', [(2, 6), (3, 30)])
    def test_odd_quotient_matchings_count_fixed_htfpls(self, n, count):
        assert count_matchings(nonfixed_quotient_graph(n, 'odd')) == count

    def test_odd_quotient_matches_enumeration(self):
        assert count_matchings(nonfixed_quotient_graph(2, 'odd')) == \
            sum(1 for _ in enumerate_ht_fpls(5, fixed_edges_odd(2)))

    def test_bad_parity_raises_value_error(self):
        with pytest.raises(ValueError):
            nonfixed_quotient_graph(2, 'other')

    def test_quotient_matchings_lift_to_distinct_htfpls(self):
        lifted = {FplGrid.from_edges(4, fixed_fpl_edges(2, 'even', t.edges))
                  for t in enumerate_matchings(
                      nonfixed_quotient_graph(2, 'even'))}
        assert lifted == set(enumerate_ht_fpls(4, fixed_edges_even(2)))
