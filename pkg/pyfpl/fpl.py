"""This module provides objects and functions for enumerating fully packed
loop configurations (FPLs) and their symmetric variants.

The vertices of an FPL of size N are the lattice points (x, y) with
1 <= x, y <= N, x growing to the right and y growing upwards. Boundary stubs
join the vertices of the border to points with x = 0, x = N + 1, y = 0 or
y = N + 1. Going anticlockwise from the left stub of the top row, every
other stub is occupied, starting with that one; the occupied stubs are
labelled 1 to 2N in the same order.

Edges are stored in two 0/1 arrays. ``horizontal[x, y - 1]`` is the edge
(x, y)-(x + 1, y) and ``vertical[x - 1, y]`` is the edge (x, y)-(x, y + 1).
"""
from collections import Counter
from functools import cached_property
import itertools
import logging
from multiprocessing import Pool

import networkx as nx
import numpy as np

from .constants import max_fpl_size, max_ht_size, max_vs_size
from .couplings import Coupling, HtCoupling
from .figures import Edge, normalize_edge
from .regions import PlanarRegion

logger = logging.getLogger(__name__)

_choices = {0: ((0, 0),), 1: ((1, 0), (0, 1)), 2: ((1, 1),)}


def _locate(edge, size: int) -> tuple[str, int, int]:
    (x1, y1), (x2, y2) = normalize_edge(edge)
    if y1 == y2 and x2 == x1 + 1 and 0 <= x1 <= size and 1 <= y1 <= size:
        return 'h', x1, y1 - 1
    if x1 == x2 and y2 == y1 + 1 and 1 <= x1 <= size and 0 <= y1 <= size:
        return 'v', x1 - 1, y1
    message = f'{edge} is not an edge of the grid of size {size}.'
    raise ValueError(message)


def _edge_at(kind: str, i: int, j: int) -> Edge:
    if kind == 'h':
        return (i, j + 1), (i + 1, j + 1)
    return (i + 1, j), (i + 1, j + 1)


def _image(kind: str, i: int, j: int, size: int, symmetry: str):
    if symmetry == 'half-turn':
        return (kind, size - i, size - 1 - j) if kind == 'h' else \
            (kind, size - 1 - i, size - j)
    return (kind, size - i, j) if kind == 'h' else (kind, size - 1 - i, j)


def boundary_positions(size: int) -> dict[Edge, int]:
    """Get the anticlockwise position of every boundary stub.

    Position 0 is the left stub of the top row. Stubs at even positions are
    occupied.

    Parameters
    ----------
    size: int
        The grid size N.

    Returns
    -------
    dict[Edge, int]
        The 4N stubs and their positions 0 to 4N - 1.

    """
    n = size
    positions = {}
    for y in range(1, n + 1):
        positions[((0, y), (1, y))] = n - y
        positions[((n, y), (n + 1, y))] = 2 * n + y - 1
    for x in range(1, n + 1):
        positions[((x, 0), (x, 1))] = n + x - 1
        positions[((x, n), (x, n + 1))] = 4 * n - x
    return dict(sorted(positions.items(), key=lambda item: item[1]))


def boundary_labels(size: int) -> dict[tuple[int, int], int]:
    """Get the label 1 to 2N of the outer end of every occupied stub.

    Examples
    --------
    >>> import pyfpl as pf
    >>> pf.boundary_labels(1)
    {(0, 1): 1, (2, 1): 2}

    """
    labels = {}
    for edge, position in boundary_positions(size).items():
        if position % 2 == 0:
            outer = [p for p in edge if not (1 <= p[0] <= size and
                                             1 <= p[1] <= size)][0]
            labels[outer] = position // 2 + 1
    return labels


class FplGrid:
    """A fully packed loop configuration.

    Parameters
    ----------
    horizontal: np.ndarray
        The (N + 1, N) occupancy array of the horizontal edges.
    vertical: np.ndarray
        The (N, N + 1) occupancy array of the vertical edges.

    Raises
    ------
    TypeError
        Raised if an input is not a numpy array.
    ValueError
        Raised if the shapes disagree, if an entry is not 0 or 1, if a vertex
        does not have degree 2, or if the stubs break the alternating
        boundary condition.

    Examples
    --------
    Make the unique FPL of size 1.

    >>> import numpy as np
    >>> import pyfpl as pf
    >>> f = pf.FplGrid(np.array([[1], [1]]), np.array([[0, 0]]))
    >>> str(f.coupling)
    '(1,2)'

    """
    def __init__(self, horizontal: np.ndarray, vertical: np.ndarray):
        self._horizontal = horizontal
        self._vertical = vertical
        self._validate_input()

        self._horizontal = self._make_read_only(horizontal)
        self._vertical = self._make_read_only(vertical)

    @classmethod
    def from_edges(cls, size: int, edges):
        """Make an FPL from the list of its occupied edges.

        """
        horizontal = np.zeros((size + 1, size), dtype=np.int8)
        vertical = np.zeros((size, size + 1), dtype=np.int8)
        for edge in edges:
            kind, i, j = _locate(edge, size)
            (horizontal if kind == 'h' else vertical)[i, j] = 1
        return cls(horizontal, vertical)

    def _validate_input(self) -> None:
        if not isinstance(self._horizontal, np.ndarray) or \
                not isinstance(self._vertical, np.ndarray):
            message = 'The edge arrays must be numpy arrays.'
            raise TypeError(message)
        size = self._vertical.shape[0]
        if size < 1 or self._horizontal.shape != (size + 1, size) or \
                self._vertical.shape != (size, size + 1):
            message = 'The edge arrays must have shapes (N + 1, N) and ' \
                      '(N, N + 1) with N >= 1.'
            raise ValueError(message)
        if not np.all(np.isin(self._horizontal, (0, 1))) or \
                not np.all(np.isin(self._vertical, (0, 1))):
            message = 'The edge arrays must contain only 0s and 1s.'
            raise ValueError(message)
        degree = self._horizontal[:-1, :] + self._horizontal[1:, :] + \
            self._vertical[:, :-1] + self._vertical[:, 1:]
        if np.any(degree != 2):
            x, y = np.argwhere(degree != 2)[0]
            message = f'The vertex ({x + 1},{y + 1}) does not have degree 2.'
            raise ValueError(message)
        for edge, position in boundary_positions(size).items():
            kind, i, j = _locate(edge, size)
            array = self._horizontal if kind == 'h' else self._vertical
            if array[i, j] != (position % 2 == 0):
                message = f'The stub {edge} breaks the alternating boundary.'
                raise ValueError(message)

    @staticmethod
    def _make_read_only(array: np.ndarray) -> np.ndarray:
        array = array.astype(np.int8)
        array.setflags(write=False)
        return array

    def __eq__(self, other):
        if not isinstance(other, FplGrid):
            return NotImplemented
        return np.array_equal(self._horizontal, other._horizontal) and \
            np.array_equal(self._vertical, other._vertical)

    def __hash__(self):
        return hash((self._horizontal.tobytes(), self._vertical.tobytes(),
                     self.size))

    def __repr__(self):
        return f'FplGrid(size={self.size}, coupling={self.coupling})'

    def has_edge(self, edge) -> bool:
        """Check whether an edge of the grid is occupied.

        """
        kind, i, j = _locate(edge, self.size)
        array = self._horizontal if kind == 'h' else self._vertical
        return bool(array[i, j])

    def rotated(self):
        """Get the image of this FPL under the half-turn of the grid.

        """
        return FplGrid(np.rot90(self._horizontal, 2),
                       np.rot90(self._vertical, 2))

    def mirrored(self):
        """Get the image of this FPL under the left-right mirror.

        Raises
        ------
        ValueError
            Raised if the size is even, since the mirror then breaks the
            boundary condition.

        """
        if self.size % 2 == 0:
            message = 'Only FPLs of odd size can be mirrored.'
            raise ValueError(message)
        return FplGrid(np.flip(self._horizontal, axis=0),
                       np.flip(self._vertical, axis=0))

    @property
    def size(self) -> int:
        """Get the grid size N.

        """
        return self._vertical.shape[0]

    @property
    def horizontal(self) -> np.ndarray:
        """Get the read-only horizontal occupancy array.

        """
        return self._horizontal

    @property
    def vertical(self) -> np.ndarray:
        """Get the read-only vertical occupancy array.

        """
        return self._vertical

    @cached_property
    def edges(self) -> list[Edge]:
        """Get the sorted occupied edges, stubs included.

        """
        edges = [_edge_at('h', i, j) for i, j in np.argwhere(self._horizontal)]
        edges += [_edge_at('v', i, j) for i, j in np.argwhere(self._vertical)]
        return sorted(normalize_edge(e) for e in edges)

    @cached_property
    def graph(self) -> nx.Graph:
        """Get the graph of occupied edges.

        """
        return nx.Graph(self.edges)

    @cached_property
    def coupling(self) -> Coupling:
        """Get the coupling of the open paths.

        """
        return coupling_of(self)

    @property
    def loop_count(self) -> int:
        """Get the number of closed loops.

        """
        labels = boundary_labels(self.size)
        return sum(1 for component in nx.connected_components(self.graph)
                   if not any(p in labels for p in component))


def coupling_of(f: FplGrid) -> Coupling:
    """Get the coupling of an FPL.

    Each open path joins two occupied stubs, and their labels form a pair of
    the coupling.

    Parameters
    ----------
    f: FplGrid
        The FPL.

    Returns
    -------
    Coupling
        The noncrossing coupling of size N.

    """
    labels = boundary_labels(f.size)
    pairs = []
    for component in nx.connected_components(f.graph):
        ends = sorted(labels[p] for p in component if p in labels)
        if ends:
            pairs.append(tuple(ends))
    return Coupling.from_pairs(pairs, 2 * f.size)


def is_half_turn_symmetric(f: FplGrid) -> bool:
    """Check whether an FPL is fixed by the half-turn of the grid.

    """
    return np.array_equal(f.horizontal, np.rot90(f.horizontal, 2)) and \
        np.array_equal(f.vertical, np.rot90(f.vertical, 2))


def is_vertically_symmetric(f: FplGrid) -> bool:
    """Check whether an FPL is fixed by the left-right mirror of the grid.

    FPLs of even size never are.

    """
    if f.size % 2 == 0:
        return False
    return np.array_equal(f.horizontal, np.flip(f.horizontal, axis=0)) and \
        np.array_equal(f.vertical, np.flip(f.vertical, axis=0))


class EdgeConstraint:
    """A set of edges forced into, or out of, every enumerated FPL.

    A vertex meeting two forced edges is saturated and its other two edges
    are forced out.

    Parameters
    ----------
    forced_present
        Iterable of edges every FPL must contain.
    forced_absent
        Iterable of further edges no FPL may contain.

    Raises
    ------
    TypeError
        Raised if an edge is not a pair of integer points.

    """
    def __init__(self, forced_present, forced_absent=()):
        try:
            self._forced_present = frozenset(
                normalize_edge(e) for e in forced_present)
            self._explicit_absent = frozenset(
                normalize_edge(e) for e in forced_absent)
        except (TypeError, ValueError) as error:
            message = 'Each forced edge must be a pair of integer points.'
            raise TypeError(message) from error

        self._forced_absent = self._make_forced_absent()

    def _make_forced_absent(self) -> frozenset[Edge]:
        absent = set(self._explicit_absent)
        for (x, y), degree in self.vertex_degrees().items():
            if degree != 2:
                continue
            for neighbour in ((x - 1, y), (x + 1, y), (x, y - 1), (x, y + 1)):
                edge = normalize_edge(((x, y), neighbour))
                if edge not in self._forced_present:
                    absent.add(edge)
        return frozenset(absent)

    def vertex_degrees(self) -> Counter:
        """Get the number of forced edges at every point.

        """
        return Counter(p for edge in self._forced_present for p in edge)

    def conflicts(self, size: int) -> list[str]:
        """Explain why this constraint cannot hold on a grid of given size.

        Returns
        -------
        list[str]
            One message per problem. It is empty when the constraint is
            consistent with the grid and its boundary condition.

        """
        problems = []
        positions = boundary_positions(size)
        for edge in sorted(self._forced_present | self._forced_absent):
            try:
                _locate(edge, size)
            except ValueError as ve:
                problems.append(str(ve))
        for point, degree in sorted(self.vertex_degrees().items()):
            if degree > 2:
                problems.append(f'{point} meets {degree} forced edges.')
        for edge in sorted(self._forced_present & self._forced_absent):
            problems.append(f'{edge} is forced both in and out.')
        for edge, position in positions.items():
            if edge in self._forced_present and position % 2:
                problems.append(f'The empty stub {edge} is forced in.')
            if edge in self._forced_absent and position % 2 == 0:
                problems.append(f'The occupied stub {edge} is forced out.')
        return problems

    def is_consistent(self, size: int) -> bool:
        """Check whether the constraint has no conflicts on a grid.

        """
        return not self.conflicts(size)

    def rotated(self, size: int):
        """Get the image of this constraint under the half-turn of the grid.

        """
        turn = lambda p: (size + 1 - p[0], size + 1 - p[1])
        return EdgeConstraint([(turn(a), turn(b)) for a, b in
                               self._forced_present],
                              [(turn(a), turn(b)) for a, b in
                               self._explicit_absent])

    def __eq__(self, other):
        if not isinstance(other, EdgeConstraint):
            return NotImplemented
        return self._forced_present == other._forced_present and \
            self._forced_absent == other._forced_absent

    def __hash__(self):
        return hash((self._forced_present, self._forced_absent))

    @property
    def forced_present(self) -> frozenset[Edge]:
        """Get the edges forced in.

        """
        return self._forced_present

    @property
    def forced_absent(self) -> frozenset[Edge]:
        """Get the edges forced out, including those at saturated vertices.

        """
        return self._forced_absent


class _Search:
    # Backtracking over the vertices in raster order from the bottom row.
    # Each vertex decides its right and top edges; an assignment also fixes
    # the symmetry image of the edge.
    def __init__(self, size: int, constraint: EdgeConstraint = None,
                 symmetry: str = None):
        self._size = size
        self._symmetry = symmetry
        self._arrays = {'h': np.full((size + 1, size), -1, dtype=np.int8),
                        'v': np.full((size, size + 1), -1, dtype=np.int8)}
        self.consistent = self._preset(constraint)

    def _preset(self, constraint: EdgeConstraint) -> bool:
        trail = []
        for edge, position in boundary_positions(self._size).items():
            if not self._assign(*_locate(edge, self._size),
                                int(position % 2 == 0), trail):
                return False
        if constraint is None:
            return True
        if constraint.conflicts(self._size):
            return False
        for edges, value in ((constraint.forced_present, 1),
                             (constraint.forced_absent, 0)):
            for edge in sorted(edges):
                if not self._assign(*_locate(edge, self._size), value, trail):
                    return False
        return True

    def _assign(self, kind: str, i: int, j: int, value: int,
                trail: list) -> bool:
        orbit = [(kind, i, j)]
        if self._symmetry is not None:
            orbit.append(_image(kind, i, j, self._size, self._symmetry))
        for k, a, b in orbit:
            current = self._arrays[k][a, b]
            if current == -1:
                self._arrays[k][a, b] = value
                trail.append((k, a, b))
            elif current != value:
                return False
        return True

    def _undo(self, trail: list) -> None:
        for k, a, b in trail:
            self._arrays[k][a, b] = -1

    def states(self, stop: int):
        """Yield copies of the partial assignments reached at vertex
        ``stop``."""
        for _ in self._run(0, stop):
            yield self._arrays['h'].copy(), self._arrays['v'].copy()

    def resume(self, horizontal: np.ndarray, vertical: np.ndarray,
               start: int):
        self._arrays = {'h': horizontal.copy(), 'v': vertical.copy()}
        for _ in self._run(start, self._size ** 2):
            yield FplGrid(self._arrays['h'].copy(), self._arrays['v'].copy())

    def grids(self):
        for _ in self._run(0, self._size ** 2):
            yield FplGrid(self._arrays['h'].copy(), self._arrays['v'].copy())

    def _run(self, index: int, stop: int):
        if index == stop:
            yield
            return
        n = self._size
        x, y = index % n + 1, index // n + 1
        need = 2 - int(self._arrays['h'][x - 1, y - 1]) - \
            int(self._arrays['v'][x - 1, y - 1])
        for right, top in _choices.get(need, ()):
            trail = []
            if self._assign('h', x, y - 1, right, trail) and \
                    self._assign('v', x - 1, y, top, trail):
                yield from self._run(index + 1, stop)
            self._undo(trail)


def _check_size(size: int, limit: int) -> None:
    if not isinstance(size, int) or size < 1:
        message = 'The grid size must be a positive int.'
        raise ValueError(message)
    if size > limit:
        message = f'The grid size {size} exceeds the enumeration limit ' \
                  f'{limit}.'
        raise ValueError(message)


def _enumerate(size: int, constraint: EdgeConstraint, symmetry: str):
    search = _Search(size, constraint, symmetry)
    if not search.consistent:
        problems = constraint.conflicts(size) if constraint else []
        logger.warning('The constraint is inconsistent on the grid of size '
                       '%d: %s', size, problems or 'symmetry conflict')
        return iter(())
    return search.grids()


def enumerate_fpls(size: int, constraint: EdgeConstraint = None,
                   limit: int = max_fpl_size):
    """Enumerate the FPLs of a given size.

    Parameters
    ----------
    size: int
        The grid size N.
    constraint: EdgeConstraint
        Optional forced edges.
    limit: int
        The largest size accepted.

    Returns
    -------
    Iterator[FplGrid]
        Every FPL satisfying the constraint exactly once, in a deterministic
        order. An inconsistent constraint gives an empty iterator and a
        logged warning.

    Raises
    ------
    ValueError
        Raised if the size is not positive or exceeds the limit.

    Examples
    --------
    >>> import pyfpl as pf
    >>> sum(1 for _ in pf.enumerate_fpls(3))
    7

    """
    _check_size(size, limit)
    return _enumerate(size, constraint, None)


def enumerate_ht_fpls(size: int, constraint: EdgeConstraint = None,
                      limit: int = max_ht_size):
    """Enumerate the half-turn-symmetric FPLs of a given size.

    Each edge is decided together with its half-turn image.

    Examples
    --------
    >>> import pyfpl as pf
    >>> sum(1 for _ in pf.enumerate_ht_fpls(4))
    10

    """
    _check_size(size, limit)
    return _enumerate(size, constraint, 'half-turn')


def enumerate_vs_fpls(size: int, limit: int = max_vs_size):
    """Enumerate the vertically symmetric FPLs of a given size.

    These are the FPLs fixed by the left-right mirror. There are none of even
    size.

    Examples
    --------
    >>> import pyfpl as pf
    >>> sum(1 for _ in pf.enumerate_vs_fpls(5))
    3

    """
    _check_size(size, limit)
    if size % 2 == 0:
        return iter(())
    return _enumerate(size, None, 'mirror')


def _tally_partition(task) -> Counter:
    size, constraint, symmetry, horizontal, vertical, start = task
    search = _Search(size, constraint, symmetry)
    return Counter(f.coupling.partner for f in
                   search.resume(horizontal, vertical, start))


def _tally(size: int, constraint: EdgeConstraint, symmetry: str,
           workers: int) -> Counter:
    if workers <= 1:
        return Counter(f.coupling.partner for f in
                       _enumerate(size, constraint, symmetry))
    search = _Search(size, constraint, symmetry)
    if not search.consistent:
        return Counter()
    start = size
    tasks = [(size, constraint, symmetry, h, v, start)
             for h, v in search.states(start)]
    logger.info('Splitting the size-%d search into %d partitions over %d '
                'workers', size, len(tasks), workers)
    with Pool(workers) as pool:
        tallies = pool.map(_tally_partition, tasks)
    return sum(tallies, Counter())


def count_by_coupling(size: int, constraint: EdgeConstraint = None,
                      workers: int = 1,
                      limit: int = max_fpl_size) -> dict[Coupling, int]:
    """Count the FPLs of a given size by coupling.

    Parameters
    ----------
    size: int
        The grid size N.
    constraint: EdgeConstraint
        Optional forced edges.
    workers: int
        The number of worker processes. The search is split after the bottom
        row and the tallies are added, so the result does not depend on it.
    limit: int
        The largest size accepted.

    Returns
    -------
    dict[Coupling, int]
        The nonzero counts A(N; pi), sorted by coupling.

    Examples
    --------
    >>> import pyfpl as pf
    >>> counts = pf.count_by_coupling(3)
    >>> sorted(counts.values())
    [1, 1, 1, 2, 2]

    """
    _check_size(size, limit)
    tally = _tally(size, constraint, None, workers)
    counts = {Coupling(partner): count for partner, count in tally.items()}
    logger.info('Counted %d FPLs of size %d over %d couplings',
                sum(counts.values()), size, len(counts))
    return dict(sorted(counts.items()))


def count_ht_by_coupling(size: int, constraint: EdgeConstraint = None,
                         workers: int = 1,
                         limit: int = max_ht_size) -> dict[HtCoupling, int]:
    """Count the half-turn-symmetric FPLs of a given size by coupling.

    Returns
    -------
    dict[HtCoupling, int]
        The nonzero counts A_HT(N; pi), keyed by the full coupling of 2N
        points and sorted.

    """
    _check_size(size, limit)
    tally = _tally(size, constraint, 'half-turn', workers)
    counts = {HtCoupling(partner): count for partner, count in tally.items()}
    logger.info('Counted %d half-turn-symmetric FPLs of size %d over %d '
                'couplings', sum(counts.values()), size, len(counts))
    return dict(sorted(counts.items()))


def fixed_edges_even(n: int) -> EdgeConstraint:
    """Make the edges shared by every FPL of size 2n whose coupling projects
    to the parallel arches.

    They are the edges (x, y)-(x + 1, y) with 0 <= x < n, y of the parity of
    x and x + 2 <= y <= 2n - x, and their images under the quarter turns of
    the grid. Every vertex meets exactly one of them.

    Examples
    --------
    >>> import pyfpl as pf
    >>> len(pf.fixed_edges_even(6).forced_present)
    84

    """
    if not isinstance(n, int) or n < 1:
        message = 'n must be a positive int.'
        raise ValueError(message)
    turn = lambda p: (2 * n + 1 - p[1], p[0])
    edges = [((x, y), (x + 1, y)) for x in range(n)
             for y in range(x + 2, 2 * n - x + 1, 2)]
    orbit = list(edges)
    current = edges
    for _ in range(3):
        current = [(turn(a), turn(b)) for a, b in current]
        orbit += current
    return EdgeConstraint(orbit)


def fixed_edges_odd(n: int) -> EdgeConstraint:
    """Make the edges shared by every FPL of size 2n + 1 whose coupling lies
    in the rare slit family.

    The left family is (x, y)-(x + 1, y) for 0 <= x <= n and
    y = x + 1, x + 3, ..., 2n + 1 - x; the right family is its mirror image.
    The bottom family is (x, y)-(x, y + 1) for 0 <= y < n and
    x = y + 2, y + 4, ..., 2n - y; the top family is its mirror image. The
    centre vertex meets two of them.

    Examples
    --------
    >>> import pyfpl as pf
    >>> len(pf.fixed_edges_odd(6).forced_present)
    98

    """
    if not isinstance(n, int) or n < 0:
        message = 'n must be a non-negative int.'
        raise ValueError(message)
    edges = []
    for x in range(n + 1):
        for y in range(x + 1, 2 * n + 2 - x, 2):
            edges.append(((x, y), (x + 1, y)))
            edges.append(((2 * n + 1 - x, y), (2 * n + 2 - x, y)))
    for y in range(n):
        for x in range(y + 2, 2 * n - y + 1, 2):
            edges.append(((x, y), (x, y + 1)))
            edges.append(((x, 2 * n + 1 - y), (x, 2 * n + 2 - y)))
    return EdgeConstraint(edges)


def nonfixed_graph(size: int, constraint: EdgeConstraint) -> nx.Graph:
    """Make the graph of the edges left free by a constraint.

    Its vertices are the grid vertices meeting fewer than two forced edges,
    and its edges are the internal grid edges between them that are neither
    forced in nor forced out. When every such vertex meets one forced edge,
    the FPLs satisfying the constraint are the perfect matchings of this
    graph.

    """
    degrees = constraint.vertex_degrees()
    free = [(x, y) for x in range(1, size + 1) for y in range(1, size + 1)
            if degrees[(x, y)] < 2]
    graph = nx.Graph()
    graph.add_nodes_from(free)
    blocked = constraint.forced_present | constraint.forced_absent
    for x, y in free:
        for neighbour in ((x + 1, y), (x, y + 1)):
            edge = normalize_edge(((x, y), neighbour))
            if neighbour in graph and edge not in blocked:
                graph.add_edge(*edge)
    return graph


def nonfixed_quotient_graph(n: int, parity: str) -> PlanarRegion:
    """Make the half-turn quotient of the free edges of the fixed-edge
    constraint.

    Parameters
    ----------
    n: int
        The constraint index. The grid size is 2n for 'even' and 2n + 1 for
        'odd'.
    parity: str
        'even' or 'odd'.

    Returns
    -------
    PlanarRegion
        The quotient multigraph. Each node is the smaller vertex of its
        orbit. Each edge stands for an orbit of grid edges, listed in its
        'orbit' attribute, and is keyed by the smaller of them. Its perfect
        matchings are the half-turn-symmetric FPLs with the fixed edges.

    Raises
    ------
    ValueError
        Raised if the parity is neither 'even' nor 'odd'.

    """
    if parity == 'even':
        size, constraint = 2 * n, fixed_edges_even(n)
    elif parity == 'odd':
        size, constraint = 2 * n + 1, fixed_edges_odd(n)
    else:
        message = "The parity must be 'even' or 'odd'."
        raise ValueError(message)
    graph = nonfixed_graph(size, constraint)
    turn = lambda p: (size + 1 - p[0], size + 1 - p[1])
    representative = lambda p: min(p, turn(p))
    quotient = nx.MultiGraph()
    for p in sorted(graph):
        quotient.add_node(representative(p))
    seen = set()
    for u, v in sorted(normalize_edge(e) for e in graph.edges()):
        image = normalize_edge((turn(u), turn(v)))
        orbit = tuple(sorted({(u, v), image}))
        if orbit in seen:
            continue
        seen.add(orbit)
        quotient.add_edge(representative(u), representative(v),
                          key=orbit[0], orbit=orbit, weight=1)
    return PlanarRegion(quotient, f'quotient-{parity}-{n}')


def fixed_fpl_edges(n: int, parity: str, matching_edges) -> list[Edge]:
    """Combine the fixed edges with the grid edges of a quotient matching.

    Parameters
    ----------
    n: int
        The constraint index.
    parity: str
        'even' or 'odd'.
    matching_edges
        Edges (u, v, key) of :func:`nonfixed_quotient_graph`.

    Returns
    -------
    list[Edge]
        The occupied edges of the corresponding half-turn-symmetric FPL.

    """
    if parity == 'even':
        size, constraint = 2 * n, fixed_edges_even(n)
    else:
        size, constraint = 2 * n + 1, fixed_edges_odd(n)
    turn = lambda p: (size + 1 - p[0], size + 1 - p[1])
    edges = set(constraint.forced_present)
    for _, _, (u, v) in matching_edges:
        edges.add(normalize_edge((u, v)))
        edges.add(normalize_edge((turn(u), turn(v))))
    return sorted(edges)
