"""This module provides weighted planar regions, their perfect matchings, and
the lozenge-tiling regions of the triangular lattice.

Points of the triangular lattice are written (k, h) with h and k of equal
parity. The point (k, h) sits at (-k * sqrt(3) / 2, h / 2) in the plane, so
that the steps (0, 2), (1, 1), (1, -1), (-1, 1) and (-1, -1) all have unit
length. A unit triangle is a node of the dual honeycomb graph and is named
by the coordinate sums of its three corners.
"""
from fractions import Fraction
import functools
import logging

import networkx as nx
import numpy as np
import sympy

from .constants import max_region_vertices
from .figures import format_edge

logger = logging.getLogger(__name__)

Point = tuple[int, int]


def _canonical(u, v, key) -> tuple:
    return (u, v, key) if u <= v else (v, u, key)


class PlanarRegion:
    """A weighted bipartite graph whose perfect matchings are counted.

    Parallel edges are allowed, which is how quotients by a rotation keep the
    distinct edge orbits joining the same two vertex orbits.

    Parameters
    ----------
    graph: nx.MultiGraph
        The graph. Edge weights live in the 'weight' attribute and default to
        1. They may be positive ints, Fractions or sympy expressions.
    name: str
        A label used in logs and reports.

    Raises
    ------
    TypeError
        Raised if the graph is not a networkx MultiGraph.
    ValueError
        Raised if the graph is not bipartite, has a loop, or has a
        non-positive weight.

    """
    def __init__(self, graph: nx.MultiGraph, name: str = 'region'):
        self._graph = graph
        self._name = name
        self._validate_input()

        self._edges = self._make_edges()

    def _validate_input(self) -> None:
        if not isinstance(self._graph, nx.MultiGraph):
            message = 'The region graph must be a networkx MultiGraph.'
            raise TypeError(message)
        if nx.number_of_selfloops(self._graph):
            message = f'The region {self._name} has a loop.'
            raise ValueError(message)
        if not nx.is_bipartite(self._graph):
            message = f'The region {self._name} is not bipartite.'
            raise ValueError(message)
        for _, _, weight in self._graph.edges(data='weight', default=1):
            if isinstance(weight, sympy.Basic):
                continue
            if not isinstance(weight, (int, Fraction)) or weight <= 0:
                message = f'The region {self._name} has the invalid weight ' \
                          f'{weight!r}.'
                raise ValueError(message)

    def _make_edges(self) -> dict[tuple, object]:
        edges = {_canonical(u, v, key): weight for u, v, key, weight in
                 self._graph.edges(keys=True, data='weight', default=1)}
        return dict(sorted(edges.items()))

    def __str__(self):
        return f'{self._name} ({self.number_of_vertices} vertices, ' \
               f'{len(self._edges)} edges)'

    def to_text(self) -> str:
        """Write the region in the edge-list text format with 'w=p/q'
        weights.

        """
        return ''.join(format_edge((u, v), w) + '\n'
                       for (u, v, _), w in self._edges.items())

    def weight(self, edge: tuple):
        """Get the weight of the edge (u, v, key).

        """
        return self._edges[_canonical(*edge)]

    @property
    def graph(self) -> nx.MultiGraph:
        """Get the underlying graph. It must not be modified.

        """
        return self._graph

    @property
    def name(self) -> str:
        """Get the region name.

        """
        return self._name

    @property
    def vertices(self) -> list:
        """Get the sorted vertices.

        """
        return sorted(self._graph)

    @property
    def edges(self) -> list[tuple]:
        """Get the sorted edges (u, v, key) with u <= v.

        """
        return list(self._edges)

    @property
    def number_of_vertices(self) -> int:
        """Get the number of vertices.

        """
        return self._graph.number_of_nodes()


class Tiling:
    """A perfect matching of a planar region.

    Parameters
    ----------
    region: PlanarRegion
        The matched region.
    edges
        The matched edges (u, v, key).

    Raises
    ------
    ValueError
        Raised if an edge is not in the region or if the edges do not cover
        every vertex exactly once.

    """
    def __init__(self, region: PlanarRegion, edges):
        self._region = region
        self._edges = tuple(sorted(_canonical(*e) for e in edges))
        self._validate_input()

        self._weight = self._make_weight()

    def _validate_input(self) -> None:
        covered = []
        for edge in self._edges:
            try:
                self._region.weight(edge)
            except KeyError as ke:
                message = f'{edge} is not an edge of {self._region.name}.'
                raise ValueError(message) from ke
            covered += edge[:2]
        if sorted(covered) != self._region.vertices:
            message = 'The edges do not cover every vertex exactly once.'
            raise ValueError(message)

    def _make_weight(self):
        weight = 1
        for edge in self._edges:
            weight *= self._region.weight(edge)
        return _exact(weight)

    def __eq__(self, other):
        if not isinstance(other, Tiling):
            return NotImplemented
        return self._edges == other._edges

    def __hash__(self):
        return hash(self._edges)

    @property
    def region(self) -> PlanarRegion:
        """Get the matched region.

        """
        return self._region

    @property
    def edges(self) -> tuple[tuple, ...]:
        """Get the matched edges.

        """
        return self._edges

    @property
    def pairs(self) -> list[tuple]:
        """Get the matched vertex pairs, without edge keys.

        """
        return [edge[:2] for edge in self._edges]

    @property
    def weight(self):
        """Get the product of the matched edge weights.

        """
        return self._weight


def _exact(value):
    if isinstance(value, sympy.Basic):
        return sympy.expand(value)
    return Fraction(value)


def _adjacency(region: PlanarRegion) -> dict:
    adjacency = {v: [] for v in region.vertices}
    for edge in region.edges:
        u, v, _ = edge
        weight = region.weight(edge)
        adjacency[u].append((v, edge, weight))
        adjacency[v].append((u, edge, weight))
    return adjacency


def _most_constrained(remaining: frozenset, adjacency: dict):
    return min(remaining, key=lambda v: (
        sum(1 for u, _, _ in adjacency[v] if u in remaining), v))


def _check_limit(region: PlanarRegion, limit: int) -> None:
    if region.number_of_vertices > limit:
        message = f'{region} exceeds the limit of {limit} vertices.'
        raise ValueError(message)


def count_matchings(region: PlanarRegion, limit: int = max_region_vertices):
    """Count the weighted perfect matchings of a region.

    The count recursively matches a vertex of minimum remaining degree and
    memoizes on the set of unmatched vertices.

    Parameters
    ----------
    region: PlanarRegion
        The region.
    limit: int
        The largest number of vertices accepted.

    Returns
    -------
    Fraction or sympy.Expr
        The sum over perfect matchings of the product of edge weights. The
        empty region has one matching.

    Raises
    ------
    ValueError
        Raised if the region exceeds the vertex limit.

    Examples
    --------
    Count the lozenge tilings of the hexagon of side 2.

    >>> import pyfpl as pf
    >>> pf.count_matchings(pf.hexagon_region(2))
    Fraction(20, 1)

    """
    _check_limit(region, limit)
    adjacency = _adjacency(region)

    @functools.cache
    def count(remaining: frozenset):
        if not remaining:
            return 1
        vertex = _most_constrained(remaining, adjacency)
        total = 0
        for other, _, weight in adjacency[vertex]:
            if other in remaining:
                total += weight * count(remaining - {vertex, other})
        return total

    total = _exact(count(frozenset(region.vertices)))
    logger.debug('%s has %d memoized states', region,
                 count.cache_info().currsize)
    return total


def enumerate_matchings(region: PlanarRegion,
                        limit: int = max_region_vertices):
    """Enumerate the perfect matchings of a region.

    Parameters
    ----------
    region: PlanarRegion
        The region.
    limit: int
        The largest number of vertices accepted.

    Yields
    ------
    Tiling
        Every perfect matching exactly once, in a deterministic order.

    """
    _check_limit(region, limit)
    adjacency = _adjacency(region)
    chosen = []

    def extend(remaining: frozenset):
        if not remaining:
            yield Tiling(region, chosen)
            return
        vertex = _most_constrained(remaining, adjacency)
        for other, edge, _ in adjacency[vertex]:
            if other in remaining:
                chosen.append(edge)
                yield from extend(remaining - {vertex, other})
                chosen.pop()

    yield from extend(frozenset(region.vertices))


def _inside(point: tuple[int, int], polygon: list[Point]) -> bool:
    px, py = point
    inside = False
    for (x1, y1), (x2, y2) in zip(polygon, polygon[1:] + polygon[:1]):
        if (y1 > py) != (y2 > py):
            crossing = x1 + Fraction((py - y1) * (x2 - x1), y2 - y1)
            if px < crossing:
                inside = not inside
    return inside


def triangle_id(points) -> tuple[int, int]:
    """Get the node name of the unit triangle with the given corners.

    """
    return sum(p[0] for p in points), sum(p[1] for p in points)


def lozenge_region(polygon: list[Point], weights: dict = None,
                   name: str = 'region') -> PlanarRegion:
    """Make the dual graph of the unit triangles inside a lattice polygon.

    Parameters
    ----------
    polygon: list[Point]
        The corners of a simple polygon whose sides follow lattice lines.
    weights: dict
        Optional mapping from a frozenset of two adjacent triangle names to
        the weight of the lozenge they form.
    name: str
        The region name.

    Returns
    -------
    PlanarRegion
        The region. Each node carries the corners of its triangle in the
        'points' attribute.

    """
    weights = {} if weights is None else weights
    scaled = [(3 * k, 3 * h) for k, h in polygon]
    ks = [k for k, _ in polygon]
    hs = [h for _, h in polygon]
    graph = nx.MultiGraph()
    sides = {}
    for k in range(min(ks), max(ks) + 1):
        for h in range(min(hs) + (min(hs) - k) % 2, max(hs) - 1, 2):
            for apex in (k - 1, k + 1):
                points = ((k, h), (k, h + 2), (apex, h + 1))
                node = triangle_id(points)
                if not _inside(node, scaled):
                    continue
                graph.add_node(node, points=tuple(sorted(points)))
                for a, b in ((0, 1), (0, 2), (1, 2)):
                    side = frozenset((points[a], points[b]))
                    sides.setdefault(side, []).append(node)
    for side, nodes in sorted(sides.items(), key=lambda s: sorted(s[0])):
        if len(nodes) == 2:
            u, v = sorted(nodes)
            graph.add_edge(u, v, key=0,
                           weight=weights.get(frozenset((u, v)), 1))
    return PlanarRegion(graph, name)


def hexagon_corners(a: int) -> list[Point]:
    """Get the corners of the regular hexagon of side a, anticlockwise from
    the origin.

    """
    return [(0, 0), (0, 2 * a), (a, 3 * a), (2 * a, 2 * a), (2 * a, 0),
            (a, -a)]


def hexagon_region(a: int) -> PlanarRegion:
    """Make the regular hexagon of side a.

    Parameters
    ----------
    a: int
        The side length, a >= 0.

    Returns
    -------
    PlanarRegion
        The honeycomb graph of the 6a² unit triangles of the hexagon. Its
        perfect matchings are the lozenge tilings of the hexagon.

    """
    if not isinstance(a, int) or a < 0:
        message = 'The hexagon side must be a non-negative int.'
        raise ValueError(message)
    if a == 0:
        return PlanarRegion(nx.MultiGraph(), 'hexagon-0')
    return lozenge_region(hexagon_corners(a), name=f'hexagon-{a}')


def rotate_point(point: Point, a: int) -> Point:
    """Rotate a lattice point by 120 degrees about the centre (a, a) of the
    hexagon of side a.

    """
    dk, dh = point[0] - a, point[1] - a
    return a + (dh - dk) // 2, a + (-3 * dk - dh) // 2


def _rotate_node(region: PlanarRegion, node, a: int):
    points = region.graph.nodes[node]['points']
    return triangle_id([rotate_point(p, a) for p in points])


def hexagon_quotient_region(a: int) -> PlanarRegion:
    """Make the quotient of the side-a hexagon by its 120-degree rotation.

    Each node is the smallest triangle name of its orbit. Each edge stands
    for an orbit of three lozenges, listed in its 'orbit' attribute, and is
    keyed by the smallest of them. The perfect matchings of the quotient are
    the rotation-invariant tilings of the hexagon.

    """
    hexagon = hexagon_region(a)
    quotient = nx.MultiGraph()

    def orbit_of(node) -> list:
        orbit = [node]
        for _ in range(2):
            orbit.append(_rotate_node(hexagon, orbit[-1], a))
        return orbit

    representative = {node: min(orbit_of(node)) for node in hexagon.vertices}
    quotient.add_nodes_from(sorted(set(representative.values())))
    seen = set()
    for u, v, _ in hexagon.edges:
        us, vs = orbit_of(u), orbit_of(v)
        orbit = tuple(sorted(tuple(sorted(pair)) for pair in zip(us, vs)))
        if orbit in seen:
            continue
        seen.add(orbit)
        quotient.add_edge(representative[u], representative[v], key=orbit[0],
                          orbit=orbit, weight=1)
    return PlanarRegion(quotient, f'hexagon-{a}-quotient')


def is_rotation_invariant(tiling: Tiling, a: int) -> bool:
    """Check whether a tiling of the side-a hexagon is fixed by the
    120-degree rotation.

    """
    pairs = set(tiling.pairs)
    rotated = {tuple(sorted((_rotate_node(tiling.region, u, a),
                             _rotate_node(tiling.region, v, a))))
               for u, v in pairs}
    return rotated == pairs


def rotation_invariant_tilings(a: int, method: str = 'both',
                               limit: int = max_region_vertices) -> int:
    """Count the tilings of the side-a hexagon fixed by the 120-degree
    rotation.

    Parameters
    ----------
    a: int
        The hexagon side.
    method: str
        'filter' enumerates every tiling and keeps the invariant ones,
        'quotient' counts the matchings of the rotation quotient and 'both'
        does both and compares them. The filter walks every tiling of the
        hexagon (232848 at side 4), so it is practical up to side 3. The
        quotient has 2a² vertices.
    limit: int
        The largest region handed to the matching counter.

    Returns
    -------
    int
        The count. With 'both' a disagreement is logged and the filter count
        is returned.

    Examples
    --------
    >>> import pyfpl as pf
    >>> pf.rotation_invariant_tilings(2)
    5

    """
    counts = {}
    if method in ('filter', 'both'):
        counts['filter'] = sum(1 for t in enumerate_matchings(
            hexagon_region(a), limit) if is_rotation_invariant(t, a))
    if method in ('quotient', 'both'):
        counts['quotient'] = int(count_matchings(hexagon_quotient_region(a),
                                                limit))
    if not counts:
        message = "The method must be 'filter', 'quotient' or 'both'."
        raise ValueError(message)
    if len(set(counts.values())) > 1:
        logger.warning('Rotation-invariant tilings of the side-%d hexagon '
                       'disagree: %s', a, counts)
    return counts.get('filter', counts.get('quotient'))


class PlanePartition:
    """A plane partition: a 2D array of stack heights that weakly decreases
    along both axes.

    Parameters
    ----------
    heights: np.ndarray
        The integer heights h(i, j) >= 0.
    box: tuple[int, int, int]
        The bounding box (a, b, c). Defaults to the array shape and the
        largest height.

    Raises
    ------
    TypeError
        Raised if the heights are not integers.
    ValueError
        Raised if the heights are negative, increase along an axis, or leave
        the box.

    Examples
    --------
    >>> import numpy as np
    >>> import pyfpl as pf
    >>> pp = pf.PlanePartition(np.array([[2, 1], [1, 0]]), box=(2, 2, 2))
    >>> pp.volume
    4
    >>> pp.is_cyclically_symmetric()
    True

    """
    def __init__(self, heights: np.ndarray, box: tuple[int, int, int] = None):
        self._heights = np.array(heights)
        self._validate_input(box)

        self._box = self._make_box(box)
        self._heights.setflags(write=False)

    def _validate_input(self, box) -> None:
        if not np.issubdtype(self._heights.dtype, np.integer):
            message = 'The heights must be integers.'
            raise TypeError(message)
        if self._heights.ndim != 2:
            message = 'The heights must be a 2D array.'
            raise ValueError(message)
        if np.any(self._heights < 0):
            message = 'The heights must be non-negative.'
            raise ValueError(message)
        if np.any(np.diff(self._heights, axis=0) > 0) or \
                np.any(np.diff(self._heights, axis=1) > 0):
            message = 'The heights must weakly decrease along both axes.'
            raise ValueError(message)
        if box is not None and (self._heights.shape != tuple(box[:2]) or
                                np.any(self._heights > box[2])):
            message = f'The heights do not fit in the box {box}.'
            raise ValueError(message)

    def _make_box(self, box) -> tuple[int, int, int]:
        if box is not None:
            return tuple(box)
        top = int(self._heights.max()) if self._heights.size else 0
        return self._heights.shape + (top,)

    @classmethod
    def from_tiling(cls, tiling: Tiling, a: int):
        """Read the plane partition drawn by a tiling of the side-a hexagon.

        The lozenges made of two triangles sharing a vertical side are the
        tops of the stacks. Along the column of the lattice at k, the cells
        (i, j) with i - j = k - a are matched, by increasing i + j, with these
        lozenges by decreasing height.

        """
        columns = {}
        for u, v in tiling.pairs:
            shared = set(tiling.region.graph.nodes[u]['points']) & \
                set(tiling.region.graph.nodes[v]['points'])
            (k1, h1), (k2, h2) = sorted(shared)
            if k1 == k2:
                columns.setdefault(k1, []).append(max(h1, h2))
        heights = np.zeros((a, a), dtype=int)
        for k, tops in columns.items():
            offset = k - a
            cells = sorted(((i, i - offset) for i in range(a)
                            if 0 <= i - offset < a), key=sum)
            if len(cells) != len(tops):
                message = 'The tiling is not a tiling of the hexagon.'
                raise ValueError(message)
            for (i, j), top in zip(cells, sorted(tops, reverse=True)):
                heights[i, j] = (top - a + i + j) // 2
        return cls(heights, box=(a, a, a))

    def cubes(self) -> set[tuple[int, int, int]]:
        """Get the unit cubes (i, j, k) of the stacks.

        """
        a, b = self._heights.shape
        return {(i, j, k) for i in range(a) for j in range(b)
                for k in range(self._heights[i, j])}

    def is_cyclically_symmetric(self) -> bool:
        """Check whether the cubes are fixed by (i, j, k) -> (k, i, j).

        """
        if len(set(self._box)) != 1:
            return False
        cubes = self.cubes()
        return {(k, i, j) for i, j, k in cubes} == cubes

    @property
    def heights(self) -> np.ndarray:
        """Get the read-only stack heights.

        """
        return self._heights

    @property
    def box(self) -> tuple[int, int, int]:
        """Get the bounding box.

        """
        return self._box

    @property
    def volume(self) -> int:
        """Get the number of cubes.

        """
        return int(self._heights.sum())


def region_Rl_corners(n: int, ell: int) -> list[Point]:
    """Get the corners of the region whose weighted tilings give the
    determinant with n rows and offset ell.

    The boundary runs up the left side for ell + 1 units, up a staircase of n
    slanted and n - 1 vertical unit steps, down n slanted steps, down the
    right side and back along a zigzag of n teeth.

    """
    k, h = 0, 2 * (ell + 1)
    corners = [(0, 0), (k, h)]
    for step in range(n):
        if step:
            h += 2
            corners.append((k, h))
        k, h = k + 1, h + 1
        corners.append((k, h))
    for _ in range(n):
        k, h = k + 1, h - 1
        corners.append((k, h))
    corners.append((2 * n, 0))
    for tooth in range(n):
        corners.append((2 * n - 2 * tooth - 1, -1))
        if tooth < n - 1:
            corners.append((2 * n - 2 * tooth - 2, 0))
    return corners


def region_Rl(n: int, ell: int, x=1, y=1) -> PlanarRegion:
    """Make the weighted lozenge region of the determinant with n rows and
    offset ell.

    The n lozenges standing on the zigzag teeth carry the weight x and the n
    lozenges under the staircase carry the weight y.

    Parameters
    ----------
    n: int
        The number of teeth, n >= 0.
    ell: int
        The extra height of the left side, ell >= 0.
    x
        The weight of the tooth lozenges.
    y
        The weight of the staircase lozenges.

    Returns
    -------
    PlanarRegion
        The region. It is empty when n = 0.

    Examples
    --------
    >>> from fractions import Fraction
    >>> import pyfpl as pf
    >>> pf.count_matchings(pf.region_Rl(1, 0, Fraction(1, 2), 1))
    Fraction(3, 2)

    """
    if not all(isinstance(p, int) for p in (n, ell)) or n < 0 or ell < 0:
        message = 'n and ell must be non-negative ints.'
        raise ValueError(message)
    name = f'R_{ell}({n})'
    if n == 0:
        return PlanarRegion(nx.MultiGraph(), name)
    weights = {}
    for column in range(1, 2 * n, 2):
        right = triangle_id(((column, -1), (column, 1), (column + 1, 0)))
        left = triangle_id(((column, -1), (column, 1), (column - 1, 0)))
        weights[frozenset((right, left))] = x
    for m in range(n):
        base = 2 * ell + 3 * m
        lower = triangle_id(((m, base), (m, base + 2), (m + 1, base + 1)))
        upper = triangle_id(((m + 1, base + 1), (m + 1, base + 3),
                             (m, base + 2)))
        weights[frozenset((lower, upper))] = y
    return lozenge_region(region_Rl_corners(n, ell), weights, name)


def region_r(k: int, x=Fraction(1, 2), y=1) -> PlanarRegion:
    """Make the region R_k, the offset-0 region with k teeth.

    """
    return region_Rl(k, 0, x, y)


def region_rprime(k: int, x=Fraction(1, 2), y=1) -> PlanarRegion:
    """Make the region R'_k, the offset-1 region with k teeth.

    """
    return region_Rl(k, 1, x, y)
