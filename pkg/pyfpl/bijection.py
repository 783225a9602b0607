"""This module provides the bijection between half-turn-symmetric FPLs with
the even fixed edges and cyclically symmetric plane partitions, and the
factorization checks of the odd-size matching counts.

The half-turn quotient of the free edges of the even constraint is
isomorphic to the 120-degree quotient of a hexagon. A half-turn-symmetric
FPL is sent to its free edges, then to a matching of the first quotient,
across the isomorphism to a matching of the second, and finally lifted to a
rotation-invariant tiling of the hexagon.
"""
import logging

from networkx.algorithms.isomorphism import MultiGraphMatcher

from .constants import max_ht_size, max_region_vertices
from .couplings import pi0, punctured_fiber
from .fpl import FplGrid, enumerate_ht_fpls, fixed_edges_even, \
    fixed_edges_odd, fixed_fpl_edges, nonfixed_quotient_graph
from .formulas import even_ht_formula, ht_factorization
from .figures import normalize_edge
from .regions import PlanarRegion, Tiling, count_matchings, \
    enumerate_matchings, hexagon_quotient_region, hexagon_region, \
    is_rotation_invariant
from .reports import ReconciliationReport, ReconciliationRow

logger = logging.getLogger(__name__)


def region_g(n: int) -> PlanarRegion:
    """Make the region G_n, the half-turn quotient of the free edges of the
    odd constraint of size 2n + 1.

    Its perfect matchings are the half-turn-symmetric FPLs of size 2n + 1
    containing the odd fixed edges. Gluing is built in: the two halves of
    the boundary are identified by the quotient.

    Examples
    --------
    >>> import pyfpl as pf
    >>> int(pf.count_matchings(pf.region_g(2)))
    6

    """
    return nonfixed_quotient_graph(n, 'odd')


class CsppBijection:
    """The bijection between half-turn-symmetric FPLs of size 2n with the even
    fixed edges and the rotation-invariant tilings of the side-n hexagon.

    Parameters
    ----------
    n: int
        The constraint index, n >= 1.

    Raises
    ------
    ValueError
        Raised if n is not positive, if 2n exceeds the half-turn enumeration
        limit, or if the two quotients are not isomorphic.

    Examples
    --------
    >>> import pyfpl as pf
    >>> pf.CsppBijection(2).is_bijective()
    True

    """
    def __init__(self, n: int):
        self._n = n
        self._validate_input()

        self._quotient = nonfixed_quotient_graph(n, 'even')
        self._hexagon = hexagon_region(n)
        self._hexagon_quotient = hexagon_quotient_region(n)
        self._edge_map = self._make_edge_map()
        self._inverse_edge_map = {v: k for k, v in self._edge_map.items()}
        self._orbit_of_lozenge = self._make_orbit_of_lozenge()
        self._orbit_of_free_edge = self._make_orbit_of_free_edge()

    def _validate_input(self) -> None:
        if not isinstance(self._n, int) or self._n < 1:
            message = 'n must be a positive int.'
            raise ValueError(message)
        if 2 * self._n > max_ht_size:
            message = f'The grid size {2 * self._n} exceeds the half-turn ' \
                      f'enumeration limit {max_ht_size}.'
            raise ValueError(message)

    def _make_edge_map(self) -> dict[tuple, tuple]:
        matcher = MultiGraphMatcher(self._quotient.graph,
                                    self._hexagon_quotient.graph)
        if not matcher.is_isomorphic():
            message = f'The quotients of size {self._n} are not isomorphic.'
            raise ValueError(message)
        nodes = matcher.mapping
        target = self._hexagon_quotient.graph
        edge_map = {}
        for u, v in sorted({(u, v) for u, v, _ in self._quotient.edges}):
            keys = sorted(self._quotient.graph[u][v])
            images = sorted(target[nodes[u]][nodes[v]])
            for key, image in zip(keys, images):
                edge_map[(u, v, key)] = self._key((nodes[u], nodes[v], image))
        logger.debug('Matched %d quotient edges at n = %d', len(edge_map),
                     self._n)
        return edge_map

    def _make_orbit_of_lozenge(self) -> dict[tuple, tuple]:
        graph = self._hexagon_quotient.graph
        lookup = {}
        for u, v, key, orbit in graph.edges(keys=True, data='orbit'):
            for lozenge in orbit:
                lookup[tuple(sorted(lozenge))] = self._key((u, v, key))
        return lookup

    def _make_orbit_of_free_edge(self) -> dict[tuple, tuple]:
        graph = self._quotient.graph
        lookup = {}
        for u, v, key, orbit in graph.edges(keys=True, data='orbit'):
            for edge in orbit:
                lookup[normalize_edge(edge)] = self._key((u, v, key))
        return lookup

    def forward(self, f: FplGrid) -> Tiling:
        """Send an FPL to its rotation-invariant tiling.

        Raises
        ------
        ValueError
            Raised if the FPL does not contain the fixed edges.

        """
        fixed = fixed_edges_even(self._n).forced_present
        edges = set(f.edges)
        if not fixed <= edges:
            message = 'The FPL does not contain the fixed edges.'
            raise ValueError(message)
        quotient_edges = {self._orbit_of_free_edge[e] for e in edges - fixed}
        lozenges = []
        for edge in quotient_edges:
            image = self._edge_map[edge]
            orbit = self._hexagon_quotient.graph.edges[image]['orbit']
            lozenges += [(u, v, 0) for u, v in orbit]
        return Tiling(self._hexagon, lozenges)

    def inverse(self, t: Tiling) -> FplGrid:
        """Send a rotation-invariant tiling back to its FPL.

        """
        images = {self._orbit_of_lozenge[pair] for pair in t.pairs}
        quotient_edges = [self._inverse_edge_map[e] for e in images]
        return FplGrid.from_edges(2 * self._n, fixed_fpl_edges(
            self._n, 'even', quotient_edges))

    @staticmethod
    def _key(edge: tuple) -> tuple:
        u, v, key = edge
        return (u, v, key) if u <= v else (v, u, key)

    def domain(self) -> list[FplGrid]:
        """Get the half-turn-symmetric FPLs of size 2n with the fixed edges.

        """
        return list(enumerate_ht_fpls(2 * self._n, fixed_edges_even(self._n)))

    def codomain(self) -> list[Tiling]:
        """Get the rotation-invariant tilings of the side-n hexagon.

        """
        return [t for t in enumerate_matchings(self._hexagon)
                if is_rotation_invariant(t, self._n)]

    def pairs(self) -> list[tuple[FplGrid, Tiling]]:
        """Get the map as explicit (FPL, tiling) pairs.

        """
        return [(f, self.forward(f)) for f in self.domain()]

    def report(self) -> ReconciliationReport:
        """Check the map element by element.

        Returns
        -------
        ReconciliationReport
            Rows comparing the sizes of both sides, the number of distinct
            images, the images that are invariant tilings, the round trips
            through the inverse, and the FPLs whose coupling lies over the
            parallel arches.

        """
        domain = self.domain()
        codomain = set(self.codomain())
        images = [self.forward(f) for f in domain]
        fiber = {pp.underlying for pp in punctured_fiber(pi0(self._n))}
        rows = [
            ReconciliationRow('fpls and tilings', len(domain), len(codomain)),
            ReconciliationRow('distinct images', len(set(images)),
                              len(domain)),
            ReconciliationRow('images among tilings',
                              len(set(images) & codomain), len(codomain)),
            ReconciliationRow('round trips', sum(
                1 for f, t in zip(domain, images) if self.inverse(t) == f),
                len(domain)),
            ReconciliationRow('couplings over the arches', sum(
                1 for f in domain if f.coupling in fiber), len(domain)),
            ReconciliationRow('quotient matchings', len(domain),
                              int(count_matchings(self._quotient))),
        ]
        return ReconciliationReport('bijection', self._n, rows, theorem=True,
                                    notes={'hexagon side': self._n})

    def is_bijective(self) -> bool:
        """Check that the map is a bijection with the given inverse.

        """
        return self.report().passed

    @property
    def n(self) -> int:
        """Get the constraint index.

        """
        return self._n

    @property
    def quotient(self) -> PlanarRegion:
        """Get the half-turn quotient of the free edges.

        """
        return self._quotient

    @property
    def hexagon_quotient(self) -> PlanarRegion:
        """Get the 120-degree quotient of the hexagon.

        """
        return self._hexagon_quotient


def cspp_bijection(n: int) -> CsppBijection:
    """Build the bijection of index n.

    """
    return CsppBijection(n)


def ciucu_factorize_check(size: int, limit: int = max_region_vertices
                          ) -> ReconciliationReport:
    """Compare the factorized count H_N with the matching counts it
    factorizes.

    For odd N = 2m + 1 the rows compare the matchings of G_m with the
    half-turn-symmetric FPLs carrying the odd fixed edges, and with the
    printed factorization. For even N = 2m the printed even formula is
    compared with two readings of H_N: the matchings of the even quotient of
    index m, and the matchings of G_m. The corrected N = 4k + 2 formula is
    reported as well.

    Parameters
    ----------
    size: int
        The size N >= 1.
    limit: int
        The largest region whose matchings are counted.

    Returns
    -------
    ReconciliationReport
        The comparisons. Oracles out of reach are left out.

    """
    m = size // 2
    rows = []
    region = region_g(m)
    matchings = count_matchings(region, limit) \
        if region.number_of_vertices <= limit else None
    if size % 2:
        if size <= max_ht_size and matchings is not None:
            fpls = sum(1 for _ in enumerate_ht_fpls(size, fixed_edges_odd(m)))
            rows.append(ReconciliationRow('G matchings and fixed htfpls',
                                          matchings, fpls))
        if matchings is not None:
            rows.append(ReconciliationRow('factorization and G matchings',
                                          ht_factorization(size), matchings))
    else:
        result = even_ht_formula(size, limit)
        if result.oracle is not None:
            rows.append(ReconciliationRow('factorization and cspps',
                                          result.printed, result.oracle))
        if matchings is not None:
            rows.append(ReconciliationRow('factorization and G matchings',
                                          result.printed, matchings))
        if size % 4 == 2 and result.oracle is not None:
            rows.append(ReconciliationRow(
                'corrected factorization and cspps',
                ht_factorization(size, corrected=True), result.oracle))
    report = ReconciliationReport('ciucu', size, rows)
    logger.info('Factorization check at size %d: %s', size,
                [row.equal for row in rows])
    return report
