"""This module provides the Temperley-Lieb Markov chains on couplings, their
exact stationary distributions, and the comparisons of those distributions
with FPL tallies.

At each step a chain picks one of its generators uniformly at random and
applies it to the current coupling.
"""
from collections.abc import Callable
from fractions import Fraction
import functools
import logging

import networkx as nx

from .couplings import PuncturedCoupling, enumerate_couplings, \
    enumerate_ht_couplings, enumerate_slit_couplings, pi0, \
    project_punctured, punctured_fiber, rotate_coupling, slit, tl_apply, \
    tl_sym_apply, unslit
from .determinants import RationalMatrix
from .fpl import count_by_coupling, count_ht_by_coupling
from .reports import ReconciliationReport, ReconciliationRow

logger = logging.getLogger(__name__)


class ChainSpec:
    """The states and generators of a Markov chain on couplings.

    Parameters
    ----------
    states: list
        The states, in the order used for matrix rows.
    generators: list[tuple[str, Callable]]
        Named maps from states to states.
    name: str
        A label used in logs and reports.

    Raises
    ------
    ValueError
        Raised if there are no states or generators, or if a state repeats.

    Examples
    --------
    >>> import pyfpl as pf
    >>> chain = pf.plain_chain(3)
    >>> len(chain.states), len(chain.generators)
    (5, 6)

    """
    def __init__(self, states: list, generators: list[tuple[str, Callable]],
                 name: str = 'chain'):
        self._states = list(states)
        self._generators = list(generators)
        self._name = name
        self._validate_input()

    def _validate_input(self) -> None:
        if not self._states or not self._generators:
            message = 'A chain needs at least one state and one generator.'
            raise ValueError(message)
        if len(set(self._states)) != len(self._states):
            message = 'The states of a chain must be distinct.'
            raise ValueError(message)

    @property
    def states(self) -> list:
        """Get the ordered states.

        """
        return list(self._states)

    @property
    def generators(self) -> list[tuple[str, Callable]]:
        """Get the named generators.

        """
        return list(self._generators)

    @property
    def name(self) -> str:
        """Get the chain name.

        """
        return self._name


def _slit_generator(i: int, state):
    return slit(tl_sym_apply(i, unslit(state)))


def _punctured_generator(i: int, state: PuncturedCoupling):
    return PuncturedCoupling(tl_sym_apply(i, state.underlying))


def plain_chain(n: int) -> ChainSpec:
    """Make the chain of e_1, ..., e_2n on the couplings of size n.

    """
    generators = [(f'e_{i}', functools.partial(tl_apply, i))
                  for i in range(1, 2 * n + 1)]
    return ChainSpec(enumerate_couplings(n), generators, f'plain-{n}')


def ht_chain(size: int) -> ChainSpec:
    """Make the chain of the symmetrized generators e'_1, ..., e'_L on the
    half-turn-symmetric couplings of size L.

    The states are slit couplings when L is odd and punctured couplings when
    L is even.

    """
    if size % 2:
        states = enumerate_slit_couplings(size)
        step = _slit_generator
    else:
        states = [PuncturedCoupling(hc) for hc in enumerate_ht_couplings(size)]
        step = _punctured_generator
    generators = [(f"e'_{i}", functools.partial(step, i))
                  for i in range(1, size + 1)]
    return ChainSpec(states, generators, f'half-turn-{size}')


def transition_matrix(spec: ChainSpec) -> RationalMatrix:
    """Build the exact transition matrix of a chain.

    Entry (s, t) is the number of generators taking s to t over the number
    of generators.

    Raises
    ------
    ValueError
        Raised if a generator takes a state outside the state list. The
        message names the generator.

    Examples
    --------
    >>> import pyfpl as pf
    >>> pf.transition_matrix(pf.plain_chain(1)).tolist()
    [[Fraction(1, 1)]]

    """
    index = {state: k for k, state in enumerate(spec.states)}
    step = Fraction(1, len(spec.generators))
    rows = [[Fraction(0)] * len(index) for _ in index]
    for state, k in index.items():
        for name, generator in spec.generators:
            image = generator(state)
            if image not in index:
                message = f'The generator {name} takes {state} to {image}, ' \
                          f'which is not a state of {spec.name}.'
                raise ValueError(message)
            rows[k][index[image]] += step
    return RationalMatrix(rows)


class StationaryResult:
    """An exact stationary distribution with its balance residual.

    Parameters
    ----------
    distribution: dict
        The probability of each state.
    residual: list[Fraction]
        The entries of mu P - mu.

    """
    def __init__(self, distribution: dict, residual: list[Fraction]):
        self._distribution = dict(distribution)
        self._residual = list(residual)

    def __getitem__(self, state) -> Fraction:
        return self._distribution[state]

    def __repr__(self):
        return f'StationaryResult({len(self._distribution)} states, ' \
               f'exact={self.is_exact})'

    @property
    def distribution(self) -> dict:
        """Get the probability of each state.

        """
        return dict(self._distribution)

    @property
    def residual(self) -> list[Fraction]:
        """Get the balance residual mu P - mu.

        """
        return list(self._residual)

    @property
    def is_exact(self) -> bool:
        """Get whether the residual vanishes and the probabilities sum to 1.

        """
        return not any(self._residual) and \
            sum(self._distribution.values()) == 1


def _check_stochastic(p: RationalMatrix) -> None:
    for i, row in enumerate(p.tolist()):
        if any(entry < 0 for entry in row) or sum(row) != 1:
            message = f'Row {i} of the matrix is not a probability vector.'
            raise ValueError(message)


def _check_irreducible(p: RationalMatrix, states: list) -> None:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(p.dimension))
    graph.add_edges_from((i, j) for i in range(p.dimension)
                         for j in range(p.dimension) if p[i, j])
    if nx.is_strongly_connected(graph):
        return
    for i in range(p.dimension):
        unreachable = set(graph) - nx.descendants(graph, i) - {i}
        if unreachable:
            j = min(unreachable)
            message = f'The chain is reducible: {states[j]} cannot be ' \
                      f'reached from {states[i]}.'
            raise ValueError(message)


def _solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    n = len(rows)
    a = [row[:] + [b] for row, b in zip(rows, rhs)]
    for k in range(n):
        pivot = next((r for r in range(k, n) if a[r][k] != 0), None)
        if pivot is None:
            message = 'The balance equations are singular.'
            raise ValueError(message)
        a[k], a[pivot] = a[pivot], a[k]
        scale = a[k][k]
        a[k] = [entry / scale for entry in a[k]]
        for r in range(n):
            if r != k and a[r][k] != 0:
                factor = a[r][k]
                a[r] = [e - factor * f for e, f in zip(a[r], a[k])]
    return [a[r][n] for r in range(n)]


def stationary(p: RationalMatrix, states: list = None) -> StationaryResult:
    """Solve the stationary distribution of a chain exactly.

    The balance equations mu (P - I) = 0 are solved by Gauss-Jordan
    elimination over the rationals, one of them replaced by sum(mu) = 1.

    Parameters
    ----------
    p: RationalMatrix
        The row-stochastic transition matrix.
    states: list
        The state of each row. Defaults to the row indices.

    Returns
    -------
    StationaryResult
        The unique stationary distribution and its residual.

    Raises
    ------
    ValueError
        Raised if the matrix is not row-stochastic, or if the chain is
        reducible. The latter names a pair of states that do not
        communicate.

    Examples
    --------
    >>> import pyfpl as pf
    >>> chain = pf.plain_chain(2)
    >>> result = pf.stationary(pf.transition_matrix(chain), chain.states)
    >>> sorted(map(str, result.distribution.values()))
    ['1/2', '1/2']

    """
    states = list(range(p.dimension)) if states is None else list(states)
    if len(states) != p.dimension:
        message = 'There must be one state per row of the matrix.'
        raise ValueError(message)
    _check_stochastic(p)
    _check_irreducible(p, states)
    n = p.dimension
    rows = [[p[j, i] - (i == j) for j in range(n)] for i in range(n)]
    rows[-1] = [Fraction(1)] * n
    rhs = [Fraction(0)] * (n - 1) + [Fraction(1)]
    mu = _solve(rows, rhs)
    image = p.left_multiply(mu)
    residual = [a - b for a, b in zip(image, mu)]
    return StationaryResult(dict(zip(states, mu)), residual)


def solve_chain(spec: ChainSpec) -> StationaryResult:
    """Build the transition matrix of a chain and solve it.

    """
    result = stationary(transition_matrix(spec), spec.states)
    logger.info('Solved %s over %d states', spec.name, len(spec.states))
    return result


def _tally_rows(result: StationaryResult, counts: dict) -> list:
    total = sum(counts.values())
    return [ReconciliationRow(str(state), result[state],
                              Fraction(counts.get(state, 0), total))
            for state in result.distribution]


def verify_rs(size: int, workers: int = 1) -> ReconciliationReport:
    """Compare the stationary distribution of the plain chain with the FPL
    tallies, mu(pi) = A(N; pi) / A(N).

    Examples
    --------
    >>> import pyfpl as pf
    >>> pf.verify_rs(3).passed
    True

    """
    result = solve_chain(plain_chain(size))
    counts = count_by_coupling(size, workers=workers)
    report = ReconciliationReport(
        'rs', size, _tally_rows(result, counts), theorem=True,
        notes={'fpls': sum(counts.values()), 'exact': result.is_exact})
    logger.info('Plain chain against FPL tallies at size %d: %s', size,
                'pass' if report.passed else 'FAIL')
    return report


def _as_state(hc):
    return slit(hc) if hc.half % 2 else PuncturedCoupling(hc)


def verify_dg(size: int, workers: int = 1) -> ReconciliationReport:
    """Compare the stationary distribution of the half-turn chain with the
    half-turn-symmetric FPL tallies, mu(pi) = A_HT(N; pi) / A_HT(N).

    """
    result = solve_chain(ht_chain(size))
    counts = {_as_state(hc): count for hc, count in
              count_ht_by_coupling(size, workers=workers).items()}
    report = ReconciliationReport(
        'dg', size, _tally_rows(result, counts),
        notes={'htfpls': sum(counts.values()), 'exact': result.is_exact})
    if not report.passed:
        logger.warning('The half-turn chain disagrees with the tallies at '
                       'size %d', size)
    return report


def verify_refined(n: int, workers: int = 1) -> ReconciliationReport:
    """Check A(n; pi) A_HT(2n) = A(n) * sum of A_HT(2n; pi') over the
    punctured couplings pi' projecting to pi.

    The ratio A_HT(2n) / A(n) is reported as the note 'ratio'.

    """
    plain = count_by_coupling(n, workers=workers)
    symmetric = count_ht_by_coupling(2 * n, workers=workers)
    a, a_ht = sum(plain.values()), sum(symmetric.values())
    rows = []
    for pi in enumerate_couplings(n):
        lifted = sum(symmetric.get(pp.underlying, 0)
                     for pp in punctured_fiber(pi))
        rows.append(ReconciliationRow(str(pi), plain.get(pi, 0) * a_ht,
                                      a * lifted))
    ratio = Fraction(a_ht, a)
    logger.info('A_HT(%d) / A(%d) = %s', 2 * n, n, ratio)
    return ReconciliationReport('refined', n, rows,
                                notes={'A': a, 'A_HT': a_ht, 'ratio': ratio})


def verify_pushforward(n: int) -> ReconciliationReport:
    """Check that forgetting the puncture carries the stationary
    distribution of the half-turn chain of size 2n onto that of the plain
    chain of size n.

    """
    plain = solve_chain(plain_chain(n))
    punctured = solve_chain(ht_chain(2 * n))
    pushed = {pi: Fraction(0) for pi in plain.distribution}
    for state, probability in punctured.distribution.items():
        pushed[project_punctured(state)] += probability
    rows = [ReconciliationRow(str(pi), pushed[pi], plain[pi])
            for pi in plain.distribution]
    return ReconciliationReport('pushforward', n, rows, theorem=True)


def verify_rarest(n: int, workers: int = 1) -> ReconciliationReport:
    """Check that each rotation of the parallel arches is carried by exactly
    one FPL of size n.

    """
    counts = count_by_coupling(n, workers=workers)
    rotations = sorted({rotate_coupling(pi0(n), r) for r in range(2 * n)})
    rows = [ReconciliationRow(str(pi), counts.get(pi, 0), 1)
            for pi in rotations]
    return ReconciliationReport('rarest', n, rows, theorem=True)
