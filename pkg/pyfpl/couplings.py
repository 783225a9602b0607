"""This module provides objects and functions for working with couplings
(link patterns) and their half-turn-symmetric relatives.

Boundary points are labelled 1 to 2N and every operation uses these 1-based
labels. A coupling is stored as its partner array: ``partner[i - 1]`` is the
point paired with ``i``.
"""
from functools import total_ordering
import itertools
import logging
import re

logger = logging.getLogger(__name__)

_pair_pattern = re.compile(r'\((\d+),(\d+)\)')


def _successor(i: int, points: int) -> int:
    return i % points + 1


def _reduce(i: int, modulus: int) -> int:
    return (i - 1) % modulus + 1


def _pairs_from_partner(partner: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i, j in enumerate(partner, start=1) if i < j)


def _partner_from_pairs(pairs, points: int) -> tuple[int, ...]:
    partner = [0] * points
    for a, b in pairs:
        if not (1 <= a <= points and 1 <= b <= points):
            message = f'The pair ({a},{b}) lies outside 1..{points}.'
            raise ValueError(message)
        if partner[a - 1] or partner[b - 1]:
            message = f'The pair ({a},{b}) reuses a matched point.'
            raise ValueError(message)
        partner[a - 1] = b
        partner[b - 1] = a
    return tuple(partner)


def _is_noncrossing(pairs) -> bool:
    for (a, b), (c, d) in itertools.combinations(pairs, 2):
        a, b = sorted((a, b))
        c, d = sorted((c, d))
        if a < c < b < d or c < a < d < b:
            return False
    return True


@total_ordering
class Coupling:
    """A noncrossing perfect matching of 2N boundary points.

    Parameters
    ----------
    partner: tuple[int, ...]
        The partner array. Entry ``i - 1`` is the point matched with ``i``.

    Raises
    ------
    TypeError
        Raised if the partner array does not contain only ints.
    ValueError
        Raised if the partner array is not a fixed-point-free involution or if
        two of its pairs cross.

    Examples
    --------
    Make the coupling of the two nested arches on 4 points.

    >>> import pyfpl as pf
    >>> pi = pf.Coupling((4, 3, 2, 1))
    >>> str(pi)
    '(1,4)(2,3)'
    >>> pi.size
    2

    """
    def __init__(self, partner: tuple[int, ...]):
        self._partner = tuple(partner)
        self._validate_input()

        self._pairs = _pairs_from_partner(self._partner)

    @classmethod
    def from_pairs(cls, pairs, points: int = None):
        """Make a coupling from an iterable of pairs.

        Parameters
        ----------
        pairs
            Iterable of 2-tuples of 1-based labels.
        points: int
            The number of boundary points. Defaults to twice the number of
            pairs.

        """
        pairs = list(pairs)
        points = 2 * len(pairs) if points is None else points
        return cls(_partner_from_pairs(pairs, points))

    def _validate_input(self) -> None:
        if not all(isinstance(p, int) for p in self._partner):
            message = 'The partner array must contain only ints.'
            raise TypeError(message)
        points = len(self._partner)
        if points % 2:
            message = 'A coupling must match an even number of points.'
            raise ValueError(message)
        for i, j in enumerate(self._partner, start=1):
            if not 1 <= j <= points or j == i or self._partner[j - 1] != i:
                message = f'The partner array is not an involution at {i}.'
                raise ValueError(message)
        if not _is_noncrossing(_pairs_from_partner(self._partner)):
            message = f'The pairs of {self._partner} cross.'
            raise ValueError(message)

    def __eq__(self, other):
        if not isinstance(other, Coupling):
            return NotImplemented
        return self._partner == other._partner

    def __lt__(self, other):
        if not isinstance(other, Coupling):
            return NotImplemented
        return (len(self._partner), self._partner) < \
            (len(other._partner), other._partner)

    def __hash__(self):
        return hash(self._partner)

    def __str__(self):
        if not self._pairs:
            return '()'
        return ''.join(f'({a},{b})' for a, b in self._pairs)

    def __repr__(self):
        return f"{type(self).__name__}.from_pairs({list(self._pairs)})"

    def partner_of(self, i: int) -> int:
        """Get the point matched with ``i``.

        """
        return self._partner[i - 1]

    @property
    def partner(self) -> tuple[int, ...]:
        """Get the partner array.

        """
        return self._partner

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Get the pairs (i, j) with i < j, sorted by i.

        """
        return self._pairs

    @property
    def points(self) -> int:
        """Get the number of boundary points, 2N.

        """
        return len(self._partner)

    @property
    def size(self) -> int:
        """Get the number of arcs, N.

        """
        return len(self._partner) // 2


class HtCoupling(Coupling):
    """A coupling of 2L points invariant under the half-turn i -> i + L.

    When L is odd the coupling has exactly one diameter {i, i + L}; when L is
    even it has none. The odd ones are conveniently handled through
    :class:`SlitCoupling` and the even ones through
    :class:`PuncturedCoupling`.

    Parameters
    ----------
    partner: tuple[int, ...]
        The partner array of all 2L points.

    Raises
    ------
    ValueError
        Raised if the coupling is not half-turn symmetric or has the wrong
        number of diameters.

    """
    def _validate_input(self) -> None:
        super()._validate_input()
        points = len(self._partner)
        half = points // 2
        for i, j in enumerate(self._partner, start=1):
            if self._partner[_reduce(i + half, points) - 1] != \
                    _reduce(j + half, points):
                message = 'The coupling is not invariant under the half-turn.'
                raise ValueError(message)
        diameters = sum(1 for i, j in _pairs_from_partner(self._partner)
                        if j - i == half)
        if diameters != half % 2:
            message = f'A half-turn-symmetric coupling on {points} points ' \
                      f'must have {half % 2} diameter(s), not {diameters}.'
            raise ValueError(message)

    @property
    def half(self) -> int:
        """Get L, half the number of points.

        """
        return len(self._partner) // 2

    @property
    def kind(self) -> str:
        """Get 'slit' if L is odd and 'punctured' if L is even.

        """
        return 'slit' if self.half % 2 else 'punctured'

    @property
    def diameter(self) -> tuple[int, int] | None:
        """Get the diameter pair, or None when L is even.

        """
        for i, j in self._pairs:
            if j - i == self.half:
                return i, j
        return None


@total_ordering
class SlitCoupling:
    """The compact form of a half-turn-symmetric coupling of odd size L.

    The diameter becomes the singleton and each pair of opposite arcs
    becomes a single pair of labels in 1..L.

    Parameters
    ----------
    size: int
        The odd size L.
    singleton: int
        The unmatched point, in 1..L.
    pairs
        The pairs matching the other L - 1 points.

    Raises
    ------
    TypeError
        Raised if the size or singleton is not an int.
    ValueError
        Raised if the size is even, if the points are not all covered exactly
        once, or if the pairs cross when read around the slit.

    Examples
    --------
    >>> import pyfpl as pf
    >>> sc = pf.SlitCoupling(3, 1, [(2, 3)])
    >>> str(sc)
    '(2,3)|s=1'
    >>> str(pf.unslit(sc))
    '(1,4)(2,3)(5,6)'

    """
    def __init__(self, size: int, singleton: int, pairs):
        self._size = size
        self._singleton = singleton
        self._pairs = tuple(sorted(tuple(sorted(p)) for p in pairs))
        self._validate_input()

    def _validate_input(self) -> None:
        if not isinstance(self._size, int) or \
                not isinstance(self._singleton, int):
            message = 'The size and singleton must be ints.'
            raise TypeError(message)
        if self._size < 1 or self._size % 2 == 0:
            message = 'A slit coupling must have a positive odd size.'
            raise ValueError(message)
        if not 1 <= self._singleton <= self._size:
            message = f'The singleton must lie in 1..{self._size}.'
            raise ValueError(message)
        covered = sorted(itertools.chain([self._singleton], *self._pairs))
        if covered != list(range(1, self._size + 1)):
            message = 'The singleton and pairs must cover every point once.'
            raise ValueError(message)
        if not _is_noncrossing(self.lifted_pairs()):
            message = f'The pairs of {self} cross around the slit.'
            raise ValueError(message)

    def lifted_pairs(self) -> list[tuple[int, int]]:
        """Get the pairs relabelled into the half s+1..s+L-1 of the full
        coupling, s being the singleton.

        """
        lift = lambda p: p if p > self._singleton else p + self._size
        return [tuple(sorted((lift(a), lift(b)))) for a, b in self._pairs]

    def __eq__(self, other):
        if not isinstance(other, SlitCoupling):
            return NotImplemented
        return self._key() == other._key()

    def __lt__(self, other):
        if not isinstance(other, SlitCoupling):
            return NotImplemented
        return self._key() < other._key()

    def __hash__(self):
        return hash(self._key())

    def _key(self):
        return self._size, self._singleton, self._pairs

    def __str__(self):
        return ''.join(f'({a},{b})' for a, b in self._pairs) + \
            f'|s={self._singleton}'

    def __repr__(self):
        return f'SlitCoupling({self._size}, {self._singleton}, ' \
               f'{list(self._pairs)})'

    @property
    def size(self) -> int:
        """Get the odd size L.

        """
        return self._size

    @property
    def singleton(self) -> int:
        """Get the unmatched point.

        """
        return self._singleton

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Get the sorted pairs.

        """
        return self._pairs


@total_ordering
class PuncturedCoupling:
    """A half-turn-symmetric coupling of even size L drawn on a punctured
    disk.

    Equality is that of the underlying 2L-point coupling. The winding flags
    are derived from it: an orbit of arcs winds when, reduced modulo L, the
    arc passes around the puncture.

    Parameters
    ----------
    underlying: HtCoupling
        The full half-turn-symmetric coupling of 2L points.

    Raises
    ------
    TypeError
        Raised if the input is not an HtCoupling.
    ValueError
        Raised if L is odd.

    """
    def __init__(self, underlying: HtCoupling):
        self._underlying = underlying
        self._validate_input()

        self._windings = self._make_windings()

    def _validate_input(self) -> None:
        if not isinstance(self._underlying, HtCoupling):
            message = 'The underlying coupling must be an HtCoupling.'
            raise TypeError(message)
        if self._underlying.half % 2:
            message = 'A punctured coupling must have an even size L.'
            raise ValueError(message)

    def _make_windings(self) -> dict[tuple[int, int], bool]:
        points = self._underlying.points
        half = self._underlying.half
        windings = {}
        for a, b in self._underlying.pairs:
            if (b - a) % points >= half:
                a, b = b, a
            key = tuple(sorted((_reduce(a, half), _reduce(b, half))))
            windings[key] = _reduce(a, half) > _reduce(b, half)
        return dict(sorted(windings.items()))

    def __eq__(self, other):
        if not isinstance(other, PuncturedCoupling):
            return NotImplemented
        return self._underlying == other._underlying

    def __lt__(self, other):
        if not isinstance(other, PuncturedCoupling):
            return NotImplemented
        return self._underlying < other._underlying

    def __hash__(self):
        return hash(self._underlying)

    def __str__(self):
        return str(self._underlying)

    def __repr__(self):
        return f'PuncturedCoupling({self._underlying!r})'

    @property
    def underlying(self) -> HtCoupling:
        """Get the full half-turn-symmetric coupling.

        """
        return self._underlying

    @property
    def size(self) -> int:
        """Get L.

        """
        return self._underlying.half

    @property
    def windings(self) -> dict[tuple[int, int], bool]:
        """Get the winding flag of each orbit, keyed by the projected pair.

        """
        return dict(self._windings)

    @property
    def winding_count(self) -> int:
        """Get the number of winding orbits.

        """
        return sum(self._windings.values())


def _noncrossing_matchings(points: list[int]):
    if not points:
        yield []
        return
    first = points[0]
    for m in range(1, len(points), 2):
        for inside in _noncrossing_matchings(points[1:m]):
            for outside in _noncrossing_matchings(points[m + 1:]):
                yield [(first, points[m])] + inside + outside


def enumerate_couplings(n: int) -> list[Coupling]:
    """Enumerate all couplings of size n.

    Parameters
    ----------
    n: int
        The number of arcs. n = 0 gives the single empty coupling.

    Returns
    -------
    list[Coupling]
        The C_n couplings, sorted lexicographically on their partner arrays.

    Examples
    --------
    >>> import pyfpl as pf
    >>> [str(c) for c in pf.enumerate_couplings(2)]
    ['(1,2)(3,4)', '(1,4)(2,3)']

    """
    if not isinstance(n, int) or n < 0:
        message = 'The coupling size must be a non-negative int.'
        raise ValueError(message)
    points = list(range(1, 2 * n + 1))
    return sorted(Coupling.from_pairs(m, 2 * n)
                  for m in _noncrossing_matchings(points))


def _is_half_turn_invariant(pi: Coupling) -> bool:
    half = pi.size
    return all(pi.partner_of(_reduce(i + half, pi.points)) ==
               _reduce(j + half, pi.points) for i, j in pi.pairs)


def enumerate_ht_couplings(half: int) -> list[HtCoupling]:
    """Enumerate the half-turn-symmetric couplings of 2L points.

    Parameters
    ----------
    half: int
        L, half the number of points.

    Returns
    -------
    list[HtCoupling]
        The sorted couplings. There are binom(L, floor(L/2)) of them.

    """
    return [HtCoupling(pi.partner) for pi in enumerate_couplings(half)
            if _is_half_turn_invariant(pi)]


def pi0(n: int) -> Coupling:
    """Make the coupling of n parallel arches, {i, 2n+1-i}.

    Examples
    --------
    >>> import pyfpl as pf
    >>> str(pf.pi0(3))
    '(1,6)(2,5)(3,4)'

    """
    return Coupling.from_pairs([(i, 2 * n + 1 - i) for i in range(1, n + 1)])


def rotate_coupling(pi: Coupling, shift: int) -> Coupling:
    """Relabel every point i as i + shift, cyclically.

    """
    pairs = [(_reduce(a + shift, pi.points), _reduce(b + shift, pi.points))
             for a, b in pi.pairs]
    return type(pi).from_pairs(pairs, pi.points)


def short_links(pi: Coupling) -> list[tuple[int, int]]:
    """Get the pairs {i, i+1} of a coupling, indices taken cyclically.

    Each link is returned once, as (i, i+1) with the cyclic successor.

    """
    links = []
    seen = set()
    for i in range(1, pi.points + 1):
        j = _successor(i, pi.points)
        if pi.partner_of(i) == j and frozenset((i, j)) not in seen:
            seen.add(frozenset((i, j)))
            links.append((i, j))
    return links


def tl_apply(i: int, pi: Coupling) -> Coupling:
    """Apply the Temperley-Lieb generator e_i to a coupling.

    The pairs (i, j) and (i+1, k) are replaced by (i, i+1) and (j, k). The
    successor of 2N is 1. If {i, i+1} is already a pair the coupling is
    returned unchanged.

    Parameters
    ----------
    i: int
        The generator index, in 1..2N.
    pi: Coupling
        The coupling to act on.

    Returns
    -------
    Coupling
        The rewired coupling.

    Raises
    ------
    ValueError
        Raised if i is out of range.

    Examples
    --------
    >>> import pyfpl as pf
    >>> str(pf.tl_apply(2, pf.Coupling.from_pairs([(1, 2), (3, 4)])))
    '(1,4)(2,3)'

    """
    if not 1 <= i <= pi.points:
        message = f'The generator index must lie in 1..{pi.points}.'
        raise ValueError(message)
    j = _successor(i, pi.points)
    if pi.partner_of(i) == j:
        return pi
    a, b = pi.partner_of(i), pi.partner_of(j)
    partner = list(pi.partner)
    partner[i - 1], partner[j - 1] = j, i
    partner[a - 1], partner[b - 1] = b, a
    return Coupling(tuple(partner))


def tl_sym_apply(i: int, pi: HtCoupling) -> HtCoupling:
    """Apply the symmetrized generator e'_i = e_i e_{i+L}.

    Parameters
    ----------
    i: int
        The generator index, in 1..L.
    pi: HtCoupling
        The half-turn-symmetric coupling of 2L points.

    Returns
    -------
    HtCoupling
        The image, again half-turn symmetric.

    """
    if not 1 <= i <= pi.half:
        message = f'The symmetrized generator index must lie in 1..{pi.half}.'
        raise ValueError(message)
    image = tl_apply(i + pi.half, tl_apply(i, pi))
    return HtCoupling(image.partner)


def unslit(sc: SlitCoupling) -> HtCoupling:
    """Expand a slit coupling of size L into its full coupling of 2L points.

    """
    size = sc.size
    pairs = [(sc.singleton, sc.singleton + size)]
    for a, b in sc.lifted_pairs():
        pairs.append((a, b))
        pairs.append((_reduce(a + size, 2 * size), _reduce(b + size, 2 * size)))
    return HtCoupling.from_pairs(pairs, 2 * size)


def slit(hc: HtCoupling) -> SlitCoupling:
    """Compress a half-turn-symmetric coupling of odd size L.

    Raises
    ------
    ValueError
        Raised if L is even.

    """
    if hc.half % 2 == 0:
        message = 'Only couplings of odd size can be slit.'
        raise ValueError(message)
    size = hc.half
    singleton = hc.diameter[0]
    side = range(singleton + 1, singleton + size)
    pairs = [(_reduce(a, size), _reduce(b, size)) for a, b in hc.pairs
             if a in side and b in side]
    return SlitCoupling(size, singleton, pairs)


def enumerate_slit_couplings(size: int) -> list[SlitCoupling]:
    """Enumerate the slit couplings of odd size L.

    """
    return sorted(slit(hc) for hc in enumerate_ht_couplings(size))


def pi_prime(k: int, n: int) -> PuncturedCoupling:
    """Make the punctured coupling whose k outermost arcs wind.

    It is {i, 4n+1-i} for i <= k and {i, 2n+1-i} for k < i <= n, closed under
    the half-turn i -> i + 2n.

    """
    if not 0 <= k <= n:
        message = 'k must lie in 0..n.'
        raise ValueError(message)
    points = 4 * n
    base = [(i, 4 * n + 1 - i) for i in range(1, k + 1)] + \
           [(i, 2 * n + 1 - i) for i in range(k + 1, n + 1)]
    pairs = set()
    for a, b in base:
        pairs.add(tuple(sorted((a, b))))
        pairs.add(tuple(sorted((_reduce(a + 2 * n, points),
                                _reduce(b + 2 * n, points)))))
    return PuncturedCoupling(HtCoupling.from_pairs(sorted(pairs), points))


def project_punctured(pp: PuncturedCoupling) -> Coupling:
    """Forget the puncture of a punctured coupling.

    Labels are reduced modulo L, giving a coupling of L/2 arcs. This map
    intertwines e'_i and e_i.

    Examples
    --------
    >>> import pyfpl as pf
    >>> str(pf.project_punctured(pf.pi_prime(1, 2)))
    '(1,4)(2,3)'

    """
    return Coupling.from_pairs(list(pp.windings), pp.size)


def punctured_fiber(pi: Coupling) -> list[PuncturedCoupling]:
    """Find every punctured coupling projecting to a plane coupling.

    Each pair (a, b) of ``pi`` lifts either to the arcs (a, b), (a+L, b+L) or
    to the winding arcs (a, b+L), (b, a+L), with L = 2n. The noncrossing
    choices are kept.

    Parameters
    ----------
    pi: Coupling
        A coupling of size n.

    Returns
    -------
    list[PuncturedCoupling]
        The sorted fiber. For the parallel arches of size n it has n + 1
        elements.

    """
    half = pi.points
    points = 2 * half
    fiber = []
    for choice in itertools.product((False, True), repeat=pi.size):
        pairs = []
        for (a, b), winding in zip(pi.pairs, choice):
            if winding:
                pairs += [(a, b + half), (b, a + half)]
            else:
                pairs += [(a, b), (a + half, b + half)]
        try:
            hc = HtCoupling.from_pairs(pairs, points)
        except ValueError:
            continue
        fiber.append(PuncturedCoupling(hc))
    logger.debug('Fiber of %s has %d elements', pi, len(fiber))
    return sorted(fiber)


def slit_rare_family(n: int, offset: int = 0) -> list[SlitCoupling]:
    """Make the slit couplings of size 2n+1 with at most two short edges.

    For 1 <= k <= n+1 the member is {i, 2n+2-i} for i < k, the singleton k,
    and {i, 2n+3-i} for k < i <= n+1. Every label is then rotated by
    ``offset``.

    Parameters
    ----------
    n: int
        The family index; the slit size is 2n+1.
    offset: int
        The rotation, in 0..2n.

    Returns
    -------
    list[SlitCoupling]
        The n + 1 members, sorted.

    """
    size = 2 * n + 1
    if not 0 <= offset < size:
        message = f'The offset must lie in 0..{size - 1}.'
        raise ValueError(message)
    rotate = lambda p: _reduce(p + offset, size)
    family = []
    for k in range(1, n + 2):
        pairs = [(i, 2 * n + 2 - i) for i in range(1, k)] + \
                [(i, 2 * n + 3 - i) for i in range(k + 1, n + 2)]
        family.append(SlitCoupling(size, rotate(k),
                                   [(rotate(a), rotate(b)) for a, b in pairs]))
    return sorted(family)


def rare_short_positions(n: int, offset: int = 0) -> set[frozenset[int]]:
    """Get the short edges allowed to the extended slit rare family.

    With offset i these are (i, i+1), (n+i+1, n+i+2), (2n+i+1, 2n+i+2) and
    (3n+i+2, 3n+i+3) on 4n+2 points.

    """
    points = 4 * n + 2
    starts = (offset, n + offset + 1, 2 * n + offset + 1, 3 * n + offset + 2)
    return {frozenset((_reduce(s, points), _reduce(s + 1, points)))
            for s in starts}


def parse_coupling(text: str) -> Coupling:
    """Parse the canonical text form '(1,4)(2,3)'.

    """
    pairs = [(int(a), int(b)) for a, b in _pair_pattern.findall(text)]
    return Coupling.from_pairs(pairs)
