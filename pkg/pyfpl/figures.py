"""This module provides functions to read and write edge lists and to load the
edge lists transcribed from the figures shipped with pyfpl."""
from fractions import Fraction
from pathlib import Path
import re

Edge = tuple[tuple[int, int], tuple[int, int]]

_edge_pattern = re.compile(
    r'^\((-?\d+),(-?\d+)\)-\((-?\d+),(-?\d+)\)(?:\s+w=(-?\d+(?:/\d+)?))?$')


def _get_package_path() -> Path:
    return Path(__file__).parent.resolve()


def _get_figures_directory() -> Path:
    return _get_package_path() / 'figures'


def normalize_edge(edge) -> Edge:
    """Order the two endpoints of an edge lexicographically.

    Parameters
    ----------
    edge
        A pair of 2D integer points.

    Returns
    -------
    Edge
        The same edge with its smaller endpoint first.

    """
    (x1, y1), (x2, y2) = edge
    return tuple(sorted(((int(x1), int(y1)), (int(x2), int(y2)))))


def parse_weighted_edges(text: str) -> dict[Edge, Fraction]:
    """Parse edge-list text into a mapping from edge to weight.

    Each non-blank line not starting with '#' holds one edge
    '(x1,y1)-(x2,y2)', optionally followed by a weight 'w=p/q'. Edges without
    a weight get weight 1.

    Parameters
    ----------
    text: str
        The edge-list text.

    Returns
    -------
    dict[Edge, Fraction]
        The edges in the order they appear.

    Raises
    ------
    ValueError
        Raised if a line is not an edge.

    """
    edges = {}
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        match = _edge_pattern.match(line)
        if match is None:
            message = f'Line {number} is not an edge: {line!r}.'
            raise ValueError(message)
        x1, y1, x2, y2 = (int(g) for g in match.groups()[:4])
        weight = Fraction(match.group(5)) if match.group(5) else Fraction(1)
        edges[normalize_edge(((x1, y1), (x2, y2)))] = weight
    return edges


def parse_edges(text: str) -> list[Edge]:
    """Parse edge-list text, ignoring any weights.

    Examples
    --------
    >>> import pyfpl as pf
    >>> pf.parse_edges('# comment\\n(1,0)-(1,1)\\n(2,1)-(1,1)')
    [((1, 0), (1, 1)), ((1, 1), (2, 1))]

    """
    return list(parse_weighted_edges(text))


def format_edge(edge, weight=1) -> str:
    """Write one edge as '(x1,y1)-(x2,y2)', with ' w=p/q' unless the weight
    is 1.

    """
    (x1, y1), (x2, y2) = normalize_edge(edge)
    line = f'({x1},{y1})-({x2},{y2})'
    if weight != 1:
        if isinstance(weight, (int, Fraction)):
            weight = Fraction(weight)
            line += f' w={weight.numerator}/{weight.denominator}'
        else:
            line += f' w={weight}'
    return line


def format_edges(edges, weights: dict = None) -> str:
    """Write edges in the edge-list text format.

    Parameters
    ----------
    edges
        Iterable of edges.
    weights: dict
        Optional mapping from edge to weight. Weights of 1 are omitted.

    Returns
    -------
    str
        One edge per line, sorted.

    """
    weights = {} if weights is None else weights
    lines = [format_edge(edge, weights.get(edge, 1))
             for edge in sorted(normalize_edge(e) for e in edges)]
    return ''.join(line + '\n' for line in lines)


def figure_names() -> list[str]:
    """Get the names of the figure transcriptions shipped with pyfpl.

    """
    return sorted(f.stem for f in _get_figures_directory().glob('*.txt'))


def load_figure(name: str) -> list[Edge]:
    """Load the edges transcribed from a figure.

    Parameters
    ----------
    name: str
        The figure name. One of 'fpl_size_8', 'fixed_edges_even_12',
        'fixed_edges_odd_13' or 'region_g_4'.

    Returns
    -------
    list[Edge]
        The edges of the figure, in file order.

    Raises
    ------
    FileNotFoundError
        Raised if no figure has this name.

    Examples
    --------
    Load the fixed edges of the even-size figure.

    >>> import pyfpl as pf
    >>> len(pf.load_figure('fixed_edges_even_12'))
    84

    """
    path = _get_figures_directory() / f'{name}.txt'
    try:
        text = path.read_text()
    except FileNotFoundError as fe:
        message = f'The figure {name!r} is not part of pyfpl. Choose one ' \
                  f'of {figure_names()}.'
        raise FileNotFoundError(message) from fe
    return parse_edges(text)
