"""This module provides exact rational matrices and determinants, and the
lattice-path determinants whose values count weighted lozenge tilings.

The entry of row i and column j with offset ell is

    m(i, j, ell) = (1 + xy) C(i+j+ell-2, 2i-j-1)
                   + x C(i+j+ell-2, 2i-j-2) + y C(i+j+ell-2, 2i-j)

where C(a, b) is zero unless 0 <= b <= a. The n x n determinant of these
entries is written R_ell(n; x, y).
"""
from fractions import Fraction
import itertools
import logging
import math

import numpy as np
import sympy

from .constants import half, max_region_vertices, weight_grid
from .regions import count_matchings, region_Rl
from .reports import ReconciliationReport, ReconciliationRow

logger = logging.getLogger(__name__)

x_symbol, y_symbol = sympy.symbols('x y')
"""The formal lozenge weights used by the polynomial evaluations."""


def binomial(a: int, b: int) -> int:
    """Compute the binomial coefficient C(a, b), zero unless 0 <= b <= a.

    Examples
    --------
    >>> import pyfpl as pf
    >>> pf.binomial(4, 2), pf.binomial(1, -1), pf.binomial(0, 1)
    (6, 0, 0)

    """
    if a < 0 or b < 0 or b > a:
        return 0
    return math.comb(a, b)


class RationalMatrix:
    """A square matrix of exact rationals.

    Parameters
    ----------
    rows
        A sequence of equally long sequences of ints or Fractions. An empty
        sequence gives the 0 x 0 matrix.

    Raises
    ------
    TypeError
        Raised if an entry is neither an int nor a Fraction.
    ValueError
        Raised if the matrix is not square.

    Examples
    --------
    >>> import pyfpl as pf
    >>> pf.RationalMatrix([[1, 2], [3, 4]]).dimension
    2

    """
    def __init__(self, rows):
        self._rows = [list(row) for row in rows]
        self._validate_input()

        self._entries = self._make_entries()

    def _validate_input(self) -> None:
        dimension = len(self._rows)
        if any(len(row) != dimension for row in self._rows):
            message = 'A RationalMatrix must be square.'
            raise ValueError(message)
        for row in self._rows:
            for entry in row:
                if isinstance(entry, bool) or \
                        not isinstance(entry, (int, Fraction)):
                    message = f'{entry!r} is not an int or a Fraction.'
                    raise TypeError(message)

    def _make_entries(self) -> np.ndarray:
        dimension = len(self._rows)
        entries = np.empty((dimension, dimension), dtype=object)
        for i, row in enumerate(self._rows):
            for j, entry in enumerate(row):
                entries[i, j] = Fraction(entry)
        entries.setflags(write=False)
        return entries

    @classmethod
    def identity(cls, dimension: int):
        """Make the identity matrix.

        """
        return cls([[int(i == j) for j in range(dimension)]
                    for i in range(dimension)])

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        return self._entries[index]

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.dimension == other.dimension and \
            bool(np.all(self._entries == other._entries))

    def __repr__(self):
        return f'RationalMatrix({self.tolist()})'

    def tolist(self) -> list[list[Fraction]]:
        """Get the entries as nested lists.

        """
        return [list(row) for row in self._entries]

    def transpose(self):
        """Get the transposed matrix.

        """
        return RationalMatrix(self._entries.T.tolist())

    def left_multiply(self, vector) -> list[Fraction]:
        """Get the row vector times this matrix.

        """
        if len(vector) != self.dimension:
            message = 'The vector length must equal the dimension.'
            raise ValueError(message)
        if not self.dimension:
            return []
        return list(np.dot(np.array(vector, dtype=object), self._entries))

    @property
    def entries(self) -> np.ndarray:
        """Get the read-only object array of Fractions.

        """
        return self._entries

    @property
    def dimension(self) -> int:
        """Get the number of rows.

        """
        return self._entries.shape[0]


def det_rational(m: RationalMatrix) -> Fraction:
    """Compute a determinant exactly by fraction-free elimination.

    Each step divides by the previous pivot, which is exact, and a zero pivot
    is swapped with a lower row.

    Parameters
    ----------
    m: RationalMatrix
        The matrix.

    Returns
    -------
    Fraction
        The determinant. The 0 x 0 matrix has determinant 1.

    Examples
    --------
    >>> import pyfpl as pf
    >>> pf.det_rational(pf.RationalMatrix([[1, 2], [3, 4]]))
    Fraction(-2, 1)

    """
    a = m.tolist()
    n = len(a)
    if n == 0:
        return Fraction(1)
    sign = 1
    previous = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous
        previous = a[k][k]
    return sign * a[n - 1][n - 1]


def det_cofactor(m: RationalMatrix) -> Fraction:
    """Compute a determinant by Laplace expansion along the first row.

    This is slow and serves as an independent check of
    :func:`det_rational`.

    """
    def expand(rows: list[list[Fraction]]) -> Fraction:
        if not rows:
            return Fraction(1)
        total = Fraction(0)
        for j, entry in enumerate(rows[0]):
            if entry:
                minor = [row[:j] + row[j + 1:] for row in rows[1:]]
                total += (-1) ** j * entry * expand(minor)
        return total

    return expand(m.tolist())


def entry_m(i: int, j: int, ell: int, x, y):
    """Compute the lattice-path entry m(i, j, ell) at the weights x and y.

    The weights may be ints, Fractions or sympy expressions.

    Examples
    --------
    >>> from fractions import Fraction
    >>> import pyfpl as pf
    >>> pf.entry_m(1, 1, 0, Fraction(1, 2), 1)
    Fraction(3, 2)

    """
    a = i + j + ell - 2
    return (1 + x * y) * binomial(a, 2 * i - j - 1) + \
        x * binomial(a, 2 * i - j - 2) + y * binomial(a, 2 * i - j)


class RFuncSpec:
    """The arguments of R_ell(n; x, y).

    Parameters
    ----------
    ell: int
        The offset, ell >= 0.
    n: int
        The dimension, n >= 0.
    x
        The rational weight x.
    y
        The rational weight y.

    Raises
    ------
    TypeError
        Raised if ell or n is not an int, or a weight is not rational.
    ValueError
        Raised if ell or n is negative.

    """
    def __init__(self, ell: int, n: int, x=1, y=1):
        self._ell = ell
        self._n = n
        self._x = x
        self._y = y
        self._validate_input()

        self._x, self._y = Fraction(x), Fraction(y)

    def _validate_input(self) -> None:
        if not isinstance(self._ell, int) or not isinstance(self._n, int):
            message = 'ell and n must be ints.'
            raise TypeError(message)
        if self._ell < 0 or self._n < 0:
            message = 'ell and n must be non-negative.'
            raise ValueError(message)
        if not all(isinstance(w, (int, Fraction)) for w in (self._x, self._y)):
            message = 'The weights must be ints or Fractions.'
            raise TypeError(message)

    def __repr__(self):
        return f'RFuncSpec(ell={self._ell}, n={self._n}, x={self._x}, ' \
               f'y={self._y})'

    def matrix(self) -> RationalMatrix:
        """Build the n x n matrix of entries m(i, j, ell).

        """
        return RationalMatrix([[entry_m(i, j, self._ell, self._x, self._y)
                                for j in range(1, self._n + 1)]
                               for i in range(1, self._n + 1)])

    @property
    def ell(self) -> int:
        """Get the offset.

        """
        return self._ell

    @property
    def n(self) -> int:
        """Get the dimension.

        """
        return self._n

    @property
    def x(self) -> Fraction:
        """Get the weight x.

        """
        return self._x

    @property
    def y(self) -> Fraction:
        """Get the weight y.

        """
        return self._y


def r_func(spec: RFuncSpec) -> Fraction:
    """Evaluate R_ell(n; x, y).

    Examples
    --------
    >>> import pyfpl as pf
    >>> pf.r_func(pf.RFuncSpec(1, 1, 1, 1))
    Fraction(3, 1)

    """
    return det_rational(spec.matrix())


def r_func_poly(ell: int, n: int) -> sympy.Expr:
    """Get R_ell(n; x, y) as an expanded polynomial in the symbols x and y.

    """
    if n == 0:
        return sympy.Integer(1)
    matrix = sympy.Matrix(n, n, lambda i, j: entry_m(i + 1, j + 1, ell,
                                                     x_symbol, y_symbol))
    return sympy.expand(matrix.det(method='bareiss'))


def tiling_poly(ell: int, n: int,
                limit: int = max_region_vertices) -> sympy.Expr:
    """Get the weighted tiling sum of the region of R_ell(n; x, y) as an
    expanded polynomial in x and y.

    """
    total = count_matchings(region_Rl(n, ell, x_symbol, y_symbol), limit)
    return sympy.expand(sympy.sympify(total))


def has_nonnegative_integer_coefficients(polynomial: sympy.Expr) -> bool:
    """Check that a polynomial in x and y has non-negative integer
    coefficients.

    """
    coefficients = sympy.Poly(polynomial, x_symbol, y_symbol).coeffs()
    return all(c.is_integer and c >= 0 for c in coefficients)


def reconcile_r(ell: int, n: int, x=1, y=1,
                limit: int = max_region_vertices) -> ReconciliationReport:
    """Compare R_ell(n; x, y) with the weighted tiling count of its region.

    Parameters
    ----------
    ell: int
        The offset.
    n: int
        The dimension.
    x
        The weight x.
    y
        The weight y.
    limit: int
        The largest region handed to the matching counter.

    Returns
    -------
    ReconciliationReport
        One row, determinant against tiling count, and the factor between
        them.

    """
    spec = RFuncSpec(ell, n, x, y)
    determinant = r_func(spec)
    tilings = count_matchings(region_Rl(n, ell, spec.x, spec.y), limit)
    row = ReconciliationRow(f'R_{ell}({n};{spec.x},{spec.y})', determinant,
                            tilings)
    logger.debug('R_%d(%d;%s,%s): determinant %s, tilings %s', ell, n, spec.x,
                 spec.y, determinant, tilings)
    return ReconciliationReport('determinant-tilings', n, [row])


def fit_normalization(ell: int, x=1, y=1, sizes: tuple[int, int] = (1, 2),
                      limit: int = max_region_vertices) -> tuple[int, int]:
    """Fit tilings / determinant = 2 ** (c * n + d) at two sizes.

    Parameters
    ----------
    ell: int
        The offset.
    x
        The weight x.
    y
        The weight y.
    sizes: tuple[int, int]
        The two sizes the fit uses.
    limit: int
        The largest region handed to the matching counter.

    Returns
    -------
    tuple[int, int]
        The exponents (c, d).

    Raises
    ------
    ValueError
        Raised if a ratio at one of the sizes is not a power of 2 or the fit
        is not integral.

    """
    exponents = []
    for n in sizes:
        factor = reconcile_r(ell, n, x, y, limit).rows[0].factor
        exponent = _log2(factor)
        if exponent is None:
            message = f'The ratio {factor} at n = {n} is not a power of 2.'
            raise ValueError(message)
        exponents.append(exponent)
    (n1, n2), (e1, e2) = sizes, exponents
    c = Fraction(e2 - e1, n2 - n1)
    d = e1 - c * n1
    if c.denominator != 1 or d.denominator != 1:
        message = f'The exponents {exponents} do not fit an integral line.'
        raise ValueError(message)
    return int(c), int(d)


def _log2(value) -> int | None:
    if value is None or value <= 0:
        return None
    value = Fraction(value)
    for numerator, denominator, sign in ((value.numerator,
                                          value.denominator, 1),
                                         (value.denominator,
                                          value.numerator, -1)):
        if denominator == 1 and numerator & (numerator - 1) == 0:
            return sign * (numerator.bit_length() - 1)
    return None


def reconcile_grid(n_max: int = 3,
                   limit: int = max_region_vertices) -> ReconciliationReport:
    """Compare every determinant of the weight grid with its tilings.

    Covers ell in {0, 1, 2}, 1 <= n <= n_max and every (x, y) in
    {1/2, 1}². Every region must fit ``limit``; the largest at n = 3 has 66
    vertices.

    """
    rows = []
    for ell, n, (x, y) in itertools.product((0, 1, 2), range(1, n_max + 1),
                                            weight_grid):
        rows += reconcile_r(ell, n, x, y, limit).rows
    return ReconciliationReport('determinant-tilings', n_max, rows,
                                theorem=True)


def r_table(n_max: int, ells=(0, 1, 2), weights=weight_grid,
            limit: int = max_region_vertices) -> list[dict]:
    """Tabulate R_ell(n; x, y) with its tiling oracle.

    Parameters
    ----------
    n_max: int
        The largest dimension. Dimensions 0 to n_max are tabulated.
    ells
        The offsets.
    weights
        The (x, y) pairs.
    limit: int
        The largest region whose tilings are counted. Larger regions get no
        tiling count.

    Returns
    -------
    list[dict]
        One dict per (ell, n, x, y) with the keys ell, n, x, y, determinant
        and tilings.

    """
    table = []
    for ell, n, (x, y) in itertools.product(ells, range(n_max + 1), weights):
        spec = RFuncSpec(ell, n, x, y)
        region = region_Rl(n, ell, spec.x, spec.y)
        tilings = count_matchings(region, limit) \
            if region.number_of_vertices <= limit else None
        table.append({'ell': ell, 'n': n, 'x': spec.x, 'y': spec.y,
                      'determinant': r_func(spec), 'tilings': tilings})
    return table


def r_half_one(ell: int, n: int) -> Fraction:
    """Evaluate R_ell(n; 1/2, 1).

    """
    return r_func(RFuncSpec(ell, n, half, 1))
