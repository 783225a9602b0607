"""This module provides exact evaluations of closed-form counting formulas,
each next to an independently computed oracle value.

Printed values are evaluated verbatim. The bank never replaces a printed
value by its oracle: disagreements are reported as
:class:`~pyfpl.reports.FormulaResult` objects with status 'mismatch'.

Half-integer factorials are carried symbolically as rational multiples of
the formal unit (-1/2)!, so that a formula in which that unit fails to
cancel shows up as a symbolic value instead of a number.
"""
from fractions import Fraction
import functools
import logging
import math

import sympy

from .constants import half, max_fpl_size, max_ht_size, max_region_vertices, \
    max_vs_size
from .determinants import RFuncSpec, binomial, r_func
from .fpl import count_by_coupling, enumerate_ht_fpls, enumerate_vs_fpls, \
    nonfixed_quotient_graph
from .regions import count_matchings, hexagon_region, region_Rl, region_r, \
    region_rprime, rotation_invariant_tilings
from .reports import FormulaResult, ReconciliationReport, ReconciliationRow

logger = logging.getLogger(__name__)

half_unit = sympy.Symbol('(-1/2)!', positive=True)
"""The formal unit (-1/2)! of the half-integer factorials."""


def _to_exact(value):
    value = sympy.simplify(sympy.sympify(value))
    if value.is_Rational:
        return Fraction(int(value.p), int(value.q))
    return value


def catalan(n: int) -> int:
    """Compute the Catalan number C_n, the number of couplings of size n.

    Examples
    --------
    >>> import pyfpl as pf
    >>> [pf.catalan(n) for n in range(6)]
    [1, 1, 2, 5, 14, 42]

    """
    return math.comb(2 * n, n) // (n + 1)


def asm_count(size: int) -> int:
    """Compute the number of alternating sign matrices of a given size,
    the product of (3i+1)! / (N+i)! over 0 <= i < N.

    Examples
    --------
    >>> import pyfpl as pf
    >>> [pf.asm_count(n) for n in range(1, 6)]
    [1, 2, 7, 42, 429]

    """
    product = Fraction(1)
    for i in range(size):
        product *= Fraction(math.factorial(3 * i + 1),
                            math.factorial(size + i))
    return int(product)


def shifted_factorial(a, i: int):
    """Compute the rising product (a)_i = a (a+1) ... (a+i-1).

    Parameters
    ----------
    a
        An int, Fraction or sympy number.
    i: int
        The number of factors, i >= 0.

    Examples
    --------
    >>> from fractions import Fraction
    >>> import pyfpl as pf
    >>> pf.shifted_factorial(Fraction(1, 2), 2)
    Fraction(3, 4)

    """
    if i < 0:
        message = 'The number of factors must be non-negative.'
        raise ValueError(message)
    product = 1
    for k in range(i):
        product *= a + k
    return product


def _rising(a, i: int) -> sympy.Expr:
    return shifted_factorial(sympy.Rational(a), i)


def half_factorial(m: int) -> sympy.Expr:
    """Get (m + 1/2)! as (1/2)_{m+1} times the formal unit (-1/2)!.

    """
    if m < -1:
        message = 'Half-integer factorials start at (-1/2)!.'
        raise ValueError(message)
    return half_unit * _rising(sympy.Rational(1, 2), m + 1)


def macmahon_box(a: int, b: int, c: int) -> int:
    """Compute the number of plane partitions in an a x b x c box, which is
    the number of lozenge tilings of the hexagon of sides a, b, c.

    Examples
    --------
    >>> import pyfpl as pf
    >>> pf.macmahon_box(2, 2, 2)
    20

    """
    product = Fraction(1)
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                product *= Fraction(i + j + k - 1, i + j + k - 2)
    return int(product)


@functools.lru_cache
def fpl_count(size: int) -> int | None:
    """Count the FPLs of a given size by enumeration, or None above the
    enumeration limit.

    """
    if size == 0:
        return 1
    if size > max_fpl_size:
        return None
    return sum(count_by_coupling(size).values())


@functools.lru_cache
def ht_fpl_count(size: int) -> int | None:
    """Count the half-turn-symmetric FPLs of a given size by enumeration,
    or None above the enumeration limit.

    """
    if size == 0:
        return 1
    if size > max_ht_size:
        return None
    return sum(1 for _ in enumerate_ht_fpls(size))


@functools.lru_cache
def vs_fpl_count(size: int) -> int | None:
    """Count the vertically symmetric FPLs of a given size by enumeration,
    or None above the enumeration limit.

    """
    if size > max_vs_size:
        return None
    return sum(1 for _ in enumerate_vs_fpls(size))


def _tiling_count(n: int, ell: int, x, y, limit: int = max_region_vertices):
    region = region_Rl(n, ell, x, y)
    if region.number_of_vertices > limit:
        return None
    return count_matchings(region, limit)


def asm_check(size: int) -> FormulaResult:
    """Compare the product formula for A(N) with the FPL enumeration.

    """
    return FormulaResult('asm_count', (size,), asm_count(size),
                         fpl_count(size))


def a_ht_printed(size: int) -> Fraction:
    """Evaluate A_HT(N) through its ratio recurrences.

    Odd sizes use A_HT(1) = 1 and
    A_HT(2n+1) / A_HT(2n-1) = 4/3 C(3n,n)² / C(2n,n)². Even sizes use
    A_HT(2) = 2 and A_HT(2n+2) / A_HT(2n) =
    4/3 C(3n+3,n+1) C(3n,n) / (C(2n+2,n+1) C(2n,n)).

    """
    if size < 1:
        message = 'The size must be positive.'
        raise ValueError(message)
    if size % 2:
        value = Fraction(1)
        for n in range(1, (size - 1) // 2 + 1):
            value *= Fraction(4, 3) * Fraction(math.comb(3 * n, n) ** 2,
                                               math.comb(2 * n, n) ** 2)
    else:
        value = Fraction(2)
        for n in range(1, size // 2):
            value *= Fraction(4, 3) * Fraction(
                math.comb(3 * n + 3, n + 1) * math.comb(3 * n, n),
                math.comb(2 * n + 2, n + 1) * math.comb(2 * n, n))
    return value


def a_ht(size: int) -> FormulaResult:
    """Compare the ratio recurrences for A_HT(N) with the enumeration of
    half-turn-symmetric FPLs.

    Examples
    --------
    >>> import pyfpl as pf
    >>> pf.a_ht(4).status
    'match'

    """
    return FormulaResult('a_ht', (size,), a_ht_printed(size),
                         ht_fpl_count(size))


def a_v(size: int) -> FormulaResult:
    """Compare the printed product for A_V(2n+1),
    the product of C(6j-2, 2j) / C(4j-1, 2j) over 1 <= j <= n, with the
    enumeration of vertically symmetric FPLs.

    """
    if size < 1 or size % 2 == 0:
        message = 'A_V is evaluated at odd sizes only.'
        raise ValueError(message)
    printed = Fraction(1)
    for j in range(1, (size - 1) // 2 + 1):
        printed *= Fraction(math.comb(6 * j - 2, 2 * j),
                            math.comb(4 * j - 1, 2 * j))
    result = FormulaResult('a_v', (size,), printed, vs_fpl_count(size))
    if result.status == 'mismatch':
        logger.warning('The printed A_V(%d) = %s disagrees with the '
                       'enumeration %s', size, printed, result.oracle)
    return result


def p_cs_hole(m: int, hole: int = 2):
    """Evaluate the printed count P_CS(m, 2) of cyclically symmetric plane
    partitions with a triangular hole of side 2.

    Parameters
    ----------
    m: int
        The first argument, m >= 0. Odd and even m use different products.
    hole: int
        The hole side. Only 2 is available.

    Returns
    -------
    Fraction or sympy.Expr
        The value, exact. It stays symbolic if (-1/2)! does not cancel.

    """
    if hole != 2:
        message = 'Only the hole of side 2 is available.'
        raise ValueError(message)
    f = sympy.factorial
    r = sympy.Rational
    if m % 2:
        j = (m - 1) // 2
        value = half_unit * _rising(2 * j + 3, j + 1) / half_factorial(j)
        for i in range(j + 1):
            value *= f(i) ** 2 * _rising(2 * i + 1, i) ** 2 * \
                half_factorial(i) * _rising(2 * i + r(1, 2), i + 1) * \
                _rising(2 * i + r(3, 2), i) / \
                (f(2 * i) ** 2 * half_factorial(j + i + 1))
    else:
        j = m // 2
        value = half_unit * f(j) * _rising(2 * j + r(1, 2), j + 1) / \
            (f(2 * j) * half_factorial(2 * j))
        for i in range(j):
            value *= f(i) ** 2 * _rising(2 * i + 3, i + 1) ** 2 * \
                half_factorial(i) * _rising(2 * i + r(3, 2), i) * \
                _rising(2 * i + r(1, 2), i + 1) / \
                (f(2 * i) ** 2 * half_factorial(j + i))
    return _to_exact(value)


def p_cstc(size: int, hole: int = 2) -> FormulaResult:
    """Compare the printed P_CSTC(2n, 2) =
    2^-n times the product of P_CS(2j+1, 2) / P_CS(2j, 2) over 0 <= j < n,
    with the weighted tiling count of the offset-1 region at x = y = 1.

    """
    if size < 0 or size % 2:
        message = 'P_CSTC is evaluated at even sizes only.'
        raise ValueError(message)
    n = size // 2
    value = sympy.Rational(1, 2 ** n)
    for j in range(n):
        value *= sympy.sympify(p_cs_hole(2 * j + 1, hole)) / \
            sympy.sympify(p_cs_hole(2 * j, hole))
    return FormulaResult('p_cstc', (size, hole), _to_exact(value),
                         _tiling_count(n, 1, 1, 1))


def a_v_factor(j: int) -> FormulaResult:
    """Compare the printed factor
    j! (2j+3/2)_j (2j)!² (2j+1)_j / ((3j)!² (j+3/2)_{j+1})
    with C(6j+4, 2j+2) / C(4j+3, 2j+2), which it is claimed to equal.

    """
    r = sympy.Rational
    f = sympy.factorial
    printed = f(j) * _rising(2 * j + r(3, 2), j) * f(2 * j) ** 2 * \
        _rising(2 * j + 1, j) / (f(3 * j) ** 2 * _rising(j + r(3, 2), j + 1))
    oracle = Fraction(math.comb(6 * j + 4, 2 * j + 2),
                      math.comb(4 * j + 3, 2 * j + 2))
    return FormulaResult('a_v_factor', (j,), _to_exact(printed), oracle)


def p_cssc(size: int) -> FormulaResult:
    """Compare P_CSSC(2n), the square of the product of (3i+1)! / (n+i)!,
    with A(n)².

    """
    if size < 0 or size % 2:
        message = 'P_CSSC is evaluated at even sizes only.'
        raise ValueError(message)
    n = size // 2
    product = Fraction(1)
    for i in range(n):
        product *= Fraction(math.factorial(3 * i + 1), math.factorial(n + i))
    return FormulaResult('p_cssc', (size,), product ** 2, asm_count(n) ** 2)


def p_qcssc(size: int) -> FormulaResult:
    """Compare P_qCSSC(2n+1) = A(n) A(n+1) with the product of the two ASM
    products.

    """
    if size < 1 or size % 2 == 0:
        message = 'P_qCSSC is evaluated at odd sizes only.'
        raise ValueError(message)
    n = (size - 1) // 2
    oracle = _product(fpl_count(n), fpl_count(n + 1))
    return FormulaResult('p_qcssc', (size,), asm_count(n) * asm_count(n + 1),
                         oracle)


def kratt_product(ell: int, n: int) -> Fraction:
    """Evaluate the printed product for R_ell(n; 1/2, 1).

    The factor of index i is
    (2 ell + 3i) i! (ell+i-1)! (2 ell + 2i)_i (ell + 2i)_i / ((ell+2i)! (2i)!).
    At ell = i = 0 the undefined (ell+i-1)! is read through the ell = 0
    rewriting 3i (i-1)! = 3 i!, so that factor is 3.

    Examples
    --------
    >>> import pyfpl as pf
    >>> pf.kratt_product(0, 2)
    Fraction(9, 1)

    """
    product = Fraction(1)
    for i in range(n):
        if ell + i == 0:
            product *= 3
            continue
        product *= Fraction(
            (2 * ell + 3 * i) * math.factorial(i) * math.factorial(ell + i - 1)
            * shifted_factorial(2 * ell + 2 * i, i)
            * shifted_factorial(ell + 2 * i, i),
            math.factorial(ell + 2 * i) * math.factorial(2 * i))
    return product


def kratt_check(ell: int, n: int) -> FormulaResult:
    """Compare the printed product with the determinant R_ell(n; 1/2, 1).

    """
    return FormulaResult('kratt_product', (ell, n), kratt_product(ell, n),
                         r_func(RFuncSpec(ell, n, half, 1)))


def _r(k: int, x, y):
    return Fraction(1) if k < 0 else count_matchings(region_r(k, x, y))


def _rprime(k: int, x, y):
    return Fraction(1) if k < 0 else count_matchings(region_rprime(k, x, y))


def ht_factorization(size: int, corrected: bool = False) -> Fraction:
    """Evaluate the factorized count H_N with the factors counted as weighted
    tilings.

    Odd sizes use H_{4k+1} = 2^{2k} R_k(1/2,1) R'_{k-1}(1/2,1) and
    H_{4k+3} = 2^{2k+1} R_k(1/2,1) R'_k(1/2,1). Even sizes use
    H_{4k} = 2^{2k} R_k(1/2,1/2) R_{k-1}(1,1) and
    H_{4k+2} = 2^{2k+2} R_k(1/2,1/2) R_{k-1}(1,1), or with ``corrected``
    H_{4k+2} = 2^{2k+1} R_k(1/2,1/2) R_k(1,1). Factors of index -1 are 1.

    """
    k, r = divmod(size, 4)
    if r == 1:
        return 2 ** (2 * k) * _r(k, half, 1) * _rprime(k - 1, half, 1)
    if r == 3:
        return 2 ** (2 * k + 1) * _r(k, half, 1) * _rprime(k, half, 1)
    if r == 0:
        return 2 ** (2 * k) * _r(k, half, half) * _r(k - 1, 1, 1)
    if corrected:
        return 2 ** (2 * k + 1) * _r(k, half, half) * _r(k, 1, 1)
    return 2 ** (2 * k + 2) * _r(k, half, half) * _r(k - 1, 1, 1)


def even_ht_formula(size: int,
                    limit: int = max_region_vertices) -> FormulaResult:
    """Compare the printed even-size H_N with the matchings of the even
    quotient graph of size N, which count the cyclically symmetric plane
    partitions in an N/2 box. The oracle is None when the quotient has more
    than ``limit`` vertices.

    """
    if size < 2 or size % 2:
        message = 'The even formula needs an even size of at least 2.'
        raise ValueError(message)
    quotient = nonfixed_quotient_graph(size // 2, 'even')
    oracle = count_matchings(quotient, limit) \
        if quotient.number_of_vertices <= limit else None
    return FormulaResult('even_ht_formula', (size,), ht_factorization(size),
                         oracle)


def cspp_ratio_check(n: int, workers: int = 1,
                     limit: int = max_region_vertices) -> ReconciliationReport:
    """Compare the empirical ratio A_HT(2n) / A(n) with the rotation-invariant
    tilings of the hexagons of sides n and 2n.

    The side-2n count is only attempted when its rotation quotient fits the
    matching limit.

    """
    a = sum(count_by_coupling(n, workers=workers).values())
    ratio = Fraction(ht_fpl_count(2 * n), a)
    rows = [ReconciliationRow(f'side {n}', ratio,
                              rotation_invariant_tilings(n, 'both', limit))]
    if 2 * (2 * n) ** 2 <= limit:
        rows.append(ReconciliationRow(
            f'side {2 * n}', ratio,
            rotation_invariant_tilings(2 * n, 'quotient', limit)))
    return ReconciliationReport('cspp-ratio', n, rows,
                                notes={'ratio': ratio})


def tabulate_uu(n_max: int = 4) -> dict[int, Fraction]:
    """Tabulate R_0(n; 1/2, 1/2) for 0 <= n <= n_max.

    No closed form is asserted for these values.

    """
    return {n: r_func(RFuncSpec(0, n, half, half)) for n in range(n_max + 1)}


_propositions = {
    # name: (ell, x, y, printed rhs, scale of the determinant, rhs)
    'eq1': (0, half, 1,
            lambda n: ht_fpl_count(2 * n + 1),
            lambda n: 2 ** n,
            lambda n: ht_fpl_count(2 * n + 1)),
    'eq2': (1, half, 1,
            lambda n: _half_of(ht_fpl_count(2 * n + 2)),
            lambda n: 2 ** n,
            lambda n: _half_of(ht_fpl_count(2 * n + 2))),
    'eq3': (1, 1, 1,
            lambda n: vs_fpl_count(2 * n + 3),
            lambda n: 1,
            lambda n: vs_fpl_count(2 * n + 3)),
    'eq4': (1, 1, half,
            lambda n: _product(fpl_count(n), fpl_count(n)),
            lambda n: 2 ** n,
            lambda n: _product(fpl_count(n + 1), fpl_count(n + 1))),
    'eq5': (2, half, 1,
            lambda n: _product(fpl_count(n), fpl_count(n + 1)),
            lambda n: 2 ** (n + 1),
            lambda n: _product(fpl_count(n + 1), fpl_count(n + 2))),
    'remark': (2, half, half,
               lambda n: _product(vs_fpl_count(2 * n + 3),
                                  binomial(2 * n + 1, n + 1)),
               lambda n: 4 ** n,
               lambda n: _product(vs_fpl_count(2 * n + 3),
                                  binomial(2 * n + 1, n + 1))),
}


def _half_of(value):
    return None if value is None else Fraction(value, 2)


def _product(a, b):
    return None if a is None or b is None else a * b


def proposition_names() -> list[str]:
    """Get the names accepted by :func:`proposition_check`.

    """
    return list(_propositions)


def proposition_check(which: str, n_max: int = 2,
                      limit: int = max_region_vertices
                      ) -> ReconciliationReport:
    """Check a special value of R_ell(n; x, y) against ASM counts.

    Every side is computed independently: the determinant, the weighted
    tiling count of its region, and the ASM numbers by FPL enumeration.
    Three rows are reported per n: determinant against tilings, determinant
    against the printed right-hand side, and the determinant scaled by its
    power of 2 against the right-hand side with the sizes it matches at.
    Rows whose oracle is out of reach are left out.

    Parameters
    ----------
    which: str
        One of 'eq1' to 'eq5' or 'remark'.
    n_max: int
        The largest n checked, starting from n = 1.
    limit: int
        The largest region whose tilings are counted.

    Returns
    -------
    ReconciliationReport
        The comparisons, with the scale recorded in the notes.

    Raises
    ------
    ValueError
        Raised if ``which`` is unknown.

    """
    if which not in _propositions:
        message = f'{which!r} is not one of {proposition_names()}.'
        raise ValueError(message)
    ell, x, y, printed, scale, normalized = _propositions[which]
    rows = []
    for n in range(1, n_max + 1):
        determinant = r_func(RFuncSpec(ell, n, x, y))
        tilings = _tiling_count(n, ell, x, y, limit)
        label = f'R_{ell}({n};{x},{y})'
        if tilings is not None:
            rows.append(ReconciliationRow(f'{label} tilings', determinant,
                                          tilings))
        if printed(n) is not None:
            rows.append(ReconciliationRow(f'{label} printed', determinant,
                                          printed(n)))
        if normalized(n) is not None:
            rows.append(ReconciliationRow(f'{label} scaled',
                                          scale(n) * determinant,
                                          normalized(n)))
        else:
            logger.info('The oracle of %s is out of reach at n = %d', which,
                        n)
    notes = {f'scale({n})': scale(n) for n in range(1, n_max + 1)}
    return ReconciliationReport(which, n_max, rows, notes=notes)


def formula_bank(n_max: int = 2) -> list[FormulaResult]:
    """Evaluate every formula of the bank at small arguments.

    """
    results = [asm_check(size) for size in range(1, n_max + 4)]
    results += [a_ht(size) for size in range(1, 2 * n_max + 3)]
    results += [a_v(2 * n + 1) for n in range(n_max + 2)]
    results += [a_v_factor(j) for j in range(n_max + 1)]
    results += [p_cstc(2 * n) for n in range(n_max + 1)]
    results += [p_cssc(2 * n) for n in range(n_max + 1)]
    results += [p_qcssc(2 * n + 1) for n in range(n_max + 1)]
    results += [kratt_check(ell, n) for ell in (0, 1, 2)
                for n in range(n_max + 1)]
    results += [FormulaResult('macmahon_box', (a, a, a), macmahon_box(a, a, a),
                              count_matchings(hexagon_region(a)))
                for a in range(n_max + 2)]
    results += [even_ht_formula(2 * m) for m in range(1, n_max + 2)]
    mismatches = [r for r in results if r.status == 'mismatch']
    logger.info('Evaluated %d formulas, %d mismatches', len(results),
                len(mismatches))
    return results
