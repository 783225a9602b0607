"""This module provides the report objects that every verification returns.

A report never raises on a mathematical disagreement: it records both sides
of each comparison and the exact factor between them.
"""
import csv
from fractions import Fraction
import io
import json

import sympy


def format_value(value) -> str | None:
    """Write an exact value as text.

    Rationals are written 'p/q', or 'p' when they are integers. Symbolic
    values use their sympy string form and None stays None.

    Examples
    --------
    >>> from fractions import Fraction
    >>> import pyfpl as pf
    >>> pf.format_value(Fraction(6, 4))
    '3/2'

    """
    if value is None:
        return None
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, (int, Fraction)):
        return str(Fraction(value))
    if isinstance(value, sympy.Rational):
        return str(Fraction(int(value.p), int(value.q)))
    return str(value)


def exact_ratio(numerator, denominator):
    """Get numerator / denominator exactly, or None when it is undefined.

    Symbolic operands give a simplified sympy expression.

    """
    if numerator is None or denominator is None:
        return None
    if isinstance(numerator, sympy.Basic) or \
            isinstance(denominator, sympy.Basic):
        numerator, denominator = sympy.sympify(numerator), \
            sympy.sympify(denominator)
        if denominator == 0:
            return None
        ratio = sympy.simplify(numerator / denominator)
        if ratio.is_Rational:
            return Fraction(int(ratio.p), int(ratio.q))
        return ratio
    if denominator == 0:
        return None
    return Fraction(numerator) / Fraction(denominator)


class ReconciliationRow:
    """One comparison of a report.

    Parameters
    ----------
    label: str
        What is compared, usually a coupling or an argument.
    lhs
        The left-hand side, usually the value under test.
    rhs
        The right-hand side, usually the oracle.

    """
    def __init__(self, label: str, lhs, rhs):
        self._label = str(label)
        self._lhs = lhs
        self._rhs = rhs

    def __repr__(self):
        return f'ReconciliationRow({self._label!r}, {format_value(self._lhs)}' \
               f', {format_value(self._rhs)})'

    @property
    def label(self) -> str:
        """Get the label.

        """
        return self._label

    @property
    def lhs(self):
        """Get the left-hand side.

        """
        return self._lhs

    @property
    def rhs(self):
        """Get the right-hand side.

        """
        return self._rhs

    @property
    def equal(self) -> bool:
        """Get whether the two sides are exactly equal.

        """
        difference = self._lhs - self._rhs
        if isinstance(difference, sympy.Basic):
            return sympy.simplify(difference) == 0
        return difference == 0

    @property
    def factor(self):
        """Get rhs / lhs, or None when lhs is zero.

        """
        return exact_ratio(self._rhs, self._lhs)

    def to_dict(self) -> dict:
        """Get the row as a JSON-ready dict.

        """
        return {'coupling': self._label, 'lhs': format_value(self._lhs),
                'rhs': format_value(self._rhs), 'equal': self.equal,
                'factor': format_value(self.factor)}


class ReconciliationReport:
    """A list of exact comparisons backing one identity.

    Parameters
    ----------
    identity: str
        The name of the checked identity, such as 'rs' or 'eq4'.
    size: int
        The size the identity was checked at.
    rows: list[ReconciliationRow]
        The comparisons.
    theorem: bool
        Whether the identity is a theorem, so that a failure is a bug rather
        than a finding.
    notes: dict
        Further named values worth reporting, such as fitted factors.

    Examples
    --------
    >>> import pyfpl as pf
    >>> report = pf.ReconciliationReport('demo', 1,
    ...                                  [pf.ReconciliationRow('a', 1, 1)])
    >>> report.passed
    True

    """
    def __init__(self, identity: str, size: int, rows: list,
                 theorem: bool = False, notes: dict = None):
        self._identity = identity
        self._size = size
        self._rows = list(rows)
        self._theorem = theorem
        self._notes = {} if notes is None else dict(notes)
        self._validate_input()

    def _validate_input(self) -> None:
        if not all(isinstance(r, ReconciliationRow) for r in self._rows):
            message = 'Every row must be a ReconciliationRow.'
            raise TypeError(message)

    def __repr__(self):
        return f'ReconciliationReport({self._identity!r}, size={self._size}, ' \
               f'rows={len(self._rows)}, passed={self.passed})'

    @property
    def identity(self) -> str:
        """Get the identity name.

        """
        return self._identity

    @property
    def size(self) -> int:
        """Get the size.

        """
        return self._size

    @property
    def rows(self) -> list[ReconciliationRow]:
        """Get the comparisons.

        """
        return list(self._rows)

    @property
    def theorem(self) -> bool:
        """Get whether a failure of this identity is a bug.

        """
        return self._theorem

    @property
    def notes(self) -> dict:
        """Get the extra reported values.

        """
        return dict(self._notes)

    @property
    def passed(self) -> bool:
        """Get whether every comparison holds exactly.

        """
        return all(row.equal for row in self._rows)

    def to_dict(self) -> dict:
        """Get the report as a JSON-ready dict.

        """
        report = {'identity': self._identity, 'size': self._size,
                  'theorem': self._theorem,
                  'states': [row.to_dict() for row in self._rows],
                  'pass': self.passed}
        if self._notes:
            report['notes'] = {key: format_value(value) for key, value
                               in self._notes.items()}
        return report

    def to_json(self) -> str:
        """Write the report as indented JSON.

        """
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        """Write the comparisons as CSV, one row per comparison.

        """
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(['identity', 'size', 'coupling', 'lhs', 'rhs',
                         'equal', 'factor'])
        for row in self._rows:
            d = row.to_dict()
            writer.writerow([self._identity, self._size, d['coupling'],
                             d['lhs'], d['rhs'], d['equal'], d['factor']])
        return buffer.getvalue()

    def to_text(self) -> str:
        """Write the report as a plain-text table.

        """
        status = 'pass' if self.passed else 'FAIL'
        lines = [f'{self._identity} at size {self._size}: {status}']
        for row in self._rows:
            d = row.to_dict()
            mark = '=' if d['equal'] else '!='
            lines.append(f'  {d["coupling"]}: {d["lhs"]} {mark} {d["rhs"]}'
                         + ('' if d['equal'] else f' (factor {d["factor"]})'))
        for key, value in self._notes.items():
            lines.append(f'  {key}: {format_value(value)}')
        return '\n'.join(lines) + '\n'


class FormulaResult:
    """A printed closed-form value next to its oracle.

    Parameters
    ----------
    name: str
        The formula name.
    args: tuple
        The arguments it was evaluated at.
    printed
        The verbatim evaluation of the formula.
    oracle
        The independently computed value, or None when unavailable.

    Examples
    --------
    >>> import pyfpl as pf
    >>> pf.FormulaResult('asm_count', (3,), 7, 7).status
    'match'

    """
    def __init__(self, name: str, args: tuple, printed, oracle=None):
        self._name = name
        self._args = tuple(args)
        self._printed = printed
        self._oracle = oracle

    def __repr__(self):
        return f'FormulaResult({self._name!r}, {self._args}, ' \
               f'status={self.status!r})'

    @property
    def name(self) -> str:
        """Get the formula name.

        """
        return self._name

    @property
    def args(self) -> tuple:
        """Get the arguments.

        """
        return self._args

    @property
    def printed(self):
        """Get the printed value.

        """
        return self._printed

    @property
    def oracle(self):
        """Get the oracle value.

        """
        return self._oracle

    @property
    def status(self) -> str:
        """Get 'match', 'mismatch' or 'oracle-unavailable'.

        """
        if self._oracle is None:
            return 'oracle-unavailable'
        return 'match' if ReconciliationRow('', self._printed,
                                            self._oracle).equal else 'mismatch'

    @property
    def factor(self):
        """Get oracle / printed, or None when there is no oracle.

        """
        return exact_ratio(self._oracle, self._printed)

    def to_dict(self) -> dict:
        """Get the result as a JSON-ready dict.

        """
        return {'name': self._name, 'args': list(self._args),
                'printed': format_value(self._printed),
                'oracle': format_value(self._oracle),
                'status': self.status, 'factor': format_value(self.factor)}

    def to_json(self) -> str:
        """Write the result as indented JSON.

        """
        return json.dumps(self.to_dict(), indent=2)
