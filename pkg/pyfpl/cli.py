"""This module provides the pyfpl command line.

Usage::

    pyfpl enumerate --size 3 [--ht]
    pyfpl verify rs --size 3
    pyfpl verify proposition --which eq4 --n 2
    pyfpl tables --size 3
    pyfpl formulas --size 2

Exit codes are 0 on success, 1 when a theorem-backed check fails or a
computation cannot be completed, and 2 on a usage error. Checks of
conjectures or printed formulas never change the exit code; their outcome is
report content.
"""
import argparse
import csv
from fractions import Fraction
import io
import json
import logging
from pathlib import Path
import sys

from .bijection import ciucu_factorize_check, cspp_bijection
from .constants import ell_grid, max_fpl_size, max_ht_size, \
    max_region_vertices, weight_grid
from .determinants import r_table, reconcile_grid
from .fpl import count_by_coupling, count_ht_by_coupling
from .formulas import cspp_ratio_check, formula_bank, proposition_check, \
    proposition_names
from .reports import format_value
from .stationary import verify_dg, verify_pushforward, verify_rarest, \
    verify_refined, verify_rs

logger = logging.getLogger(__name__)

identities = ('rs', 'dg', 'refined', 'pushforward', 'rarest', 'ciucu',
              'bijection', 'proposition', 'remark', 'determinants',
              'cspp-ratio')
"""The identities accepted by the verify command."""

formats = ('json', 'csv', 'text')
"""The output formats."""

_grid_scale = {'rs': 1, 'dg': 1, 'rarest': 1, 'refined': 2,
               'pushforward': 2, 'bijection': 2, 'cspp-ratio': 2}


def parse_rational(text: str) -> Fraction:
    """Parse 'p/q' or 'p' into an exact Fraction.

    Raises
    ------
    argparse.ArgumentTypeError
        Raised if the text is not a rational number. Decimals are rejected.

    """
    if '.' in text or 'e' in text.lower():
        message = f'{text!r} is not of the form p/q.'
        raise argparse.ArgumentTypeError(message)
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as error:
        message = f'{text!r} is not of the form p/q.'
        raise argparse.ArgumentTypeError(message) from error


class RunConfig:
    """The validated settings of one command-line run.

    Parameters
    ----------
    command: str
        One of 'enumerate', 'verify', 'tables' or 'formulas'.
    size: int
        The size argument.
    ht: bool
        Whether enumeration is restricted to half-turn-symmetric FPLs.
    identity: str
        The identity checked by 'verify'.
    which: str
        The proposition checked by 'verify proposition'.
    x: Fraction
        Optional weight x of the tables.
    y: Fraction
        Optional weight y of the tables.
    output_format: str
        One of 'json', 'csv' or 'text'.
    workers: int
        The number of enumeration workers.
    limit_vertices: int
        The largest region handed to the matching counter.
    limit_size: int
        The largest grid size enumerated.
    out: Path
        Optional output file.

    Raises
    ------
    ValueError
        Raised if a setting is out of range.

    """
    def __init__(self, command: str, size: int = None, ht: bool = False,
                 identity: str = None, which: str = None, x: Fraction = None,
                 y: Fraction = None, output_format: str = 'text',
                 workers: int = 1, limit_vertices: int = max_region_vertices,
                 limit_size: int = None, out: Path = None):
        self.command = command
        self.size = size
        self.ht = ht
        self.identity = identity
        self.which = which
        self.x = x
        self.y = y
        self.output_format = output_format
        self.workers = workers
        self.limit_vertices = limit_vertices
        self.limit_size = limit_size if limit_size is not None else \
            (max_ht_size if ht else max_fpl_size)
        self.out = out
        self._validate_input()

    @classmethod
    def from_namespace(cls, namespace: argparse.Namespace):
        """Make a config from parsed arguments.

        """
        return cls(namespace.command, size=namespace.size,
                   ht=getattr(namespace, 'ht', False),
                   identity=getattr(namespace, 'identity', None),
                   which=getattr(namespace, 'which', None),
                   x=getattr(namespace, 'x', None),
                   y=getattr(namespace, 'y', None),
                   output_format=namespace.format, workers=namespace.workers,
                   limit_vertices=namespace.limit_vertices,
                   limit_size=namespace.limit_size, out=namespace.out)

    def _validate_input(self) -> None:
        if self.workers < 1 or self.limit_vertices < 1 or self.limit_size < 1:
            message = 'The worker count and the limits must be at least 1.'
            raise ValueError(message)
        size_limit = max_ht_size if self.ht else max_fpl_size
        if self.limit_size > size_limit or \
                self.limit_vertices > max_region_vertices:
            message = f'The limits cannot exceed a grid size of ' \
                      f'{size_limit} or {max_region_vertices} vertices.'
            raise ValueError(message)
        if self.size is not None and self.size < 0:
            message = 'The size must be non-negative.'
            raise ValueError(message)
        if self.command == 'enumerate' and not self.size:
            message = 'The grid size must be positive.'
            raise ValueError(message)
        if self.output_format not in formats:
            message = f'The format must be one of {formats}.'
            raise ValueError(message)
        if (self.x is None) != (self.y is None):
            message = 'Give both --x and --y, or neither.'
            raise ValueError(message)
        if self.grid_size is not None and self.grid_size > self.limit_size:
            message = f'The run enumerates grids of size {self.grid_size}, ' \
                      f'above the limit {self.limit_size}.'
            raise ValueError(message)

    @property
    def grid_size(self) -> int | None:
        """Get the largest grid size the run enumerates, or None if it
        enumerates none or bounds its own oracles.

        """
        if self.command == 'enumerate':
            return self.size
        if self.command == 'verify' and self.identity in _grid_scale:
            return _grid_scale[self.identity] * self.size
        return None

    @property
    def weights(self) -> tuple:
        """Get the (x, y) pairs to tabulate.

        """
        return weight_grid if self.x is None else ((self.x, self.y),)


def _write_table(header: list[str], rows: list[list], output_format: str,
                 title: str) -> str:
    cells = [[format_value(v) if not isinstance(v, str) else v for v in row]
             for row in rows]
    if output_format == 'json':
        return json.dumps({'table': title,
                           'rows': [dict(zip(header, row)) for row in cells]},
                          indent=2) + '\n'
    if output_format == 'csv':
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(header)
        writer.writerows(cells)
        return buffer.getvalue()
    lines = [title, '  '.join(header)]
    lines += ['  '.join(str(c) for c in row) for row in cells]
    return '\n'.join(lines) + '\n'


def cmd_enumerate(config: RunConfig) -> tuple[str, int]:
    """Tabulate the FPLs or half-turn-symmetric FPLs of a size by coupling.

    """
    if config.ht:
        counts = count_ht_by_coupling(config.size, workers=config.workers,
                                      limit=config.limit_size)
    else:
        counts = count_by_coupling(config.size, workers=config.workers,
                                   limit=config.limit_size)
    rows = [[str(pi), count] for pi, count in counts.items()]
    title = f'{"A_HT" if config.ht else "A"}({config.size}) = ' \
            f'{sum(counts.values())}'
    return _write_table(['coupling', 'count'], rows, config.output_format,
                        title), 0


def _run_identity(config: RunConfig):
    size, workers, limit = config.size, config.workers, config.limit_vertices
    if config.identity == 'rs':
        return verify_rs(size, workers)
    if config.identity == 'dg':
        return verify_dg(size, workers)
    if config.identity == 'refined':
        return verify_refined(size, workers)
    if config.identity == 'pushforward':
        return verify_pushforward(size)
    if config.identity == 'rarest':
        return verify_rarest(size, workers)
    if config.identity == 'ciucu':
        return ciucu_factorize_check(size, limit)
    if config.identity == 'bijection':
        return cspp_bijection(size).report()
    if config.identity == 'proposition':
        return proposition_check(config.which or 'eq1', size, limit)
    if config.identity == 'remark':
        return proposition_check('remark', size, limit)
    if config.identity == 'determinants':
        return reconcile_grid(size, limit)
    return cspp_ratio_check(size, workers, limit)


def cmd_verify(config: RunConfig) -> tuple[str, int]:
    """Run one verification and render its report.

    The exit code is 1 only when the identity is a theorem and a comparison
    fails.

    """
    report = _run_identity(config)
    if config.output_format == 'json':
        text = report.to_json() + '\n'
    elif config.output_format == 'csv':
        text = report.to_csv()
    else:
        text = report.to_text()
    if not report.passed:
        level = logging.ERROR if report.theorem else logging.WARNING
        logger.log(level, '%s at size %d did not pass', report.identity,
                   report.size)
    return text, int(report.theorem and not report.passed)


def cmd_tables(config: RunConfig) -> tuple[str, int]:
    """Tabulate R_ell(n; x, y) with its tiling oracle.

    """
    header = ['ell', 'n', 'x', 'y', 'determinant', 'tilings']
    table = r_table(config.size, ell_grid, config.weights,
                    config.limit_vertices)
    rows = [[entry[key] for key in header] for entry in table]
    return _write_table(header, rows, config.output_format,
                        'R_ell(n;x,y)'), 0


def cmd_formulas(config: RunConfig) -> tuple[str, int]:
    """Evaluate the formula bank.

    """
    results = formula_bank(config.size)
    if config.output_format == 'json':
        return json.dumps([r.to_dict() for r in results], indent=2) + '\n', 0
    header = ['name', 'args', 'printed', 'oracle', 'status', 'factor']
    rows = [[d['name'], ' '.join(map(str, d['args'])), d['printed'],
             d['oracle'], d['status'], d['factor']]
            for d in (r.to_dict() for r in results)]
    return _write_table(header, rows, config.output_format, 'formulas'), 0


_commands = {'enumerate': cmd_enumerate, 'verify': cmd_verify,
             'tables': cmd_tables, 'formulas': cmd_formulas}


def _add_common(parser: argparse.ArgumentParser, default_size: int,
                default_format: str) -> None:
    parser.add_argument('--size', '-n', '--n', dest='size', type=int,
                        default=default_size, help='the size argument')
    parser.add_argument('--format', choices=formats, default=default_format,
                        help='the output format')
    parser.add_argument('--workers', type=int, default=1,
                        help='the number of enumeration workers')
    parser.add_argument('--limit-vertices', type=int,
                        default=max_region_vertices,
                        help='the largest region counted by matchings')
    parser.add_argument('--limit-size', type=int, default=None,
                        help='the largest grid size enumerated')
    parser.add_argument('--out', type=Path, default=None,
                        help='write the output to this file')
    parser.add_argument('--verbose', '-v', action='count', default=0,
                        help='log progress; repeat for debug output')


def make_parser() -> argparse.ArgumentParser:
    """Make the argument parser of the pyfpl command.

    """
    parser = argparse.ArgumentParser(
        prog='pyfpl', description='Exact enumeration and verification of '
                                  'fully packed loop identities.')
    commands = parser.add_subparsers(dest='command', required=True)

    enumerate_parser = commands.add_parser(
        'enumerate', help='tabulate FPLs by coupling')
    _add_common(enumerate_parser, 3, 'text')
    enumerate_parser.add_argument('--ht', action='store_true',
                                  help='only half-turn-symmetric FPLs')

    verify_parser = commands.add_parser('verify', help='check an identity')
    verify_parser.add_argument('identity', choices=identities)
    _add_common(verify_parser, 3, 'json')
    verify_parser.add_argument('--which', choices=proposition_names(),
                               default='eq1',
                               help='the special value checked by proposition')

    tables_parser = commands.add_parser(
        'tables', help='tabulate the determinants and their tilings')
    _add_common(tables_parser, 3, 'csv')
    tables_parser.add_argument('--x', type=parse_rational, default=None,
                               help='the weight x as p/q')
    tables_parser.add_argument('--y', type=parse_rational, default=None,
                               help='the weight y as p/q')

    formulas_parser = commands.add_parser(
        'formulas', help='evaluate the formula bank')
    _add_common(formulas_parser, 2, 'text')
    return parser


def main(argv: list[str] = None) -> int:
    """Run the pyfpl command.

    Parameters
    ----------
    argv: list[str]
        The arguments. Defaults to the process arguments.

    Returns
    -------
    int
        The exit code.

    """
    parser = make_parser()
    namespace = parser.parse_args(argv)
    level = (logging.WARNING, logging.INFO, logging.DEBUG)[
        min(namespace.verbose, 2)]
    logging.basicConfig(level=level,
                        format='%(asctime)s %(name)s %(levelname)s: '
                               '%(message)s')
    try:
        config = RunConfig.from_namespace(namespace)
    except ValueError as ve:
        print(f'pyfpl: error: {ve}', file=sys.stderr)
        return 2
    try:
        text, code = _commands[config.command](config)
    except ValueError as ve:
        logger.error('The %s run failed: %s', config.command, ve)
        print(f'pyfpl: failed: {ve}', file=sys.stderr)
        return 1
    if config.out is None:
        sys.stdout.write(text)
    else:
        config.out.write_text(text)
        logger.info('Wrote %s', config.out)
    return code


if __name__ == '__main__':
    sys.exit(main())
