"""
Command line entry point:

    open-rspin invariants|potential|verify|lambda|cycles --r R [options]

Exit codes: 0 pass, 1 failed identity or tolerance, 2 usage, 3 quadrature did
not converge. Results go to standard output, diagnostics to standard error.
"""

from . import conf
from .base import QuadratureError, __version__, format_rational, latex_rational
from .cycles import (
    a_inverse_check, b_inverse_check, branch_shift_error, dual_basis_check, quadrature_error)
from .flatness import (
    cont_recursion_check, lambda_scan, oracle_difference, symbolic_lambda, verify_theorem_A, versal_flat_map)
from .invariants import enumerate_nonzero
from .potential import build_deformed_potential

import argparse
import json
import logging
import sys


log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_QUADRATURE = 3

FORMATS = ('text', 'json', 'latex')


class RunConfig (object):

    def __init__(self, r, degree_cap=None, hbar=conf.DEFAULT_HBAR, format='text', max_l=None):
        self.r = r
        self.degree_cap = r if degree_cap is None else degree_cap
        self.hbar = hbar
        self.format = format
        self.max_l = max_l

    @classmethod
    def from_args(cls, args):
        return cls(args.r, args.degree_cap, args.hbar, args.format, args.max_l)


def parse_hbar(text):
    """
    Reads "re,im" (or a bare real part) as a nonzero complex number.
    """
    parts = text.split(',')
    try:
        if len(parts) == 1:
            value = complex(float(parts[0]), 0.0)
        elif len(parts) == 2:
            value = complex(float(parts[0]), float(parts[1]))
        else:
            raise ValueError(text)
    except ValueError:
        raise argparse.ArgumentTypeError('expected "re,im", got %r' % text)
    if value == 0:
        raise argparse.ArgumentTypeError('hbar must be nonzero')
    return value


def _emit(lines, out):
    for line in lines:
        out.write(line + '\n')


def _dump(data, out):
    out.write(json.dumps(data, indent=2) + '\n')


def _twists_text(twists):
    return '{%s}' % ','.join(str(a) for a in twists)


def cmd_invariants(config, out=sys.stdout):
    items = enumerate_nonzero(config.r)
    if config.format == 'json':
        _dump({
            'r': config.r,
            'items': [
                {'twists': list(key.twists), 'k': key.k, 'value': format_rational(value)}
                for key, value in items
            ],
        }, out)
    elif config.format == 'latex':
        lines = []
        for key, value in items:
            insertions = ''.join('\\tau_0^{%d}' % a for a in key.twists)
            lines.append('\\langle %s\\sigma^{%d}\\rangle^{\\frac{1}{%d},o} = %s'
                         % (insertions, key.k + 1, config.r, latex_rational(value)))
        _emit(lines, out)
    else:
        _emit(['twists\tk\tvalue'] + ['%s\t%d\t%s' % (_twists_text(key.twists), key.k, format_rational(value))
                                      for key, value in items], out)
    return EXIT_OK


def cmd_potential(config, out=sys.stdout):
    potential = build_deformed_potential(config.r)
    if config.format == 'json':
        data = potential.poly.to_json()
        data['r'] = config.r
        data['text'] = potential.poly.text()
        _dump(data, out)
    elif config.format == 'latex':
        _emit([potential.poly.latex()], out)
    else:
        _emit([potential.poly.text()], out)
    return EXIT_OK


def _lambda_results(config):
    r = config.r
    max_l = config.max_l if config.max_l is not None else max(2, min(r // 2, 5))
    numeric = lambda_scan(r, max_l)
    symbolic = [(l, symbolic_lambda(r, l)) for l in range(2, max_l + 1)]
    recursion = [(l, cont_recursion_check(r, l)) for l in range(2, max_l + 1)]
    passed = all(value == 0 for _, value in numeric) and \
        all(poly.is_zero() for _, poly in symbolic) and \
        all(ok for _, ok in recursion)
    return max_l, numeric, symbolic, recursion, passed


def _lambda_json(max_l, numeric, symbolic, recursion):
    return {
        'max_l': max_l,
        'numeric': [{'twists': list(m.entries), 'value': format_rational(v)} for m, v in numeric],
        'symbolic': [{'l': l, 'value': poly.text()} for l, poly in symbolic],
        'cont_recursion': [{'l': l, 'passed': ok} for l, ok in recursion],
    }


def _lambda_lines(max_l, numeric, symbolic, recursion):
    lines = ['Lambda scan up to |I| = %d' % max_l]
    for multiset, value in numeric:
        lines.append('  I=%r\t|Aut(I)|Lambda_I = %s' % (multiset, format_rational(value)))
    for l, poly in symbolic:
        lines.append('  symbolic l=%d\t%s' % (l, poly.text()))
    for l, ok in recursion:
        lines.append('  cont recursion l=%d\t%s' % (l, 'ok' if ok else 'FAILED'))
    return lines


def cmd_lambda(config, out=sys.stdout):
    max_l, numeric, symbolic, recursion, passed = _lambda_results(config)
    if config.format == 'json':
        data = _lambda_json(max_l, numeric, symbolic, recursion)
        data.update({'r': config.r, 'passed': passed})
        _dump(data, out)
    else:
        _emit(['r = %d' % config.r] + _lambda_lines(max_l, numeric, symbolic, recursion)
              + ['passed: %s' % ('yes' if passed else 'no')], out)
    return EXIT_OK if passed else EXIT_FAILED


def cmd_verify(config, out=sys.stdout):
    r, cap = config.r, config.degree_cap
    report = verify_theorem_A(r, cap)
    difference = oracle_difference(r, cap)
    flat_map = versal_flat_map(r, cap)
    max_l, numeric, symbolic, recursion, lambda_passed = _lambda_results(config)
    passed = report.flat and difference.is_zero() and lambda_passed
    if config.format == 'json':
        data = report.to_json()
        data.update({
            'oracle': difference.is_zero(),
            'oracle_difference': difference.text(),
            'versal_flat_map': [{'d': d, 't': t.text()} for d, t in enumerate(flat_map)],
            'lambda': _lambda_json(max_l, numeric, symbolic, recursion),
            'passed': passed,
        })
        _dump(data, out)
    else:
        lines = ['r = %d, degree cap = %d' % (r, cap),
                 'W_t = %s' % build_deformed_potential(r).poly.text()]
        for entry in report.entries:
            lines.append('  d=%d\tphi_0 = %s\tphi_1 = %s' % (entry.index, entry.phi0.text(), entry.phi1.text()))
        for d, t in enumerate(flat_map):
            lines.append('  versal t%d = %s' % (d, t.text()))
        lines.append('primitive: %s' % ('yes' if report.primitive else 'no'))
        lines.append('flat: %s' % ('yes' if report.flat else 'no'))
        lines.append('oracle: %s' % ('yes' if difference.is_zero() else 'no, difference %s' % difference.text()))
        lines.extend(_lambda_lines(max_l, numeric, symbolic, recursion))
        for f in report.failures:
            lines.append('FAILED d=%d j=%d %s: %s * %s' % (f.index, f.order, f.condition,
                                                          format_rational(f.coefficient), f.monomial))
        lines.append('passed: %s' % ('yes' if passed else 'no'))
        _emit(lines, out)
    return EXIT_OK if passed else EXIT_FAILED


def cmd_cycles(config, out=sys.stdout):
    r, hbar = config.r, config.hbar
    try:
        errors = [
            ('quadrature_vs_closed', quadrature_error(r, hbar), conf.DUAL_BASIS_TOLERANCE),
            ('b_inverse', b_inverse_check(r), conf.LINALG_TOLERANCE),
            ('a_inverse', a_inverse_check(r, hbar), conf.LINALG_TOLERANCE),
            ('branch_shift', branch_shift_error(r, hbar), conf.LINALG_TOLERANCE),
            ('dual_basis', dual_basis_check(r, hbar), conf.DUAL_BASIS_TOLERANCE),
        ]
    except QuadratureError as e:
        log.error('Quadrature failed: %s', e)
        return EXIT_QUADRATURE
    passed = all(error < tolerance for _, error, tolerance in errors)
    if config.format == 'json':
        _dump({
            'r': r,
            'hbar': [hbar.real, hbar.imag],
            'checks': [{'name': name, 'max_error': error, 'tolerance': tolerance, 'passed': error < tolerance}
                       for name, error, tolerance in errors],
            'passed': passed,
        }, out)
    else:
        lines = ['r = %d, hbar = %r' % (r, hbar)]
        for name, error, tolerance in errors:
            lines.append('  %s\t%.3e\t(< %.0e)\t%s' % (name, error, tolerance, 'ok' if error < tolerance else 'FAILED'))
        lines.append('passed: %s' % ('yes' if passed else 'no'))
        _emit(lines, out)
    return EXIT_OK if passed else EXIT_FAILED


COMMANDS = {
    'invariants': cmd_invariants,
    'potential': cmd_potential,
    'verify': cmd_verify,
    'lambda': cmd_lambda,
    'cycles': cmd_cycles,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--r', type=int, required=True, help='exponent of the singularity x^r')
    common.add_argument('--degree-cap', type=int, default=None, help='truncation degree (default: r)')
    common.add_argument('--hbar', type=parse_hbar, default=conf.DEFAULT_HBAR, help='hbar as "re,im"')
    common.add_argument('--format', choices=FORMATS, default='text')
    common.add_argument('--max-l', type=int, default=None, help='largest |I| in the Lambda scans')
    common.add_argument('--verbose', action='store_true', help='log debug output to standard error')

    parser = argparse.ArgumentParser(prog='open-rspin', description='Open r-spin mirror theorem checks.')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True
    for name in COMMANDS:
        subparsers.add_parser(name, parents=[common])
    return parser


def join_hbar(argv):
    """
    argparse takes "-1,0" for an option string, so a negative --hbar value is
    glued onto its flag.
    """
    joined = []
    tokens = iter(argv)
    for token in tokens:
        if token == '--hbar':
            value = next(tokens, None)
            if value is None:
                joined.append(token)
            elif value.startswith('-'):
                joined.append('--hbar=' + value)
            else:
                joined.extend((token, value))
        else:
            joined.append(token)
    return joined


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(join_hbar(sys.argv[1:] if argv is None else argv))
    if args.r < 2:
        parser.error('--r must be at least 2')
    if args.degree_cap is not None and args.degree_cap < 1:
        parser.error('--degree-cap must be at least 1')
    if args.max_l is not None and args.max_l < 2:
        parser.error('--max-l must be at least 2')
    if args.command == 'verify' and args.degree_cap is not None and args.degree_cap < args.r // 2:
        parser.error('--degree-cap must be at least r // 2 for verify')
    logging.basicConfig(stream=sys.stderr, level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s')
    return COMMANDS[args.command](RunConfig.from_args(args), out)


if __name__ == '__main__':
    sys.exit(main())
