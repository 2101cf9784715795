""" Command-line front end.

    braces.py group info 3:[2,1]
    braces.py enumerate 2:[1,1] --emit-dir out/
    braces.py example --p 3 --k 2 --emit ex32.brace
    braces.py verify ex32.brace --format tsv

Exit codes: 0 every asserted check passed, 1 a check failed, 2 bad usage or
input, 3 a size bound was exceeded. """

import os
import sys
import argparse

from .brace_file import save_brace, load_brace
from .checks import (check_brace_axiom, biskew_report, check_power_formula,
                     check_omega_containment, check_theorem_small_rank)
from .cyclotomic import (build_ring, build_example_brace, outside_order_check,
                         verify_example_statements, conjugation_identity_check,
                         maximal_class_check, histogram_contrast_check)
from .errors import SizeBoundError, GammaError
from .gamma import validate_gamma
from .params import RunConfig
from .pgroup import OrderHistogram, parse_spec, is_small_rank
from .report import Report, INFO, log
from .search import enumerate_regular_subgroups

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_SIZE_BOUND = 3

TSV_COLUMNS = ('verdict rows: report, check, status, detail; '
               'enumerate rows: index, abelian|nonabelian, histogram, center order'
               '[, brace file]')


def cmd_group_info(G, params=None):
    """ Order, exponent, rank, small-rank verdict, Omega sizes and order
    histogram of G.  Purely descriptive. """
    report = Report('group %s' % G)
    p = G.p
    report.add('order', INFO, str(G.order))
    report.add('exponent', INFO, str(G.exponent))
    report.add('rank', INFO, str(G.rank))
    report.add('small rank', INFO, '%s (rank %s %s p-1 = %s)' % (
        'yes' if is_small_rank(G) else 'no', G.rank,
        '<' if is_small_rank(G) else '>=', p - 1))
    # |Omega_i| = p^(sum_j min(e_j, i)), no materialization needed
    sizes = [p ** sum(min(e, i) for e in G.exponents) for i in range(G.exponents[0] + 1)]
    for i in range(1, len(sizes)):
        report.add('|Omega_%s|' % i, INFO, str(sizes[i]))
    counts = {p ** i: sizes[i] - sizes[i - 1] for i in range(1, len(sizes))}
    counts[1] = 1
    report.add('histogram', INFO, str(OrderHistogram(counts)))
    return report


def cmd_enumerate(G, params=None, emit_dir=None):
    """ One row per regular subgroup of Hol(G) and a report of the
    enumeration-wide statements """
    params = params or RunConfig()
    subgroups = enumerate_regular_subgroups(G, params)
    rows = []
    fingerprints = []
    for i, N in enumerate(subgroups):
        fp = N.fingerprint(params)
        fingerprints.append(fp)
        row = '%s\t%s' % (i, fp)
        if emit_dir:
            filename = os.path.join(emit_dir, 'brace-%03d.brace' % i)
            save_brace(filename, N.brace())
            row += '\t%s' % filename
        rows.append(row)

    report = Report('enumerate %s' % G)
    report.add('regular subgroups', INFO, str(len(subgroups)))
    report.check('translations present', any(N.is_translations() for N in subgroups),
                 'rho(G) is listed')
    if is_small_rank(G) and G.p > 2:
        h = OrderHistogram.from_orders(G.orders_array())
        bad = [i for i, fp in enumerate(fingerprints) if fp.histogram != h]
        report.check('histograms equal', not bad, 'every brace has histogram %s' % h,
                     witness='#%s' % bad[0] if bad else None)
    return rows, report


def cmd_example(p, k, params=None, emit=None):
    """ Build the maximal-class brace for (p, k) and run every check that
    applies to it """
    params = params or RunConfig()
    R = build_ring(p, k)
    b = build_example_brace(R, params)
    if emit:
        save_brace(emit, b)
        log(params, "cmd_example: wrote %s" % emit)
    reports = [R.invariants_report(), validate_gamma(R.spec, b.gamma, params)]
    reports.append(verify_example_statements(b, R, params))
    reports.append(outside_order_check(b, R, params))
    reports.append(conjugation_identity_check(b, R, params))
    reports.append(maximal_class_check(R, params))
    reports.append(check_brace_axiom(b, params))
    reports.append(biskew_report(b, params))
    reports.append(check_power_formula(b, params))
    if R.spec.order <= params.max_materialized:
        reports.append(check_omega_containment(b, params))
    reports.append(histogram_contrast_check(b, R, params))
    return reports


def cmd_verify(filename, params=None):
    """ Load a brace file, validate its gamma and, if it is a brace, report
    the axiom, the order statistics and the bi-skew flag """
    params = params or RunConfig()
    b = load_brace(filename, params)
    gamma_report = validate_gamma(b.spec, b.gamma, params)
    if not gamma_report.ok:
        return [gamma_report]
    reports = [gamma_report, check_brace_axiom(b, params)]
    reports.append(check_theorem_small_rank(b, params))
    reports.append(check_omega_containment(b, params))
    reports.append(biskew_report(b, params))
    return reports


## ARGUMENTS ##

def build_parser():
    # flags shared by the top level and every subcommand; SUPPRESS keeps a
    # subcommand from resetting a flag given before it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--format', dest='output_format', choices=('human', 'tsv'),
        default=argparse.SUPPRESS, help='report format (default: human)')
    common.add_argument(
        '--seed', type=int, default=argparse.SUPPRESS,
        help='seed for sampled checks (default: 0)')
    common.add_argument(
        '--workers', type=int, default=argparse.SUPPRESS,
        help='worker processes for sweeps; never changes the output (default: 1)')
    common.add_argument(
        '-p', '--parameters', metavar='<file>', default=argparse.SUPPRESS,
        help='Parameters file (JSON format).  See skewbrace/params.py for a list of parameters.')
    common.add_argument(
        '-q', '--quiet', action='store_true', default=argparse.SUPPRESS,
        help="if specified, don't print logging info")

    parser = argparse.ArgumentParser(
        prog='braces.py', parents=[common],
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description=(
            'Braces (equivalently regular subgroups of the holomorph) on finite\n'
            'abelian p-groups.  Groups are written p:[e1,...,er] for\n'
            'Z/p^e1 x ... x Z/p^er.\n'
            '\n'
            'TSV columns: %s.\n'
            'Exit codes: 0 pass, 1 check failure, 2 usage or parse error, '
            '3 size bound exceeded.' % TSV_COLUMNS
        ))
    sub = parser.add_subparsers(dest='command', metavar='<command>')
    sub.required = True

    group = sub.add_parser('group', parents=[common], help='describe a group')
    group.add_argument('action', choices=('info',))
    group.add_argument('spec', metavar='SPEC', help='group, e.g. 3:[2,1]')

    enum = sub.add_parser('enumerate', parents=[common],
                          help='list every brace on a small group')
    enum.add_argument('spec', metavar='SPEC', help='group, e.g. 2:[1,1]')
    enum.add_argument('--emit-dir', metavar='<dir>', default=None,
                      help='write one brace-v1 file per brace into this directory')

    example = sub.add_parser('example', parents=[common],
                             help='build and verify the rank p-1 example')
    example.add_argument('--p', dest='prime', type=int, required=True, help='the prime p')
    example.add_argument('--k', dest='k', type=int, required=True, help='truncation p^k')
    example.add_argument('--emit', metavar='<file>', default=None,
                         help='write the brace-v1 file')

    verify = sub.add_parser('verify', parents=[common], help='verify a brace-v1 file')
    verify.add_argument('file', metavar='FILE')
    return parser


def params_from_args(args):
    """ Defaults, then the JSON parameters file, then explicit flags """
    if getattr(args, 'parameters', None):
        params = RunConfig.from_file(args.parameters)
    else:
        params = RunConfig()
    for name in ('seed', 'workers', 'output_format'):
        if hasattr(args, name):
            setattr(params, name, getattr(args, name))
    params.logging = not getattr(args, 'quiet', False)
    return params.validate()


def _header(params, title):
    return '# %s (params %s, seed %s)\n' % (title, params.md5(), params.seed)


def _render(reports, params, title):
    if params.output_format == 'tsv':
        return ''.join(r.render('tsv') for r in reports)
    return _header(params, title) + ''.join(r.render('human') for r in reports)


def run(args, out):
    params = params_from_args(args)
    if args.command == 'group':
        G = parse_spec(args.spec)
        out.write(_render([cmd_group_info(G, params)], params, 'group info %s' % G))
        return EXIT_OK
    elif args.command == 'enumerate':
        G = parse_spec(args.spec)
        rows, report = cmd_enumerate(G, params, args.emit_dir)
        if params.output_format == 'tsv':
            out.write(''.join(row + '\n' for row in rows))
        else:
            out.write(_header(params, 'enumerate %s' % G))
            out.write(''.join('  %s\n' % row for row in rows))
            out.write(report.render('human'))
        return EXIT_OK if report.ok else EXIT_CHECK_FAILED
    elif args.command == 'example':
        reports = cmd_example(args.prime, args.k, params, args.emit)
        title = 'example p=%s k=%s' % (args.prime, args.k)
    elif args.command == 'verify':
        reports = cmd_verify(args.file, params)
        title = 'verify %s' % os.path.basename(args.file)
    else:
        raise ValueError("Invalid command: %s" % args.command)
    out.write(_render(reports, params, title))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_CHECK_FAILED


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else argv
    if not argv:
        parser.print_help()
        return EXIT_USAGE
    args = parser.parse_args(argv)
    try:
        return run(args, out)
    except SizeBoundError as e:
        print('Error: %s' % e, file=sys.stderr)
        return EXIT_SIZE_BOUND
    except GammaError as e:
        print('Error: %s (witness: %s)' % (e, e.witness), file=sys.stderr)
        return EXIT_CHECK_FAILED
    except (ValueError, OSError) as e:
        print('Error: %s' % e, file=sys.stderr)
        return EXIT_USAGE
