"""Command-line interface: `main`, `build_parser`

Exit codes: 0 when everything checked passes, 1 when a check fails, 2 on
invalid input (bad arguments, parameters or files).
"""
import argparse
import logging
import sys
from fractions import Fraction

import numpy as np

from .classify import classify_full, parameter_sweep, verify_family
from .family import FamilyParams, make_rs_helix
from .indicatrix import INDICATRICES, indicatrix
from .io import (read_curve_csv, read_points_csv, write_curve_csv,
                 write_json, write_trace_csv)
from .utils import Tolerances
from .version import __version__
from .viz import PROJECTIONS, project, write_svg

logger = logging.getLogger(__name__)

#: Default arc-length grid of ``generate`` and ``indicatrix``.
CLI_S_MIN = -3.0
CLI_S_MAX = 3.0
CLI_GRID_SIZE = 1001

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


def _real(text):
    """Float or fraction such as '1/3'"""
    try:
        return float(text)
    except ValueError:
        pass
    try:
        return float(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f'invalid real number: "{text}"')


def _count(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'invalid integer: "{text}"')
    if value < 1:
        raise argparse.ArgumentTypeError(f'must be positive, not {value}')
    return value


def _params_parser():
    parser = argparse.ArgumentParser(add_help=False)
    group = parser.add_argument_group('family member')
    group.add_argument('--c1', type=_real, required=True,
                       help='slope of tau/kappa = c1 s + c2 (nonzero)')
    group.add_argument('--c2', type=_real, required=True,
                       help='intercept of tau/kappa')
    theta = parser.add_mutually_exclusive_group(required=True)
    theta.add_argument('--cos-theta', type=_real,
                       help='cosine of the cone angle, e.g. 1/3')
    theta.add_argument('--theta-deg', type=_real,
                       help='cone angle in degrees')
    return parser


def _grid_parser(s_min=CLI_S_MIN, s_max=CLI_S_MAX, n=CLI_GRID_SIZE):
    parser = argparse.ArgumentParser(add_help=False)
    group = parser.add_argument_group('arc-length grid')
    group.add_argument('--s-min', type=_real, default=s_min,
                       help=f'first arc-length value (default: {s_min})')
    group.add_argument('--s-max', type=_real, default=s_max,
                       help=f'last arc-length value (default: {s_max})')
    group.add_argument('--n', type=_count, default=n,
                       help=f'number of grid points (default: {n})')
    return parser


def build_parser():
    """The ``rshelix`` argument parser

    .. versionadded:: 0.1

    """
    parser = argparse.ArgumentParser(
        prog='rshelix',
        description='Construct, analyze and verify rectifying slant helices.')
    parser.add_argument('--version', action='version',
                        version=f'%(prog)s {__version__}')
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true',
                           help='log debug messages')
    verbosity.add_argument('-q', '--quiet', action='store_true',
                           help='log errors only')
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True
    params, grid = _params_parser(), _grid_parser()

    cmd = sub.add_parser('generate', parents=[params, grid],
                         help='sample a family member to CSV (s,x,y,z)')
    cmd.add_argument('--out', default='-',
                     help='output CSV file (default: stdout)')
    cmd.set_defaults(func=cmd_generate)

    cmd = sub.add_parser('analyze',
                         help='classify a sampled unit-speed curve')
    cmd.add_argument('input', help='CSV file with columns s,x,y,z')
    cmd.add_argument('--report', default='-',
                     help='output JSON report (default: stdout)')
    cmd.set_defaults(func=cmd_analyze)

    verify_grid = _grid_parser(s_min=None, s_max=None, n=None)
    cmd = sub.add_parser('verify', parents=[params, verify_grid],
                         help='run the closed-form checks on a family member')
    cmd.add_argument('--report', default=None,
                     help='also write the JSON report ("-" for stdout)')
    cmd.add_argument('--kappa-scale', type=_real, default=1.0,
                     help=argparse.SUPPRESS)
    cmd.set_defaults(func=cmd_verify)

    cmd = sub.add_parser('indicatrix', parents=[params, grid],
                         help='sample a spherical indicatrix to CSV '
                              '(s,ux,uy,uz)')
    cmd.add_argument('--which', choices=INDICATRICES, default='normal',
                     help='frame vector to trace (default: normal)')
    cmd.add_argument('--out', default='-',
                     help='output CSV file (default: stdout)')
    cmd.set_defaults(func=cmd_indicatrix)

    cmd = sub.add_parser('plot', help='draw a 2-D projection as SVG')
    cmd.add_argument('input', help='CSV file with columns x,y,z or ux,uy,uz')
    cmd.add_argument('--projection', choices=list(PROJECTIONS),
                     default='xz', help='coordinate plane (default: xz)')
    cmd.add_argument('--cone', type=_real, default=None, metavar='SLOPE_SQ',
                     help='draw the silhouette of slope_sq (x²+y²) = z²')
    cmd.add_argument('--out', default='-',
                     help='output SVG file (default: stdout)')
    cmd.set_defaults(func=cmd_plot)

    cmd = sub.add_parser('sweep',
                         help='verify randomly drawn family members')
    cmd.add_argument('--n', type=_count, default=50,
                     help='number of members (default: 50)')
    cmd.add_argument('--seed', type=int, default=0,
                     help='random seed (default: 0)')
    cmd.add_argument('--jobs', type=int, default=-1,
                     help='parallel jobs, -1 for all CPUs but one')
    cmd.add_argument('--report', default=None,
                     help='also write the JSON reports ("-" for stdout)')
    cmd.set_defaults(func=cmd_sweep)
    return parser


def _family_params(args):
    if args.cos_theta is not None:
        return FamilyParams.from_cos_theta(args.c1, args.c2, args.cos_theta)
    return FamilyParams.from_degrees(args.c1, args.c2, args.theta_deg)


def _grid(args):
    if args.n < 2:
        raise ValueError(f'The grid needs at least 2 points, not {args.n}.')
    if not args.s_max > args.s_min:
        raise ValueError(f'--s-max ({args.s_max}) must exceed --s-min '
                         f'({args.s_min}).')
    return np.linspace(args.s_min, args.s_max, num=args.n)


def cmd_generate(args, tolerances):
    """Write the samples of a family member"""
    params = _family_params(args)
    grid = _grid(args)
    curve = make_rs_helix(params, domain=(grid[0], grid[-1]))
    write_curve_csv(args.out, grid, curve(grid))
    return EXIT_OK


def cmd_analyze(args, tolerances):
    """Classify a curve file; exit 1 unless it is a rectifying slant helix"""
    samples = read_curve_csv(args.input, tolerances=tolerances)
    report = classify_full(samples, tolerances=tolerances)
    write_json(args.report, report.to_dict())
    return EXIT_OK if report.summary['verdict'] else EXIT_FAILED


def cmd_verify(args, tolerances):
    """Run :py:func:`~rshelix.classify.verify_family` on a family member"""
    params = _family_params(args)
    grid = None
    if any(v is not None for v in (args.s_min, args.s_max, args.n)):
        if None in (args.s_min, args.s_max, args.n):
            raise ValueError('Give all of --s-min, --s-max and --n, or none.')
        grid = _grid(args)
    report = verify_family(params, grid=grid, tolerances=tolerances,
                           kappa_scale=args.kappa_scale)
    if args.report != '-':
        print(report.format_table())
    if args.report is not None:
        write_json(args.report, report.to_dict())
    return EXIT_OK if report.overall else EXIT_FAILED


def cmd_indicatrix(args, tolerances):
    """Write the tangent, normal or binormal indicatrix of a family member"""
    params = _family_params(args)
    grid = _grid(args)
    curve = make_rs_helix(params, domain=(grid[0], grid[-1]))
    trace = indicatrix(curve, args.which, grid=grid, tolerances=tolerances)
    write_trace_csv(args.out, trace)
    return EXIT_OK


def cmd_plot(args, tolerances):
    """Project a curve file onto a coordinate plane and write SVG"""
    if args.cone is not None and args.projection == 'xy':
        raise ValueError('--cone needs the xz or yz projection.')
    points = read_points_csv(args.input)
    write_svg(args.out, project(points, args.projection), cone=args.cone,
              labels=tuple(args.projection))
    return EXIT_OK


def cmd_sweep(args, tolerances):
    """Verify ``--n`` random family members"""
    reports = parameter_sweep(n=args.n, seed=args.seed, tolerances=tolerances,
                              n_jobs=args.jobs)
    failed = [i for i, report in enumerate(reports) if not report.overall]
    if args.report != '-':
        for i in failed:
            params = reports[i].provenance['params']
            print(f'member {i} (c1={params["c1"]:.6g}, c2={params["c2"]:.6g}, '
                  f'theta={params["theta"]:.6g}): failed '
                  f'{", ".join(reports[i].failed)}')
        print(f'{len(reports) - len(failed)}/{len(reports)} members pass')
    if args.report is not None:
        write_json(args.report, {'n': args.n, 'seed': args.seed,
                                 'overall': not failed, 'failed': failed,
                                 'members': [r.to_dict() for r in reports]})
    return EXIT_OK if not failed else EXIT_FAILED


def _set_verbosity(args):
    level = logging.WARNING
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.ERROR
    logging.getLogger('rshelix').setLevel(level)


def main(argv=None):
    """Run the ``rshelix`` command line

    .. versionadded:: 0.1

    Parameters
    ----------
    argv : list of str, optional
        Arguments without the program name, defaults to ``sys.argv[1:]``

    Returns
    -------
    code : int
        0 on success, 1 if a check failed, 2 on invalid input
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # --help and --version exit with 0, usage errors with 2
        return EXIT_OK if not e.code else EXIT_INPUT
    _set_verbosity(args)
    try:
        tolerances = Tolerances.from_env()
        return args.func(args, tolerances)
    except (ValueError, OSError) as e:
        print(f'rshelix {args.command}: error: {e}', file=sys.stderr)
        logger.debug('Input error', exc_info=True)
        return EXIT_INPUT


if __name__ == '__main__':
    sys.exit(main())
