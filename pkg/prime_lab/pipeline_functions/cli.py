# -*- coding: utf-8 -*-
"""
prime_lab - probabilistic models of the distribution of primes and prime k-tuples
License: BSD (3-clause)

Command-line entry: prime_lab [global flags] <command> [flags]
"""
import argparse
import json
import logging
import sys

import pandas as pd

from .cache import CountCache
from .config import RunConfig, output_formats, set_logging
from .errors import PrimeLabError, ValidationError
from .pipeline_utils import TypedJSONEncoder, parse_grid, parse_integer, parse_integer_list
from .report import build_table, check_printed_consistency, compare_published, emit
from .. import __version__
from ..basic_functions.densities import DensityKind, make_density, prime_count_density
from ..basic_functions.logint import li
from ..basic_functions.models import UrnSpec, model_stats, urn_from_primes
from ..basic_functions.montecarlo import sampling_modes, simulate
from ..basic_functions.sieve import as_pattern, tuple_count
from ..basic_functions.singular import singular_series, singular_series_at_cutoff

logger = logging.getLogger(__name__)


def _integer(text):
    """argparse-type accepting scientific notation"""
    try:
        return parse_integer(text)
    except ValidationError as err:
        raise argparse.ArgumentTypeError(str(err))


def emit_frame(frame, output_format):
    if output_format == 'csv':
        return frame.to_csv(index=False, lineterminator='\n', float_format='%.12g')
    elif output_format == 'markdown':
        return frame.to_markdown(index=False, floatfmt='.12g') + '\n'
    else:
        return json.dumps(frame.to_dict(orient='records'), cls=TypedJSONEncoder, indent=2) + '\n'


def cmd_count(args, config):
    pattern = as_pattern(args.pattern)
    record = tuple_count(pattern, args.x, budget=config.sieve_budget, segment_size=config.segment_size,
                         cache=CountCache(config.cache_dir), n_jobs=config.n_jobs)

    return emit_frame(pd.DataFrame([{'pattern': str(record.pattern), 'x': record.limit, 'count': record.count,
                                     'provenance': record.provenance.value}]), config.output_format)


def cmd_li(args, config):
    tol = config.quadrature_tol if args.tol is None else args.tol
    relative = config.quadrature_relative and not args.absolute
    value = li(args.x, args.k, tol, relative)

    return emit_frame(pd.DataFrame([{'x': args.x, 'k': value.k, 'value': value.value,
                                     'error_bound': value.error_bound}]), config.output_format)


def cmd_constant(args, config):
    if args.cutoff is not None:
        constant = singular_series_at_cutoff(args.pattern, args.cutoff)
    else:
        tol = config.singular_tol if args.tol is None else args.tol
        constant = singular_series(args.pattern, tol, config.max_prime_cutoff, config.n_jobs)

    return emit_frame(pd.DataFrame([{'pattern': str(constant.pattern), 'value': constant.value,
                                     'tail_bound': constant.tail_bound,
                                     'prime_cutoff': constant.prime_cutoff}]), config.output_format)


def cmd_stats(args, config):
    stats = model_stats(args.model, args.x, args.pattern, config.table_tol)

    return emit_frame(pd.DataFrame([{'x': args.x, 'model': stats.model.value,
                                     'pattern': '' if stats.pattern is None else str(stats.pattern),
                                     'mean': stats.mean, 'sigma': stats.sigma,
                                     'whole_sigma': stats.whole_sigma}]), config.output_format)


def cmd_density(args, config):
    if args.kind == 'count':
        density = prime_count_density(args.x, config.skewes_log10, config.table_tol)
    else:
        density = make_density(args.kind, args.x, args.pattern, config.table_tol)
    if args.grid is None:
        curve = density.curve(steps=args.steps)
    else:
        lower, upper, steps = parse_grid(args.grid)
        curve = density.curve(lower, upper, steps)

    return emit_frame(curve, config.output_format)


def cmd_simulate(args, config):
    if args.M1 is None:
        urn = urn_from_primes(args.M, args.n, budget=config.sieve_budget, cache=CountCache(config.cache_dir))
    else:
        urn = UrnSpec(args.M, args.M1, args.n)
    seed = config.seed if args.seed is None else args.seed
    result = simulate(urn, args.trials, seed, mode=args.mode, chunk_trials=config.chunk_trials,
                      n_jobs=config.n_jobs)

    return emit_frame(result.to_frame(), config.output_format)


def cmd_table(args, config):
    rows = build_table(args.id, args.xs, config, CountCache(config.cache_dir))
    text = emit(rows, config.output_format)
    if args.compare:
        comparison = compare_published(rows)
        issues = pd.DataFrame(check_printed_consistency(config, [(row.table_id, row.x) for row in rows]),
                              columns=['table_id', 'x', 'issue'])
        text += '\n' + emit_frame(comparison, config.output_format)
        if not issues.empty:
            text += '\n' + emit_frame(issues, config.output_format)

    return text


def _global_flags(parser, suppress):
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument('--format', dest='output_format', choices=output_formats, default=default,
                        help='Output format (default csv)')
    parser.add_argument('--output', default=default, help='Write the output to this file instead of stdout')
    parser.add_argument('--threads', type=int, default=default, help='Number of workers, 0 = all cores')
    parser.add_argument('--cache-dir', default=default, help='Directory of the count-cache')
    parser.add_argument('--sieve-budget', type=_integer, default=default, help='Largest x which may be sieved')
    parser.add_argument('--log-level', default=default, help='Log-level (DEBUG, INFO, WARNING, ...)')
    parser.add_argument('--log-file', default=default, help='Additionally log to this file')


def build_argparser():
    parser = argparse.ArgumentParser(prog='prime_lab',
                                     description='Probabilistic models of the distribution of primes '
                                                 'and prime k-tuples')
    parser.add_argument('--version', action='version', version=f'prime_lab {__version__}')
    _global_flags(parser, suppress=False)
    # Global flags are also accepted after the command
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)

    sub = parser.add_subparsers(dest='command', required=True)

    pc = sub.add_parser('count', parents=[common], help='Exact number of primes or prime k-tuples up to x')
    pc.add_argument('--x', type=_integer, required=True)
    pc.add_argument('--pattern', default='0', help='Offsets like 0,2 or 0,4,6 (default 0: primes)')
    pc.set_defaults(func=cmd_count)

    pl = sub.add_parser('li', parents=[common], help='Generalized logarithmic integral Li_k(x)')
    pl.add_argument('--x', type=float, required=True)
    pl.add_argument('--k', type=int, default=1)
    pl.add_argument('--tol', type=float, default=None)
    pl.add_argument('--absolute', action='store_true', help='Interpret tol as absolute tolerance')
    pl.set_defaults(func=cmd_li)

    pk = sub.add_parser('constant', parents=[common], help='Hardy-Littlewood constant of a pattern')
    pk.add_argument('--pattern', required=True)
    pk.add_argument('--tol', type=float, default=None)
    pk.add_argument('--cutoff', type=_integer, default=None, help='Fixed prime cutoff instead of a tolerance')
    pk.set_defaults(func=cmd_constant)

    ps = sub.add_parser('stats', parents=[common], help='Mean and standard deviation of a model')
    ps.add_argument('--model', choices=('1', '2', 'tuple'), required=True)
    ps.add_argument('--x', type=float, required=True)
    ps.add_argument('--pattern', default=None)
    ps.set_defaults(func=cmd_stats)

    pd_ = sub.add_parser('density', parents=[common], help='Sampled pdf and cdf of a density')
    pd_.add_argument('--kind', choices=[k.value for k in DensityKind] + ['count'], required=True,
                     help='count: the prime-count density valid at x (truncated below the Skewes number)')
    pd_.add_argument('--x', type=float, required=True)
    pd_.add_argument('--pattern', default=None)
    pd_.add_argument('--grid', default=None, help='lo:hi:steps (default: the support window)')
    pd_.add_argument('--steps', type=int, default=201, help='Number of points without --grid')
    pd_.add_argument('--skewes-log10', type=float, default=None, help='log10 of the Skewes number')
    pd_.set_defaults(func=cmd_density)

    pm = sub.add_parser('simulate', parents=[common], help='Seeded urn-simulation')
    pm.add_argument('--mode', choices=sampling_modes, required=True)
    pm.add_argument('--M', type=_integer, required=True)
    pm.add_argument('--M1', type=_integer, default=None, help='White balls (default: pi(M))')
    pm.add_argument('--n', type=_integer, required=True)
    pm.add_argument('--trials', type=_integer, required=True)
    pm.add_argument('--seed', type=_integer, default=None)
    pm.set_defaults(func=cmd_simulate)

    pt = sub.add_parser('table', parents=[common], help='Reproduce one of the comparison tables')
    pt.add_argument('--id', choices=('1', '2', '3', '4'), required=True)
    pt.add_argument('--xs', type=parse_integer_list, default=None, help='Comma-separated x like 1e5,1e6')
    pt.add_argument('--compare', action='store_true', help='Append the comparison with the printed values')
    pt.set_defaults(func=cmd_table)

    return parser


def run(argv=None):
    """Run one command and return the exit status (0 success, 1 error, 2 usage)"""
    parser = build_argparser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code

    try:
        config = RunConfig.from_settings({'output_format': getattr(args, 'output_format', None),
                                          'threads': getattr(args, 'threads', None),
                                          'cache_dir': getattr(args, 'cache_dir', None),
                                          'sieve_budget': getattr(args, 'sieve_budget', None),
                                          'log_level': getattr(args, 'log_level', None),
                                          'skewes_log10': getattr(args, 'skewes_log10', None)})
        set_logging(config.log_level, getattr(args, 'log_file', None))
        logger.info(f'Running {args.command}')
        text = args.func(args, config)
        output = getattr(args, 'output', None)
        if output:
            with open(output, 'w', encoding='utf-8', newline='\n') as file:
                file.write(text)
        else:
            sys.stdout.write(text)
    except PrimeLabError as err:
        print(f'ERROR {err.code}: {err}', file=sys.stderr)
        return 1
    except OSError as err:
        print(f'ERROR IO: {err}', file=sys.stderr)
        return 1

    return 0
