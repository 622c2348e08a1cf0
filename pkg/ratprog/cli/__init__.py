"""Command line interface: ``ratprog <command> ...``.

Exit status is 0 on success, 1 when the command line or the options
are wrong and 2 when the data is (malformed files, failed fits,
infeasible searches).
"""
import argparse
import logging
import sys

from ..configurator import ToolkitConfigurator
from ..exceptions import RatProgError, RatProgConfigError, UsageError
from ..perfmodel.device import LaunchConfig
from ..release import version
from . import commands

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError('%s: %s' % (self.prog, message))


def data_size(text):
    """``1024`` or ``1024,512`` for kernels with several data parameters."""
    values = tuple(int(v) for v in text.split(','))
    if any(v < 1 for v in values):
        raise ValueError(text)
    return values


data_size.__name__ = 'data size'


def block_shape(text):
    return LaunchConfig.parse(text)


block_shape.__name__ = 'block shape'


def _add_format(parser):
    parser.add_argument('--format', choices=('text', 'csv', 'json'), default='text',
                        help='report format (default: text)')


def _add_search_options(parser):
    parser.add_argument('--rep-mode', choices=('real', 'ceil'),
                        help='block repetitions per SM, real or rounded up (default: real)')
    parser.add_argument('--min-threads', type=int, help='smallest threads per block (32)')
    parser.add_argument('--max-threads', type=int, help='largest threads per block (1024)')
    parser.add_argument('--dims', type=int, help='dimensions of the thread blocks (2)')
    parser.add_argument('--jobs', type=int, help='worker threads evaluating configurations')
    parser.add_argument('--tie-tolerance', type=float, help='relative tolerance of Ec ties')


def build_parser():
    parser = _ArgumentParser(prog='ratprog',
                             description='Rational programs choosing GPU thread block shapes.')
    parser.add_argument('--version', action='version', version='%(prog)s ' + version)
    parser.add_argument('-v', '--verbose', action='count', default=0, help='more logging')
    parser.add_argument('-q', '--quiet', action='store_true', help='only log errors')
    parser.add_argument('--profile', help='device profile (default: $RATPROG_PROFILE)')
    parser.add_argument('--seed', type=int, help='seed of every random draw (default: 0)')
    subparsers = parser.add_subparsers(dest='command', metavar='command',
                                       parser_class=_ArgumentParser)
    subparsers.required = True

    p = subparsers.add_parser('synth', help='synthesize metric samples of a kernel description')
    p.add_argument('kernel', help='kernel description file or bundled name (conv2d)')
    p.add_argument('-o', '--output', required=True, help='samples CSV to write')
    p.add_argument('--sizes', type=data_size, nargs='+', help='data sizes to sample')
    p.add_argument('--noise', type=float, help='relative uniform noise of the metrics')
    p.add_argument('--timings', help='also write ground truth cycles to this CSV')
    p.add_argument('--timing-sizes', type=data_size, nargs='+',
                   help='data sizes of the timings (default: training and search sizes)')
    _add_search_options(p)
    p.set_defaults(func=commands.cmd_synth)

    p = subparsers.add_parser('fit', help='fit rational functions to sampled metrics')
    p.add_argument('samples', help='samples CSV')
    p.add_argument('-o', '--output', required=True, help='models JSON to write')
    p.add_argument('--kernel', help='take the degree bounds of this kernel description')
    p.add_argument('--bounds', type=commands.parse_bounds, action='append',
                   help='metric=2,0,0/0,1,1 numerator/denominator degree bounds')
    p.add_argument('--degree', type=int, help='degree bound of the other metrics (2)')
    p.add_argument('--rank-tol', type=float, help='relative singular value cutoff (1e-10)')
    holdout = p.add_mutually_exclusive_group()
    holdout.add_argument('--holdout', type=float, help='share of samples held out')
    holdout.add_argument('--holdout-threshold', type=int,
                         help='hold out the samples with a larger first data parameter')
    _add_format(p)
    p.set_defaults(func=commands.cmd_fit)

    p = subparsers.add_parser('gen-rp', help='generate the rational program of fitted models')
    p.add_argument('models', nargs='?', help='models JSON')
    p.add_argument('-o', '--output', required=True, help='rational program to write')
    p.add_argument('--template', choices=('mwpcwp', 'occupancy'), default='mwpcwp')
    p.add_argument('--no-bake', dest='bake', action='store_false',
                   help='keep the device profile fields as program inputs')
    p.add_argument('--emit-c', help='also write the program as C source')
    p.add_argument('--c-main', action='store_true', help='add a main() to the C source')
    p.add_argument('--rep-mode', choices=('real', 'ceil'))
    p.set_defaults(func=commands.cmd_gen_rp)

    p = subparsers.add_parser('eval-rp', help='evaluate a rational program')
    p.add_argument('program', help='rational program file')
    p.add_argument('bindings', type=commands.parse_binding, nargs='*', help='NAME=VALUE')
    p.add_argument('--profile-inputs', action='store_true',
                   help='bind the device profile fields')
    p.add_argument('--step-limit', type=int, help='maximum interpreted instructions')
    p.set_defaults(func=commands.cmd_eval_rp)

    p = subparsers.add_parser('search', help='best thread block shape for data sizes')
    p.add_argument('program', nargs='?', help='cycles program (default: generated from --models)')
    p.add_argument('--models', help='models JSON, also tags the MWP-CWP cases')
    p.add_argument('--sizes', type=data_size, nargs='+', required=True)
    p.add_argument('--jsonl', help='write every configuration as JSON lines')
    _add_search_options(p)
    _add_format(p)
    p.set_defaults(func=commands.cmd_search)

    p = subparsers.add_parser('sanity', help='compare collected and rational program choices')
    p.add_argument('models', help='models JSON')
    p.add_argument('samples', help='samples CSV')
    p.add_argument('--program', help='cycles program (default: generated from the models)')
    p.add_argument('--sizes', type=data_size, nargs='+')
    p.add_argument('--name', default='kernel', help='kernel name in the report')
    _add_search_options(p)
    _add_format(p)
    p.set_defaults(func=commands.cmd_sanity)

    p = subparsers.add_parser('report', help='error of the rational program against timings')
    p.add_argument('timings', help='timings CSV with a cycles column')
    p.add_argument('--program', help='cycles program (default: generated from --models)')
    p.add_argument('--models', help='models JSON')
    p.add_argument('--default-config', type=block_shape, default=LaunchConfig(16, 16),
                   help='configuration to compare with (default: 16x16)')
    p.add_argument('--sizes', type=data_size, nargs='+')
    p.add_argument('--name', default='kernel', help='kernel name in the report')
    _add_search_options(p)
    _add_format(p)
    p.set_defaults(func=commands.cmd_report)

    p = subparsers.add_parser('validate', help='check a rational program')
    p.add_argument('program', help='rational program file')
    _add_format(p)
    p.set_defaults(func=commands.cmd_validate)
    return parser


#: argument -> configuration option
_OPTIONS = {
    'profile': 'profile.path',
    'seed': 'synth.seed',
    'noise': 'synth.noise',
    'degree': 'fit.degree',
    'rank_tol': 'fit.rank_tol',
    'rep_mode': 'search.rep_mode',
    'min_threads': 'search.min_threads',
    'max_threads': 'search.max_threads',
    'dims': 'search.dims',
    'jobs': 'search.jobs',
    'tie_tolerance': 'search.tie_tolerance',
    'step_limit': 'ir.step_limit',
}


def configure(args):
    """Configuration :class:`.Bunch` of the parsed ``args``."""
    options = dict((option, getattr(args, name, None)) for name, option in _OPTIONS.items())
    return ToolkitConfigurator().configure(options)


def _setup_logging(args):
    level = logging.ERROR if args.quiet else \
        (logging.WARNING, logging.INFO, logging.DEBUG)[min(args.verbose, 2)]
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s',
                        stream=sys.stderr)


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    command = 'ratprog'
    try:
        args = parser.parse_args(argv)
        command = 'ratprog %s' % args.command
        _setup_logging(args)
        conf = configure(args)
        return args.func(args, conf, out)
    except (UsageError, RatProgConfigError) as e:
        sys.stderr.write('%s: error: %s\n' % (command, e))
        return EXIT_USAGE
    except RatProgError as e:
        sys.stderr.write('%s: error: %s\n' % (command, e))
        return EXIT_DATA
    except (IOError, OSError) as e:
        sys.stderr.write('%s: error: %s: %s\n' % (command, e.filename or '', e.strerror or e))
        return EXIT_DATA
    except (ValueError, KeyError) as e:
        sys.stderr.write('%s: error: %s\n' % (command, e))
        return EXIT_DATA
