"""Implementation of the ``ratprog`` subcommands.

Each command takes the parsed arguments, the configuration built from
them and the output stream, and returns the exit code.
"""
import io
import logging
import os
from fractions import Fraction

from ..exceptions import InvalidProgram, UsageError
from ..ir import format_rational, read_program, validate, write_program, Interpreter
from ..jsonify import encode
from ..perfmodel.device import LaunchConfig, read_profile, METRIC_NAMES, MODEL_METRICS
from ..datakit import (design_points, enumerate_configs, load_kernel_spec, read_samples,
                       synthesize, synthesize_timings, write_samples, holdout_split,
                       TIMING_METRIC)
from ..polyfit import DegreeBounds
from ..pipeline import (Report, fit_all_metrics, save_models, load_models, generate_rp,
                        emit_c_source, search_optimal, dump_search_jsonl, sanity_report,
                        proof_of_concept_report)

log = logging.getLogger(__name__)


def render(report, fmt):
    if fmt == 'csv':
        return report.to_csv()
    elif fmt == 'json':
        return encode(report, pretty=True) + '\n'
    return report.to_text()


def write_text(path, text):
    with io.open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(text)


def require_profile(conf):
    path = conf['profile.path']
    if path is None:
        raise UsageError('a device profile is required: pass --profile or set RATPROG_PROFILE')
    return read_profile(path)


def config_space(conf):
    return enumerate_configs(conf['search.max_threads'], conf['search.min_threads'],
                             conf['search.dims'])


def _sizes(args, default):
    sizes = args.sizes if args.sizes else default
    if not sizes:
        raise UsageError('no data sizes: pass --sizes')
    return sizes


def cmd_synth(args, conf, out):
    spec = load_kernel_spec(args.kernel)
    configs = enumerate_configs(conf['search.max_threads'], conf['search.min_threads'],
                                spec.dims)
    points = design_points(_sizes(args, spec.train_sizes), configs)
    samples = synthesize(spec, points, conf['synth.seed'], conf['synth.noise'])
    write_samples(samples, args.output)
    out.write('%s: %d samples of %s, %d skipped\n' % (args.output, len(samples), spec.name,
                                                       len(samples.skipped)))

    if args.timings:
        hw = require_profile(conf)
        sizes = args.timing_sizes or sorted(set(spec.train_sizes) | set(spec.search_sizes))
        timings = synthesize_timings(spec, design_points(sizes, configs), hw,
                                     conf['search.rep_mode'])
        write_samples(timings, args.timings)
        out.write('%s: %d timings, %d infeasible\n' % (args.timings, len(timings),
                                                        len(timings.skipped)))
    return 0


def parse_bounds(text):
    """``metric=2,0,0/0,1,1``"""
    try:
        metric, degrees = text.split('=', 1)
        num, den = degrees.split('/')
        return metric.strip(), DegreeBounds([int(d) for d in num.split(',')],
                                             [int(d) for d in den.split(',')])
    except ValueError:
        raise ValueError('bounds must read metric=n1,n2,.../d1,d2,...: %r' % text)


def cmd_fit(args, conf, out):
    samples = read_samples(args.samples, required_metrics=MODEL_METRICS)
    holdout = None
    if args.holdout is not None or args.holdout_threshold is not None:
        samples, holdout = holdout_split(samples, args.holdout, conf['synth.seed'],
                                         args.holdout_threshold)

    bounds = {}
    if args.kernel:
        bounds.update(load_kernel_spec(args.kernel).bounds)
    for metric, metric_bounds in args.bounds or ():
        if metric not in METRIC_NAMES:
            raise UsageError('--bounds: unknown metric %s' % metric)
        bounds[metric] = metric_bounds
    degree = conf['fit.degree']
    uniform = DegreeBounds.uniform(len(samples.variables), degree)
    for metric in samples.metric_names:
        bounds.setdefault(metric, uniform)

    models = fit_all_metrics(samples, bounds, conf['fit.rank_tol'], holdout=holdout)
    models.ensure_complete()
    save_models(models, args.output)

    report = Report('Fitted metrics', ['Metric', 'Residual', 'Rank', 'Columns', 'Truncated',
                                       'Holdout error'])
    for metric in sorted(models.models):
        fit = models.models[metric][1]
        report.add(metric, fit.residual_norm, fit.numerical_rank, fit.columns,
                   str(fit.truncated).lower(), fit.holdout_relative_error)
    for metric in sorted(models.constants):
        report.add(metric, None, None, None, 'constant', None)
    for metric in sorted(models.failures):
        report.add(metric, None, None, None, 'failed: %s' % models.failures[metric], None)
    out.write(render(report, args.format))
    return 0


def cmd_gen_rp(args, conf, out):
    models = load_models(args.models) if args.models else None
    if models is None and args.template != 'occupancy':
        raise UsageError('the %s template needs fitted models' % args.template)
    hw = require_profile(conf) if args.template != 'occupancy' and args.bake else None
    program = generate_rp(models, hw, conf['search.rep_mode'], args.template, args.bake)
    write_program(program, args.output)
    out.write('%s: %d instructions over %s\n' % (args.output, len(program),
                                                 ' '.join(program.inputs)))
    if args.emit_c:
        write_text(args.emit_c, emit_c_source(program, main=args.c_main))
        out.write('%s: C source\n' % args.emit_c)
    return 0


def parse_binding(text):
    try:
        name, value = text.split('=', 1)
        return name.strip(), Fraction(value.strip())
    except ValueError:
        raise ValueError('bindings read NAME=VALUE: %r' % text)


def cmd_eval_rp(args, conf, out):
    program = read_program(args.program)
    bindings = dict(args.bindings)
    if args.profile_inputs:
        hw = require_profile(conf)
        for field, value in hw._asdict().items():
            bindings.setdefault(field, value)
    result = Interpreter(program, conf['ir.step_limit']).run(bindings)
    out.write('%s = %s (%.17g) in %d steps\n' % (program.output, format_rational(result.value),
                                                 float(result.value), result.steps))
    return 0


def _cycles_program(args, conf, hw, models):
    if args.program:
        return read_program(args.program)
    if models is None:
        raise UsageError('pass a program or --models')
    return generate_rp(models, hw, conf['search.rep_mode'])


def cmd_search(args, conf, out):
    hw = require_profile(conf)
    models = load_models(args.models) if args.models else None
    program = _cycles_program(args, conf, hw, models)
    space = config_space(conf)

    report = Report('Search', ['Size', 'C_r', 'Ec', 'Occupancy', 'Ties', 'Feasible'])
    jsonl = []
    for size in args.sizes:
        result = search_optimal(program, size, hw, space, models=models,
                                jobs=conf['search.jobs'], rep_mode=conf['search.rep_mode'],
                                tie_tolerance=conf['search.tie_tolerance'])
        best = result.ranked[0]
        report.add('x'.join(str(d) for d in size), best.config, best.cycles, best.occupancy,
                   result.ties, len(result.ranked))
        jsonl.append(dump_search_jsonl(result))
    if args.jsonl:
        write_text(args.jsonl, ''.join(jsonl))
    out.write(render(report, args.format))
    return 0


def cmd_sanity(args, conf, out):
    hw = require_profile(conf)
    models = load_models(args.models)
    samples = read_samples(args.samples)
    program = _cycles_program(args, conf, hw, models)
    report = sanity_report(models, samples, program, hw, conf['search.rep_mode'],
                           kernel=args.name, data_values=args.sizes or None,
                           jobs=conf['search.jobs'])
    out.write(render(report, args.format))
    return 0


def cmd_report(args, conf, out):
    hw = require_profile(conf)
    models = load_models(args.models) if args.models else None
    program = _cycles_program(args, conf, hw, models)
    timings = read_samples(args.timings, required_metrics=(TIMING_METRIC, ))
    report = proof_of_concept_report(program, timings, hw, args.default_config,
                                     data_values=args.sizes or None, models=models,
                                     rep_mode=conf['search.rep_mode'], kernel=args.name,
                                     jobs=conf['search.jobs'])
    out.write(render(report, args.format))
    return 0


def cmd_validate(args, conf, out):
    program = read_program(args.program)
    report = validate(program)
    table = Report('Validation of %s' % os.path.basename(args.program),
                   ['Index', 'Kind', 'Message'])
    for violation in report.violations:
        table.add(violation.index, violation.kind, violation.message)
    if args.format == 'text':
        out.write('%s: %s, %d instructions\n' % (args.program,
                                                 'valid' if report.valid else 'invalid',
                                                 len(program)))
        if table.rows:
            out.write(table.to_text())
    else:
        out.write(render(table, args.format))
    if not report.valid:
        raise InvalidProgram('%s is not a valid rational program' % args.program, report)
    return 0
