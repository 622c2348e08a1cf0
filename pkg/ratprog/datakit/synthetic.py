"""Synthetic instrumentation: metric values from known ground truth functions."""
import io
import json
import logging
import os

import numpy as np

from ..exceptions import SchemaError, DenominatorNearZero, ZeroOccupancy
from ..perfmodel.device import KernelMetrics, LaunchConfig, MODEL_METRICS, METRIC_NAMES
from ..perfmodel.mwpcwp import mwpcwp_cycles
from ..polyfit import DegreeBounds, RationalFunction, eval_ratfunc
from .samples import Sample, SampleSet, SYNTHETIC

log = logging.getLogger(__name__)

DATA_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'data')

TIMING_METRIC = 'cycles'


class SyntheticKernelSpec(object):
    """A made up kernel whose metrics are known rational functions.

    ``ground_truth`` maps metric names to :class:`.RationalFunction`
    over ``variables`` (data parameters then ``bx, by``), ``constants``
    the metrics that do not vary. ``bounds`` optionally gives the degree
    bounds to fit each metric with.
    """
    def __init__(self, name, variables, ground_truth, constants=None, noise_rel=0.0,
                 bounds=None, default_config=None, train_sizes=(), search_sizes=()):
        self.name = name
        self.variables = tuple(variables)
        self.ground_truth = dict(ground_truth)
        self.constants = dict(constants or {})
        self.noise_rel = float(noise_rel)
        self.bounds = dict(bounds or {})
        self.default_config = default_config
        self.train_sizes = list(train_sizes)
        self.search_sizes = list(search_sizes)

        if self.noise_rel < 0:
            raise ValueError('noise_rel must not be negative')
        for metric, f in self.ground_truth.items():
            if f.variables != self.variables:
                raise ValueError('%s is over %r instead of %r' % (metric, f.variables,
                                                                   self.variables))
        missing = [m for m in MODEL_METRICS if m not in self.ground_truth and
                   m not in self.constants]
        if missing:
            raise ValueError('kernel %s does not describe %s' % (name, ', '.join(missing)))

    @property
    def data_names(self):
        return tuple(v for v in self.variables if v not in ('bx', 'by', 'bz'))

    @property
    def dims(self):
        return len(self.variables) - len(self.data_names)

    def metrics_at(self, data_params, config):
        """Exact :class:`.KernelMetrics` of the kernel at a point."""
        point = tuple(data_params) + tuple(config)[:self.dims]
        values = dict(self.constants)
        for metric, f in self.ground_truth.items():
            values[metric] = eval_ratfunc(f, point)
        return KernelMetrics.build(**dict((m, values[m]) for m in MODEL_METRICS))


def _terms(entries, nvars, where):
    terms = {}
    for entry in entries:
        try:
            exponents, coefficient = entry
            exponents = tuple(int(e) for e in exponents)
            coefficient = float(coefficient)
        except (TypeError, ValueError):
            raise SchemaError('%s: terms are [exponents, coefficient] pairs' % where)
        if len(exponents) != nvars:
            raise SchemaError('%s: %r has %d exponents for %d variables'
                              % (where, exponents, len(exponents), nvars))
        terms[exponents] = terms.get(exponents, 0.0) + coefficient
    return terms


def parse_kernel_spec(data, path=None):
    try:
        variables = data['variables']
        metrics = data['metrics']
    except KeyError as e:
        raise SchemaError('kernel description misses %s' % e, path=path)

    ground_truth, bounds = {}, {}
    for metric, description in metrics.items():
        if metric not in METRIC_NAMES:
            raise SchemaError('unknown metric %s' % metric, path=path)
        num = _terms(description.get('num', []), len(variables), metric)
        den = _terms(description['den'], len(variables), metric) if 'den' in description else None
        ground_truth[metric] = RationalFunction.from_terms(variables, num, den)
        if 'bounds' in description:
            b = description['bounds']
            bounds[metric] = DegreeBounds(b['num'], b['den'])

    default_config = data.get('default_config')
    try:
        return SyntheticKernelSpec(data.get('name', 'kernel'), variables, ground_truth,
                                   data.get('constants'), data.get('noise_rel', 0.0), bounds,
                                   LaunchConfig.parse(default_config) if default_config else None,
                                   data.get('train_sizes', ()), data.get('search_sizes', ()))
    except ValueError as e:
        raise SchemaError(str(e), path=path)


def load_kernel_spec(name_or_path):
    """Load a kernel description file, bundled ones by name (``conv2d``)."""
    path = name_or_path
    if not os.path.exists(path):
        bundled = os.path.join(DATA_DIR, '%s.json' % name_or_path)
        if not os.path.exists(bundled):
            raise SchemaError('no kernel description %s' % name_or_path, path=name_or_path)
        path = bundled
    with io.open(path, encoding='utf-8') as f:
        try:
            data = json.load(f)
        except ValueError as e:
            raise SchemaError('not JSON: %s' % e, path=path)
    return parse_kernel_spec(data, path=path)


def synthesize(spec, points, seed=0, noise_rel=None):
    """Emulated measurements of ``spec`` at ``points``.

    Each ground truth value is multiplied by ``1 + e`` with ``e`` drawn
    uniformly in ``[-noise_rel, noise_rel]``; constants are exact.
    Points where a ground truth function has a pole or goes negative
    are skipped and listed in ``skipped``.
    """
    noise_rel = spec.noise_rel if noise_rel is None else float(noise_rel)
    rng = np.random.default_rng(seed)
    modeled = [m for m in MODEL_METRICS if m in spec.ground_truth]

    samples, skipped = [], []
    for data_params, config in points:
        data_params = tuple(data_params)
        point = data_params + tuple(config)[:spec.dims]
        noise = rng.uniform(-noise_rel, noise_rel, len(modeled)) if noise_rel else \
            np.zeros(len(modeled))
        values = dict(spec.constants)
        try:
            for metric, e in zip(modeled, noise):
                exact = eval_ratfunc(spec.ground_truth[metric], point)
                if exact < 0:
                    raise ValueError('%s is negative' % metric)
                values[metric] = exact * (1 + float(e))
        except (DenominatorNearZero, ValueError) as e:
            log.warning('Skipping %s at %s: %s', data_params, config, e)
            skipped.append((data_params, config, str(e)))
            continue
        values['mem_insts_per_thread'] = (values['uncoal_mem_insts_per_thread'] +
                                          values['coal_mem_insts_per_thread'])
        samples.append(Sample(data_params, config, values))

    provenance = {'kind': SYNTHETIC, 'kernel': spec.name, 'seed': seed, 'noise': noise_rel}
    return SampleSet(METRIC_NAMES, samples, provenance, spec.data_names, skipped, spec.dims)


def synthesize_timings(spec, points, hw, rep_mode='real'):
    """Ground truth clock cycles of ``spec`` at ``points``.

    Stand-in for measured running times: exact metrics through the
    MWP-CWP model. Configurations that cannot be resident are skipped.
    """
    samples, skipped = [], []
    for data_params, config in points:
        try:
            cycles = mwpcwp_cycles(hw, spec.metrics_at(data_params, config), config,
                                   rep_mode).total_cycles
        except (ZeroOccupancy, DenominatorNearZero) as e:
            skipped.append((tuple(data_params), config, str(e)))
            continue
        samples.append(Sample(data_params, config, {TIMING_METRIC: float(cycles)}))
    provenance = {'kind': SYNTHETIC, 'kernel': spec.name, 'timings': 'mwpcwp'}
    return SampleSet([TIMING_METRIC], samples, provenance, spec.data_names, skipped, spec.dims)
