"""Fitted metric functions of a kernel."""
import io
import json
import logging

from ..exceptions import (AllMetricsFailed, DegenerateFit, DimensionMismatch, IncompleteModels,
                          SchemaError, SVDNonConvergence)
from ..perfmodel.device import KernelMetrics, METRIC_NAMES, MODEL_METRICS
from ..perfmodel.mwpcwp import mwpcwp_cycles
from ..polyfit import (DegreeBounds, DEFAULT_RANK_TOL, eval_ratfunc, fit_rational,
                       holdout_relative_error, dump_sidecar, load_sidecar)
from .. import jsonify

log = logging.getLogger(__name__)

CONFIG_VARIABLES = ('bx', 'by', 'bz')

#: Metrics that are taken as constants when they do not vary over the samples.
CONSTANT_CANDIDATES = ('regs_per_thread', 'shared_words_per_block')


class MetricModelSet(object):
    """Fitted rational functions of the metrics of one kernel.

    ``models`` maps metric names to ``(function, report)`` pairs over
    ``variables``, ``constants`` maps metric names to numbers and
    ``failures`` records why a metric could not be fitted.
    """
    def __init__(self, variables, models=None, constants=None, failures=None, bounds=None):
        self.variables = tuple(variables)
        self.models = dict(models or {})
        self.constants = dict(constants or {})
        self.failures = dict(failures or {})
        self.bounds = dict(bounds or {})
        for metric, (f, _) in self.models.items():
            if f.variables != self.variables:
                raise DimensionMismatch('model of %s is over %r, expected %r'
                                        % (metric, f.variables, self.variables))

    @property
    def data_names(self):
        return tuple(v for v in self.variables if v not in CONFIG_VARIABLES)

    @property
    def dims(self):
        return len(self.variables) - len(self.data_names)

    def functions(self):
        return dict((metric, f) for metric, (f, _) in self.models.items())

    def reports(self):
        return dict((metric, report) for metric, (_, report) in self.models.items())

    def missing(self):
        """Metrics the performance model needs that are not covered."""
        return [m for m in MODEL_METRICS if m not in self.models and m not in self.constants]

    def ensure_complete(self):
        missing = self.missing()
        if missing:
            raise IncompleteModels('no model nor constant for %s' % ', '.join(missing),
                                   missing=missing)
        return self

    def point(self, data_params, config):
        return tuple(data_params) + tuple(config)[:self.dims]

    def metrics_at(self, data_params, config):
        """Binary64 :class:`.KernelMetrics` predicted at a point."""
        self.ensure_complete()
        point = self.point(data_params, config)
        values = dict(self.constants)
        for metric in MODEL_METRICS:
            if metric not in values:
                values[metric] = eval_ratfunc(self.models[metric][0], point)
        return KernelMetrics.build(**values)

    def __len__(self):
        return len(self.models)

    def __repr__(self):
        return '<MetricModelSet %s constants=%s failures=%s>' % (
            sorted(self.models), sorted(self.constants), sorted(self.failures))

    def __json__(self):
        return {
            'variables': list(self.variables),
            'constants': self.constants,
            'failures': self.failures,
            'models': dict((metric, dump_sidecar(f, report, self.bounds.get(metric)))
                           for metric, (f, report) in self.models.items()),
        }


def _bounds_for(bounds, metric):
    if isinstance(bounds, DegreeBounds):
        return bounds
    return bounds.get(metric)


def fit_all_metrics(samples, bounds, rank_tol=DEFAULT_RANK_TOL, constants=None, holdout=None):
    """Fit one rational function per metric of ``samples``.

    ``bounds`` is one :class:`.DegreeBounds` for every metric or a
    ``{metric: DegreeBounds}`` mapping. Register and shared memory
    usage that do not vary over the samples become constants, so do
    the metrics listed in ``constants``. A metric failing to fit is
    recorded in ``failures``; :class:`.AllMetricsFailed` is raised
    when none could be fitted.

    With a ``holdout`` sample set the largest relative error of each
    model over it is added to its report.
    """
    constants = dict(constants or {})
    for metric in CONSTANT_CANDIDATES:
        if metric in samples.metric_names and metric not in constants and \
                samples.is_constant(metric):
            constants[metric] = samples.samples[0].metric_values[metric]

    models, failures, used_bounds = {}, {}, {}
    to_fit = [m for m in samples.metric_names if m in METRIC_NAMES and m not in constants]
    for metric in to_fit:
        metric_bounds = _bounds_for(bounds, metric)
        if metric_bounds is None:
            failures[metric] = 'no degree bounds'
            log.warning('Not fitting %s: no degree bounds', metric)
            continue
        try:
            f, report = fit_rational(samples.fit_data(metric), metric_bounds, rank_tol,
                                     variables=samples.variables)
        except (DegenerateFit, SVDNonConvergence, DimensionMismatch) as e:
            failures[metric] = e.msg
            log.warning('Fit of %s failed: %s', metric, e.msg)
            continue
        if holdout is not None and len(holdout):
            report = report.with_holdout(holdout_relative_error(f, holdout.fit_data(metric)))
        log.debug('Fitted %s: residual %.3g, rank %d/%d', metric, report.residual_norm,
                  report.numerical_rank, report.columns)
        models[metric] = (f, report)
        used_bounds[metric] = metric_bounds

    if to_fit and not models:
        raise AllMetricsFailed('no metric could be fitted', failures=failures)
    log.info('Fitted %d metrics, %d constants, %d failures', len(models), len(constants),
             len(failures))
    return MetricModelSet(samples.variables, models, constants, failures, used_bounds)


def estimate_cycles(models, hw, data_params, config, rep_mode='real'):
    """MWP-CWP breakdown of the fitted metrics, evaluated in binary64."""
    return mwpcwp_cycles(hw, models.metrics_at(data_params, config), config, rep_mode)


def save_models(models, path):
    with io.open(path, 'w', encoding='utf-8') as f:
        f.write(jsonify.encode(models, pretty=True))
        f.write('\n')


def parse_models(data, path=None):
    try:
        variables = data['variables']
        documents = data['models']
    except (KeyError, TypeError) as e:
        raise SchemaError('model document misses %s' % e, path=path)
    models, bounds = {}, {}
    for metric, document in documents.items():
        f, report, metric_bounds = load_sidecar(document, path=path)
        models[metric] = (f, report)
        if metric_bounds is not None:
            bounds[metric] = metric_bounds
    try:
        return MetricModelSet(variables, models, data.get('constants'), data.get('failures'),
                              bounds)
    except DimensionMismatch as e:
        raise SchemaError(e.msg, path=path)


def load_models(path):
    with io.open(path, encoding='utf-8') as f:
        try:
            data = json.load(f)
        except ValueError as e:
            raise SchemaError('not JSON: %s' % e, path=path)
    return parse_models(data, path=path)
