"""Sanity check and proof of concept tables."""
import csv
import io
import logging

from tabulate import tabulate

from ..exceptions import ZeroOccupancy
from ..perfmodel.device import KernelMetrics, LaunchConfig, MODEL_METRICS
from ..perfmodel.mwpcwp import mwpcwp_cycles
from .search import search_optimal

log = logging.getLogger(__name__)


def error_metric(crt, best, worst):
    """Position of ``crt`` between the best and worst times, in percent.

    Out of range times are clamped with a warning; when every time is
    the same the error is 0.
    """
    if worst < best:
        raise ValueError('worst time %r is below best time %r' % (worst, best))
    if worst == best:
        log.warning('Best and worst times are both %r, error is 0%%', best)
        return 0.0
    if not best <= crt <= worst:
        log.warning('Time %r is outside [%r, %r], clamping', crt, best, worst)
        crt = min(max(crt, best), worst)
    return (crt - best) / (worst - best) * 100.0


def _format(value):
    if value is None:
        return '-'
    if isinstance(value, float):
        return '%.6g' % value
    return str(value)


class Report(object):
    """A table with named columns, rendered as CSV, aligned text or JSON."""
    def __init__(self, title, columns, rows=()):
        self.title = title
        self.columns = tuple(columns)
        self.rows = [tuple(row) for row in rows]
        for row in self.rows:
            if len(row) != len(self.columns):
                raise ValueError('row %r does not match columns %r' % (row, self.columns))

    def add(self, *row):
        if len(row) != len(self.columns):
            raise ValueError('row %r does not match columns %r' % (row, self.columns))
        self.rows.append(row)

    def column(self, name):
        index = self.columns.index(name)
        return [row[index] for row in self.rows]

    def records(self):
        return [dict(zip(self.columns, row)) for row in self.rows]

    def to_csv(self):
        out = io.StringIO()
        writer = csv.writer(out, lineterminator='\n')
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow(['' if v is None else repr(v) if isinstance(v, float) else str(v)
                             for v in row])
        return out.getvalue()

    def to_text(self):
        cells = [[_format(v) for v in row] for row in self.rows]
        table = tabulate(cells, headers=self.columns, tablefmt='simple', stralign='right',
                         disable_numparse=True)
        return '%s\n\n%s\n' % (self.title, table)

    def __json__(self):
        return {'title': self.title, 'columns': list(self.columns),
                'rows': [dict((c, str(v) if isinstance(v, LaunchConfig) else v)
                              for c, v in zip(self.columns, row)) for row in self.rows]}


def collected_cycles(sample, hw, rep_mode='real'):
    """Cycles estimated from the metrics collected for ``sample``, ``None``
    when the configuration cannot be resident."""
    metrics = KernelMetrics.build(**dict((m, sample.metric_values[m]) for m in MODEL_METRICS))
    try:
        return float(mwpcwp_cycles(hw, metrics, sample.config, rep_mode).total_cycles)
    except ZeroOccupancy:
        return None


def sanity_report(models, samples, rp, hw, rep_mode='real', kernel='kernel', data_values=None,
                  jobs=1):
    """Compare the configuration chosen from collected metrics with the
    one chosen by the rational program.

    Per data size: ``C_i``/``Ec_i``, the best configuration and its
    cycles estimated from the collected metrics; ``C_r``/``Ec_r``, the
    rational program's choice and its estimate; ``Collected Ec``, the
    collected metrics estimate at ``C_r``.
    """
    models.ensure_complete()
    report = Report('Sanity check', ['Kernel'] + list(samples.data_names) +
                    ['C_i', 'Ec_i', 'C_r', 'Ec_r', 'Collected Ec'])
    for data_params in data_values or samples.data_values():
        at = samples.at(data_params)
        if not at:
            raise KeyError('no samples at %s' % (data_params, ))
        collected = dict((s.config, collected_cycles(s, hw, rep_mode)) for s in at)
        feasible = sorted((c, cfg) for cfg, c in collected.items() if c is not None)
        result = search_optimal(rp, data_params, hw, [s.config for s in at], models=models,
                                jobs=jobs, rep_mode=rep_mode)
        Ec_i, C_i = feasible[0] if feasible else (None, None)
        report.add(kernel, *(tuple(data_params) + (C_i, Ec_i, result.chosen, result.cycles,
                                                   collected.get(result.chosen))))
    return report


def proof_of_concept_report(rp, timings, hw, default_config, data_values=None, models=None,
                            rep_mode='real', kernel='kernel', timing_metric='cycles', jobs=1):
    """Quality of the rational program's choice against actual timings.

    Columns: default configuration ``C_d`` and its time ``C_dt``, chosen
    configuration ``C_r`` and its time ``C_rt``, best and worst times
    ``B_t``/``W_t`` and the :func:`error_metric` of ``C_rt``.
    """
    report = Report('Proof of concept', ['Kernel'] + list(timings.data_names) +
                    ['C_d', 'C_dt', 'C_r', 'C_rt', 'B_t', 'W_t', 'Error'])
    for data_params in data_values or timings.data_values():
        data_params = tuple(data_params)
        times = dict((s.config, s.metric_values[timing_metric]) for s in timings.at(data_params))
        if not times:
            raise KeyError('no timings at %s' % (data_params, ))
        result = search_optimal(rp, data_params, hw, sorted(times), models=models, jobs=jobs,
                                rep_mode=rep_mode)
        C_rt = times[result.chosen]
        best, worst = min(times.values()), max(times.values())
        report.add(kernel, *(data_params + (default_config, times.get(default_config),
                                            result.chosen, C_rt, best, worst,
                                            error_metric(C_rt, best, worst))))
    return report
