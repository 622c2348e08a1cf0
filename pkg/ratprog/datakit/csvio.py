"""CSV files of sampled metrics.

Layout::

    # provenance: kind=synthetic noise=0.01 seed=0
    N,bx,by,bz,comp_insts_per_thread,total_blocks
    64,16,2,1,50.0,128.0

Data parameter columns come before ``bx,by,bz``, metric columns after.
Metric values are written with their shortest round-trip decimal, so
reading a written file gives back the very same floats.
"""
import csv
import io
import logging

from ..exceptions import SchemaError
from ..perfmodel.device import LaunchConfig
from .samples import Sample, SampleSet

log = logging.getLogger(__name__)

CONFIG_COLUMNS = ['bx', 'by', 'bz']
PROVENANCE_PREFIX = '# provenance:'


def _format_provenance(provenance):
    return '%s %s' % (PROVENANCE_PREFIX, ' '.join('%s=%s' % (k, provenance[k])
                                                  for k in sorted(provenance)))


def _parse_provenance(line):
    provenance = {}
    for item in line[len(PROVENANCE_PREFIX):].split():
        key, _, value = item.partition('=')
        for convert in (int, float):
            try:
                value = convert(value)
                break
            except ValueError:
                continue
        provenance[key] = value
    return provenance


def write_samples(samples, path):
    with io.open(path, 'w', encoding='utf-8', newline='') as f:
        f.write(_format_provenance(samples.provenance) + '\n')
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(list(samples.data_names) + CONFIG_COLUMNS + list(samples.metric_names))
        for sample in samples:
            writer.writerow([str(d) for d in sample.data_params] +
                            [str(c) for c in sample.config] +
                            [repr(float(sample.metric_values[m])) for m in samples.metric_names])
    log.info('Wrote %d samples to %s', len(samples), path)


def read_samples(path, required_metrics=()):
    """Read a sample file, checking that ``required_metrics`` are present."""
    provenance = None
    rows = []
    with io.open(path, encoding='utf-8', newline='') as f:
        lines = list(enumerate(f, 1))

    body = []
    for lineno, line in lines:
        if not body and line.lstrip().startswith('#'):
            if line.startswith(PROVENANCE_PREFIX):
                provenance = _parse_provenance(line.strip())
            continue
        if not line.strip():
            continue
        body.append((lineno, line))

    if not body:
        raise SchemaError('no header row', path=path)
    reader = csv.reader([line for _, line in body])
    header_line = body[0][0]
    header = [h.strip() for h in next(reader)]
    if not all(c in header for c in CONFIG_COLUMNS):
        raise SchemaError('header must name the columns %s' % ', '.join(CONFIG_COLUMNS),
                          path=path, line=header_line)
    bx = header.index('bx')
    if header[bx:bx + 3] != CONFIG_COLUMNS:
        raise SchemaError('bx, by and bz must be adjacent', path=path, line=header_line)
    data_names = header[:bx]
    metric_names = header[bx + 3:]
    if len(set(header)) != len(header):
        raise SchemaError('duplicate column names', path=path, line=header_line)
    for metric in required_metrics:
        if metric not in metric_names:
            raise SchemaError('missing metric column %s' % metric, path=path, line=header_line)

    seen = {}
    for (lineno, _), row in zip(body[1:], reader):
        if len(row) != len(header):
            raise SchemaError('expected %d fields, got %d' % (len(header), len(row)),
                              path=path, line=lineno)
        try:
            data_params = tuple(int(v) for v in row[:bx])
            config = LaunchConfig(*[int(v) for v in row[bx:bx + 3]])
            values = dict((m, float(v)) for m, v in zip(metric_names, row[bx + 3:]))
        except ValueError as e:
            raise SchemaError('malformed row: %s' % e, path=path, line=lineno)
        key = (data_params, config)
        if key in seen:
            raise SchemaError('duplicate sample %s at %s, first seen on line %d'
                              % (data_params, config, seen[key]), path=path, line=lineno)
        seen[key] = lineno
        rows.append(Sample(data_params, config, values))

    dims = 3 if any(s.config.bz != 1 for s in rows) else 2
    try:
        samples = SampleSet(metric_names, rows, provenance, data_names, dims=dims)
    except ValueError as e:
        raise SchemaError(str(e), path=path)
    log.debug('Read %d samples from %s', len(samples), path)
    return samples
