"""Sampled metric values of a kernel."""
import logging
from collections import namedtuple

import numpy as np

from ..perfmodel.device import LaunchConfig

log = logging.getLogger(__name__)

MEASURED = 'measured'
SYNTHETIC = 'synthetic'


class Sample(namedtuple('Sample', 'data_params config metric_values')):
    """Metric values measured for one data size and one block shape."""
    __slots__ = ()

    def __new__(cls, data_params, config, metric_values):
        if not isinstance(config, LaunchConfig):
            config = LaunchConfig(*config)
        data_params = tuple(int(d) for d in data_params)
        return super(Sample, cls).__new__(cls, data_params, config, dict(metric_values))

    @property
    def key(self):
        return self.data_params, self.config

    def point(self, dims=2):
        """Coordinates ``(D..., bx, by[, bz])`` of the sample."""
        return self.data_params + tuple(self.config)[:dims]


class SampleSet(object):
    """Ordered samples carrying every metric of ``metric_names``.

    ``provenance`` is a dictionary, ``{'kind': 'measured'}`` or
    ``{'kind': 'synthetic', 'seed': 0, 'noise': 0.01}``. ``skipped``
    lists ``(data_params, config, reason)`` of the points a synthetic
    run could not produce.
    """
    def __init__(self, metric_names, samples, provenance=None, data_names=('N', ),
                 skipped=(), dims=2):
        self.metric_names = tuple(metric_names)
        self.data_names = tuple(data_names)
        self.samples = list(samples)
        self.provenance = dict(provenance or {'kind': MEASURED})
        self.skipped = list(skipped)
        self.dims = dims

        seen = set()
        for sample in self.samples:
            if len(sample.data_params) != len(self.data_names):
                raise ValueError('sample %s has %d data parameters, expected %d'
                                 % (sample.data_params, len(sample.data_params),
                                    len(self.data_names)))
            if sample.key in seen:
                raise ValueError('duplicate sample for %s at %s' % sample.key)
            seen.add(sample.key)
            missing = [m for m in self.metric_names if m not in sample.metric_values]
            if missing:
                raise ValueError('sample %s at %s misses %s' % (sample.data_params, sample.config,
                                                                ', '.join(missing)))
            for metric in self.metric_names:
                if not np.isfinite(sample.metric_values[metric]):
                    raise ValueError('%s is not finite at %s, %s' % (metric, sample.data_params,
                                                                    sample.config))

    @property
    def variables(self):
        return self.data_names + ('bx', 'by', 'bz')[:self.dims]

    def __len__(self):
        return len(self.samples)

    def __iter__(self):
        return iter(self.samples)

    def __eq__(self, other):
        return (isinstance(other, SampleSet) and self.metric_names == other.metric_names and
                self.data_names == other.data_names and self.samples == other.samples and
                self.provenance == other.provenance)

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return '<SampleSet %d samples of %s>' % (len(self.samples), ', '.join(self.metric_names))

    def derive(self, samples):
        """A set with the same schema holding ``samples``."""
        return SampleSet(self.metric_names, samples, self.provenance, self.data_names,
                         dims=self.dims)

    def data_values(self):
        """Distinct data parameter vectors, in order of appearance."""
        values = []
        for sample in self.samples:
            if sample.data_params not in values:
                values.append(sample.data_params)
        return values

    def at(self, data_params):
        data_params = tuple(data_params)
        return [s for s in self.samples if s.data_params == data_params]

    def get(self, data_params, config):
        for sample in self.samples:
            if sample.key == (tuple(data_params), config):
                return sample
        raise KeyError((data_params, config))

    def fit_data(self, metric):
        """``(point, value)`` pairs of ``metric`` for the fitting code."""
        if metric not in self.metric_names:
            raise KeyError(metric)
        return [(s.point(self.dims), s.metric_values[metric]) for s in self.samples]

    def is_constant(self, metric):
        values = set(s.metric_values[metric] for s in self.samples)
        return len(values) == 1


def holdout_split(samples, fraction=None, seed=0, threshold=None):
    """Partition ``samples`` into ``(train, test)``.

    With ``fraction``, that share of the samples goes to the test set,
    drawn with a seeded permutation. With ``threshold`` the split
    extrapolates instead: samples whose first data parameter exceeds
    ``threshold`` are held out.
    """
    if threshold is not None:
        train = [s for s in samples if s.data_params[0] <= threshold]
        test = [s for s in samples if s.data_params[0] > threshold]
        return samples.derive(train), samples.derive(test)

    if fraction is None or not 0 < fraction < 1:
        raise ValueError('holdout fraction must be in (0, 1), got %r' % (fraction, ))
    count = int(round(len(samples) * fraction))
    order = np.random.default_rng(seed).permutation(len(samples))
    held_out = set(int(i) for i in order[:count])
    train = [s for i, s in enumerate(samples) if i not in held_out]
    test = [s for i, s in enumerate(samples) if i in held_out]
    return samples.derive(train), samples.derive(test)
