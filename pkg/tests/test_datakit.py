# -*- coding: utf-8 -*-
import json

import numpy as np
import pytest

from ratprog.exceptions import SchemaError
from ratprog.datakit import (Sample, SampleSet, holdout_split, read_samples, write_samples,
                             design_points, enumerate_configs, load_kernel_spec,
                             parse_kernel_spec, synthesize, synthesize_timings,
                             SyntheticKernelSpec, SYNTHETIC, TIMING_METRIC)
from ratprog.perfmodel import LaunchConfig, METRIC_NAMES, mwpcwp_cycles
from ratprog.polyfit import RationalFunction, eval_ratfunc

from tests.base import conv2d_spec, sample_profile, CONV2D_SPEC


def small_set(sizes=(64, 128), configs=((16, 2), (32, 1))):
    samples = [Sample((n, ), c, {'comp': float(n), 'mem': float(c[0])})
               for n in sizes for c in configs]
    return SampleSet(['comp', 'mem'], samples)


class TestConfigSpace(object):
    def test_two_dimensional_count(self):
        configs = enumerate_configs()
        assert len(configs) == 51
        assert configs[0] == LaunchConfig(1, 32)
        assert configs[-1] == LaunchConfig(1024, 1)
        assert configs == sorted(configs)

    def test_known_shapes(self):
        configs = enumerate_configs()
        for shape in ('16x2', '1x128', '8x4', '1x32', '512x1', '32x16'):
            assert LaunchConfig.parse(shape) in configs
        assert LaunchConfig(16, 1) not in configs

    def test_whole_warps(self):
        assert all(c.T % 32 == 0 for c in enumerate_configs())

    def test_one_dimensional(self):
        configs = enumerate_configs(dims=1)
        assert [c.bx for c in configs] == [32, 64, 128, 256, 512, 1024]
        assert all(c.by == 1 and c.bz == 1 for c in configs)

    def test_single_thread_count(self):
        configs = enumerate_configs(32, 32)
        assert [(c.bx, c.by) for c in configs] == [(1, 32), (2, 16), (4, 8), (8, 4),
                                                    (16, 2), (32, 1)]

    def test_three_dimensional_count(self):
        # exponent triples summing to 5..10
        assert len(enumerate_configs(dims=3)) == 21 + 28 + 36 + 45 + 55 + 66

    def test_bad_bounds(self):
        with pytest.raises(ValueError):
            enumerate_configs(32, 64)
        with pytest.raises(ValueError):
            enumerate_configs(2048)
        with pytest.raises(ValueError):
            enumerate_configs(dims=4)


class TestDesignPoints(object):
    def test_product(self):
        configs = [LaunchConfig(16, 2), LaunchConfig(32, 1)]
        points = design_points([64, 128], configs)
        assert points == [((64, ), configs[0]), ((64, ), configs[1]),
                          ((128, ), configs[0]), ((128, ), configs[1])]

    def test_training_grid(self):
        configs = enumerate_configs()
        assert len(design_points([64, 128, 256, 512], configs)) == 4 * 51

    def test_several_data_parameters(self):
        points = design_points([(64, 8)], [LaunchConfig(32, 1)])
        assert points == [((64, 8), LaunchConfig(32, 1))]

    def test_empty(self):
        with pytest.raises(ValueError):
            design_points([64], [])
        with pytest.raises(ValueError):
            design_points([], enumerate_configs())


class TestSampleSet(object):
    def test_lookup(self):
        samples = small_set()
        assert len(samples) == 4
        assert samples.variables == ('N', 'bx', 'by')
        assert samples.data_values() == [(64, ), (128, )]
        assert len(samples.at((128, ))) == 2
        assert samples.get((64, ), LaunchConfig(32, 1)).metric_values['mem'] == 32.0
        assert samples.fit_data('comp')[1] == ((64, 32, 1), 64.0)

    def test_constant_metric(self):
        samples = small_set()
        assert not samples.is_constant('comp')
        assert small_set(sizes=(64, )).is_constant('comp')

    def test_duplicates_rejected(self):
        sample = Sample((64, ), (16, 2), {'comp': 1.0})
        with pytest.raises(ValueError):
            SampleSet(['comp'], [sample, sample])

    def test_missing_metric(self):
        with pytest.raises(ValueError):
            SampleSet(['comp', 'mem'], [Sample((64, ), (16, 2), {'comp': 1.0})])

    def test_not_finite(self):
        with pytest.raises(ValueError):
            SampleSet(['comp'], [Sample((64, ), (16, 2), {'comp': float('inf')})])


class TestHoldout(object):
    def setup_method(self):
        self.samples = small_set(sizes=(64, 128, 256, 512, 1024), configs=((16, 2), (32, 1)))

    def test_fraction(self):
        train, test = holdout_split(self.samples, 0.5, seed=0)
        assert len(train) == 5 and len(test) == 5
        keys = set(s.key for s in train) | set(s.key for s in test)
        assert len(keys) == 10

    def test_seeded(self):
        first = holdout_split(self.samples, 0.3, seed=7)
        second = holdout_split(self.samples, 0.3, seed=7)
        assert first[0] == second[0] and first[1] == second[1]

    def test_extrapolation(self):
        train, test = holdout_split(self.samples, threshold=512)
        assert set(s.data_params[0] for s in train) == {64, 128, 256, 512}
        assert set(s.data_params[0] for s in test) == {1024}

    def test_bad_fraction(self):
        with pytest.raises(ValueError):
            holdout_split(self.samples, 1.0)


class TestCsvFiles(object):
    def test_round_trip(self, tmp_path):
        samples = synthesize(conv2d_spec(), design_points([64, 128], enumerate_configs()),
                             seed=3, noise_rel=0.01)
        path = str(tmp_path / 'samples.csv')
        write_samples(samples, path)
        again = read_samples(path)
        assert again == samples
        assert again.provenance['kind'] == SYNTHETIC
        assert again.provenance['seed'] == 3

    def test_written_text(self, tmp_path):
        samples = small_set(sizes=(64, ), configs=((16, 2), ))
        path = tmp_path / 'small.csv'
        write_samples(samples, str(path))
        assert path.read_text() == ('# provenance: kind=measured\n'
                                    'N,bx,by,bz,comp,mem\n'
                                    '64,16,2,1,64.0,16.0\n')

    def test_missing_metric_column(self, tmp_path):
        path = tmp_path / 'metrics.csv'
        path.write_text('N,bx,by,bz,comp\n64,16,2,1,1.5\n')
        with pytest.raises(SchemaError) as exc:
            read_samples(str(path), required_metrics=['comp', 'total_blocks'])
        assert 'total_blocks' in str(exc.value)
        assert exc.value.line == 1

    def test_malformed_row(self, tmp_path):
        path = tmp_path / 'metrics.csv'
        path.write_text('# measured by hand\nN,bx,by,bz,comp\n64,16,2,1,1.5\n64,16,x,1,2.0\n')
        with pytest.raises(SchemaError) as exc:
            read_samples(str(path))
        assert exc.value.line == 4
        assert str(exc.value).startswith(str(path) + ':4:')

    def test_short_row(self, tmp_path):
        path = tmp_path / 'metrics.csv'
        path.write_text('N,bx,by,bz,comp\n64,16,2,1\n')
        with pytest.raises(SchemaError) as exc:
            read_samples(str(path))
        assert exc.value.line == 2

    def test_duplicate_sample(self, tmp_path):
        path = tmp_path / 'metrics.csv'
        path.write_text('N,bx,by,bz,comp\n64,16,2,1,1.5\n64,16,2,1,1.5\n')
        with pytest.raises(SchemaError) as exc:
            read_samples(str(path))
        assert exc.value.line == 3

    def test_configuration_columns(self, tmp_path):
        path = tmp_path / 'metrics.csv'
        path.write_text('N,bx,comp,by,bz\n64,16,1.5,2,1\n')
        with pytest.raises(SchemaError):
            read_samples(str(path))

    def test_measured_file(self, tmp_path):
        path = tmp_path / 'metrics.csv'
        path.write_text('N,M,bx,by,bz,comp\n64,8,4,2,2,1.5\n')
        samples = read_samples(str(path))
        assert samples.data_names == ('N', 'M')
        assert samples.dims == 3
        assert samples.provenance == {'kind': 'measured'}
        assert samples.samples[0].point(samples.dims) == (64, 8, 4, 2, 2)


class TestKernelSpec(object):
    def test_bundled(self):
        spec = load_kernel_spec('conv2d')
        assert spec.name == 'conv2d'
        assert spec.variables == ('N', 'bx', 'by')
        assert spec.data_names == ('N', )
        assert spec.default_config == LaunchConfig(16, 16)
        assert spec.train_sizes == [64, 128, 256, 512]
        assert spec.bounds['total_blocks'].den == (0, 1, 1)
        assert load_kernel_spec(CONV2D_SPEC).ground_truth == spec.ground_truth

    def test_ground_truth(self):
        metrics = conv2d_spec().metrics_at((64, ), LaunchConfig(8, 4))
        assert metrics.regs_per_thread == 16
        assert metrics.comp_insts_per_thread == 60.0
        assert metrics.uncoal_mem_insts_per_thread == 5.0
        assert metrics.coal_mem_insts_per_thread == 5.0
        assert metrics.mem_insts_per_thread == 10.0
        assert metrics.total_blocks == 128.0

    def test_unknown_kernel(self):
        with pytest.raises(SchemaError):
            load_kernel_spec('no-such-kernel')

    def test_unknown_metric(self):
        with open(CONV2D_SPEC) as f:
            data = json.load(f)
        data['metrics']['flops'] = {'num': [[[0, 0, 0], 1]]}
        with pytest.raises(SchemaError):
            parse_kernel_spec(data)

    def test_incomplete(self):
        with open(CONV2D_SPEC) as f:
            data = json.load(f)
        del data['metrics']['total_blocks']
        with pytest.raises(SchemaError) as exc:
            parse_kernel_spec(data, path='k.json')
        assert 'total_blocks' in str(exc.value)

    def test_bad_terms(self):
        with open(CONV2D_SPEC) as f:
            data = json.load(f)
        data['metrics']['total_blocks']['num'] = [[[2, 0], 1]]
        with pytest.raises(SchemaError):
            parse_kernel_spec(data)


class TestSynthesize(object):
    def setup_method(self):
        self.spec = conv2d_spec()
        self.points = design_points([64, 128, 256, 512], enumerate_configs())

    def test_noise_free(self):
        samples = synthesize(self.spec, self.points, seed=0)
        assert len(samples) == len(self.points)
        assert samples.metric_names == METRIC_NAMES
        for sample in samples:
            point = sample.point()
            for metric, f in self.spec.ground_truth.items():
                assert sample.metric_values[metric] == eval_ratfunc(f, point)
            assert sample.metric_values['regs_per_thread'] == 16
        assert samples.provenance == {'kind': SYNTHETIC, 'kernel': 'conv2d', 'seed': 0,
                                      'noise': 0.0}

    def test_seeded(self):
        first = synthesize(self.spec, self.points, seed=11, noise_rel=0.05)
        second = synthesize(self.spec, self.points, seed=11, noise_rel=0.05)
        other = synthesize(self.spec, self.points, seed=12, noise_rel=0.05)
        assert first == second
        assert first != other

    def test_noise_level(self):
        points = design_points(range(64, 84), enumerate_configs())
        samples = synthesize(self.spec, points, seed=5, noise_rel=0.02)
        deviations = [abs(s.metric_values['synch_insts_per_block'] / 2.0 - 1) for s in samples]
        assert len(deviations) == 1020
        assert max(deviations) <= 0.02 + 1e-12
        assert abs(np.mean(deviations) - 0.01) <= 0.2 * 0.01

    def test_constants_are_exact(self):
        samples = synthesize(self.spec, self.points, seed=5, noise_rel=0.1)
        assert samples.is_constant('regs_per_thread')
        assert samples.is_constant('shared_words_per_block')

    def test_memory_split(self):
        samples = synthesize(self.spec, self.points, seed=5, noise_rel=0.1)
        for s in samples:
            values = s.metric_values
            assert values['mem_insts_per_thread'] == (values['uncoal_mem_insts_per_thread'] +
                                                      values['coal_mem_insts_per_thread'])

    def test_singular_points_skipped(self):
        variables = self.spec.variables
        pole = RationalFunction.from_terms(variables, {(0, 0, 0): 80.0},
                                           {(0, 0, 0): -32.0, (0, 1, 0): 1.0})
        ground_truth = dict(self.spec.ground_truth, uncoal_mem_insts_per_thread=pole)
        spec = SyntheticKernelSpec('pole', variables, ground_truth, self.spec.constants)
        samples = synthesize(spec, design_points([64], enumerate_configs()), seed=0)
        assert all(s.config.bx > 32 for s in samples)
        assert len(samples) + len(samples.skipped) == 51
        assert any(reason for _, c, reason in samples.skipped if c.bx == 32)


class TestTimings(object):
    def setup_method(self):
        self.hw = sample_profile()
        self.spec = conv2d_spec()

    def test_cycles(self):
        points = design_points([1024], enumerate_configs())
        timings = synthesize_timings(self.spec, points, self.hw)
        assert timings.metric_names == (TIMING_METRIC, )
        assert len(timings) == 51
        config = LaunchConfig(16, 16)
        expected = mwpcwp_cycles(self.hw, self.spec.metrics_at((1024, ), config),
                                 config).total_cycles
        assert timings.get((1024, ), config).metric_values[TIMING_METRIC] == expected

    def test_best_block_width_grows_with_size(self):
        best = {}
        for N in (1024, 2048):
            timings = synthesize_timings(self.spec, design_points([N], enumerate_configs()),
                                         self.hw)
            best[N] = min(timings, key=lambda s: s.metric_values[TIMING_METRIC]).config
        assert best[1024] == LaunchConfig(32, 32)
        assert best[2048] == LaunchConfig(64, 16)

    def test_infeasible_skipped(self):
        spec = conv2d_spec()
        spec.constants['regs_per_thread'] = 40
        timings = synthesize_timings(spec, design_points([1024], enumerate_configs()), self.hw)
        assert len(timings.skipped) == 11
        assert all(c.T == 1024 for _, c, _ in timings.skipped)
