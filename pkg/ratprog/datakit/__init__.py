"""Sample selection, measurement files and synthetic instrumentation."""
from .samples import Sample, SampleSet, holdout_split, MEASURED, SYNTHETIC
from .csvio import read_samples, write_samples
from .design import design_points, enumerate_configs
from .synthetic import (SyntheticKernelSpec, load_kernel_spec, parse_kernel_spec, synthesize,
                        synthesize_timings, TIMING_METRIC)
