"""Analytical GPU models: hardware occupancy and MWP-CWP clock cycles."""
from .device import (DeviceProfile, KernelMetrics, LaunchConfig, PROFILE_FIELDS, METRIC_NAMES,
                     MODEL_METRICS, read_profile, parse_profile, format_profile)
from .occupancy import active_blocks, active_warps, occupancy
from .mwpcwp import (MwpCwpBreakdown, mwpcwp_cycles, pre_synch_cycles, repetitions,
                     BOTH_SATURATED, CWP_BOUND, MWP_BOUND, CASES)
from .emit import (emit_occupancy_rp, emit_mwpcwp_rp, hardware_bindings, INFEASIBLE,
                   OCCUPANCY_INPUTS)
