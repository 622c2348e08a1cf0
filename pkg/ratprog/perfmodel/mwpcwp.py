"""Clock cycles of a kernel under the MWP-CWP execution model.

Arithmetic is type generic: called with :class:`~fractions.Fraction`
values everything is exact, with floats it is binary64.
"""
import logging
import math
from collections import namedtuple

from ..exceptions import ZeroOccupancy
from .occupancy import active_blocks, active_warps

log = logging.getLogger(__name__)

BOTH_SATURATED = 'both_saturated'
CWP_BOUND = 'cwp_bound'
MWP_BOUND = 'mwp_bound'
CASES = (BOTH_SATURATED, CWP_BOUND, MWP_BOUND)

REP_MODES = ('real', 'ceil')

MwpCwpBreakdown = namedtuple('MwpCwpBreakdown', [
    'B_active', 'W_active', 'mem_cycles', 'comp_cycles', 'mwp', 'cwp', 'rep', 'case_tag',
    'cycles_pre_synch', 'synch_cost', 'total_cycles', 'departure_delay', 'occupancy'])


def repetitions(total_blocks, B_active, num_SM, rep_mode='real'):
    """Rounds of resident blocks needed to run ``total_blocks``."""
    rep = total_blocks / (B_active * num_SM)
    if rep_mode == 'ceil':
        return math.ceil(rep)
    elif rep_mode != 'real':
        raise ValueError('rep_mode must be one of %s' % ', '.join(REP_MODES))
    return rep


def pre_synch_cycles(N, mwp, cwp, mem_cycles, comp_cycles, mem_insts, rep, mem_latency):
    """Case selection of the model: ``(case_tag, cycles before synchronization)``."""
    if mwp == N and cwp == N:
        return BOTH_SATURATED, (mem_cycles + comp_cycles +
                                comp_cycles / mem_insts * (mwp - 1)) * rep
    elif cwp >= mwp or comp_cycles > mem_cycles:
        return CWP_BOUND, (mem_cycles * N / mwp + comp_cycles / mem_insts * (mwp - 1)) * rep
    return MWP_BOUND, (mem_latency + comp_cycles * N) * rep


def mwpcwp_cycles(hw, metrics, config, rep_mode='real'):
    """Estimated clock cycles of ``metrics`` launched with ``config`` on ``hw``.

    Raises :class:`.ZeroOccupancy` when no full warp can be resident.
    """
    T = config.T if hasattr(config, 'T') else config
    B = active_blocks(hw, metrics.regs_per_thread, metrics.shared_words_per_block, T)
    N = active_warps(hw, B, T)
    if B == 0 or N == 0:
        raise ZeroOccupancy('configuration %s cannot be resident' % (config, ), config=config)

    uncoal = metrics.uncoal_mem_insts_per_thread
    coal = metrics.coal_mem_insts_per_thread
    mem_insts = uncoal + coal
    mem_L_coal = hw.mem_latency_cycles
    mem_L_uncoal = hw.mem_latency_cycles + (hw.uncoal_per_mw - 1) * hw.departure_del_uncoal_cycles
    comp_cycles = hw.issue_cycles * (metrics.comp_insts_per_thread + mem_insts)
    rep = repetitions(metrics.total_blocks, B, hw.num_SM, rep_mode)

    if mem_insts == 0:
        # Compute only: no memory period to overlap.
        departure_delay = hw.departure_del_coal_cycles
        mem_cycles = 0
        mwp, cwp = N, 1
        case_tag, pre = CWP_BOUND, comp_cycles * N / mwp * rep
    else:
        r_uncoal = uncoal / mem_insts
        weighted_mem_L = r_uncoal * mem_L_uncoal + (1 - r_uncoal) * mem_L_coal
        departure_delay = (r_uncoal * hw.departure_del_uncoal_cycles * hw.uncoal_per_mw +
                           (1 - r_uncoal) * hw.departure_del_coal_cycles)
        mem_cycles = uncoal * mem_L_uncoal + coal * mem_L_coal

        mwp_no_bw = weighted_mem_L / departure_delay
        bw_per_warp = hw.freq_GHz * hw.load_bytes_per_warp / hw.mem_latency_cycles
        mwp_peak_bw = hw.mem_bandwidth_GBps / (bw_per_warp * hw.num_SM)
        mwp = min(mwp_no_bw, mwp_peak_bw, N)
        cwp = min((mem_cycles + comp_cycles) / comp_cycles, N)
        case_tag, pre = pre_synch_cycles(N, mwp, cwp, mem_cycles, comp_cycles, mem_insts, rep,
                                         hw.mem_latency_cycles)

    synch_cost = departure_delay * (mwp - 1) * metrics.synch_insts_per_block * B * rep
    total = pre + synch_cost
    log.debug('%s: B=%s N=%s MWP=%s CWP=%s %s total=%s', config, B, N, mwp, cwp, case_tag, total)
    return MwpCwpBreakdown(B, N, mem_cycles, comp_cycles, mwp, cwp, rep, case_tag, pre,
                           synch_cost, total, departure_delay, N / hw.W_max)
