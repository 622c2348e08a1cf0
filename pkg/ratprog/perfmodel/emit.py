"""Rational programs encoding the occupancy and MWP-CWP models."""
import logging
from fractions import Fraction

from ..ir.builder import ProgramBuilder
from ..ir.rational import as_rational
from .device import PROFILE_FIELDS, MODEL_METRICS, WARP_SIZE, MAX_THREADS_PER_BLOCK

log = logging.getLogger(__name__)

#: Value returned by emitted MWP-CWP programs for configurations that cannot run.
INFEASIBLE = -1

OCCUPANCY_INPUTS = ('R_max', 'Z_max', 'T_max', 'B_max', 'W_max', 'R', 'Z', 'T')
CONFIG_VARIABLES = ('bx', 'by', 'bz')


def _emit_active_blocks(b, R, Z, T, fail):
    """Leaves the resident blocks in ``B_active``, returns ``fail`` if none."""
    b.guard(b.cmp_lt('T_max', T, target=b.temp('too_large')), fail)
    warps_per_block = b.op('ceil_div', T, WARP_SIZE, target=b.temp('warps_per_block'))
    warp_limit = b.op('floor_div', 'W_max', warps_per_block, target=b.temp('warp_limit'))
    b.min_of('B_active', 'B_max', warp_limit)

    for uses, limit in ((R, lambda: b.op('floor_div', 'R_max', b.mul(R, T))),
                        (Z, lambda: b.op('floor_div', 'Z_max', Z))):
        skip, apply = b.label('unlimited'), b.label('limit')
        b.branch_if(b.cmp_eq(uses, 0), skip, apply)
        b.mark(apply)
        b.min_of('B_active', 'B_active', limit())
        b.mark(skip)

    b.guard(b.cmp_lt('B_active', 1), fail)
    return 'B_active'


def _emit_active_warps(b, B, T, target):
    resident = b.op('floor_div', b.mul(B, T), WARP_SIZE)
    return b.min_of(target, resident, 'W_max')


def emit_occupancy_rp():
    """Rational program computing the active warps of an SM.

    Inputs are ``R_max Z_max T_max B_max W_max R Z T``, the output is
    ``W_active``, 0 when the kernel fails to launch.
    """
    b = ProgramBuilder(OCCUPANCY_INPUTS, 'W_active')
    b.guard(b.cmp_lt('T', 1), 0)
    B = _emit_active_blocks(b, 'R', 'Z', 'T', 0)
    b.return_value(_emit_active_warps(b, B, 'T', 'W_active'))
    return b.build().ensure_valid()


def _literal(value):
    """Exact value of the shortest decimal form of a binary64 coefficient."""
    return as_rational(value)


class _PolynomialEmitter(object):
    """Shares powers and monomials among all the emitted metric functions."""
    def __init__(self, builder):
        self.b = builder
        self._powers = {}
        self._monomials = {}

    def power(self, variable, exponent):
        if exponent == 1:
            return variable
        key = (variable, exponent)
        if key not in self._powers:
            lower = self.power(variable, exponent - 1)
            self._powers[key] = self.b.mul(lower, variable, target='pow_%s_%d' % key)
        return self._powers[key]

    def monomial(self, variables, exponents):
        factors = [self.power(v, e) for v, e in zip(variables, exponents) if e]
        if not factors:
            return None
        key = tuple(factors)
        if key not in self._monomials:
            value = factors[0]
            for factor in factors[1:]:
                value = self.b.mul(value, factor)
            self._monomials[key] = value
        return self._monomials[key]

    def polynomial(self, p):
        total = None
        for exponents, coefficient in p.terms():
            monomial = self.monomial(p.variables, exponents)
            term = _literal(coefficient) if monomial is None else \
                self.b.mul(monomial, _literal(coefficient))
            total = term if total is None else self.b.add(total, term)
        return Fraction(0) if total is None else total

    def rational_function(self, f, target):
        numerator = self.polynomial(f.numerator)
        den_terms = f.denominator.terms()
        if len(den_terms) == 1 and not any(den_terms[0][0]):
            return self.b.quotient(numerator, _literal(den_terms[0][1]), target=target)
        denominator = self.polynomial(f.denominator)
        self.b.guard_zero(denominator, INFEASIBLE)
        return self.b.quotient(numerator, denominator, target=target)


def emit_mwpcwp_rp(metric_functions, constants=None, hw=None, rep_mode='real',
                   variables=None):
    """Rational program estimating the clock cycles of a kernel.

    ``metric_functions`` maps metric names to rational functions over
    the data parameters followed by ``bx, by[, bz]``, ``constants`` maps
    the remaining metrics to numbers. Memory instructions are the sum
    of the coalesced and non coalesced ones.

    Inputs are the function variables then, unless ``hw`` is given and
    baked in as literals, the :class:`.DeviceProfile` fields. The
    output ``total_cycles`` is :data:`INFEASIBLE` for configurations
    that cannot run.
    """
    metric_functions = dict(metric_functions)
    constants = dict(constants or {})
    if rep_mode not in ('real', 'ceil'):
        raise ValueError('rep_mode must be real or ceil, not %r' % rep_mode)

    missing = [m for m in MODEL_METRICS if m not in metric_functions and m not in constants]
    if missing:
        raise ValueError('no model nor constant for %s' % ', '.join(missing))

    all_variables = set(tuple(f.variables) for f in metric_functions.values())
    if variables is None:
        if len(all_variables) > 1:
            raise ValueError('metric functions do not share their variables')
        variables = all_variables.pop() if all_variables else ('bx', 'by')
    variables = tuple(variables)
    if any(tuple(f.variables) != variables for f in metric_functions.values()):
        raise ValueError('metric functions must be over %r' % (variables, ))
    block = [v for v in variables if v in CONFIG_VARIABLES]
    data = [v for v in variables if v not in CONFIG_VARIABLES]
    if 'bx' not in block:
        raise ValueError('bx is required among the variables')

    inputs = list(variables) + ([] if hw is not None else list(PROFILE_FIELDS))
    b = ProgramBuilder(inputs, 'total_cycles')
    if hw is not None:
        for field in PROFILE_FIELDS:
            b.assign(field, as_rational(getattr(hw, field)))

    for d in data:
        b.guard(b.cmp_lt(d, 1), INFEASIBLE)
    threads = block[0]
    for v in block[1:]:
        threads = b.mul(threads, v, target='threads' if v == block[-1] else None)
    if threads == block[0]:
        threads = b.assign('threads', threads)
    b.guard(b.cmp_lt(threads, 1), INFEASIBLE)
    b.guard(b.cmp_lt(MAX_THREADS_PER_BLOCK, threads), INFEASIBLE)

    emitter = _PolynomialEmitter(b)
    for metric in MODEL_METRICS:
        if metric in constants:
            b.assign(metric, as_rational(constants[metric]))
        else:
            emitter.rational_function(metric_functions[metric], metric)

    B = _emit_active_blocks(b, 'regs_per_thread', 'shared_words_per_block', threads, INFEASIBLE)
    N = _emit_active_warps(b, B, threads, 'W_active')
    b.guard(b.cmp_lt(N, 1), INFEASIBLE)

    uncoal, coal = 'uncoal_mem_insts_per_thread', 'coal_mem_insts_per_thread'
    mem_insts = b.add(uncoal, coal, target='mem_insts')
    comp_cycles = b.mul('issue_cycles', b.add('comp_insts_per_thread', mem_insts),
                        target='comp_cycles')
    resident = b.mul(B, 'num_SM')
    if rep_mode == 'ceil':
        rep = b.op('ceil_div', 'total_blocks', resident, target='rep')
    else:
        rep = b.quotient('total_blocks', resident, target='rep')

    compute_only, memory, synch = b.label('compute_only'), b.label('memory'), b.label('synch')
    b.branch_if(b.cmp_eq(mem_insts, 0), compute_only, memory)

    b.mark(compute_only)
    b.assign('departure_delay', 'departure_del_coal_cycles')
    b.assign('MWP', N)
    b.mul(comp_cycles, rep, target='pre_synch')
    b.jump(synch)

    b.mark(memory)
    extra = b.mul(b.sub('uncoal_per_mw', 1), 'departure_del_uncoal_cycles')
    mem_L_uncoal = b.add('mem_latency_cycles', extra, target='mem_L_uncoal')
    r_uncoal = b.quotient(uncoal, mem_insts, target='r_uncoal')
    r_coal = b.sub(1, r_uncoal, target='r_coal')
    weighted = b.add(b.mul(r_uncoal, mem_L_uncoal), b.mul(r_coal, 'mem_latency_cycles'),
                     target='weighted_mem_L')
    b.add(b.mul(b.mul(r_uncoal, 'departure_del_uncoal_cycles'), 'uncoal_per_mw'),
          b.mul(r_coal, 'departure_del_coal_cycles'), target='departure_delay')
    mem_cycles = b.add(b.mul(uncoal, mem_L_uncoal), b.mul(coal, 'mem_latency_cycles'),
                       target='mem_cycles')

    b.guard_zero('departure_delay', INFEASIBLE)
    mwp_no_bw = b.quotient(weighted, 'departure_delay', target='mwp_no_bw')
    b.guard_zero('mem_latency_cycles', INFEASIBLE)
    bw_per_warp = b.quotient(b.mul('freq_GHz', 'load_bytes_per_warp'), 'mem_latency_cycles',
                             target='bw_per_warp')
    bw_share = b.mul(bw_per_warp, 'num_SM')
    b.guard_zero(bw_share, INFEASIBLE)
    mwp_peak_bw = b.quotient('mem_bandwidth_GBps', bw_share, target='mwp_peak_bw')
    mwp = b.min_of('MWP', mwp_no_bw, mwp_peak_bw, N)

    b.guard_zero(comp_cycles, INFEASIBLE)
    cwp = b.min_of('CWP', b.quotient(b.add(mem_cycles, comp_cycles), comp_cycles), N)
    comp_per_mem = b.quotient(comp_cycles, mem_insts, target='comp_per_mem')
    overlap = b.mul(comp_per_mem, b.sub(mwp, 1), target='overlap')

    saturated, cwp_bound, mwp_bound = b.label('both_saturated'), b.label('cwp_bound'), \
        b.label('mwp_bound')
    check_cwp, check_comp, check_cwp_n = b.label('check_cwp'), b.label('check_comp'), \
        b.label('check_cwp_n')
    b.branch_if(b.cmp_eq(mwp, N), check_cwp_n, check_cwp)
    b.mark(check_cwp_n)
    b.branch_if(b.cmp_eq(cwp, N), saturated, check_cwp)

    b.mark(saturated)
    b.mul(b.add(b.add(mem_cycles, comp_cycles), overlap), rep, target='pre_synch')
    b.jump(synch)

    b.mark(check_cwp)
    b.branch_if(b.cmp_lt(cwp, mwp), check_comp, cwp_bound)
    b.mark(check_comp)
    b.branch_if(b.cmp_lt(mem_cycles, comp_cycles), cwp_bound, mwp_bound)

    b.mark(cwp_bound)
    b.guard_zero(mwp, INFEASIBLE)
    hidden = b.quotient(b.mul(mem_cycles, N), mwp)
    b.mul(b.add(hidden, overlap), rep, target='pre_synch')
    b.jump(synch)

    b.mark(mwp_bound)
    b.mul(b.add('mem_latency_cycles', b.mul(comp_cycles, N)), rep, target='pre_synch')

    b.mark(synch)
    cost = b.mul(b.mul(b.mul(b.mul('departure_delay', b.sub('MWP', 1)),
                             'synch_insts_per_block'), B), rep, target='synch_cost')
    b.return_value(b.add('pre_synch', cost, target='total_cycles'))

    program = b.build().ensure_valid()
    log.debug('MWP-CWP program over %s: %d instructions', ', '.join(variables), len(program))
    return program


def hardware_bindings(hw):
    """Input bindings of the :class:`.DeviceProfile` fields."""
    return dict((field, as_rational(getattr(hw, field))) for field in PROFILE_FIELDS)
