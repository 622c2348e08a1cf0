"""Exact interpreter of rational programs."""
import logging
from collections import namedtuple

from ..exceptions import StepLimitExceeded, MissingBinding, DivisionByZero
from .rational import as_rational, euclid_divmod, floor_div, ceil_div, ZERO, ONE

log = logging.getLogger(__name__)

DEFAULT_STEP_LIMIT = 10 ** 6

ExecutionResult = namedtuple('ExecutionResult', 'value steps branch_trace watched')


def _euclid_quot(a, b):
    return euclid_divmod(a, b)[0]


def _euclid_rem(a, b):
    return euclid_divmod(a, b)[1]


_BINARY = {
    'add': lambda a, b: a + b,
    'sub': lambda a, b: a - b,
    'mul': lambda a, b: a * b,
    'euclid_quot': _euclid_quot,
    'euclid_rem': _euclid_rem,
    'floor_div': floor_div,
    'ceil_div': ceil_div,
    'cmp_eq': lambda a, b: ONE if a == b else ZERO,
    'cmp_lt': lambda a, b: ONE if a < b else ZERO,
}


class Interpreter(object):
    """Runs a validated :class:`.RationalProgram` over exact rationals.

    The interpreter holds no per-run state, every :meth:`run` gets its
    own environment so one interpreter can serve concurrent callers.
    """
    def __init__(self, program, step_limit=DEFAULT_STEP_LIMIT):
        if step_limit < 1:
            raise ValueError('step_limit must be at least 1')
        self.program = program.ensure_valid()
        self.step_limit = step_limit

    def run(self, bindings, watch=()):
        """Execute the program and return an :class:`ExecutionResult`.

        ``branch_trace`` is the tuple of ``(index, taken)`` pairs, one
        per executed ``branch_if``: two runs with the same trace follow
        the same path. ``watched`` maps the names in ``watch`` to their
        values when the program halted, names never assigned are left out.
        """
        env = {}
        for name in self.program.inputs:
            try:
                env[name] = as_rational(bindings[name])
            except KeyError:
                raise MissingBinding('no value bound to input %s' % name, variable=name)

        def value_of(operand):
            if not isinstance(operand, str):
                return operand
            try:
                return env[operand]
            except KeyError:
                raise MissingBinding('%s read before being assigned' % operand, variable=operand)

        body = self.program.body
        trace = []
        pc = 0
        steps = 0
        while True:
            if steps >= self.step_limit:
                raise StepLimitExceeded('no halt_return within %d steps' % self.step_limit,
                                        steps=steps)
            ins = body[pc]
            steps += 1
            op = ins.opcode
            if op == 'halt_return':
                watched = dict((name, env[name]) for name in watch if name in env)
                return ExecutionResult(value_of(ins.operands[0]), steps, tuple(trace), watched)
            elif op == 'jump':
                pc = ins.jump_targets[0]
            elif op == 'branch_if':
                taken = value_of(ins.operands[0]) != 0
                trace.append((pc, taken))
                pc = ins.jump_targets[0 if taken else 1]
            elif op == 'assign':
                env[ins.target] = value_of(ins.operands[0])
                pc += 1
            elif op == 'neg':
                env[ins.target] = -value_of(ins.operands[0])
                pc += 1
            else:
                a, b = [value_of(o) for o in ins.operands]
                try:
                    env[ins.target] = _BINARY[op](a, b)
                except ZeroDivisionError:
                    raise DivisionByZero('%s by zero at instruction %d' % (op, pc), index=pc)
                pc += 1


def evaluate(program, bindings, step_limit=DEFAULT_STEP_LIMIT):
    """Value of ``program``'s output for the given input ``bindings``."""
    return Interpreter(program, step_limit).run(bindings).value
