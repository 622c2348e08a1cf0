"""Three-address instructions of rational programs."""
from collections import namedtuple
from fractions import Fraction

from .rational import as_rational, format_rational

#: opcode -> (has target, number of operands, number of jump targets)
OPCODES = {
    'assign': (True, 1, 0),
    'neg': (True, 1, 0),
    'add': (True, 2, 0),
    'sub': (True, 2, 0),
    'mul': (True, 2, 0),
    'euclid_quot': (True, 2, 0),
    'euclid_rem': (True, 2, 0),
    'floor_div': (True, 2, 0),
    'ceil_div': (True, 2, 0),
    'cmp_eq': (True, 2, 0),
    'cmp_lt': (True, 2, 0),
    'branch_if': (False, 1, 2),
    'jump': (False, 0, 1),
    'halt_return': (False, 1, 0),
}

ARITHMETIC = frozenset(['assign', 'neg', 'add', 'sub', 'mul',
                        'euclid_quot', 'euclid_rem', 'floor_div', 'ceil_div'])
COMPARISONS = frozenset(['cmp_eq', 'cmp_lt'])
CONTROL = frozenset(['branch_if', 'jump', 'halt_return'])


def is_variable(operand):
    return isinstance(operand, str)


class Instruction(namedtuple('Instruction', 'opcode target operands jump_targets')):
    """A single three-address instruction.

    ``operands`` holds variable names (``str``) and exact literals
    (:class:`~fractions.Fraction`). ``branch_if`` continues at
    ``jump_targets[0]`` when its operand is non zero, at
    ``jump_targets[1]`` otherwise.

    Unknown opcodes are accepted here so that :func:`.validate` can
    report them.
    """
    __slots__ = ()

    def __new__(cls, opcode, target=None, operands=(), jump_targets=()):
        operands = tuple(op if is_variable(op) else as_rational(op) for op in operands)
        jump_targets = tuple(int(j) for j in jump_targets)
        return super(Instruction, cls).__new__(cls, opcode, target, operands, jump_targets)

    @property
    def reads(self):
        return tuple(op for op in self.operands if is_variable(op))

    @property
    def literals(self):
        return tuple(op for op in self.operands if isinstance(op, Fraction))

    @property
    def is_terminator(self):
        return self.opcode in CONTROL

    def __str__(self):
        parts = [self.opcode]
        if self.target is not None:
            parts.append(self.target)
        parts.extend(op if is_variable(op) else format_rational(op) for op in self.operands)
        if self.jump_targets:
            parts.append('->')
            parts.extend(str(j) for j in self.jump_targets)
        return ' '.join(parts)


def assign(target, value):
    return Instruction('assign', target, (value, ))


def neg(target, value):
    return Instruction('neg', target, (value, ))


def binary(opcode, target, a, b):
    return Instruction(opcode, target, (a, b))


def branch_if(condition, if_true, if_false):
    return Instruction('branch_if', None, (condition, ), (if_true, if_false))


def jump(to):
    return Instruction('jump', None, (), (to, ))


def halt_return(variable):
    return Instruction('halt_return', None, (variable, ))
