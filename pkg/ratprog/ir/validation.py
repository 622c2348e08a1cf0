"""Static checks of rational programs."""
from collections import namedtuple

from .instructions import OPCODES, COMPARISONS, is_variable

FORBIDDEN_DIVISION = 'forbidden division'
UNKNOWN_OPCODE = 'unknown opcode'
ARITY = 'arity'
UNDECLARED_FREE_VARIABLE = 'undeclared free variable'
UNUSED_INPUT = 'unused input'
ASSIGNED_INPUT = 'assigned input'
BAD_JUMP_TARGET = 'bad jump target'
HALT_COUNT = 'halt count'
WRONG_OUTPUT = 'wrong output'
NON_BOOLEAN_BRANCH = 'non boolean branch'
FALLS_OFF_END = 'falls off end'


class Violation(namedtuple('Violation', 'kind message index')):
    __slots__ = ()

    def __str__(self):
        if self.index is None:
            return '%s: %s' % (self.kind, self.message)
        return '%s at %d: %s' % (self.kind, self.index, self.message)

    def __json__(self):
        return {'kind': self.kind, 'message': self.message, 'index': self.index}


class ValidationReport(object):
    """Outcome of :func:`validate`.

    ``violations`` is empty iff the program is a well formed rational
    program. ``metadata`` carries non fatal facts, currently
    ``output_may_be_non_integer``.
    """
    def __init__(self, violations, metadata):
        self.violations = tuple(violations)
        self.metadata = dict(metadata)

    @property
    def valid(self):
        return not self.violations

    def __len__(self):
        return len(self.violations)

    def kinds(self):
        return [v.kind for v in self.violations]

    def __json__(self):
        return {'valid': self.valid,
                'violations': list(self.violations),
                'metadata': self.metadata}

    def __repr__(self):
        return '<ValidationReport %s>' % ('valid' if self.valid else
                                          '%d violations' % len(self.violations))


def validate(program):
    """Check ``program`` against the definition of a rational program.

    Never raises on malformed programs, every problem found becomes a
    :class:`Violation` of the returned :class:`ValidationReport`.
    """
    violations = []
    size = len(program.body)
    halts = []
    comparison_targets = set(i.target for i in program.body if i.opcode in COMPARISONS)

    for index, ins in enumerate(program.body):
        shape = OPCODES.get(ins.opcode)
        if shape is None:
            if 'div' in ins.opcode:
                violations.append(Violation(FORBIDDEN_DIVISION,
                                            '%s is not an integer part division' % ins.opcode,
                                            index))
            else:
                violations.append(Violation(UNKNOWN_OPCODE, ins.opcode, index))
            continue

        has_target, n_operands, n_jumps = shape
        if (ins.target is not None) != has_target or len(ins.operands) != n_operands \
                or len(ins.jump_targets) != n_jumps:
            violations.append(Violation(ARITY, 'malformed %s' % ins.opcode, index))
            continue

        for jt in ins.jump_targets:
            if not 0 <= jt < size:
                violations.append(Violation(BAD_JUMP_TARGET, 'target %d out of range' % jt, index))

        if ins.opcode == 'branch_if':
            condition = ins.operands[0]
            if not is_variable(condition) or condition not in comparison_targets:
                violations.append(Violation(NON_BOOLEAN_BRANCH,
                                            '%s is not a comparison result' % (condition, ),
                                            index))
        elif ins.opcode == 'halt_return':
            halts.append(index)
            if ins.operands[0] != program.output:
                violations.append(Violation(WRONG_OUTPUT,
                                            'returns %s instead of %s' % (ins.operands[0],
                                                                          program.output),
                                            index))

    if len(halts) != 1:
        violations.append(Violation(HALT_COUNT,
                                    'expected exactly one halt_return, found %d' % len(halts),
                                    None))

    declared = set(program.inputs)
    for name in sorted(program.free_variables - declared):
        violations.append(Violation(UNDECLARED_FREE_VARIABLE, name, None))
    for name in program.inputs:
        if name in program.assigned_variables:
            violations.append(Violation(ASSIGNED_INPUT, name, None))
        elif name not in program.read_variables:
            violations.append(Violation(UNUSED_INPUT, name, None))

    if size == 0 or program.body[-1].opcode not in ('jump', 'halt_return'):
        violations.append(Violation(FALLS_OFF_END, 'last instruction does not transfer control',
                                    size - 1 if size else None))

    non_integer = any(lit.denominator != 1 for ins in program.body for lit in ins.literals)
    return ValidationReport(violations, {'output_may_be_non_integer': non_integer})
