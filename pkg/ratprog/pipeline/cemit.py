"""Lowering of rational programs to C.

Programs whose literals are all integers are lowered to ``int64_t``
arithmetic, the others to ``double``. Every variable becomes a local
of the entry function::

    int rp_eval(T in_1, ..., T in_n, T *out);

which stores the output in ``*out`` and returns 0, or returns 1 on a
division by zero. Each instruction is a labelled statement and jumps
are ``goto``. Floor, ceiling and Euclidean divisions go through the
``rp_*`` helpers emitted in front of the entry function; the integer
helpers correct C's truncating division for negative operands.
"""
import logging
import re

from ..ir.instructions import is_variable

log = logging.getLogger(__name__)

ENTRY_POINT = 'rp_eval'

_INT_HELPERS = '''\
static int64_t rp_floor_div(int64_t a, int64_t b)
{
    int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        q -= 1;
    return q;
}

static int64_t rp_ceil_div(int64_t a, int64_t b)
{
    return -rp_floor_div(-a, b);
}

static int64_t rp_euclid_quot(int64_t a, int64_t b)
{
    return b > 0 ? rp_floor_div(a, b) : -rp_floor_div(a, -b);
}
'''

_REAL_HELPERS = '''\
static double rp_floor_div(double a, double b)
{
    return floor(a / b);
}

static double rp_ceil_div(double a, double b)
{
    return ceil(a / b);
}

static double rp_euclid_quot(double a, double b)
{
    return b > 0 ? floor(a / b) : -floor(a / -b);
}
'''

_DIVISIONS = {
    'floor_div': 'rp_floor_div(%s, %s)',
    'ceil_div': 'rp_ceil_div(%s, %s)',
    'euclid_quot': 'rp_euclid_quot(%s, %s)',
    'euclid_rem': '%s - rp_euclid_quot(%s, %s) * %s',
}

_SIMPLE = {
    'add': '%s + %s',
    'sub': '%s - %s',
    'mul': '%s * %s',
    'cmp_eq': '(%s == %s)',
    'cmp_lt': '(%s < %s)',
}

_C_UNSAFE = re.compile(r'[^A-Za-z0-9_]')


def is_integer_program(program):
    return all(lit.denominator == 1 for ins in program for lit in ins.literals)


def c_identifiers(program):
    """Deterministic mapping of program variables to C identifiers."""
    names = list(program.inputs)
    for ins in program:
        for name in (ins.target, ) + ins.reads:
            if name is not None and name not in names:
                names.append(name)
    mapping, used = {}, set()
    for name in names:
        base = 'v_' + _C_UNSAFE.sub('_', name)
        identifier, suffix = base, 1
        while identifier in used:
            suffix += 1
            identifier = '%s_%d' % (base, suffix)
        used.add(identifier)
        mapping[name] = identifier
    return mapping


def _literal(value, integer):
    if integer:
        return 'INT64_C(%d)' % value.numerator
    if value.denominator == 1:
        return '%d.0' % value.numerator
    return '(%d.0 / %d.0)' % (value.numerator, value.denominator)


def _main(program, ctype):
    convert = 'strtoll(argv[%d], NULL, 10)' if ctype == 'int64_t' else 'strtod(argv[%d], NULL)'
    printer = 'printf("%lld\\n", (long long)out);' if ctype == 'int64_t' else \
        'printf("%.17g\\n", out);'
    lines = ['', 'int main(int argc, char **argv)', '{',
             '    %s out;' % ctype,
             '    if (argc != %d) {' % (len(program.inputs) + 1),
             '        fprintf(stderr, "usage: %%s %s\\n", argv[0]);' % ' '.join(program.inputs),
             '        return 2;',
             '    }',
             '    if (%s(%s) != 0) {' % (ENTRY_POINT, ', '.join(
                 [convert % (i + 1) for i in range(len(program.inputs))] + ['&out'])),
             '        fprintf(stderr, "division by zero\\n");',
             '        return 1;',
             '    }',
             '    ' + printer,
             '    return 0;',
             '}']
    return lines


def emit_c_source(program, main=False):
    """C translation unit evaluating ``program``.

    With ``main`` a driver reading the inputs from the command line and
    printing the output is appended.
    """
    program.ensure_valid()
    integer = is_integer_program(program)
    ctype = 'int64_t' if integer else 'double'
    names = c_identifiers(program)
    targets = set(j for ins in program for j in ins.jump_targets)

    def operand(op):
        return names[op] if is_variable(op) else _literal(op, integer)

    lines = ['/* Generated rational program: %s = f(%s) */'
             % (program.output, ', '.join(program.inputs)),
             '#include <stdint.h>']
    if not integer:
        lines.append('#include <math.h>')
    if main:
        lines.extend(['#include <stdio.h>', '#include <stdlib.h>'])
    lines.append('')
    lines.append(_INT_HELPERS if integer else _REAL_HELPERS)

    params = ['%s %s' % (ctype, names[name]) for name in program.inputs]
    lines.append('int %s(%s)' % (ENTRY_POINT, ', '.join(params + ['%s *out' % ctype])))
    lines.append('{')
    for name, identifier in names.items():
        if name not in program.inputs:
            lines.append('    %s %s = 0;' % (ctype, identifier))
    lines.append('')

    for index, ins in enumerate(program):
        label = 'L%d: ' % index if index in targets else ''
        ops = [operand(o) for o in ins.operands]
        op = ins.opcode
        if op == 'halt_return':
            statement = '*out = %s; return 0;' % ops[0]
        elif op == 'jump':
            statement = 'goto L%d;' % ins.jump_targets[0]
        elif op == 'branch_if':
            statement = 'if (%s != 0) goto L%d; else goto L%d;' % ((ops[0], ) + ins.jump_targets)
        elif op == 'assign':
            statement = '%s = %s;' % (names[ins.target], ops[0])
        elif op == 'neg':
            statement = '%s = -%s;' % (names[ins.target], ops[0])
        elif op in _DIVISIONS:
            a, b = ops
            args = (a, a, b, b) if op == 'euclid_rem' else (a, b)
            statement = 'if (%s == 0) return 1; %s = %s;' % (b, names[ins.target],
                                                             _DIVISIONS[op] % args)
        else:
            statement = '%s = %s;' % (names[ins.target], _SIMPLE[op] % tuple(ops))
        lines.append('%s    %s' % (label, statement) if label else '    ' + statement)
    lines.append('}')

    if main:
        lines.extend(_main(program, ctype))
    log.debug('Lowered %d instructions to C (%s)', len(program), ctype)
    return '\n'.join(lines) + '\n'
