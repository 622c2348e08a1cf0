"""Line oriented text format of rational programs.

Grammar::

    program     := line*
    line        := [statement] [comment] NEWLINE
    comment     := '#' any*
    statement   := 'inputs:' NAME* | 'output:' NAME | instruction
    instruction := INDEX ':' OPCODE [NAME] operand* ['->' INDEX+]
    operand     := NAME | LITERAL
    NAME        := [A-Za-z_][A-Za-z0-9_.]*
    LITERAL     := ['-'] DIGITS ['/' DIGITS]
    INDEX       := DIGITS

The ``inputs:`` and ``output:`` headers come first and exactly once.
Instruction indices start at 0 and increase by one. Which of
target, operands and jump targets an opcode takes is fixed by the
opcode, for example::

    inputs: A B
    output: Y
    0: floor_div Y A B
    1: halt_return Y

``serialize`` always writes literals as ``num/den``, ``parse`` also
accepts plain integers.
"""
import io
import logging
import os
import re
from fractions import Fraction

from repoze.lru import LRUCache

from ..exceptions import IRSyntaxError
from .instructions import Instruction, OPCODES
from .program import RationalProgram

log = logging.getLogger(__name__)

_NAME = re.compile(r'^[A-Za-z_][A-Za-z0-9_.]*$')
_LITERAL = re.compile(r'^-?\d+(/\d+)?$')
_TOKEN = re.compile(r'\S+')

_program_cache = LRUCache(64)


def serialize(program):
    """Text form of ``program``, parse(serialize(p)) == p."""
    lines = ['inputs: %s' % ' '.join(program.inputs).rstrip(),
             'output: %s' % program.output]
    for index, ins in enumerate(program.body):
        lines.append('%d: %s' % (index, ins))
    return '\n'.join(line.rstrip() for line in lines) + '\n'


def _tokens(line):
    code = line.split('#', 1)[0]
    return [(m.group(0), m.start() + 1) for m in _TOKEN.finditer(code)]


def _operand(token, lineno, path):
    text, column = token
    if _LITERAL.match(text):
        num, _, den = text.partition('/')
        if den and int(den) == 0:
            raise IRSyntaxError('zero denominator in literal %s' % text, lineno, column, path)
        return Fraction(int(num), int(den or 1))
    if _NAME.match(text):
        return text
    raise IRSyntaxError('bad operand %r' % text, lineno, column, path)


def _parse_instruction(tokens, expected_index, lineno, path):
    head, column = tokens[0]
    if not head.endswith(':') or not head[:-1].isdigit():
        raise IRSyntaxError('expected "<index>:", got %r' % head, lineno, column, path)
    index = int(head[:-1])
    if index != expected_index:
        raise IRSyntaxError('instruction index %d, expected %d' % (index, expected_index),
                            lineno, column, path)
    if len(tokens) < 2:
        raise IRSyntaxError('missing opcode', lineno, column + len(head), path)

    opcode, column = tokens[1]
    if opcode not in OPCODES:
        raise IRSyntaxError('unknown opcode %s' % opcode, lineno, column, path)
    has_target, n_operands, n_jumps = OPCODES[opcode]

    rest = tokens[2:]
    jumps = []
    arrows = [i for i, (text, _) in enumerate(rest) if text == '->']
    if arrows:
        arrow = arrows[0]
        jumps = rest[arrow + 1:]
        rest = rest[:arrow]
    if len(jumps) != n_jumps:
        where = jumps[0][1] if jumps else column
        raise IRSyntaxError('%s takes %d jump targets, got %d' % (opcode, n_jumps, len(jumps)),
                            lineno, where, path)
    for text, col in jumps:
        if not text.isdigit():
            raise IRSyntaxError('bad jump target %r' % text, lineno, col, path)

    target = None
    if has_target:
        if not rest:
            raise IRSyntaxError('%s needs a target' % opcode, lineno, column, path)
        (target, col), rest = rest[0], rest[1:]
        if not _NAME.match(target):
            raise IRSyntaxError('bad target %r' % target, lineno, col, path)
    if len(rest) != n_operands:
        where = rest[n_operands][1] if len(rest) > n_operands else column
        raise IRSyntaxError('%s takes %d operands, got %d' % (opcode, n_operands, len(rest)),
                            lineno, where, path)

    operands = [_operand(tok, lineno, path) for tok in rest]
    return Instruction(opcode, target, operands, [int(t) for t, _ in jumps])


def parse(text, path=None):
    """Parse the text form of a rational program.

    Raises :class:`.IRSyntaxError` with line and column on malformed
    input. The result is not validated.
    """
    inputs = None
    output = None
    body = []
    for lineno, line in enumerate(io.StringIO(text), 1):
        tokens = _tokens(line)
        if not tokens:
            continue
        head, column = tokens[0]
        if head == 'inputs:':
            if inputs is not None:
                raise IRSyntaxError('duplicate inputs header', lineno, column, path)
            for name, col in tokens[1:]:
                if not _NAME.match(name):
                    raise IRSyntaxError('bad input name %r' % name, lineno, col, path)
            inputs = [name for name, _ in tokens[1:]]
        elif head == 'output:':
            if output is not None:
                raise IRSyntaxError('duplicate output header', lineno, column, path)
            if len(tokens) != 2 or not _NAME.match(tokens[1][0]):
                raise IRSyntaxError('output header names exactly one variable',
                                    lineno, column, path)
            output = tokens[1][0]
        else:
            if inputs is None or output is None:
                raise IRSyntaxError('instructions must follow the inputs and output headers',
                                    lineno, column, path)
            body.append(_parse_instruction(tokens, len(body), lineno, path))

    if inputs is None:
        raise IRSyntaxError('missing inputs header', None, None, path)
    if output is None:
        raise IRSyntaxError('missing output header', None, None, path)
    return RationalProgram(inputs, output, body)


def read_program(path):
    """Parse the program stored at ``path``.

    Parsed programs are immutable, so they are cached by path and
    modification time.
    """
    key = (os.path.abspath(path), os.stat(path).st_mtime_ns)
    program = _program_cache.get(key)
    if program is None:
        with io.open(path, encoding='utf-8') as f:
            program = parse(f.read(), path=path)
        _program_cache.put(key, program)
        log.debug('Parsed %s: %d instructions', path, len(program))
    return program


def write_program(program, path):
    with io.open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(serialize(program))
