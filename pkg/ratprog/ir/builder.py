"""Label based construction of rational programs."""
import logging
from fractions import Fraction

from .instructions import Instruction, is_variable
from .program import RationalProgram
from .rational import as_rational

log = logging.getLogger(__name__)

#: Resolution of quotients emitted with :meth:`ProgramBuilder.quotient`.
QUOTIENT_RESOLUTION = 10 ** 24


class Label(object):
    __slots__ = ('name', 'index')

    def __init__(self, name):
        self.name = name
        self.index = None

    def __repr__(self):
        return '<Label %s @%s>' % (self.name, self.index)


class ProgramBuilder(object):
    """Emits instructions with symbolic jump targets.

    Every value leaving the program goes through :meth:`return_value`,
    which assigns the output and jumps to a single exit where the only
    ``halt_return`` lives::

        b = ProgramBuilder(['A', 'B'], 'Y')
        b.min_of('Y', 'A', 'B')
        b.return_value('Y')
        program = b.build()
    """
    def __init__(self, inputs, output, temp_prefix='t'):
        self.inputs = list(inputs)
        self.output = output
        self._body = []
        self._temp_prefix = temp_prefix
        self._temps = 0
        self._labels = 0
        self._exit = self.label('exit')

    def temp(self, hint=None):
        self._temps += 1
        return '%s%d_%s' % (self._temp_prefix, self._temps, hint) if hint else \
            '%s%d' % (self._temp_prefix, self._temps)

    def label(self, name='L'):
        self._labels += 1
        return Label('%s%d' % (name, self._labels))

    def mark(self, label):
        if label.index is not None:
            raise ValueError('label %s placed twice' % label.name)
        label.index = len(self._body)

    def emit(self, opcode, target=None, operands=(), jump_targets=()):
        self._body.append((opcode, target, tuple(operands), tuple(jump_targets)))
        return target

    def assign(self, target, value):
        return self.emit('assign', target, (value, ))

    def neg(self, target, value):
        return self.emit('neg', target, (value, ))

    def op(self, opcode, a, b, target=None):
        """Emit a binary ``opcode`` into ``target`` (a fresh temporary by default)."""
        return self.emit(opcode, target or self.temp(), (a, b))

    def add(self, a, b, target=None):
        return self.op('add', a, b, target)

    def sub(self, a, b, target=None):
        return self.op('sub', a, b, target)

    def mul(self, a, b, target=None):
        return self.op('mul', a, b, target)

    def cmp_lt(self, a, b, target=None):
        return self.op('cmp_lt', a, b, target)

    def cmp_eq(self, a, b, target=None):
        return self.op('cmp_eq', a, b, target)

    def branch_if(self, condition, if_true, if_false):
        self.emit('branch_if', None, (condition, ), (if_true, if_false))

    def jump(self, to):
        self.emit('jump', None, (), (to, ))

    def return_value(self, value):
        if value != self.output:
            self.assign(self.output, value)
        self.jump(self._exit)

    def min_of(self, target, *values):
        """``target := min(values)`` through comparisons and branches."""
        values = list(values)
        if not values:
            raise ValueError('min_of needs at least one value')
        self.assign(target, values[0])
        for value in values[1:]:
            smaller = self.cmp_lt(value, target, target=self.temp('lt'))
            take, done = self.label('min'), self.label('min_done')
            self.branch_if(smaller, take, done)
            self.mark(take)
            self.assign(target, value)
            self.mark(done)
        return target

    def quotient(self, a, b, target=None, resolution=QUOTIENT_RESOLUTION):
        """Emit ``a / b``.

        Literal divisors are exact (multiplication by the inverse),
        otherwise the quotient is truncated to ``1/resolution``:
        ``floor_div(a * resolution, b) * (1 / resolution)``.
        """
        target = target or self.temp('q')
        if not is_variable(b):
            b = as_rational(b)
            if b == 0:
                raise ZeroDivisionError('quotient by the literal 0')
            return self.mul(a, 1 / b, target=target)
        scaled = self.mul(a, Fraction(resolution), target=self.temp())
        whole = self.op('floor_div', scaled, b, target=self.temp())
        return self.mul(whole, Fraction(1, resolution), target=target)

    def guard(self, condition, value):
        """Return ``value`` when ``condition`` (a comparison result) is non zero."""
        bail, go_on = self.label('guard'), self.label('guard_ok')
        self.branch_if(condition, bail, go_on)
        self.mark(bail)
        self.return_value(value)
        self.mark(go_on)

    def guard_zero(self, operand, value):
        """Return ``value`` when ``operand`` is zero."""
        self.guard(self.cmp_eq(operand, 0, target=self.temp('zero')), value)

    def build(self):
        """Resolve labels and produce the :class:`.RationalProgram`."""
        self.mark(self._exit)
        body = self._body + [('halt_return', None, (self.output, ), ())]
        resolved = []
        for opcode, target, operands, jumps in body:
            targets = []
            for jt in jumps:
                if isinstance(jt, Label):
                    if jt.index is None:
                        raise ValueError('label %s never placed' % jt.name)
                    jt = jt.index
                targets.append(jt)
            resolved.append(Instruction(opcode, target, operands, targets))
        self._body = None
        log.debug('Built program with %d instructions', len(resolved))
        return RationalProgram(self.inputs, self.output, resolved)
