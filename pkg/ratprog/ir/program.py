"""The rational program container."""
from threading import Lock

from ..caching import cached_property
from .instructions import Instruction


class RationalProgram(object):
    """A rational program in ``inputs`` evaluating ``output``.

    The program is immutable once built: ``inputs`` and ``body`` are
    tuples and derived data (validation report, control flow graph) is
    computed once and shared, so a program can be evaluated from many
    threads at once.
    """
    def __init__(self, inputs, output, body):
        self._inputs = tuple(inputs)
        self._output = output
        self._body = tuple(i if isinstance(i, Instruction) else Instruction(*i) for i in body)

    @property
    def inputs(self):
        return self._inputs

    @property
    def output(self):
        return self._output

    @property
    def body(self):
        return self._body

    def __len__(self):
        return len(self._body)

    def __iter__(self):
        return iter(self._body)

    def __getitem__(self, index):
        return self._body[index]

    def __eq__(self, other):
        if not isinstance(other, RationalProgram):
            return NotImplemented
        return (self._inputs, self._output, self._body) == (other._inputs, other._output, other._body)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._inputs, self._output, self._body))

    def __repr__(self):
        return '<RationalProgram (%s) -> %s, %d instructions>' % (
            ', '.join(self._inputs), self._output, len(self._body))

    @cached_property
    def assigned_variables(self):
        return frozenset(i.target for i in self._body if i.target is not None)

    @cached_property
    def read_variables(self):
        return frozenset(v for i in self._body for v in i.reads)

    @cached_property
    def free_variables(self):
        """Variables read but never assigned."""
        return self.read_variables - self.assigned_variables

    @cached_property
    def report(self):
        from .validation import validate
        return validate(self)
    report.context = Lock()

    @cached_property
    def cfg(self):
        from .cfg import build_cfg
        return build_cfg(self)
    cfg.context = Lock()

    def ensure_valid(self):
        """Raise :class:`.InvalidProgram` unless the program validates."""
        from ..exceptions import InvalidProgram
        if not self.report.valid:
            raise InvalidProgram('invalid rational program: %s' % '; '.join(
                str(v) for v in self.report.violations), report=self.report)
        return self

    def __json__(self):
        from .textual import serialize
        return serialize(self)
