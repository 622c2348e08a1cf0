"""Exceptions raised by RatProg.

Every error carries a human readable ``msg`` plus the structured context
it is about, so the command line can point at the file, line or flag at
fault.
"""


class RatProgError(Exception):
    """Base class for every error raised by RatProg."""
    def __init__(self, msg, **context):
        super(RatProgError, self).__init__(msg)
        self.msg = msg
        self.context = context


class UsageError(RatProgError):
    """The command line was used incorrectly."""


class RatProgConfigError(RatProgError):
    """A configuration option is missing or malformed."""


class IRSyntaxError(RatProgError):
    """Malformed textual IR."""
    def __init__(self, msg, line=None, column=None, path=None):
        super(IRSyntaxError, self).__init__(msg, line=line, column=column, path=path)
        self.line = line
        self.column = column
        self.path = path

    def __str__(self):
        where = self.path or '<string>'
        if self.line is not None:
            where += ':%d' % self.line
            if self.column is not None:
                where += ':%d' % self.column
        return '%s: %s' % (where, self.msg)


class InvalidProgram(RatProgError):
    """An operation that requires a valid rational program got an invalid one."""
    def __init__(self, msg, report=None):
        super(InvalidProgram, self).__init__(msg, report=report)
        self.report = report


class StepLimitExceeded(RatProgError):
    """The interpreter ran out of steps, the program may not terminate."""
    def __init__(self, msg, steps=None):
        super(StepLimitExceeded, self).__init__(msg, steps=steps)
        self.steps = steps


class MissingBinding(RatProgError, KeyError):
    """A variable was read without a value."""
    def __init__(self, msg, variable=None):
        super(MissingBinding, self).__init__(msg, variable=variable)
        self.variable = variable

    def __str__(self):
        return self.msg


class DivisionByZero(RatProgError, ZeroDivisionError):
    """Euclidean, floor or ceil division by zero while interpreting."""
    def __init__(self, msg, index=None):
        super(DivisionByZero, self).__init__(msg, index=index)
        self.index = index


class DimensionMismatch(RatProgError, ValueError):
    """A point does not have as many coordinates as the function has variables."""


class DenominatorNearZero(RatProgError, ZeroDivisionError):
    """A rational function was evaluated too close to a pole."""
    def __init__(self, msg, point=None):
        super(DenominatorNearZero, self).__init__(msg, point=point)
        self.point = point


class DegenerateFit(RatProgError):
    """The fitted denominator vanishes identically."""


class SVDNonConvergence(RatProgError):
    """The singular value decomposition did not converge."""
    def __init__(self, msg, iterations=None):
        super(SVDNonConvergence, self).__init__(msg, iterations=iterations)
        self.iterations = iterations


class ZeroOccupancy(RatProgError):
    """No thread block of the configuration can be resident: it fails to launch."""
    def __init__(self, msg, config=None):
        super(ZeroOccupancy, self).__init__(msg, config=config)
        self.config = config


class FileFormatError(RatProgError):
    """A text file could not be parsed, knows where."""
    def __init__(self, msg, path=None, line=None):
        super(FileFormatError, self).__init__(msg, path=path, line=line)
        self.path = path
        self.line = line

    def __str__(self):
        if self.path is None:
            return self.msg
        if self.line is None:
            return '%s: %s' % (self.path, self.msg)
        return '%s:%d: %s' % (self.path, self.line, self.msg)


class ProfileError(FileFormatError):
    """Malformed device profile."""


class SchemaError(FileFormatError):
    """Malformed measurement file."""


class AllMetricsFailed(RatProgError):
    """Not a single metric could be fitted."""
    def __init__(self, msg, failures=None):
        super(AllMetricsFailed, self).__init__(msg, failures=failures)
        self.failures = failures or {}


class NoFeasibleConfig(RatProgError):
    """Every configuration of the search space is infeasible."""


class IncompleteModels(RatProgError):
    """Some metric needed by the performance model has neither a model nor a constant."""
    def __init__(self, msg, missing=None):
        super(IncompleteModels, self).__init__(msg, missing=missing)
        self.missing = tuple(missing or ())
