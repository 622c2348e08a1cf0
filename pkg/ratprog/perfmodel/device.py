"""Hardware, kernel and launch descriptions."""
import io
import logging
import re
from collections import namedtuple, OrderedDict

from ..exceptions import ProfileError

log = logging.getLogger(__name__)

#: field -> converter, in file and rational program input order.
PROFILE_FIELDS = OrderedDict([
    ('R_max', int),
    ('Z_max', int),
    ('T_max', int),
    ('B_max', int),
    ('W_max', int),
    ('num_SM', int),
    ('freq_GHz', float),
    ('mem_latency_cycles', float),
    ('departure_del_coal_cycles', float),
    ('departure_del_uncoal_cycles', float),
    ('mem_bandwidth_GBps', float),
    ('issue_cycles', float),
    ('load_bytes_per_warp', int),
    ('uncoal_per_mw', int),
])

MAX_THREADS_PER_BLOCK = 1024
WARP_SIZE = 32


class DeviceProfile(namedtuple('DeviceProfile', list(PROFILE_FIELDS))):
    """Hardware parameters of a device.

    Values are kept as given: ints and floats for the model fast path,
    :class:`~fractions.Fraction` for exact evaluations.
    """
    __slots__ = ()

    @classmethod
    def from_mapping(cls, mapping, path=None, lines=None):
        """Build and check a profile from a ``{field: value}`` mapping.

        ``lines`` optionally maps each field to the line it came from,
        for error messages.
        """
        lines = lines or {}
        unknown = sorted(set(mapping) - set(PROFILE_FIELDS))
        if unknown:
            raise ProfileError('unknown profile key %s' % unknown[0], path=path,
                               line=lines.get(unknown[0]))
        missing = [f for f in PROFILE_FIELDS if f not in mapping]
        if missing:
            raise ProfileError('missing profile keys: %s' % ', '.join(missing), path=path)

        values = {}
        for field, converter in PROFILE_FIELDS.items():
            raw = mapping[field]
            try:
                value = converter(raw) if isinstance(raw, str) else raw
            except ValueError:
                raise ProfileError('bad value for %s: %r' % (field, raw), path=path,
                                   line=lines.get(field))
            if not value > 0:
                raise ProfileError('%s must be positive, got %r' % (field, raw), path=path,
                                   line=lines.get(field))
            values[field] = value
        if values['T_max'] > MAX_THREADS_PER_BLOCK:
            raise ProfileError('T_max must not exceed %d' % MAX_THREADS_PER_BLOCK, path=path,
                               line=lines.get('T_max'))
        return cls(**values)

    def __json__(self):
        return dict(self._asdict())


_PROFILE_LINE = re.compile(r'^\s*([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(\S+)\s*$')


def parse_profile(text, path=None):
    """Parse ``key=value`` lines, ``#`` starts a comment."""
    mapping = {}
    lines = {}
    for lineno, line in enumerate(io.StringIO(text), 1):
        line = line.split('#', 1)[0]
        if not line.strip():
            continue
        match = _PROFILE_LINE.match(line)
        if match is None:
            raise ProfileError('expected key=value', path=path, line=lineno)
        key, value = match.groups()
        if key in mapping:
            raise ProfileError('duplicate key %s' % key, path=path, line=lineno)
        mapping[key] = value
        lines[key] = lineno
    return DeviceProfile.from_mapping(mapping, path=path, lines=lines)


def read_profile(path):
    with io.open(path, encoding='utf-8') as f:
        profile = parse_profile(f.read(), path=path)
    log.debug('Loaded device profile %s', path)
    return profile


def format_profile(profile):
    return ''.join('%s=%r\n' % (k, v) for k, v in profile._asdict().items())


_METRIC_FIELDS = ['regs_per_thread', 'shared_words_per_block', 'comp_insts_per_thread',
                  'mem_insts_per_thread', 'uncoal_mem_insts_per_thread',
                  'coal_mem_insts_per_thread', 'synch_insts_per_block', 'total_blocks']


class KernelMetrics(namedtuple('KernelMetrics', _METRIC_FIELDS)):
    """Low level metrics of a kernel at one data size and configuration."""
    __slots__ = ()

    @classmethod
    def build(cls, regs_per_thread, shared_words_per_block, comp_insts_per_thread,
              uncoal_mem_insts_per_thread, coal_mem_insts_per_thread, synch_insts_per_block,
              total_blocks, mem_insts_per_thread=None):
        """Like the constructor, ``mem_insts_per_thread`` defaults to coalesced plus
        non coalesced accesses."""
        if mem_insts_per_thread is None:
            mem_insts_per_thread = uncoal_mem_insts_per_thread + coal_mem_insts_per_thread
        return cls(regs_per_thread, shared_words_per_block, comp_insts_per_thread,
                   mem_insts_per_thread, uncoal_mem_insts_per_thread,
                   coal_mem_insts_per_thread, synch_insts_per_block, total_blocks)

    def check(self):
        for name, value in self._asdict().items():
            if value < 0:
                raise ValueError('%s must not be negative, got %r' % (name, value))
        split = self.uncoal_mem_insts_per_thread + self.coal_mem_insts_per_thread
        if abs(split - self.mem_insts_per_thread) > 1e-9 * max(1, abs(self.mem_insts_per_thread)):
            raise ValueError('coalesced plus non coalesced accesses (%r) differ from '
                             'memory instructions (%r)' % (split, self.mem_insts_per_thread))
        return self


METRIC_NAMES = tuple(_METRIC_FIELDS)
#: Metrics a rational program needs, memory instructions are the sum of two of them.
MODEL_METRICS = tuple(m for m in METRIC_NAMES if m != 'mem_insts_per_thread')


class LaunchConfig(namedtuple('LaunchConfig', 'bx by bz')):
    """Thread block shape ``bx * by * bz``."""
    __slots__ = ()

    def __new__(cls, bx, by=1, bz=1):
        bx, by, bz = int(bx), int(by), int(bz)
        if min(bx, by, bz) < 1:
            raise ValueError('block dimensions must be at least 1: %dx%dx%d' % (bx, by, bz))
        if bx * by * bz > MAX_THREADS_PER_BLOCK:
            raise ValueError('%dx%dx%d exceeds %d threads' % (bx, by, bz, MAX_THREADS_PER_BLOCK))
        return super(LaunchConfig, cls).__new__(cls, bx, by, bz)

    @classmethod
    def parse(cls, text):
        """``"16x2"`` or ``"8x4x2"``."""
        parts = text.lower().split('x')
        if not 1 <= len(parts) <= 3:
            raise ValueError('bad block shape %r' % text)
        try:
            return cls(*[int(p) for p in parts])
        except ValueError:
            raise ValueError('bad block shape %r' % text)

    @property
    def T(self):
        return self.bx * self.by * self.bz

    def __str__(self):
        if self.bz == 1:
            return '%dx%d' % (self.bx, self.by)
        return '%dx%dx%d' % self

    def __json__(self):
        return str(self)
