"""JSON encoding functions."""

import types
from fractions import Fraction
from json import JSONEncoder as _JSONEncoder

import numpy as np

import logging
log = logging.getLogger(__name__)


class JsonEncodeError(Exception):
    """JSON Encode error"""


class JSONEncoder(_JSONEncoder):
    """RatProg custom JSONEncoder.

    Provides support for encoding objects commonly produced by RatProg, like:

        - Fractions, encoded as IR literals (``"7/2"``)
        - numpy scalars and arrays
        - Generators, tuples and sets

    Support for additional types is provided through the ``__json__`` method
    that will be called on the object by the JSONEncoder when provided and through
    the ability to register custom encoder for specific types using
    :meth:`.JSONEncoder.register_custom_encoder`.

    Keys are always sorted so that reports are byte-identical across runs.
    """
    def __init__(self, **kwargs):
        self._registered_types_map = {}
        self._registered_types_list = tuple()

        kwargs = self.configure(**kwargs)
        kwargs['sort_keys'] = True
        super(JSONEncoder, self).__init__(**kwargs)

    def configure(self, custom_encoders=None, **kwargs):
        """``custom_encoders`` is a dictionary ``{type: encode_func}`` of
        encoders to register right away."""
        if custom_encoders is not None:
            for type_, encoder in custom_encoders.items():
                self.register_custom_encoder(type_, encoder)
        return kwargs

    def register_custom_encoder(self, objtype, encoder):
        """Register a custom encoder for the given type.

        Instead of using standard behavior for encoding the given type to JSON, the
        ``encoder`` will used instead. ``encoder`` must be a callable that takes
        the object as argument and returns an object that can be encoded in JSON (usually a dict).

        """
        if objtype in self._registered_types_map:
            log.warning('%s type already registered for a custom encoder, replacing it', objtype)

        self._registered_types_map[objtype] = encoder
        # Append to head, so we find first the last registered types
        self._registered_types_list = (objtype, ) + self._registered_types_list

    def default(self, obj):
        if isinstance(obj, self._registered_types_list):
            for type_, encoder in self._registered_types_map.items():
                if isinstance(obj, type_):
                    return encoder(obj)
        elif hasattr(obj, '__json__') and callable(obj.__json__):
            return obj.__json__()
        elif isinstance(obj, Fraction):
            return '%d/%d' % (obj.numerator, obj.denominator)
        elif isinstance(obj, np.integer):
            return int(obj)
        elif isinstance(obj, np.floating):
            return float(obj)
        elif isinstance(obj, np.ndarray):
            return obj.tolist()
        elif isinstance(obj, (set, frozenset)):
            return sorted(obj)
        elif isinstance(obj, types.GeneratorType):
            return list(obj)
        return _JSONEncoder.default(self, obj)


_default_encoder = JSONEncoder(indent=None)
_pretty_encoder = JSONEncoder(indent=2)


def encode(obj, encoder=None, pretty=False):
    """Return a JSON string representation of a Python object."""
    if encoder is None:
        encoder = _pretty_encoder if pretty else _default_encoder

    try:
        return encoder.encode(obj)
    except TypeError as e:
        raise JsonEncodeError(str(e))
