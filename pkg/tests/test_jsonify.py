import json
from fractions import Fraction

import numpy as np
import pytest

from ratprog import jsonify
from ratprog.perfmodel import LaunchConfig


class Foo(object):
    def __init__(self, bar):
        self.bar = bar


class Bar(object):
    def __init__(self, bar):
        self.bar = bar

    def __json__(self):
        return 'bar-%s' % self.bar


def test_string():
    assert jsonify.encode("string") == '"string"'


def test_dictionary_keys_are_sorted():
    assert jsonify.encode({'b': 2, 'a': 1}) == '{"a": 1, "b": 2}'


def test_pretty():
    assert jsonify.encode({'a': [1]}, pretty=True) == '{\n  "a": [\n    1\n  ]\n}'


def test_fraction():
    assert jsonify.encode(Fraction(7, 2)) == '"7/2"'
    assert jsonify.encode(Fraction(-3)) == '"-3/1"'


def test_numpy():
    encoded = jsonify.encode({'n': np.int64(3), 'x': np.float64(0.5),
                              'a': np.array([1.0, 2.0])})
    assert json.loads(encoded) == {'n': 3, 'x': 0.5, 'a': [1.0, 2.0]}


def test_set_and_generator():
    assert jsonify.encode(set([3, 1, 2])) == '[1, 2, 3]'
    assert jsonify.encode(x * 2 for x in range(3)) == '[0, 2, 4]'


def test_json_method():
    assert jsonify.encode([Bar(1), Bar(2)]) == '["bar-1", "bar-2"]'


def test_launch_config_is_a_tuple():
    assert jsonify.encode(LaunchConfig(16, 2)) == '[16, 2, 1]'
    assert jsonify.encode(str(LaunchConfig(16, 2))) == '"16x2"'


def test_unknown_object():
    with pytest.raises(jsonify.JsonEncodeError):
        jsonify.encode(Foo('bar'))


def test_custom_encoder():
    encoder = jsonify.JSONEncoder(custom_encoders={Foo: lambda o: {'foo': o.bar}})
    assert jsonify.encode(Foo('bar'), encoder=encoder) == '{"foo": "bar"}'


def test_custom_encoder_replaced(caplog):
    encoder = jsonify.JSONEncoder(custom_encoders={Foo: lambda o: 1})
    encoder.register_custom_encoder(Foo, lambda o: 2)
    assert jsonify.encode(Foo('bar'), encoder=encoder) == '2'
    assert 'already registered' in caplog.text
