"""JSON sidecar of a fitted function.

Schema::

    {
      "variables": ["N", "bx", "by"],
      "bounds": {"num": [2, 2, 2], "den": [1, 1, 1]},
      "num_basis": [[0, 0, 0], ...],
      "den_basis": [[0, 0, 0], ...],
      "num_coeffs": ["3/2", ...],
      "den_coeffs": ["1/1", ...],
      "report": {"residual_norm": ..., ...}
    }

Coefficients are written as exact rational literals of the binary64
values, so loading a sidecar restores the very same floats.
"""
from fractions import Fraction

from ..exceptions import SchemaError
from ..ir.rational import format_rational
from .basis import DegreeBounds
from .fitting import FitReport
from .polynomial import Polynomial, RationalFunction

_KEYS = ('variables', 'bounds', 'num_basis', 'den_basis', 'num_coeffs', 'den_coeffs')


def _literals(coefficients):
    return [format_rational(float(c)) for c in coefficients]


def dump_sidecar(f, report=None, bounds=None):
    """Document describing the fitted ``f``, ready for :func:`ratprog.jsonify.encode`."""
    data = {
        'variables': list(f.variables),
        'bounds': bounds.__json__() if bounds is not None else None,
        'num_basis': [list(e) for e in f.numerator.basis],
        'den_basis': [list(e) for e in f.denominator.basis],
        'num_coeffs': _literals(f.numerator.coefficients),
        'den_coeffs': _literals(f.denominator.coefficients),
        'report': report.__json__() if report is not None else None,
    }
    return data


def load_sidecar(data, path=None):
    """Inverse of :func:`dump_sidecar`: ``(function, report, bounds)``."""
    missing = [k for k in _KEYS if k not in data]
    if missing:
        raise SchemaError('sidecar misses %s' % ', '.join(missing), path=path)
    try:
        variables = data['variables']
        numerator = Polynomial(variables, data['num_basis'],
                               [float(Fraction(c)) for c in data['num_coeffs']])
        denominator = Polynomial(variables, data['den_basis'],
                                 [float(Fraction(c)) for c in data['den_coeffs']])
        bounds = data['bounds']
        if bounds is not None:
            bounds = DegreeBounds(bounds['num'], bounds['den'])
        report = data.get('report')
        if report is not None:
            report = FitReport.from_json(report)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise SchemaError('malformed sidecar: %s' % e, path=path)
    return RationalFunction(numerator, denominator), report, bounds
