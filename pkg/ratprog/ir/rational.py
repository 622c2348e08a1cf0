"""Exact rational helpers.

Values handled by the interpreter are :class:`fractions.Fraction`, which
keeps every number gcd-reduced with a positive denominator.
"""
import math
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rational(value):
    """Convert ``value`` to an exact :class:`~fractions.Fraction`.

    Integers, fractions and ``"num/den"`` strings convert exactly; floats
    go through their shortest round-trip decimal (``0.1`` is ``1/10``).
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError('Cannot represent %r as a rational' % value)
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    if hasattr(value, 'item'):
        # numpy scalars
        return as_rational(value.item())
    raise TypeError('Cannot represent %r as a rational' % (value, ))


def format_rational(value):
    """Render ``value`` as an IR literal: ``num/den``."""
    value = as_rational(value)
    return '%d/%d' % (value.numerator, value.denominator)


def euclid_divmod(a, b):
    """Euclidean quotient and remainder: ``a = q*b + r`` with ``0 <= r < |b|``."""
    if b == 0:
        raise ZeroDivisionError('euclidean division by zero')
    a = Fraction(a)
    if b > 0:
        q = math.floor(a / b)
    else:
        q = -math.floor(a / -b)
    return Fraction(q), a - q * b


def floor_div(a, b):
    if b == 0:
        raise ZeroDivisionError('floor division by zero')
    return Fraction(math.floor(Fraction(a) / b))


def ceil_div(a, b):
    if b == 0:
        raise ZeroDivisionError('ceil division by zero')
    return Fraction(math.ceil(Fraction(a) / b))
