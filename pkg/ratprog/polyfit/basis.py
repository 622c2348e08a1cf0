"""Degree bounds and monomial bases."""
import itertools

import numpy as np
from repoze.lru import lru_cache

from ..exceptions import DimensionMismatch

NUMERATOR = 'num'
DENOMINATOR = 'den'


class DegreeBounds(object):
    """Per variable exponent caps of numerator and denominator.

    ``DegreeBounds((2, 1), (1, 1))`` allows ``x**2 * y`` in the numerator
    and ``x * y`` in the denominator of a function of ``(x, y)``.
    """
    def __init__(self, num, den):
        num = tuple(int(u) for u in num)
        den = tuple(int(v) for v in den)
        if len(num) != len(den):
            raise DimensionMismatch('numerator bounds %r and denominator bounds %r '
                                    'have different lengths' % (num, den))
        if any(b < 0 for b in num + den):
            raise ValueError('degree bounds must not be negative: %r / %r' % (num, den))
        self.num = num
        self.den = den

    @classmethod
    def uniform(cls, nvars, num, den=None):
        return cls((num, ) * nvars, (num if den is None else den, ) * nvars)

    @property
    def nvars(self):
        return len(self.num)

    def side(self, side):
        if side == NUMERATOR:
            return self.num
        elif side == DENOMINATOR:
            return self.den
        raise ValueError('side must be %r or %r, not %r' % (NUMERATOR, DENOMINATOR, side))

    def __eq__(self, other):
        return isinstance(other, DegreeBounds) and (self.num, self.den) == (other.num, other.den)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return 'DegreeBounds(%r, %r)' % (self.num, self.den)

    def __json__(self):
        return {'num': list(self.num), 'den': list(self.den)}


def graded_lex_key(exponents):
    return (sum(exponents), tuple(exponents))


@lru_cache(256)
def exponent_grid(bounds):
    """All exponent tuples within ``bounds`` in graded lexicographic order.

    Tuples are sorted by total degree first, then lexicographically,
    so the constant term always comes first.
    """
    grid = itertools.product(*[range(b + 1) for b in bounds])
    return tuple(sorted(grid, key=graded_lex_key))


def monomial_basis(bounds, side=NUMERATOR):
    """Ordered monomial exponents allowed by ``bounds`` on one side."""
    return exponent_grid(bounds.side(side))


def vandermonde(points, basis):
    """Matrix of every basis monomial evaluated at every point.

    ``points`` is ``(m, n)``, the result ``(m, len(basis))``.
    """
    points = np.atleast_2d(np.asarray(points, dtype=float))
    exponents = np.asarray(basis, dtype=float).reshape(len(basis), -1)
    if exponents.shape[1] != points.shape[1]:
        raise DimensionMismatch('points have %d coordinates, basis has %d variables'
                                % (points.shape[1], exponents.shape[1]))
    return np.prod(points[:, np.newaxis, :] ** exponents[np.newaxis, :, :], axis=2)
