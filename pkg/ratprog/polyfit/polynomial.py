"""Multivariate polynomials and rational functions with real coefficients."""
from fractions import Fraction

import numpy as np

from ..exceptions import DimensionMismatch, DenominatorNearZero, DegenerateFit
from .basis import graded_lex_key, vandermonde

#: |q(x)| below this fraction of max(1, |p(x)|) is a pole.
POLE_TOLERANCE = 1e-12
#: A unit-norm coefficient vector whose denominator part stays below this is degenerate.
DEGENERATE_TOLERANCE = 1e-10


def _format_term(coefficient, exponents, variables):
    factors = [str(Fraction(repr(float(coefficient))))]
    for name, e in zip(variables, exponents):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append('%s^%d' % (name, e))
    return '*'.join(factors)


class Polynomial(object):
    """A polynomial over ordered ``variables``.

    ``basis`` holds one exponent tuple per coefficient, in graded
    lexicographic order for polynomials built by the fitting code.
    """
    def __init__(self, variables, basis, coefficients):
        self.variables = tuple(variables)
        self.basis = tuple(tuple(int(e) for e in exps) for exps in basis)
        coefficients = np.array(coefficients, dtype=float).reshape(-1)
        if len(coefficients) != len(self.basis):
            raise DimensionMismatch('%d coefficients for %d monomials'
                                    % (len(coefficients), len(self.basis)))
        for exps in self.basis:
            if len(exps) != len(self.variables):
                raise DimensionMismatch('monomial %r does not match variables %r'
                                        % (exps, self.variables))
        coefficients.setflags(write=False)
        self.coefficients = coefficients

    @classmethod
    def from_terms(cls, variables, terms):
        """Build from a sparse ``{exponents: coefficient}`` mapping."""
        basis = sorted((tuple(e) for e in terms), key=graded_lex_key)
        coefficients = [float(terms[e]) for e in basis] if basis else []
        return cls(variables, basis, coefficients)

    @classmethod
    def constant(cls, variables, value):
        return cls(variables, [(0, ) * len(variables)], [value])

    @property
    def nvars(self):
        return len(self.variables)

    def terms(self):
        """Non zero ``(exponents, coefficient)`` pairs."""
        return [(e, float(c)) for e, c in zip(self.basis, self.coefficients) if c != 0.0]

    def is_zero(self, tolerance=0.0):
        return not np.any(np.abs(self.coefficients) > tolerance)

    def evaluate_many(self, points):
        points = np.asarray(points, dtype=float).reshape(-1, self.nvars)
        if not self.basis:
            return np.zeros(len(points))
        return vandermonde(points, self.basis) @ self.coefficients

    def __call__(self, *point):
        return eval_poly(self, point)

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.variables == other.variables and
                self.basis == other.basis and
                np.array_equal(self.coefficients, other.coefficients))

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __str__(self):
        terms = self.terms()
        if not terms:
            return '0/1'
        return ' + '.join(_format_term(c, e, self.variables) for e, c in terms)

    def __repr__(self):
        return '<Polynomial %s>' % self


def eval_poly(p, point):
    """Sum of ``coefficient * prod(x_i ** e_i)`` at ``point``."""
    point = tuple(point)
    if len(point) != p.nvars:
        raise DimensionMismatch('point has %d coordinates, polynomial has %d variables'
                                % (len(point), p.nvars))
    total = 0.0
    for exps, coefficient in zip(p.basis, p.coefficients):
        if coefficient == 0.0:
            continue
        term = float(coefficient)
        for x, e in zip(point, exps):
            if e:
                term *= float(x) ** e
        total += term
    return total


class RationalFunction(object):
    """A fraction of two polynomials over the same variables."""
    def __init__(self, numerator, denominator):
        if numerator.variables != denominator.variables:
            raise DimensionMismatch('numerator over %r, denominator over %r'
                                    % (numerator.variables, denominator.variables))
        if denominator.is_zero():
            raise DegenerateFit('denominator is identically zero')
        self.numerator = numerator
        self.denominator = denominator

    @classmethod
    def from_terms(cls, variables, num_terms, den_terms=None):
        """``den_terms`` defaults to the constant 1."""
        if den_terms is None:
            den_terms = {(0, ) * len(variables): 1.0}
        return cls(Polynomial.from_terms(variables, num_terms),
                   Polynomial.from_terms(variables, den_terms))

    @classmethod
    def polynomial(cls, p):
        return cls(p, Polynomial.constant(p.variables, 1.0))

    @property
    def variables(self):
        return self.numerator.variables

    @property
    def nvars(self):
        return self.numerator.nvars

    @property
    def coefficient_vector(self):
        return np.concatenate([self.numerator.coefficients, self.denominator.coefficients])

    def evaluate_many(self, points):
        """Values at many points, ``nan`` at poles."""
        p = self.numerator.evaluate_many(points)
        q = self.denominator.evaluate_many(points)
        with np.errstate(divide='ignore', invalid='ignore'):
            values = p / q
        values[np.abs(q) < POLE_TOLERANCE * np.maximum(1.0, np.abs(p))] = np.nan
        return values

    def __call__(self, *point):
        return eval_ratfunc(self, point)

    def __eq__(self, other):
        return (isinstance(other, RationalFunction) and self.numerator == other.numerator and
                self.denominator == other.denominator)

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __str__(self):
        return '(%s) / (%s)' % (self.numerator, self.denominator)

    def __repr__(self):
        return '<RationalFunction %s>' % self


def eval_ratfunc(f, point):
    """``p(point) / q(point)``, refusing points too close to a pole."""
    p = eval_poly(f.numerator, point)
    q = eval_poly(f.denominator, point)
    if abs(q) < POLE_TOLERANCE * max(1.0, abs(p)):
        raise DenominatorNearZero('denominator vanishes at %r' % (tuple(point), ),
                                  point=tuple(point))
    return p / q
