"""Rational and polynomial least squares fits of sampled metrics."""
import logging

import numpy as np

from ..exceptions import DegenerateFit, DimensionMismatch
from ..util import Bunch
from .basis import (DegreeBounds, graded_lex_key, monomial_basis, vandermonde, NUMERATOR,
                    DENOMINATOR)
from .linalg import (DEFAULT_RANK_TOL, solve_homogeneous, solve_least_squares, svd,
                     numerical_rank)
from .polynomial import Polynomial, RationalFunction, DEGENERATE_TOLERANCE

log = logging.getLogger(__name__)


class FitReport(object):
    """Diagnostics of one fit.

    ``residual_norm`` is ``||A c||`` for the returned unit coefficient
    vector ``c`` (``||A x - b||`` for polynomial fits). ``truncated``
    tells that singular values under ``rank_tol * sigma_1`` were dropped.
    """
    def __init__(self, residual_norm, numerical_rank, singular_values, truncated,
                 holdout_relative_error=None, rows=None, columns=None):
        self.residual_norm = float(residual_norm)
        self.numerical_rank = int(numerical_rank)
        self.singular_values = tuple(float(s) for s in singular_values)
        self.truncated = bool(truncated)
        self.holdout_relative_error = (None if holdout_relative_error is None
                                       else float(holdout_relative_error))
        self.rows = rows
        self.columns = columns

    def with_holdout(self, error):
        return FitReport(self.residual_norm, self.numerical_rank, self.singular_values,
                         self.truncated, error, self.rows, self.columns)

    def __repr__(self):
        return '<FitReport residual=%.3g rank=%d/%s truncated=%s>' % (
            self.residual_norm, self.numerical_rank, self.columns, self.truncated)

    def __json__(self):
        return {'residual_norm': self.residual_norm,
                'numerical_rank': self.numerical_rank,
                'singular_values': list(self.singular_values),
                'truncated': self.truncated,
                'holdout_relative_error': self.holdout_relative_error,
                'rows': self.rows,
                'columns': self.columns}

    @classmethod
    def from_json(cls, data):
        return cls(data['residual_norm'], data['numerical_rank'], data['singular_values'],
                   data['truncated'], data.get('holdout_relative_error'),
                   data.get('rows'), data.get('columns'))


def sample_arrays(samples, nvars=None):
    """Split ``(point, value)`` pairs into an ``(m, n)`` and an ``(m,)`` array."""
    samples = list(samples)
    if not samples:
        raise ValueError('at least one sample is required')
    points = np.array([np.atleast_1d(np.asarray(p, dtype=float)) for p, _ in samples])
    values = np.array([float(v) for _, v in samples])
    if nvars is not None and points.shape[1] != nvars:
        raise DimensionMismatch('samples have %d coordinates, bounds have %d variables'
                                % (points.shape[1], nvars))
    return points, values


def _default_variables(nvars):
    return tuple('x%d' % (i + 1) for i in range(nvars))


def build_sample_matrix(samples, bounds):
    """Homogeneous system of ``p(x_k) - y_k q(x_k) = 0``.

    Row ``k`` is ``[num monomials(x_k), -y_k * den monomials(x_k)]``.
    """
    points, values = sample_arrays(samples, bounds.nvars)
    num = vandermonde(points, monomial_basis(bounds, NUMERATOR))
    den = vandermonde(points, monomial_basis(bounds, DENOMINATOR))
    return np.hstack([num, -values[:, np.newaxis] * den])


def descending_order(bounds):
    """Columns of the sample matrix from the highest to the lowest order term.

    Terms compare in graded lexicographic order of their monomial, a
    denominator term above the numerator term of the same monomial. The
    order is compatible with multiplication, so a common factor always
    raises the leading term of a fit.
    """
    num_basis = monomial_basis(bounds, NUMERATOR)
    den_basis = monomial_basis(bounds, DENOMINATOR)
    terms = [(graded_lex_key(e), 0, i) for i, e in enumerate(num_basis)]
    terms += [(graded_lex_key(e), 1, len(num_basis) + i) for i, e in enumerate(den_basis)]
    return [column for _, _, column in sorted(terms, reverse=True)]


def normalize(coefficients, num_size):
    """Unit 2-norm with the first non zero denominator coefficient positive."""
    c = np.asarray(coefficients, dtype=float)
    c = c / np.linalg.norm(c)
    den = c[num_size:]
    significant = np.flatnonzero(np.abs(den) > DEGENERATE_TOLERANCE)
    if not len(significant):
        raise DegenerateFit('denominator is identically zero within %g' % DEGENERATE_TOLERANCE)
    if den[significant[0]] < 0:
        c = -c
    return c


def fit_rational(samples, bounds, rank_tol=DEFAULT_RANK_TOL, variables=None):
    """Least squares rational function through ``samples``.

    ``samples`` are ``(point, value)`` pairs. Returns the fitted
    :class:`.RationalFunction` and its :class:`FitReport`.

    When the bounds leave room for a common factor of numerator and
    denominator the null space has more than one direction; the highest
    terms of :func:`descending_order` are then dropped while the fit
    holds, which returns the reduced quotient.
    """
    variables = tuple(variables or _default_variables(bounds.nvars))
    num_basis = monomial_basis(bounds, NUMERATOR)
    den_basis = monomial_basis(bounds, DENOMINATOR)
    A = build_sample_matrix(samples, bounds)
    m, n = A.shape

    solution = solve_homogeneous(A, rank_tol, order=descending_order(bounds))
    c = normalize(solution.vector, len(num_basis))
    numerator = Polynomial(variables, num_basis, c[:len(num_basis)])
    denominator = Polynomial(variables, den_basis, c[len(num_basis):])

    report = FitReport(solution.residual_norm, solution.rank, solution.singular_values,
                       solution.rank < n - 1, rows=m, columns=n)
    if report.truncated:
        log.debug('rank deficient fit: rank %d for %d unknowns', solution.rank, n)
    return RationalFunction(numerator, denominator), report


def fit_polynomial(samples, bounds, rank_tol=DEFAULT_RANK_TOL, variables=None):
    """Minimum norm least squares polynomial within the numerator bounds."""
    if not isinstance(bounds, DegreeBounds):
        bounds = DegreeBounds(bounds, (0, ) * len(bounds))
    variables = tuple(variables or _default_variables(bounds.nvars))
    points, values = sample_arrays(samples, bounds.nvars)
    basis = monomial_basis(bounds, NUMERATOR)
    A = vandermonde(points, basis)
    x, residual, S, rank = solve_least_squares(A, values, rank_tol)
    report = FitReport(residual, rank, S, rank < A.shape[1], rows=A.shape[0],
                       columns=A.shape[1])
    return Polynomial(variables, basis, x), report


def poisedness_report(points, bounds, rank_tol=DEFAULT_RANK_TOL):
    """Rank and conditioning of the numerator Vandermonde block at ``points``."""
    points = np.array([np.atleast_1d(np.asarray(p, dtype=float)) for p in points])
    if points.shape[1] != bounds.nvars:
        raise DimensionMismatch('points have %d coordinates, bounds have %d variables'
                                % (points.shape[1], bounds.nvars))
    basis = monomial_basis(bounds, NUMERATOR)
    S = svd(vandermonde(points, basis)).S
    rank = numerical_rank(S, rank_tol)
    condition = float(S[0] / S[rank - 1]) if rank else float('inf')
    return Bunch(rank=rank, basis_size=len(basis), condition_estimate=condition,
                 poised=rank == len(basis))


def relative_errors(f, samples):
    """``|f(x) - y| / |y|`` for every sample (absolute where ``y`` is 0),
    ``nan`` where ``f`` has a pole."""
    points, values = sample_arrays(samples, f.nvars)
    predicted = f.evaluate_many(points)
    with np.errstate(divide='ignore', invalid='ignore'):
        scale = np.where(values == 0.0, 1.0, np.abs(values))
        return np.abs(predicted - values) / scale


def holdout_relative_error(f, samples):
    """Largest relative error of ``f`` over held out ``samples``."""
    errors = relative_errors(f, samples)
    if np.any(np.isnan(errors)):
        return float('inf')
    return float(np.max(errors))
