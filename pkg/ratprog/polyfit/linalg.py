"""Singular value decomposition and the least squares solvers built on it.

Every solver equilibrates the columns of its matrix (unit 2-norm) before
decomposing: sample matrices mix monomials like ``1`` and ``N**2 * bx**2``
whose magnitudes differ by many orders.
"""
import logging
from collections import namedtuple

import numpy as np

from ..exceptions import SVDNonConvergence

log = logging.getLogger(__name__)

DEFAULT_RANK_TOL = 1e-10
#: Dropping a column keeps the fit while its smallest singular value stays
#: within this factor of the full system's.
DEFAULT_SLACK = 2.0

SVDResult = namedtuple('SVDResult', 'U S V')
SVDResult.__doc__ = """``A = U @ diag(S) @ V.T`` with ``S`` non-increasing."""

HomogeneousSolution = namedtuple('HomogeneousSolution',
                                 'vector residual_norm singular_values rank null_dimension')


def svd(A):
    """Decompose ``A``.

    When ``A`` has fewer rows than columns ``V`` is square, so that it
    spans the null space as well.
    """
    A = np.asarray(A, dtype=float)
    if A.ndim != 2:
        raise ValueError('svd needs a matrix, got %d dimensions' % A.ndim)
    if not np.all(np.isfinite(A)):
        raise ValueError('matrix has non finite entries')
    m, n = A.shape
    try:
        U, S, Vt = np.linalg.svd(A, full_matrices=m < n)
    except np.linalg.LinAlgError as e:
        # LAPACK does not expose its iteration count.
        raise SVDNonConvergence('SVD of a %dx%d matrix did not converge: %s' % (m, n, e),
                                iterations=None)
    return SVDResult(U, S, Vt.T)


def numerical_rank(singular_values, rank_tol=DEFAULT_RANK_TOL):
    """Number of singular values above ``rank_tol * sigma_1``."""
    S = np.asarray(singular_values)
    if not len(S) or S[0] == 0.0:
        return 0
    return int(np.count_nonzero(S > rank_tol * S[0]))


def _column_scales(A):
    norms = np.linalg.norm(A, axis=0)
    norms[norms == 0.0] = 1.0
    return norms


def _smallest(singular_values, columns):
    # a wide matrix has columns - rows zero singular values LAPACK leaves out
    return singular_values[-1] if len(singular_values) == columns else 0.0


def _near_null(singular_values, columns, floor):
    return int(np.count_nonzero(singular_values <= floor)) + columns - len(singular_values)


def solve_homogeneous(A, rank_tol=DEFAULT_RANK_TOL, order=None, slack=DEFAULT_SLACK,
                      equilibrate=True):
    """Unit vector ``c`` minimizing ``||A c||``.

    ``c`` is the right singular vector of the smallest singular value of
    the column equilibrated matrix, mapped back to the columns of ``A``.

    ``order`` lists column indices from the highest to the lowest order
    term. When several directions reach the smallest singular value
    within ``slack`` (exact common factors, or their noisy images),
    columns are dropped in that order as long as the smallest singular
    value of what remains stays within ``slack`` of the full one, until
    a single such direction is left. ``c`` is then zero on the dropped
    columns.
    """
    A = np.asarray(A, dtype=float)
    m, n = A.shape
    scales = _column_scales(A) if equilibrate else np.ones(n)
    scaled = A / scales
    result = svd(scaled)
    S = result.S
    rank = numerical_rank(S, rank_tol)
    null_dimension = n - rank

    keep = np.arange(n)
    current = result
    if order is not None and len(S):
        floor = slack * _smallest(S, n) + rank_tol * S[0]
        for j in order:
            if _near_null(current.S, len(keep), floor) <= 1:
                break
            trial = keep[keep != j]
            if not len(trial):
                continue
            reduced = svd(scaled[:, trial])
            if _smallest(reduced.S, len(trial)) <= floor:
                keep, current = trial, reduced
        if len(keep) < n:
            log.debug('dropped %d of %d columns to a single near null direction',
                      n - len(keep), n)

    c = np.zeros(n)
    c[keep] = current.V[:, -1]
    c = c / scales
    c = c / np.linalg.norm(c)
    residual = float(np.linalg.norm(A @ c))
    log.debug('homogeneous solve %dx%d: rank %d, null space %d, residual %.3g',
              m, n, rank, null_dimension, residual)
    return HomogeneousSolution(c, residual, S, rank, null_dimension)


def solve_least_squares(A, b, rank_tol=DEFAULT_RANK_TOL):
    """Minimum norm solution of ``min ||A x - b||`` through a truncated pseudo-inverse.

    The rank is decided on the column equilibrated matrix. A rank
    deficient solution is projected off the null space of ``A`` so it
    has the smallest norm in the columns of ``A`` themselves.

    Returns ``(x, residual_norm, singular_values, rank)``.
    """
    A = np.asarray(A, dtype=float)
    b = np.asarray(b, dtype=float)
    scales = _column_scales(A)
    result = svd(A / scales)
    rank = numerical_rank(result.S, rank_tol)
    U, S, V = result.U[:, :rank], result.S[:rank], result.V[:, :rank]
    x = V @ ((U.T @ b) / S) / scales
    if rank < A.shape[1]:
        null_space, _ = np.linalg.qr(result.V[:, rank:] / scales[:, np.newaxis])
        x = x - null_space @ (null_space.T @ x)
    residual = float(np.linalg.norm(A @ x - b))
    return x, residual, result.S, rank
