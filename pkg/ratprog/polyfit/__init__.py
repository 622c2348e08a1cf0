"""Degree bounded polynomials, rational functions and their least squares fits."""
from .basis import DegreeBounds, monomial_basis, vandermonde, NUMERATOR, DENOMINATOR
from .polynomial import Polynomial, RationalFunction, eval_poly, eval_ratfunc
from .linalg import svd, solve_homogeneous, solve_least_squares, numerical_rank, DEFAULT_RANK_TOL
from .fitting import (FitReport, build_sample_matrix, fit_rational, fit_polynomial,
                      poisedness_report, holdout_relative_error, relative_errors)
from .sidecar import dump_sidecar, load_sidecar
