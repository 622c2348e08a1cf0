# -*- coding: utf-8 -*-
import json

import numpy as np
import pytest

from ratprog.exceptions import DimensionMismatch, DenominatorNearZero, DegenerateFit
from ratprog import jsonify
from ratprog.polyfit import (DegreeBounds, Polynomial, RationalFunction, monomial_basis,
                             eval_poly, eval_ratfunc, build_sample_matrix, svd,
                             solve_homogeneous, numerical_rank, fit_rational, fit_polynomial,
                             poisedness_report, holdout_relative_error,
                             dump_sidecar, load_sidecar)
from ratprog.polyfit.fitting import descending_order


def g(x):
    return (x ** 2 + 1) / (x + 2)


def h(point):
    x, y, z = point
    return (x ** 2 + y ** 2 + z + 1) / (x + y + 2)


# room for h times (a + b z)
THREE_VARIABLE_BOUNDS = DegreeBounds((2, 2, 2), (1, 1, 1))


def univariate_samples(xs, func=g):
    return [((x, ), func(x)) for x in xs]


class TestMonomialBasis(object):
    def test_univariate(self):
        assert monomial_basis(DegreeBounds((2, ), (0, ))) == ((0, ), (1, ), (2, ))

    def test_graded_lex(self):
        bounds = DegreeBounds((1, 1), (0, 0))
        assert monomial_basis(bounds) == ((0, 0), (0, 1), (1, 0), (1, 1))

    def test_denominator_side(self):
        bounds = DegreeBounds((2, 2), (0, 1))
        assert monomial_basis(bounds, 'den') == ((0, 0), (0, 1))

    def test_size(self):
        basis = monomial_basis(DegreeBounds((2, 1, 1), (0, 0, 0)))
        assert len(basis) == 12
        assert basis[0] == (0, 0, 0)
        degrees = [sum(e) for e in basis]
        assert degrees == sorted(degrees)

    def test_stable(self):
        bounds = DegreeBounds((2, 2), (1, 1))
        assert monomial_basis(bounds) == monomial_basis(DegreeBounds((2, 2), (1, 1)))

    def test_negative_bound(self):
        with pytest.raises(ValueError):
            DegreeBounds((-1, ), (0, ))

    def test_length_mismatch(self):
        with pytest.raises(DimensionMismatch):
            DegreeBounds((1, 1), (0, ))


class TestEvaluation(object):
    def test_eval_poly(self):
        p = Polynomial(['x'], [(0, ), (1, )], [1, 2])
        assert eval_poly(p, (3, )) == 7

    def test_zero_polynomial(self):
        p = Polynomial(['x', 'y'], [(0, 0), (1, 1)], [0, 0])
        assert eval_poly(p, (12.5, -3)) == 0

    def test_against_term_by_term(self):
        rnd = np.random.default_rng(3)
        basis = monomial_basis(DegreeBounds((2, 3, 1), (0, 0, 0)))
        coefficients = rnd.uniform(-5, 5, len(basis))
        p = Polynomial(['a', 'b', 'c'], basis, coefficients)
        for point in rnd.uniform(-3, 3, (20, 3)):
            expected = sum(c * point[0] ** e[0] * point[1] ** e[1] * point[2] ** e[2]
                           for c, e in zip(coefficients, basis))
            assert eval_poly(p, point) == pytest.approx(expected, rel=1e-12, abs=1e-12)
            assert p.evaluate_many([point])[0] == pytest.approx(expected, rel=1e-12, abs=1e-12)

    def test_dimension_mismatch(self):
        p = Polynomial(['x'], [(0, )], [1])
        with pytest.raises(DimensionMismatch):
            eval_poly(p, (1, 2))

    def test_eval_ratfunc(self):
        f = RationalFunction.from_terms(['x'], {(2, ): 1, (0, ): 1}, {(1, ): 1, (0, ): 2})
        assert eval_ratfunc(f, (2, )) == 1.25

    def test_pole(self):
        f = RationalFunction.from_terms(['x'], {(2, ): 1, (0, ): 1}, {(1, ): 1, (0, ): 2})
        with pytest.raises(DenominatorNearZero) as exc:
            eval_ratfunc(f, (-2, ))
        assert exc.value.point == (-2, )
        assert np.isnan(f.evaluate_many([[-2.0]])[0])

    def test_zero_denominator_refused(self):
        with pytest.raises(DegenerateFit):
            RationalFunction.from_terms(['x'], {(1, ): 1}, {(0, ): 0})

    def test_from_terms_orders_basis(self):
        p = Polynomial.from_terms(['x', 'y'], {(1, 1): 4, (0, 0): 1, (0, 1): 2})
        assert p.basis == ((0, 0), (0, 1), (1, 1))
        assert list(p.coefficients) == [1, 2, 4]


class TestSampleMatrix(object):
    def test_single_row(self):
        A = build_sample_matrix([((1, ), 2)], DegreeBounds((1, ), (0, )))
        assert A.tolist() == [[1, 1, -2]]

    def test_zero_value_rows(self):
        A = build_sample_matrix([((3, ), 0)], DegreeBounds((1, ), (1, )))
        assert A[0, 2:].tolist() == [0, 0]

    def test_collinear_points_are_rank_deficient(self):
        points = [(t, t) for t in (1.0, 2.0, 3.0, 4.0)]
        A = build_sample_matrix([(p, 1.0) for p in points], DegreeBounds((1, 1), (0, 0)))
        assert numerical_rank(svd(A[:, :4]).S) < 4

    def test_descending_order(self):
        # num 1, num x, den 1, den x
        assert descending_order(DegreeBounds((1, ), (1, ))) == [3, 1, 2, 0]


class TestSVD(object):
    def test_identity(self):
        assert svd(np.eye(3)).S.tolist() == [1, 1, 1]

    def test_diagonal(self):
        assert svd(np.diag([3.0, 0.0])).S.tolist() == [3, 0]

    def test_reconstruction(self):
        A = np.random.default_rng(11).normal(size=(20, 8))
        U, S, V = svd(A)
        error = np.linalg.norm(U @ np.diag(S) @ V.T - A) / S[0]
        assert error < 1e-10
        assert all(S[i] >= S[i + 1] >= 0 for i in range(len(S) - 1))

    def test_wide_matrix_spans_null_space(self):
        A = np.random.default_rng(5).normal(size=(2, 5))
        V = svd(A).V
        assert V.shape == (5, 5)
        assert np.linalg.norm(A @ V[:, -1]) < 1e-12

    def test_non_finite(self):
        with pytest.raises(ValueError):
            svd(np.array([[1.0, np.nan]]))

    def test_optimality(self):
        rnd = np.random.default_rng(21)
        A = rnd.normal(size=(30, 6))
        best = np.linalg.norm(A @ solve_homogeneous(A, equilibrate=False).vector)
        for _ in range(1000):
            c = rnd.normal(size=6)
            c /= np.linalg.norm(c)
            assert best <= np.linalg.norm(A @ c) + 1e-12


class TestFitRational(object):
    def test_recovers_ground_truth(self):
        bounds = DegreeBounds((2, ), (1, ))
        f, report = fit_rational(univariate_samples(np.linspace(0.5, 10, 20)), bounds,
                                 variables=['x'])
        held_out = univariate_samples(np.random.default_rng(1).uniform(0.5, 10, 100))
        assert holdout_relative_error(f, held_out) < 1e-8
        assert report.numerical_rank == 4
        assert not report.truncated
        assert f.variables == ('x', )

    def test_normalization(self):
        f, _ = fit_rational(univariate_samples(np.linspace(0.5, 10, 20)), DegreeBounds((2, ), (1, )))
        assert np.linalg.norm(f.coefficient_vector) == pytest.approx(1.0, abs=1e-12)
        assert f.denominator.coefficients[0] > 0

    def test_constant_data(self):
        samples = [((x, ), 5.0) for x in (1.0, 2.0, 7.0)]
        f, report = fit_rational(samples, DegreeBounds((0, ), (0, )))
        assert eval_ratfunc(f, (123.0, )) == pytest.approx(5.0, rel=1e-12)
        assert report.residual_norm < 1e-12

    def test_noise(self):
        rnd = np.random.default_rng(2)
        xs = rnd.uniform(0.5, 10, 200)
        samples = [((x, ), g(x) * (1 + rnd.uniform(-0.01, 0.01))) for x in xs]
        f, _ = fit_rational(samples, DegreeBounds((2, ), (1, )))
        held_out = univariate_samples(rnd.uniform(0.5, 10, 100))
        assert holdout_relative_error(f, held_out) < 0.05

    def test_exact_interpolation(self):
        samples = univariate_samples([1.0, 2.0, 3.0, 5.0, 8.0])
        _, report = fit_rational(samples, DegreeBounds((2, ), (1, )))
        norm = np.linalg.norm([y for _, y in samples])
        assert report.residual_norm < 1e-10 * norm

    def test_scale_invariance(self):
        rnd = np.random.default_rng(4)
        xs = rnd.uniform(0.5, 10, 40)
        samples = [((x, ), g(x) * (1 + rnd.uniform(-0.01, 0.01))) for x in xs]
        bounds = DegreeBounds((2, ), (1, ))
        f, _ = fit_rational(samples, bounds)
        scaled, _ = fit_rational([(p, 7.5 * y) for p, y in samples], bounds)
        for x in xs:
            assert eval_ratfunc(scaled, (x, )) == pytest.approx(7.5 * eval_ratfunc(f, (x, )),
                                                                rel=1e-8)

    def test_training_points_within_residual(self):
        samples = univariate_samples(np.linspace(0.5, 10, 20))
        f, report = fit_rational(samples, DegreeBounds((2, ), (1, )))
        for (x, ), y in samples:
            q = eval_poly(f.denominator, (x, ))
            assert abs(eval_ratfunc(f, (x, )) - y) * abs(q) <= report.residual_norm + 1e-12

    def test_conflicting_samples_are_degenerate(self):
        with pytest.raises(DegenerateFit):
            fit_rational([((1.0, ), 1.0), ((1.0, ), 2.0)], DegreeBounds((1, ), (0, )))

    def test_oversized_bounds_prefer_low_degree(self):
        samples = univariate_samples(np.linspace(0.5, 10, 30), func=lambda x: 80 / (x + 8))
        f, report = fit_rational(samples, DegreeBounds((2, ), (2, )))
        assert report.truncated
        held_out = univariate_samples(np.linspace(0.7, 9.7, 50), func=lambda x: 80 / (x + 8))
        assert holdout_relative_error(f, held_out) < 1e-8

    def test_optimal_among_unit_vectors(self):
        rnd = np.random.default_rng(6)
        xs = rnd.uniform(1, 100, 40)
        samples = [((x, ), g(x) * (1 + rnd.uniform(-0.01, 0.01))) for x in xs]
        bounds = DegreeBounds((2, ), (1, ))
        f, report = fit_rational(samples, bounds)
        A = build_sample_matrix(samples, bounds)
        best = np.linalg.norm(A @ f.coefficient_vector)
        assert report.residual_norm == pytest.approx(best, rel=1e-9)
        for _ in range(1000):
            c = rnd.normal(size=A.shape[1])
            c /= np.linalg.norm(c)
            assert best <= np.linalg.norm(A @ c)

    def test_common_factor_in_three_variables(self):
        rnd = np.random.default_rng(7)
        samples = [(p, h(p)) for p in rnd.uniform(1, 4, (200, 3))]
        f, report = fit_rational(samples, THREE_VARIABLE_BOUNDS)
        assert report.truncated
        assert report.columns == 35
        held_out = [(p, h(p)) for p in rnd.uniform(1, 4, (100, 3))]
        assert holdout_relative_error(f, held_out) < 1e-8
        # the spare multiple of z is not used
        assert max(abs(c) for e, c in zip(f.numerator.basis, f.numerator.coefficients)
                   if e[2] == 2) < 1e-8

    def test_common_factor_with_noise(self):
        rnd = np.random.default_rng(8)
        points = rnd.uniform(1, 4, (200, 3))
        noise = rnd.uniform(-0.01, 0.01, 200)
        samples = [(p, h(p) * (1 + e)) for p, e in zip(points, noise)]
        f, _ = fit_rational(samples, THREE_VARIABLE_BOUNDS)
        held_out = [(p, h(p)) for p in rnd.uniform(1, 4, (100, 3))]
        assert holdout_relative_error(f, held_out) < 0.05


class TestFitPolynomial(object):
    def test_line(self):
        p, report = fit_polynomial([((0, ), 1), ((1, ), 3), ((2, ), 5)], (1, ))
        assert p.coefficients == pytest.approx([1, 2], abs=1e-12)
        assert not report.truncated

    def test_matches_normal_equations(self):
        rnd = np.random.default_rng(8)
        xs = rnd.uniform(0, 4, 50)
        ys = 2 * xs + 1 + rnd.normal(scale=0.1, size=50)
        p, report = fit_polynomial([((x, ), y) for x, y in zip(xs, ys)], (1, ))
        A = np.column_stack([np.ones_like(xs), xs])
        oracle = np.linalg.solve(A.T @ A, A.T @ ys)
        assert p.coefficients == pytest.approx(oracle, rel=1e-8)
        assert report.residual_norm == pytest.approx(np.linalg.norm(A @ oracle - ys), rel=1e-8)

    def test_duplicate_points(self):
        p, report = fit_polynomial([((1, ), 2), ((1, ), 2), ((1, ), 5)], (1, ))
        assert report.truncated
        assert report.numerical_rank == 1
        assert eval_poly(p, (1, )) == pytest.approx(3.0)

    def test_minimum_norm(self):
        samples = [((1, 1), 2), ((1, 1), 2), ((2, 2), 5)]
        p, report = fit_polynomial(samples, (1, 1))
        A = np.array([[1, 1, 1, 1], [1, 1, 1, 1], [1, 2, 2, 4]], dtype=float)
        oracle = np.linalg.pinv(A) @ np.array([2.0, 2.0, 5.0])
        assert report.numerical_rank == 2
        assert p.coefficients == pytest.approx(oracle, abs=1e-10)
        assert report.residual_norm < 1e-10


class TestPoisedness(object):
    def test_distinct_univariate(self):
        report = poisedness_report([(1, ), (2, ), (3, )], DegreeBounds((2, ), (0, )))
        assert report.rank == 3
        assert report.poised

    def test_points_on_a_line(self):
        report = poisedness_report([(x, 1.0) for x in (1, 2, 3, 4, 5)],
                                   DegreeBounds((1, 1), (0, 0)))
        assert report.rank == 2
        assert report.basis_size == 4
        assert not report.poised

    def test_block_shape_grid(self):
        grid = [(2 ** i, 2 ** j) for i in range(11) for j in range(11)
                if 32 <= 2 ** (i + j) <= 1024]
        report = poisedness_report(grid, DegreeBounds((2, 2), (0, 0)))
        assert report.basis_size == 9
        assert 1 <= report.rank <= 9
        assert report.condition_estimate > 1e3


class TestSidecar(object):
    def test_round_trip(self):
        bounds = DegreeBounds((2, ), (1, ))
        f, report = fit_rational(univariate_samples(np.linspace(0.5, 10, 20)), bounds,
                                 variables=['N'])
        document = json.loads(jsonify.encode(dump_sidecar(f, report, bounds)))
        assert document['variables'] == ['N']
        assert all('/' in c for c in document['num_coeffs'])

        loaded, loaded_report, loaded_bounds = load_sidecar(document)
        assert loaded == f
        assert loaded_bounds == bounds
        assert loaded_report.numerical_rank == report.numerical_rank

    def test_missing_key(self):
        from ratprog.exceptions import SchemaError
        with pytest.raises(SchemaError) as exc:
            load_sidecar({'variables': ['x']}, path='m.json')
        assert 'num_basis' in str(exc.value)
