"""Core types and elementary game computations."""

import math
import random
from fractions import Fraction as F

import pytest

from minimax_design import (
    MixedStrategy,
    PayoffMatrix,
    best_response_value,
    exact_matrix,
    exact_strategy,
    expected_payoff,
    l2_distance,
    make_mixed_strategy,
    support,
    uniform_strategy,
)
from minimax_design.errors import DimensionMismatch, NegativeWeight, SumNotOne

from oracles import payoff_by_summation


class TestMakeMixedStrategy:
    def test_uniform_pair(self):
        s = make_mixed_strategy([0.5, 0.5])
        assert s.weights == (0.5, 0.5)
        assert s.dimension == 2

    def test_single_action(self):
        assert make_mixed_strategy([1.0]).weights == (1.0,)

    def test_sum_not_one(self):
        with pytest.raises(SumNotOne) as exc:
            make_mixed_strategy([0.5, 0.6])
        assert exc.value.deviation == pytest.approx(0.1)

    def test_negative_weight_reports_index(self):
        with pytest.raises(NegativeWeight) as exc:
            make_mixed_strategy([F(3, 2), F(-1, 2)])
        assert exc.value.index == 1

    def test_exact_mode_requires_exact_sum(self):
        with pytest.raises(SumNotOne):
            make_mixed_strategy([F(1, 3), F(1, 3)])
        make_mixed_strategy([F(1, 3), F(2, 3)])

    def test_float_mode_tolerance(self):
        make_mixed_strategy([0.5, 0.5 + 5e-13])
        with pytest.raises(SumNotOne):
            make_mixed_strategy([0.5, 0.5 + 5e-12])

    def test_empty_rejected(self):
        with pytest.raises(DimensionMismatch):
            make_mixed_strategy([])

    def test_weights_preserved_not_normalized(self):
        s = make_mixed_strategy([F(1, 4), F(3, 4)])
        assert s.weights == (F(1, 4), F(3, 4))


class TestSupport:
    def test_zero_excluded(self):
        assert support(make_mixed_strategy([0.5, 0.5, 0])) == {0, 1}

    def test_pure(self):
        assert support(make_mixed_strategy([1, 0])) == {0}

    def test_full(self):
        assert support(make_mixed_strategy([0.4, 0.4, 0.2])) == {0, 1, 2}

    def test_float_threshold(self):
        s = MixedStrategy((1.0 - 1e-13, 1e-13))
        assert support(s) == {0}

    def test_exact_tiny_weight_counts(self):
        s = make_mixed_strategy([F(1, 10**15), 1 - F(1, 10**15)])
        assert support(s) == {0, 1}


class TestExpectedPayoff:
    def test_pure_vs_pure_selects_entry(self):
        a = PayoffMatrix.from_rows([[2, 3], [4, 5]])
        assert expected_payoff(make_mixed_strategy([1, 0]), a, make_mixed_strategy([0, 1])) == 3

    def test_mixed_matches_direct_summation(self):
        rows = [[0.6, 1.4], [1.4, 0.6]]
        a = PayoffMatrix.from_rows(rows)
        x = make_mixed_strategy([0.5, 0.5])
        got = expected_payoff(x, a, x)
        assert got == pytest.approx(payoff_by_summation(x.weights, rows, x.weights))
        assert got == pytest.approx(1.0)

    def test_matching_pennies(self):
        a = PayoffMatrix.from_rows([[0, 1], [1, 0]])
        u = make_mixed_strategy([0.5, 0.5])
        assert expected_payoff(u, a, u) == pytest.approx(0.5)

    def test_dimension_mismatch(self):
        a = PayoffMatrix.from_rows([[1, 2], [3, 4]])
        with pytest.raises(DimensionMismatch):
            expected_payoff(make_mixed_strategy([1, 0, 0]), a, make_mixed_strategy([1, 0]))

    def test_bilinearity_exact(self):
        rng = random.Random(5)
        for _ in range(20):
            n, m = rng.randint(1, 4), rng.randint(1, 4)
            a = exact_matrix(
                [[F(rng.randint(-5, 5), rng.randint(1, 5)) for _ in range(m)] for _ in range(n)]
            )
            x1 = exact_strategy(_random_exact(n, rng))
            x2 = exact_strategy(_random_exact(n, rng))
            y = exact_strategy(_random_exact(m, rng))
            alpha = F(rng.randint(0, 4), 4)
            blend = MixedStrategy(
                tuple(alpha * p + (1 - alpha) * q for p, q in zip(x1.weights, x2.weights))
            )
            lhs = expected_payoff(blend, a, y)
            rhs = alpha * expected_payoff(x1, a, y) + (1 - alpha) * expected_payoff(x2, a, y)
            assert lhs == rhs


def _random_exact(dim, rng):
    vals = [rng.randint(1, 9) for _ in range(dim)]
    tot = sum(vals)
    return [F(v, tot) for v in vals]


class TestBestResponseValue:
    def test_tie_breaks_to_lowest_index(self):
        a = PayoffMatrix.from_rows([[0.6, 1.4], [1.4, 0.6]])
        f, e = best_response_value(make_mixed_strategy([0.5, 0.5]), a)
        assert (f, e) == (pytest.approx(1.0), 0)

    def test_row_read_off(self):
        a = PayoffMatrix.from_rows([[0.6, 1.4], [1.4, 0.6]])
        f, e = best_response_value(make_mixed_strategy([1, 0]), a)
        assert (f, e) == (1.4, 1)

    def test_second_row_read_off(self):
        a = PayoffMatrix.from_rows([[2, 3], [4, 5]])
        assert best_response_value(make_mixed_strategy([0, 1]), a) == (5, 1)

    def test_dominates_every_response(self):
        rng = random.Random(11)
        a = exact_matrix([[F(rng.randint(-5, 5)) for _ in range(3)] for _ in range(3)])
        x = exact_strategy(_random_exact(3, rng))
        f, e = best_response_value(x, a)
        for _ in range(25):
            y = exact_strategy(_random_exact(3, rng))
            assert expected_payoff(x, a, y) <= f
        pure = exact_strategy([1 if j == e else 0 for j in range(3)])
        assert expected_payoff(x, a, pure) == f

    def test_affine_transform_invariance(self):
        rng = random.Random(23)
        for _ in range(10):
            a = exact_matrix(
                [[F(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(4)] for _ in range(3)]
            )
            x = exact_strategy(_random_exact(3, rng))
            c = F(rng.randint(-5, 5))
            s = F(rng.randint(1, 7))
            shifted = exact_matrix([[(e - c) / s for e in row] for row in a.entries])
            f, e_idx = best_response_value(x, a)
            f2, e2 = best_response_value(x, shifted)
            assert e2 == e_idx
            assert f2 == (f - c) / s


class TestL2Distance:
    def test_identity(self):
        s = make_mixed_strategy([1, 0])
        assert l2_distance(s, s) == 0

    def test_opposite_vertices(self):
        assert l2_distance(
            make_mixed_strategy([1, 0]), make_mixed_strategy([0, 1])
        ) == pytest.approx(math.sqrt(2))

    def test_quarter_shift(self):
        d = l2_distance(make_mixed_strategy([0.5, 0.5]), make_mixed_strategy([0.25, 0.75]))
        assert d == pytest.approx(math.sqrt(0.0625 + 0.0625))

    def test_symmetry(self):
        a = make_mixed_strategy([0.3, 0.7])
        b = make_mixed_strategy([0.6, 0.4])
        assert l2_distance(a, b) == l2_distance(b, a)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            l2_distance(make_mixed_strategy([1]), make_mixed_strategy([1, 0]))


class TestMatrixAndHelpers:
    def test_ragged_rows_rejected(self):
        with pytest.raises(DimensionMismatch):
            PayoffMatrix.from_rows([[1, 2], [3]])

    def test_empty_rejected(self):
        with pytest.raises((DimensionMismatch, IndexError)):
            PayoffMatrix.from_rows([])

    def test_uniform_strategy_exact(self):
        u = uniform_strategy(3)
        assert u.weights == (F(1, 3), F(1, 3), F(1, 3))

    def test_exact_strategy_decimal_promotion(self):
        s = exact_strategy([0.1, 0.9])
        assert s.weights == (F(1, 10), F(9, 10))

    def test_column_access(self):
        a = PayoffMatrix.from_rows([[1, 2], [3, 4]])
        assert a.column(1) == (2, 4)
        assert a[1, 0] == 3
