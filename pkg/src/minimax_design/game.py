"""Core game types and elementary computations.

A two-player zero-sum game is a single matrix A: entry A[i][j] is the
column player's gain (row player's loss) when pure actions i, j are
played. Mixed strategies are points of a probability simplex. All types
here are immutable values; every operation is a pure function that works
in both numeric modes (exact Fractions or floats).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._numeric import FLOAT_TOL, is_exact
from .errors import DimensionMismatch, NegativeWeight, SumNotOne


@dataclass(frozen=True)
class MixedStrategy:
    """A probability vector over a finite action set."""

    weights: tuple

    @property
    def dimension(self) -> int:
        return len(self.weights)

    def __len__(self):
        return len(self.weights)

    def __getitem__(self, i):
        return self.weights[i]

    def to_array(self) -> np.ndarray:
        return np.array([float(w) for w in self.weights])


@dataclass(frozen=True)
class PayoffMatrix:
    """An n x m payoff grid; rows are the row player's actions."""

    entries: tuple  # tuple of row tuples

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def m(self) -> int:
        return len(self.entries[0])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(r[j] for r in self.entries)

    def to_array(self) -> np.ndarray:
        return np.array([[float(e) for e in row] for row in self.entries])

    @staticmethod
    def from_rows(rows) -> "PayoffMatrix":
        rows = tuple(tuple(r) for r in rows)
        if len(rows) < 1 or len(rows[0]) < 1:
            raise DimensionMismatch("payoff matrix needs at least one row and column")
        m = len(rows[0])
        if any(len(r) != m for r in rows):
            raise DimensionMismatch("payoff matrix rows have unequal lengths")
        return PayoffMatrix(rows)


@dataclass(frozen=True)
class GameValue:
    """The common optimum of the min-max and max-min problems."""

    v: object

    def __float__(self):
        return float(self.v)


def make_mixed_strategy(weights) -> MixedStrategy:
    """Validate a weight sequence as a point of the simplex.

    Exact inputs (ints/Fractions) must sum to 1 exactly; float inputs may
    deviate by at most 1e-12. Weights are preserved as given, never
    renormalized.
    """
    ws = tuple(weights)
    if not ws:
        raise DimensionMismatch("strategy needs at least one weight")
    for i, w in enumerate(ws):
        if w < 0:
            raise NegativeWeight(i, w)
    total = sum(ws)
    if is_exact(ws):
        if total != 1:
            raise SumNotOne(total, total - 1)
    else:
        if abs(total - 1.0) > FLOAT_TOL:
            raise SumNotOne(total, total - 1.0)
    return MixedStrategy(ws)


def support(s: MixedStrategy) -> frozenset:
    """Indices carrying positive probability (above 1e-12 in float mode)."""
    ws = s.weights
    if is_exact(ws):
        return frozenset(i for i, w in enumerate(ws) if w > 0)
    return frozenset(i for i, w in enumerate(ws) if w > FLOAT_TOL)


def _require_dims(x: MixedStrategy, a: PayoffMatrix, y: MixedStrategy | None = None):
    if len(x) != a.n:
        raise DimensionMismatch(f"row strategy has {len(x)} weights, matrix has {a.n} rows")
    if y is not None and len(y) != a.m:
        raise DimensionMismatch(f"column strategy has {len(y)} weights, matrix has {a.m} columns")


def expected_payoff(x: MixedStrategy, a: PayoffMatrix, y: MixedStrategy):
    """The column player's expected gain x^T A y."""
    _require_dims(x, a, y)
    return sum(
        x[i] * a[i, j] * y[j]
        for i in range(a.n)
        for j in range(a.m)
        if x[i] != 0 and y[j] != 0
    )


def best_response_value(x: MixedStrategy, a: PayoffMatrix):
    """Best column response against x: (max_j (x^T A)_j, lowest argmax index)."""
    _require_dims(x, a)
    best_val = None
    best_j = -1
    for j in range(a.m):
        col = sum(x[i] * a[i, j] for i in range(a.n))
        if best_val is None or col > best_val:
            best_val = col
            best_j = j
    return best_val, best_j


def l2_distance(a: MixedStrategy, b: MixedStrategy) -> float:
    """Euclidean distance between two strategies of equal dimension."""
    if len(a) != len(b):
        raise DimensionMismatch(f"strategies have dimensions {len(a)} and {len(b)}")
    return math.sqrt(float(sum((p - q) * (p - q) for p, q in zip(a.weights, b.weights))))


def uniform_strategy(n: int) -> MixedStrategy:
    """The uniform distribution on n actions, exact."""
    return MixedStrategy(tuple(Fraction(1, n) for _ in range(n)))


def exact_strategy(s) -> MixedStrategy:
    """Promote a strategy (or raw weights) to exact rationals and validate.

    Floats are parsed from their shortest decimal repr, so 0.1 -> 1/10.
    """
    from ._numeric import to_fraction

    weights = s.weights if isinstance(s, MixedStrategy) else s
    return make_mixed_strategy([to_fraction(w) for w in weights])


def exact_matrix(a) -> PayoffMatrix:
    """Promote a matrix (or raw rows) to exact rational entries."""
    from ._numeric import to_fraction

    rows = a.entries if isinstance(a, PayoffMatrix) else a
    return PayoffMatrix.from_rows([[to_fraction(e) for e in row] for row in rows])
