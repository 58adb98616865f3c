"""Certify a (matrix, x*, y*) triple: minimax pair and row uniqueness.

Three checks compose into a certificate, all over exact rationals (float
inputs are promoted through their decimal repr -- a uniqueness certificate
at tolerance is not a certificate):

1. pair check -- the saddle-point inequalities with complementary
   equalities on both supports;
2. column-pattern check -- a per-support-row dominance pattern inside the
   columns y* plays, sufficient (not necessary) for uniqueness;
3. uniqueness check -- infeasibility of the homogeneous direction system
   derived from the optimality conditions of the row player's LP. A
   nonzero direction must have a negative coordinate on the support of
   x*, so fixing each candidate coordinate to -1 in turn reduces the
   nonconvex "x != 0" condition to at most n exact LP feasibility runs.

An independent support-enumeration oracle can be run alongside as a
cross-check on small instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, NotAMinimaxPair
from .game import GameValue, MixedStrategy, PayoffMatrix, exact_matrix, exact_strategy, support
from .lp import ORACLE_CAP, enumerate_minimax_rows, find_feasible_point


@dataclass(frozen=True)
class MinimaxCertificate:
    pair_ok: bool
    value: GameValue
    lemma_ok: bool
    kkt_unique: bool
    oracle_agrees: bool | None = None
    witness: tuple | None = None
    lemma_columns: tuple | None = None  # (support row, covering column) pairs

    @property
    def certified_unique(self) -> bool:
        return self.pair_ok and self.kkt_unique


def _promote(a, x_star, y_star):
    a = exact_matrix(a)
    x = exact_strategy(x_star)
    y = exact_strategy(y_star)
    if len(x) != a.n or len(y) != a.m:
        raise DimensionMismatch(
            f"matrix is {a.n}x{a.m}, strategies have dimensions {len(x)}, {len(y)}"
        )
    return a, x, y


def check_minimax_pair(a, x_star, y_star):
    """Exact saddle-point test; returns (pair_ok, value) with v = x*^T A y*.

    x* must make every column worth at most v, with equality on the columns
    y* plays; y* must make every row worth at least v, with equality on the
    rows x* plays.
    """
    a, x, y = _promote(a, x_star, y_star)
    v = sum(x[i] * a[i, j] * y[j] for i in range(a.n) for j in range(a.m))
    for j in range(a.m):
        col = sum(a[i, j] * x[i] for i in range(a.n))
        if col > v or (y[j] > 0 and col != v):
            return False, GameValue(v)
    for i in range(a.n):
        row = sum(a[i, j] * y[j] for j in range(a.m))
        if row < v or (x[i] > 0 and row != v):
            return False, GameValue(v)
    return True, GameValue(v)


def _column_covers(a: PayoffMatrix, sup_x, k: int, j: int) -> bool:
    """Does column j force any redistribution direction leaving row k to
    violate optimality?

    A direction d with d_k < 0 normalizes to weights summing to 1 over the
    other rows, free on support rows and nonnegative elsewhere, and its
    column-j payoff must not exceed A_kj. The infimum of that payoff is the
    common value beta of the support rows (minus infinity if they disagree
    or some off-support entry dips below beta), so the column covers k iff
    the support rows i != k share one value beta > A_kj > 0 and every
    off-support entry is at least beta. With no other support rows the
    infimum is the smallest off-support entry, which must exceed A_kj.
    """
    g = a[k, j]
    if g <= 0:
        return False
    support_vals = {a[i, j] for i in sup_x if i != k}
    off_vals = [a[i, j] for i in range(a.n) if i not in sup_x]
    if len(support_vals) > 1:
        return False
    if support_vals:
        (beta,) = support_vals
        return beta > g and all(v >= beta for v in off_vals)
    return all(v > g for v in off_vals)


def _lemma_cover(a: PayoffMatrix, x: MixedStrategy, y: MixedStrategy):
    cover = []
    sup_x = support(x)
    sup_y = sorted(support(y))
    for k in sorted(sup_x):
        found = next((j for j in sup_y if _column_covers(a, sup_x, k, j)), None)
        cover.append((k, found))
    return cover


def check_lemma_columns(a, x_star, y_star) -> bool:
    """True iff every support row of x* has a covering column (see
    _column_covers), searched among the columns y* actually plays.

    Both restrictions are load-bearing for soundness: a pattern in a column
    y* never plays contradicts nothing (the direction system only
    constrains played columns), and on support rows only an exact common
    value bounds the normalized payoff from below -- support coordinates of
    a direction are free, so a mere lower bound cannot.
    """
    a, x, y = _promote(a, x_star, y_star)
    return all(j is not None for _, j in _lemma_cover(a, x, y))


def check_row_uniqueness_kkt(a, x_star, y_star):
    """Decide uniqueness of x* among row minimax strategies.

    x* is unique iff no nonzero direction d satisfies: sum d_i = 0,
    d_i >= 0 off the support of x*, and (d^T A)_j <= 0 on every column y*
    plays. Only the zero-slack slice matters (a solution with negative
    slack yields one with zero slack), and any nonzero solution has some
    d_k < 0 with x*_k > 0, so each candidate k is probed by an exact
    feasibility run with d_k = -1. Returns (unique, witness) where the
    witness is a feasible direction when uniqueness fails.
    """
    a, x, y = _promote(a, x_star, y_star)
    pair_ok, _ = check_minimax_pair(a, x, y)
    if not pair_ok:
        raise NotAMinimaxPair("(x*, y*) is not a minimax pair for this matrix")
    n = a.n
    off_support = [i for i in range(n) if x[i] == 0]
    sup_cols = sorted(support(y))
    ineq = []
    for i in off_support:
        row = [Fraction(0)] * n
        row[i] = Fraction(1)
        ineq.append(row)
    for j in sup_cols:
        ineq.append([-a[i, j] for i in range(n)])
    d_ineq = [Fraction(0)] * len(ineq)
    ones = [Fraction(1)] * n
    for k in sorted(support(x)):
        pin = [Fraction(0)] * n
        pin[k] = Fraction(1)
        point = find_feasible_point(
            [ones, pin], [Fraction(0), Fraction(-1)], ineq, d_ineq
        )
        if point is not None:
            return False, tuple(point)
    return True, None


def certify(a, x_star, y_star, run_oracle: bool = False) -> MinimaxCertificate:
    """Run all checks and bundle the verdicts.

    The structure checks presuppose the pair property, so a failed pair
    check short-circuits them to False and skips the oracle. When the
    oracle runs, it must agree with the uniqueness verdict and, in the
    unique case, its single vertex must equal x* exactly.
    """
    a, x, y = _promote(a, x_star, y_star)
    pair_ok, value = check_minimax_pair(a, x, y)
    if not pair_ok:
        return MinimaxCertificate(False, value, False, False)
    cover = _lemma_cover(a, x, y)
    lemma_ok = all(j is not None for _, j in cover)
    kkt_unique, witness = check_row_uniqueness_kkt(a, x, y)
    if lemma_ok and not kkt_unique:
        raise AssertionError(
            "dominance pattern found yet the direction system is feasible; "
            "one of the two checks is wrong"
        )
    oracle_agrees = None
    if run_oracle and a.n <= ORACLE_CAP and a.m <= ORACLE_CAP:
        face = enumerate_minimax_rows(a)
        oracle_agrees = face.unique_row == kkt_unique
        if face.unique_row:
            (vertex,) = face.row_vertices
            oracle_agrees = oracle_agrees and vertex.weights == x.weights
    return MinimaxCertificate(
        True, value, lemma_ok, kkt_unique, oracle_agrees, witness, tuple(cover)
    )
