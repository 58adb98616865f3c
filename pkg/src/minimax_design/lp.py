"""Exact small-scale linear programming and a brute-force minimax oracle.

Everything here runs over ``fractions.Fraction``: the simplex method uses
Bland's anti-cycling pivot rule, so results are bit-for-bit deterministic
and cycling is impossible. Variables are free; inequalities are written
``C x >= d``. The support-enumeration oracle is intentionally exhaustive
and capped at 10 actions per side -- it exists to cross-check the
certification path, not to be fast.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from ._numeric import to_fraction
from .errors import CapExceeded, MalformedProgram
from .game import GameValue, MixedStrategy, PayoffMatrix


class LpStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LinearProgram:
    """min p^T x  s.t.  A_eq x = b_eq,  C x >= d.  All variables free."""

    objective: tuple
    a_eq: tuple
    b_eq: tuple
    c_ineq: tuple
    d_ineq: tuple

    @staticmethod
    def build(objective, a_eq, b_eq, c_ineq, d_ineq) -> "LinearProgram":
        obj = tuple(to_fraction(v) for v in objective)
        n = len(obj)
        if n == 0:
            raise MalformedProgram("objective is empty")
        aeq = tuple(tuple(to_fraction(v) for v in row) for row in a_eq)
        beq = tuple(to_fraction(v) for v in b_eq)
        cin = tuple(tuple(to_fraction(v) for v in row) for row in c_ineq)
        din = tuple(to_fraction(v) for v in d_ineq)
        if len(aeq) != len(beq):
            raise MalformedProgram("equality system: row count differs from rhs length")
        if len(cin) != len(din):
            raise MalformedProgram("inequality system: row count differs from rhs length")
        for row in itertools.chain(aeq, cin):
            if len(row) != n:
                raise MalformedProgram(f"constraint row has {len(row)} coefficients, expected {n}")
        return LinearProgram(obj, aeq, beq, cin, din)

    @property
    def n_vars(self) -> int:
        return len(self.objective)


@dataclass(frozen=True)
class LpOutcome:
    status: LpStatus
    solution: tuple | None = None
    objective_value: Fraction | None = None
    tight_set: frozenset | None = None


@dataclass(frozen=True)
class MinimaxFace:
    """All vertices of the row player's optimal set, found by enumeration."""

    value: GameValue
    row_vertices: frozenset
    unique_row: bool


# --- simplex core -----------------------------------------------------------
#
# Standard form: each free variable x_j splits into u_j - w_j with u, w >= 0;
# each inequality row gains a surplus variable. Rows are sign-flipped so every
# rhs is nonnegative, then phase 1 minimizes the sum of one artificial per row.


def _pivot(tab, cost, basis, r, c):
    piv = tab[r][c]
    tab[r] = [v / piv for v in tab[r]]
    row_r = tab[r]
    for rr in range(len(tab)):
        if rr != r and tab[rr][c] != 0:
            f = tab[rr][c]
            tab[rr] = [a - f * b for a, b in zip(tab[rr], row_r)]
    if cost[c] != 0:
        f = cost[c]
        cost[:] = [a - f * b for a, b in zip(cost, row_r)]
    basis[r] = c


def _optimize(tab, cost, basis, n_enterable):
    """Bland's rule: lowest-index entering column, lowest-index leaving basic."""
    zero = Fraction(0)
    while True:
        enter = -1
        for j in range(n_enterable):
            if cost[j] < zero:
                enter = j
                break
        if enter < 0:
            return LpStatus.OPTIMAL
        leave = -1
        best = None
        for r in range(len(tab)):
            a = tab[r][enter]
            if a > zero:
                ratio = tab[r][-1] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best = ratio
                    leave = r
        if leave < 0:
            return LpStatus.UNBOUNDED
        _pivot(tab, cost, basis, leave, enter)


def _standard_rows(lp: LinearProgram):
    """Rows over (u, w, s) columns with nonnegative rhs."""
    n = lp.n_vars
    n_ineq = len(lp.c_ineq)
    n_real = 2 * n + n_ineq
    rows = []
    for eq_row, rhs in zip(lp.a_eq, lp.b_eq):
        row = list(eq_row) + [-v for v in eq_row] + [Fraction(0)] * n_ineq + [rhs]
        rows.append(row)
    for i, (in_row, rhs) in enumerate(zip(lp.c_ineq, lp.d_ineq)):
        row = list(in_row) + [-v for v in in_row] + [Fraction(0)] * n_ineq + [rhs]
        row[2 * n + i] = Fraction(-1)
        rows.append(row)
    for row in rows:
        if row[-1] < 0:
            row[:] = [-v for v in row]
    return rows, n_real


def _phase1(lp: LinearProgram):
    """Find a basic feasible solution; returns (tab, basis, n_real) or None."""
    rows, n_real = _standard_rows(lp)
    n_rows = len(rows)
    tab = []
    for r, row in enumerate(rows):
        art = [Fraction(0)] * n_rows
        art[r] = Fraction(1)
        tab.append(row[:-1] + art + [row[-1]])
    basis = [n_real + r for r in range(n_rows)]
    cost = [Fraction(0)] * n_real + [Fraction(1)] * n_rows + [Fraction(0)]
    for r in range(n_rows):
        cost = [a - b for a, b in zip(cost, tab[r])]
    _optimize(tab, cost, basis, n_real)  # artificials never re-enter
    if -cost[-1] != 0:
        return None
    # Drive remaining artificials out of the basis; drop redundant rows.
    r = 0
    while r < len(tab):
        if basis[r] >= n_real:
            pivot_col = next((j for j in range(n_real) if tab[r][j] != 0), -1)
            if pivot_col < 0:
                del tab[r]
                del basis[r]
                continue
            _pivot(tab, cost, basis, r, pivot_col)
        r += 1
    tab = [row[:n_real] + [row[-1]] for row in tab]
    return tab, basis, n_real


def _extract(lp: LinearProgram, tab, basis, n_real):
    vals = [Fraction(0)] * n_real
    for r, b in enumerate(basis):
        vals[b] = tab[r][-1]
    n = lp.n_vars
    return tuple(vals[j] - vals[n + j] for j in range(n))


def solve_lp(lp: LinearProgram) -> LpOutcome:
    """Exact two-phase simplex. Deterministic: same input, same outcome."""
    if not isinstance(lp, LinearProgram):
        raise MalformedProgram("expected a LinearProgram")
    phase1 = _phase1(lp)
    if phase1 is None:
        return LpOutcome(LpStatus.INFEASIBLE)
    tab, basis, n_real = phase1
    n = lp.n_vars
    cost = [Fraction(0)] * n_real + [Fraction(0)]
    for j in range(n):
        cost[j] = lp.objective[j]
        cost[n + j] = -lp.objective[j]
    for r in range(len(tab)):
        if cost[basis[r]] != 0:
            f = cost[basis[r]]
            cost = [a - f * b for a, b in zip(cost, tab[r])]
    status = _optimize(tab, cost, basis, n_real)
    if status is LpStatus.UNBOUNDED:
        return LpOutcome(LpStatus.UNBOUNDED)
    x = _extract(lp, tab, basis, n_real)
    value = sum(p * xi for p, xi in zip(lp.objective, x))
    tight = frozenset(
        i
        for i, (row, d) in enumerate(zip(lp.c_ineq, lp.d_ineq))
        if sum(c * xi for c, xi in zip(row, x)) == d
    )
    return LpOutcome(LpStatus.OPTIMAL, x, value, tight)


def feasible(a_eq, b_eq, c_ineq, d_ineq) -> bool:
    """Exact emptiness test for {x : A_eq x = b_eq, C x >= d}."""
    return find_feasible_point(a_eq, b_eq, c_ineq, d_ineq) is not None


def find_feasible_point(a_eq, b_eq, c_ineq, d_ineq):
    """A point of the polyhedron, or None when it is empty."""
    n = max(
        (len(r) for r in itertools.chain(a_eq, c_ineq)),
        default=0,
    )
    if n == 0:
        raise MalformedProgram("feasibility system has no variables")
    lp = LinearProgram.build([0] * n, a_eq, b_eq, c_ineq, d_ineq)
    phase1 = _phase1(lp)
    if phase1 is None:
        return None
    tab, basis, n_real = phase1
    return _extract(lp, tab, basis, n_real)


# --- game value and the enumeration oracle ----------------------------------


def _row_lp(a: PayoffMatrix) -> LinearProgram:
    # variables (v, x_1..x_n): min v  s.t.  v - (x^T A)_j >= 0, x >= 0, sum x = 1
    n, m = a.n, a.m
    ineq = []
    for j in range(m):
        ineq.append([Fraction(1)] + [-to_fraction(a[i, j]) for i in range(n)])
    for i in range(n):
        row = [Fraction(0)] * (n + 1)
        row[i + 1] = Fraction(1)
        ineq.append(row)
    eq = [[Fraction(0)] + [Fraction(1)] * n]
    return LinearProgram.build(
        [1] + [0] * n, eq, [Fraction(1)], ineq, [Fraction(0)] * (m + n)
    )


def _col_lp(a: PayoffMatrix) -> LinearProgram:
    # variables (w, y_1..y_m): max w == min -w  s.t.  (A y)_i - w >= 0, y >= 0, sum y = 1
    n, m = a.n, a.m
    ineq = []
    for i in range(n):
        ineq.append([Fraction(-1)] + [to_fraction(a[i, j]) for j in range(m)])
    for j in range(m):
        row = [Fraction(0)] * (m + 1)
        row[j + 1] = Fraction(1)
        ineq.append(row)
    eq = [[Fraction(0)] + [Fraction(1)] * m]
    return LinearProgram.build(
        [-1] + [0] * m, eq, [Fraction(1)], ineq, [Fraction(0)] * (n + m)
    )


def game_value(a: PayoffMatrix) -> GameValue:
    """Exact value of the zero-sum game, with a strong-duality self-check."""
    row = solve_lp(_row_lp(a))
    col = solve_lp(_col_lp(a))
    if row.status is not LpStatus.OPTIMAL or col.status is not LpStatus.OPTIMAL:
        raise MalformedProgram("game LPs must be solvable for a finite matrix")
    v_row = row.objective_value
    v_col = -col.objective_value
    if v_row != v_col:  # would indicate a simplex bug, not bad input
        raise AssertionError(f"strong duality violated: {v_row} != {v_col}")
    return GameValue(v_row)


def minimax_pair(a: PayoffMatrix):
    """One exact minimax pair (x, y) straight from the two game LPs."""
    row = solve_lp(_row_lp(a))
    col = solve_lp(_col_lp(a))
    x = MixedStrategy(tuple(row.solution[1:]))
    y = MixedStrategy(tuple(col.solution[1:]))
    return x, y, GameValue(row.objective_value)


def _solve_square(rows, rhs):
    """Gaussian elimination over Fractions; None when singular."""
    k = len(rows)
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    for col in range(k):
        piv = next((r for r in range(col, k) if aug[r][col] != 0), -1)
        if piv < 0:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col]
        aug[col] = [v / inv for v in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[r][-1] for r in range(k)]


ORACLE_CAP = 10


def enumerate_minimax_rows(a: PayoffMatrix, cap: int = ORACLE_CAP) -> MinimaxFace:
    """Every vertex of the row player's optimal set, by support enumeration.

    A vertex with support S is pinned by the simplex equality plus |S| - 1
    tight columns, so trying every (support, column-subset) pair and keeping
    the candidates that are feasible and optimal against all pure column
    responses is exhaustive. Exponential in min(n, m); hence the cap.
    """
    n, m = a.n, a.m
    if n > cap or m > cap:
        raise CapExceeded(f"oracle limited to {cap} actions per side, got {n}x{m}")
    ent = tuple(tuple(to_fraction(v) for v in row) for row in a.entries)
    v = game_value(PayoffMatrix(ent)).v
    vertices = set()
    for k in range(1, n + 1):
        for sup in itertools.combinations(range(n), k):
            for cols in itertools.combinations(range(m), k - 1):
                rows = [[Fraction(1)] * k]
                rhs = [Fraction(1)]
                for j in cols:
                    rows.append([ent[i][j] for i in sup])
                    rhs.append(v)
                sol = _solve_square(rows, rhs)
                if sol is None or any(w < 0 for w in sol):
                    continue
                x = [Fraction(0)] * n
                for idx, i in enumerate(sup):
                    x[i] = sol[idx]
                f = max(sum(ent[i][j] * x[i] for i in range(n)) for j in range(m))
                if f == v:
                    vertices.add(tuple(x))
    strategies = frozenset(MixedStrategy(x) for x in vertices)
    return MinimaxFace(GameValue(v), strategies, len(strategies) == 1)
