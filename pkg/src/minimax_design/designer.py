"""Construct payoff matrices whose row-player minimax strategy is unique.

Given a target row strategy x*, a column strategy y* whose support is at
least as large, and a desired positive game value v, these builders emit a
matrix A with x*^T A = v 1^T over every column and A y* = v 1 over the
rows x* plays (so (x*, y*) is a minimax pair at value v), whose per-column
structure forces x* to be the *only* row minimax strategy: in column q the
diagonal entry a_q sits strictly below the common value alpha_q carried by
every other row, so any redistribution direction d satisfies
d^T A_q = -d_q (alpha_q - a_q), and the optimality system pins d = 0.

Rows outside the target's support carry alpha_q as well, which makes them
strictly worse than v against y*. Making them exactly indifferent instead
(entries alpha_q - z, so that A y* = v 1 over *all* rows) is tempting but
provably destroys uniqueness whenever |support(y*)| < n: the y*-weighted
sum of the column constraints then telescopes to zero and a nonzero
indifference direction always exists.

All arithmetic is exact rational; floats are an explicit lossy export via
PayoffMatrix.to_array(). The three builders cover equal supports, strictly
larger column support, and the degenerate single-action target (where the
general formulas collapse and a dominant-column construction is used
instead). ``design`` routes between them and certifies the result.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ._numeric import to_fraction
from .errors import (
    CertificationFailed,
    DegenerateSupport,
    NotSingleton,
    ParameterOutOfRange,
    SupportMismatch,
    SupportNotSmaller,
    SupportTooSmall,
)
from .game import GameValue, MixedStrategy, PayoffMatrix, exact_strategy, support

EQUAL_SUPPORT = "EqualSupport"
LARGER_SUPPORT = "LargerSupport"
SINGLETON_SUPPORT = "SingletonSupport"


@dataclass(frozen=True)
class DesignSpec:
    """Inputs to a construction: target pair, value, optional free parameters."""

    x_star: MixedStrategy
    y_star: MixedStrategy
    v: Fraction = Fraction(1)
    z: Fraction | None = None
    v1: Fraction | None = None


@dataclass(frozen=True)
class ConstructionParams:
    z: Fraction | None = None
    v1: Fraction | None = None
    y_bar: Fraction | None = None
    alpha: tuple = ()
    a: tuple = ()
    beta: tuple = ()
    gap: Fraction | None = None


@dataclass(frozen=True)
class DesignedGame:
    matrix: PayoffMatrix
    x_star: MixedStrategy
    y_star: MixedStrategy
    value: GameValue
    row_perm: tuple  # row_perm[p] = original row index of canonical row p
    col_perm: tuple
    construction: str
    parameters: ConstructionParams
    certificate: object = field(default=None, compare=False)


def _perm(strategy: MixedStrategy) -> tuple:
    """Support indices first (ascending), then the rest: canonical -> original."""
    sup = sorted(support(strategy))
    rest = [i for i in range(len(strategy)) if i not in set(sup)]
    return tuple(sup + rest)


def _apply_perms(canonical, row_perm, col_perm) -> PayoffMatrix:
    n, m = len(row_perm), len(col_perm)
    out = [[None] * m for _ in range(n)]
    for p in range(n):
        for q in range(m):
            out[row_perm[p]][col_perm[q]] = canonical[p][q]
    return PayoffMatrix.from_rows(out)


def _require_positive_value(v: Fraction):
    if v <= 0:
        raise ParameterOutOfRange(f"game value must be positive, got {v}")


def _canonical_grid(n, m, k, alpha, a, v):
    """Support-leading layout: diagonal a_q, common alpha_q elsewhere in
    column q < k, constant v past column k."""
    grid = [[None] * m for _ in range(n)]
    for p in range(n):
        for q in range(m):
            if q >= k:
                grid[p][q] = v
            elif p == q:
                grid[p][q] = a[q]
            else:
                grid[p][q] = alpha[q]
    return grid


def design_equal_support(spec: DesignSpec) -> DesignedGame:
    """Equal-support construction: |support(x*)| = |support(y*)| = k >= 2.

    With the supports permuted to the leading positions, the matrix is
    a_p on the diagonal of the top-left k x k block, alpha_q everywhere
    else in column q <= k (below-support rows included), and v everywhere
    past column k, where alpha_p = v + z x_p / y_p and
    a_p = v - z (1 - x_p) / y_p. Any z in
    (0, min_p min(v, v y_p / (1 - x_p))) keeps all entries positive and
    every diagonal gap strict.
    """
    x = exact_strategy(spec.x_star)
    y = exact_strategy(spec.y_star)
    v = to_fraction(spec.v)
    _require_positive_value(v)
    row_perm = _perm(x)
    col_perm = _perm(y)
    k = len(support(x))
    if k != len(support(y)):
        raise SupportMismatch(
            f"supports differ: |support(x*)| = {k}, |support(y*)| = {len(support(y))}"
        )
    if k == 1:
        raise DegenerateSupport("equal-support formulas collapse at support 1; use design_singleton")
    xs = [x[i] for i in row_perm[:k]]
    ys = [y[j] for j in col_perm[:k]]
    z_max = min(min(v, v * ys[p] / (1 - xs[p])) for p in range(k))
    z = to_fraction(spec.z) if spec.z is not None else z_max / 2
    if not (0 < z < z_max):
        raise ParameterOutOfRange(f"need 0 < z < {z_max}, got {z}")
    alpha = [v + z * xs[p] / ys[p] for p in range(k)]
    a = [v - z * (1 - xs[p]) / ys[p] for p in range(k)]
    matrix = _apply_perms(_canonical_grid(len(x), len(y), k, alpha, a, v), row_perm, col_perm)
    assert all(e > 0 for row in matrix.entries for e in row)
    return DesignedGame(
        matrix, x, y, GameValue(v), row_perm, col_perm, EQUAL_SUPPORT,
        ConstructionParams(z=z, alpha=tuple(alpha), a=tuple(a)),
    )


def design_larger_support(spec: DesignSpec) -> DesignedGame:
    """Construction for k = |support(x*)| < l = |support(y*)|, k >= 2.

    Writing y_bar for the mass of y* beyond the first k support positions,
    the free parameter v1 fixes z = (v y_bar - v1) / sum_{p<k} y_p and
    alpha_p = v + x_p (v y_bar - v1) / y_p, a_p = alpha_p - (v y_bar - v1) / y_p,
    with all columns past k filled by v. Positivity of every a_p requires
    v1 > v y_bar - v min_p y_p / (1 - x_p), which is stricter than v1 > 0
    when some support entry of y* is small; the accepted interval reflects
    that.
    """
    x = exact_strategy(spec.x_star)
    y = exact_strategy(spec.y_star)
    v = to_fraction(spec.v)
    _require_positive_value(v)
    row_perm = _perm(x)
    col_perm = _perm(y)
    k = len(support(x))
    l = len(support(y))
    if k >= l:
        raise SupportNotSmaller(f"need |support(x*)| < |support(y*)|, got {k} >= {l}")
    if k == 1:
        raise DegenerateSupport("formulas collapse at support 1; use design_singleton")
    xs = [x[i] for i in row_perm[:k]]
    ys = [y[j] for j in col_perm[:l]]
    head = sum(ys[:k])
    y_bar = sum(ys[k:])
    hi = v * y_bar
    lo = max(Fraction(0), hi - min(v * ys[p] / (1 - xs[p]) for p in range(k)))
    v1 = to_fraction(spec.v1) if spec.v1 is not None else (lo + hi) / 2
    if not (lo < v1 < hi):
        raise ParameterOutOfRange(f"need {lo} < v1 < {hi}, got {v1}")
    d = hi - v1
    z = d / head
    alpha = [v + xs[p] * d / ys[p] for p in range(k)]
    a = [alpha[p] - d / ys[p] for p in range(k)]
    beta = [v] * k
    matrix = _apply_perms(_canonical_grid(len(x), len(y), k, alpha, a, v), row_perm, col_perm)
    assert all(e > 0 for row in matrix.entries for e in row)
    return DesignedGame(
        matrix, x, y, GameValue(v), row_perm, col_perm, LARGER_SUPPORT,
        ConstructionParams(
            z=z, v1=v1, y_bar=y_bar, alpha=tuple(alpha), a=tuple(a), beta=tuple(beta)
        ),
    )


def design_singleton(x_star, v, gap, m: int | None = None) -> DesignedGame:
    """Dominant-column construction for a single-action target.

    The general formulas degenerate at support 1 (the diagonal entry equals
    the below-support entry, yielding a constant column and a non-unique
    minimax), so instead one column carries v at the target row and v + gap
    everywhere else, and every other column is constant v. The column
    player's strategy is the pure strategy on the special column; note
    A y* is not a constant vector here, only min_x x^T A y* = v holds.
    """
    x = exact_strategy(x_star)
    sup = support(x)
    if len(sup) != 1:
        raise NotSingleton(f"target has support size {len(sup)}, expected 1")
    v = to_fraction(v)
    gap = to_fraction(gap)
    _require_positive_value(v)
    if gap <= 0:
        raise ParameterOutOfRange(f"gap must be positive, got {gap}")
    (i0,) = sup
    n = len(x)
    m = n if m is None else m
    j0 = i0 if i0 < m else 0
    rows = [
        [v + gap if (j == j0 and i != i0) else v for j in range(m)]
        for i in range(n)
    ]
    y = MixedStrategy(tuple(Fraction(1) if j == j0 else Fraction(0) for j in range(m)))
    return DesignedGame(
        PayoffMatrix.from_rows(rows), x, y, GameValue(v),
        tuple(range(n)), tuple(range(m)), SINGLETON_SUPPORT,
        ConstructionParams(gap=gap),
    )


def design(
    x_star,
    y_star,
    v=Fraction(1),
    *,
    z=None,
    v1=None,
    gap=None,
    run_oracle: bool = False,
) -> DesignedGame:
    """Build and certify a game whose unique row minimax strategy is x*.

    Routes by support sizes: rejects |support(y*)| < |support(x*)| outright
    (no such matrix can keep x* unique), sends single-action targets to the
    dominant-column construction, equal supports to the diagonal-gap
    construction, larger column support to its extension. Free parameters
    left unset are chosen at the midpoint of their admissible interval
    (the singleton gap, with no upper bound, defaults to v). The built
    matrix is always run through the verifier before being returned.
    """
    from .verifier import certify

    x = exact_strategy(x_star)
    y = exact_strategy(y_star)
    v = to_fraction(v)
    _require_positive_value(v)
    kx = len(support(x))
    ly = len(support(y))
    if ly < kx:
        raise SupportTooSmall(
            f"|support(y*)| = {ly} < |support(x*)| = {kx}: uniqueness is unattainable"
        )
    if kx == 1:
        game = design_singleton(x, v, gap if gap is not None else v, m=len(y))
    elif kx == ly:
        game = design_equal_support(DesignSpec(x, y, v, z=z))
    else:
        game = design_larger_support(DesignSpec(x, y, v, v1=v1))
    cert = certify(game.matrix, game.x_star, game.y_star, run_oracle=run_oracle)
    ok = cert.pair_ok and cert.lemma_ok and cert.kkt_unique
    if run_oracle:
        ok = ok and cert.oracle_agrees
    if not ok:
        raise CertificationFailed(f"construction failed its own certificate: {cert}")
    return DesignedGame(
        game.matrix, game.x_star, game.y_star, game.value,
        game.row_perm, game.col_perm, game.construction, game.parameters,
        certificate=cert,
    )
