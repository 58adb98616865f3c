"""Repeated-play engine: simultaneous commits, metrics, stuck-learner demo.

Each round both sides commit from feedback through the previous round
only, then observe their payoff vectors. The learner is fed the affine
normalization of its payoff vector into [0, 1] (constant matrices are fed
raw); all recorded metrics use the raw matrix so the game value keeps its
meaning. The lock decision of the guiding policy is evaluated after odd
rounds only, so the iterate it freezes is exactly the one whose gap was
measured; after a lock the match runs a fixed number of confirmation
rounds and stops early.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .designer import DesignedGame
from .errors import (
    BadInstance,
    DimensionMismatch,
    EmptyTrajectory,
    MisroutedPolicy,
    NonCertifiedGame,
)
from .game import MixedStrategy, support
from .learners import LEARNER_KINDS, MWU, RateSchedule, learner_init, learner_step
from .lrca import GUIDING, LOCKED, LrcaState, lrca_step, maybe_lock

CONFIRMATION_ROUNDS = 100
DEFAULT_HORIZON = 10**6


@dataclass(frozen=True)
class LearnerSpec:
    kind: str = MWU
    schedule: RateSchedule | None = None


@dataclass(frozen=True)
class LrcaSpec:
    epsilon_lock: float = 0.05


@dataclass(frozen=True)
class ConstantYstarSpec:
    """Column player that plays y* every round, guidance-free."""


@dataclass(frozen=True)
class RoundRecord:
    t: int
    x: MixedStrategy
    y: MixedStrategy
    payoff: float
    f_gap: float
    dist_to_target: float
    alpha: float
    mode: str


class _RoundsView:
    """Lazy 0-indexed sequence of RoundRecord over columnar trajectory data."""

    def __init__(self, traj):
        self._traj = traj

    def __len__(self):
        return len(self._traj.ts)

    def __getitem__(self, i):
        tr = self._traj
        if isinstance(i, slice):
            return [self[j] for j in range(*i.indices(len(self)))]
        return RoundRecord(
            t=int(tr.ts[i]),
            x=MixedStrategy(tuple(tr.xs[i].tolist())),
            y=MixedStrategy(tuple(tr.ys[i].tolist())),
            payoff=float(tr.payoffs[i]),
            f_gap=float(tr.f_gaps[i]),
            dist_to_target=float(tr.dists[i]),
            alpha=float(tr.alphas[i]),
            mode=LOCKED if tr.locked[i] else GUIDING,
        )

    def __iter__(self):
        return (self[i] for i in range(len(self)))


@dataclass
class Trajectory:
    """Per-round history stored columnwise; `rounds` views it record-wise."""

    game: DesignedGame
    seed: int
    ts: np.ndarray
    xs: np.ndarray  # shape (T, n)
    ys: np.ndarray  # shape (T, m)
    payoffs: np.ndarray
    f_gaps: np.ndarray
    dists: np.ndarray
    alphas: np.ndarray
    locked: np.ndarray  # bool per round: mode when y_t was chosen
    lock_round: int | None = None

    @property
    def rounds(self) -> _RoundsView:
        return _RoundsView(self)

    @property
    def horizon(self) -> int:
        return len(self.ts)


@dataclass(frozen=True)
class RegretReport:
    row_regret: float
    col_regret: float
    horizon: int


@dataclass(frozen=True)
class Claim1Report:
    final_distance: float
    min_distance: float


def _require_certified(game: DesignedGame):
    cert = game.certificate
    if cert is None or not (cert.pair_ok and cert.kkt_unique):
        raise NonCertifiedGame(
            "run_match needs a game carrying a passing certificate; "
            "build it with design() or certify it explicitly"
        )


def run_match(
    game: DesignedGame,
    learner: LearnerSpec,
    policy,
    horizon: int,
    seed: int = 0,
    confirmation_rounds: int = CONFIRMATION_ROUNDS,
) -> Trajectory:
    """Play `horizon` rounds (fewer if the policy locks and confirms).

    The learner commits x_t from losses through round t-1; the column
    policy commits y_t from the feedback vector x_{t-1}^T A. Neither sees
    the other's round-t choice before committing. The seed does not touch
    the dynamics (both sides are deterministic); it is recorded so sweep
    outputs stay distinguishable.
    """
    if horizon < 1:
        raise ValueError(f"horizon must be at least 1, got {horizon}")
    if not isinstance(learner, LearnerSpec):
        raise MisroutedPolicy(f"expected a LearnerSpec for the row player, got {learner!r}")
    _require_certified(game)

    a = game.matrix.to_array()
    n, m = a.shape
    x_star = game.x_star.to_array()
    y_star = game.y_star.to_array()
    v = float(game.value.v)
    a_t = a.T.copy()

    a_min = float(a.min())
    a_range = float(a.max()) - a_min
    ay_star = a @ y_star

    state = learner_init(learner.kind, n, learner.schedule)
    if isinstance(policy, LrcaSpec):
        col_state = LrcaState(game.y_star, v, n, epsilon_lock=policy.epsilon_lock)
    elif isinstance(policy, ConstantYstarSpec):
        col_state = None
    else:
        raise MisroutedPolicy(f"unknown column policy {policy!r}")

    cap = min(horizon, 1 << 17)
    xs = np.empty((cap, n))
    ys = np.empty((cap, m))
    payoffs = np.empty(cap)
    f_gaps = np.empty(cap)
    dists = np.empty(cap)
    alphas = np.empty(cap)
    locked = np.empty(cap, dtype=bool)
    lock_round = None
    stop_after = None
    prev_feedback = None
    rounds_played = 0

    for t in range(1, horizon + 1):
        if t > cap:
            cap = min(horizon, cap * 2)
            grow = cap - len(payoffs)
            xs = np.vstack([xs, np.empty((grow, n))])
            ys = np.vstack([ys, np.empty((grow, m))])
            payoffs, f_gaps, dists, alphas, locked = (
                np.concatenate([arr, np.empty(grow, dtype=arr.dtype)])
                for arr in (payoffs, f_gaps, dists, alphas, locked)
            )

        x = state.current
        if col_state is None:
            y = y_star
            alpha = 0.0
            mode_locked = False
            ay = ay_star
        else:
            mode_locked = col_state.mode == LOCKED
            needs_feedback = (not mode_locked) and (col_state.round + 1) % 2 == 0
            col_state, y_ms, alpha = lrca_step(
                col_state, prev_feedback if needs_feedback else None
            )
            if alpha == 0.0:
                y = y_star
                ay = ay_star
            else:
                y = np.asarray(y_ms.weights, dtype=float)
                ay = a @ y

        col_feedback = a_t @ x
        f = float(col_feedback.max())
        i = t - 1
        xs[i] = x
        ys[i] = y
        payoffs[i] = x @ ay
        f_gaps[i] = f - v
        dists[i] = np.linalg.norm(x - x_star)
        alphas[i] = alpha
        locked[i] = mode_locked
        rounds_played = t

        loss = ay if a_range == 0.0 else (ay - a_min) / a_range
        state, _ = learner_step(state, loss)

        if col_state is not None and t % 2 == 1 and col_state.mode == GUIDING:
            col_state = maybe_lock(col_state, f)
            if col_state.mode == LOCKED:
                lock_round = t
                stop_after = t + confirmation_rounds

        prev_feedback = col_feedback
        if stop_after is not None and t >= stop_after:
            break

    k = rounds_played
    return Trajectory(
        game=game,
        seed=seed,
        ts=np.arange(1, k + 1, dtype=np.int64),
        xs=xs[:k].copy(),
        ys=ys[:k].copy(),
        payoffs=payoffs[:k].copy(),
        f_gaps=f_gaps[:k].copy(),
        dists=dists[:k].copy(),
        alphas=alphas[:k].copy(),
        locked=locked[:k].copy(),
        lock_round=lock_round,
    )


def regret_report(traj: Trajectory) -> RegretReport:
    """Regret of both players against their best fixed strategy, raw units.

    The best fixed mixed strategy is attained at a pure one, so the row
    regret is sum_t x_t^T A y_t - min_i sum_t (A y_t)_i and the column
    regret flips the sign: max_j sum_t (x_t^T A)_j - sum_t x_t^T A y_t.
    """
    if traj.horizon == 0:
        raise EmptyTrajectory("cannot report regret on an empty trajectory")
    a = traj.game.matrix.to_array()
    total = float(traj.payoffs.sum())
    y_sum = traj.ys.sum(axis=0)
    x_sum = traj.xs.sum(axis=0)
    best_row = float((a @ y_sum).min())
    best_col = float((a.T @ x_sum).max())
    return RegretReport(total - best_row, best_col - total, traj.horizon)


def detect_eps_nash(traj: Trajectory, eps: float) -> int | None:
    """Smallest round whose gap f(x_t) - v is at most eps, if any."""
    if not eps > 0:
        raise ValueError(f"eps must be positive, got {eps}")
    hits = np.nonzero(traj.f_gaps <= eps)[0]
    if len(hits) == 0:
        return None
    return int(traj.ts[hits[0]])


def claim1_experiment(game: DesignedGame, learner: LearnerSpec, horizon: int) -> Claim1Report:
    """Show that playing y* constantly does not guide the learner to x*.

    Needs a target with support above 1 that is non-uniform on its support:
    the constant payoff vector then freezes any observation-driven learner
    at the uniform strategy, which never approaches x*. Reports the final
    and minimum distance to the target over the run.
    """
    if isinstance(learner, (LrcaSpec, ConstantYstarSpec)):
        raise MisroutedPolicy(
            "claim1_experiment takes the row learner spec; the column side is "
            "fixed to the constant-y* policy (use run_match for other policies)"
        )
    if not isinstance(learner, LearnerSpec):
        raise MisroutedPolicy(f"expected a LearnerSpec, got {learner!r}")
    sup = sorted(support(game.x_star))
    if len(sup) < 2:
        raise BadInstance("the stuck-learner effect needs |support(x*)| > 1")
    on_support = [game.x_star[i] for i in sup]
    if all(w == on_support[0] for w in on_support):
        raise BadInstance(
            "x* is uniform on its support, where the constant policy happens to "
            "converge; the counterexample needs a non-uniform target"
        )
    traj = run_match(game, learner, ConstantYstarSpec(), horizon)
    return Claim1Report(float(traj.dists[-1]), float(traj.dists.min()))
