"""Row-player no-regret learners with a uniform stepping interface.

Three kinds share one state shape: multiplicative weights, its synonym
follow-the-regularized-leader with an entropic regularizer, and FTRL with
a Euclidean regularizer (lazy projected descent). Each step consumes the
full payoff vector of the opponent's mixed strategy -- full-information
feedback, no sampling.

Losses are accumulated pre-scaled by the step size of the round they
arrived in, and the accumulator is shifted by its minimum every step.
Both transformations leave the iterate unchanged (softmax and simplex
projection ignore common offsets) while keeping magnitudes small over
millions of rounds. The per-round scaling also makes every kind exactly
insensitive to constant loss vectors even under a decaying step size:
a constant vector shifts all coordinates of the accumulator equally, so
the iterate stays put. That insensitivity is the mechanism behind the
guiding policy's endgame, so it is load-bearing, not an optimization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BadDimension, DimensionMismatch, NonFiniteInput, NonFiniteLoss
from .game import MixedStrategy

MWU = "mwu"
FTRL_ENTROPY = "ftrl-entropy"
FTRL_EUCLIDEAN = "ftrl-euclidean"
LEARNER_KINDS = (MWU, FTRL_ENTROPY, FTRL_EUCLIDEAN)

CONSTANT = "constant"
INVERSE_SQRT = "inverse-sqrt"


@dataclass(frozen=True)
class RateSchedule:
    """Step-size schedule: eta (constant) or eta / sqrt(t) (inverse-sqrt)."""

    kind: str = INVERSE_SQRT
    eta: float = 1.0

    def __post_init__(self):
        if self.kind not in (CONSTANT, INVERSE_SQRT):
            raise ValueError(f"unknown schedule kind {self.kind!r}")
        if not self.eta > 0:
            raise ValueError(f"eta must be positive, got {self.eta}")

    def at(self, t: int) -> float:
        if self.kind == CONSTANT:
            return self.eta
        return self.eta / math.sqrt(t)


def default_schedule(kind: str, n: int) -> RateSchedule:
    """sqrt(ln n / t) for the entropic kinds, 1/sqrt(t) for Euclidean."""
    if kind == FTRL_EUCLIDEAN:
        return RateSchedule(INVERSE_SQRT, 1.0)
    return RateSchedule(INVERSE_SQRT, math.sqrt(math.log(max(n, 2))))


@dataclass(frozen=True)
class LearnerState:
    kind: str
    schedule: RateSchedule
    round: int
    cumulative_loss: np.ndarray  # plain running sum of fed loss vectors
    scaled_loss: np.ndarray  # sum of eta_t-scaled losses, min-shifted
    current: np.ndarray  # the iterate: a probability vector

    @property
    def n(self) -> int:
        return len(self.current)

    def current_strategy(self) -> MixedStrategy:
        return MixedStrategy(tuple(self.current.tolist()))


def learner_init(kind: str, n: int, schedule: RateSchedule | None = None) -> LearnerState:
    """Fresh learner at the uniform strategy with zero accumulated loss."""
    if kind not in LEARNER_KINDS:
        raise ValueError(f"unknown learner kind {kind!r}")
    if n < 1:
        raise BadDimension(f"need at least one action, got n={n}")
    if schedule is None:
        schedule = default_schedule(kind, n)
    return LearnerState(
        kind, schedule, 0, np.zeros(n), np.zeros(n), np.full(n, 1.0 / n)
    )


def _project(z: np.ndarray) -> np.ndarray:
    """Euclidean projection onto the simplex by sort-and-threshold."""
    u = np.sort(z)[::-1]
    thresholds = (np.cumsum(u) - 1.0) / np.arange(1, len(z) + 1)
    rho = np.nonzero(u > thresholds)[0][-1]
    return np.maximum(z - thresholds[rho], 0.0)


def project_simplex(point) -> MixedStrategy:
    """The Euclidean-closest simplex point to an arbitrary vector."""
    z = np.asarray(point, dtype=float)
    if z.ndim != 1 or len(z) == 0:
        raise DimensionMismatch("projection input must be a non-empty vector")
    if not np.all(np.isfinite(z)):
        raise NonFiniteInput(f"projection input contains non-finite entries: {z}")
    return MixedStrategy(tuple(_project(z).tolist()))


def learner_step(state: LearnerState, loss) -> tuple[LearnerState, MixedStrategy]:
    """Feed one loss vector; returns the advanced state and its new iterate."""
    loss = np.asarray(loss, dtype=float)
    if loss.shape != (state.n,):
        raise DimensionMismatch(f"loss has shape {loss.shape}, expected ({state.n},)")
    if not np.all(np.isfinite(loss)):
        raise NonFiniteLoss(f"loss contains non-finite entries: {loss}")
    t = state.round + 1
    eta = state.schedule.at(t)
    cumulative = state.cumulative_loss + loss
    scaled = state.scaled_loss + eta * loss
    scaled -= scaled.min()
    if state.kind == FTRL_EUCLIDEAN:
        current = _project(-scaled)
    else:
        w = np.exp(-scaled)
        current = w / w.sum()
    new_state = LearnerState(state.kind, state.schedule, t, cumulative, scaled, current)
    return new_state, new_state.current_strategy()


def stability_probe(kind, schedule, a, y_star, rounds: int):
    """Feed the payoff vector of y* for `rounds` rounds and watch the iterate.

    Returns (stable, max_drift): stable means no step moved the iterate by
    more than 1e-12 in Euclidean norm. A constant payoff vector (the mark
    of a fully backed minimax strategy) must freeze every learner here;
    a non-constant one will not.
    """
    if rounds < 2:
        raise ValueError(f"need at least 2 rounds to observe drift, got {rounds}")
    a_arr = a.to_array() if hasattr(a, "to_array") else np.asarray(a, dtype=float)
    y_arr = np.asarray(
        y_star.to_array() if hasattr(y_star, "to_array") else y_star, dtype=float
    )
    if a_arr.shape[1] != len(y_arr):
        raise DimensionMismatch(
            f"matrix has {a_arr.shape[1]} columns, strategy has {len(y_arr)} weights"
        )
    loss = a_arr @ y_arr
    state = learner_init(kind, a_arr.shape[0], schedule)
    max_drift = 0.0
    for _ in range(rounds):
        prev = state.current
        state, _ = learner_step(state, loss)
        drift = float(np.linalg.norm(state.current - prev))
        if drift > max_drift:
            max_drift = drift
    return max_drift <= 1e-12, max_drift
