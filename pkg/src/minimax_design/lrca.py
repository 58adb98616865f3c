"""The column player's guiding policy.

Odd rounds play the designed minimax strategy y*; even rounds mix y* with
the row player's current best-response column, weighted by how far the
row iterate still is from optimal:

    alpha_t = (f(x_{t-1}) - v) / max(n/4, 2)

where f(x) = max_y x^T A y is read off the observed feedback vector
x_{t-1}^T A (the column player knows A, so no private copy of x is
needed). Against any stable no-regret learner this drives f(x_t) down to
the game value; once the gap falls below a threshold the policy locks to
playing y* forever, which freezes a stable learner at the near-minimax
iterate it reached.

alpha is clamped to [0, 1]: the raw formula can exceed 1 for large
payoffs, and the emitted strategy must stay a distribution. The clamp is
recorded per round for audit.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import DimensionMismatch, MissingFeedback
from .game import MixedStrategy

GUIDING = "Guiding"
LOCKED = "Locked"


@dataclass(frozen=True)
class LrcaState:
    y_star: MixedStrategy
    value: float
    n: int  # row player's action count, sets the alpha denominator
    round: int = 0
    mode: str = GUIDING
    epsilon_lock: float = 0.05
    last_alpha: float = 0.0


def lrca_step(state: LrcaState, x_prev_feedback=None):
    """Emit the strategy for the next round.

    `x_prev_feedback` is the previous round's observed vector x_{t-1}^T A,
    required on even guiding rounds and ignored otherwise. Returns
    (state', y_t, alpha_t); odd and locked rounds have alpha_t = 0.
    Ties in the best-response column break to the lowest index.
    """
    t = state.round + 1
    m = len(state.y_star)
    if state.mode == LOCKED or t % 2 == 1:
        new_state = replace(state, round=t, last_alpha=0.0)
        return new_state, state.y_star, 0.0
    if x_prev_feedback is None:
        raise MissingFeedback(f"round {t} is even but no prior-round feedback was given")
    fb = np.asarray(x_prev_feedback, dtype=float)
    if fb.shape != (m,):
        raise DimensionMismatch(f"feedback has shape {fb.shape}, expected ({m},)")
    e = int(np.argmax(fb))  # np.argmax returns the first (lowest) maximizer
    f = float(fb[e])
    alpha = (f - state.value) / max(state.n / 4.0, 2.0)
    alpha = min(max(alpha, 0.0), 1.0)
    ys = state.y_star.to_array()
    y = (1.0 - alpha) * ys
    y[e] += alpha
    new_state = replace(state, round=t, last_alpha=alpha)
    return new_state, MixedStrategy(tuple(y.tolist())), alpha


def maybe_lock(state: LrcaState, f_current: float) -> LrcaState:
    """Lock to y* forever once the gap f(x) - v falls to epsilon_lock."""
    if state.mode == LOCKED:
        return state
    if f_current - state.value <= state.epsilon_lock:
        return replace(state, mode=LOCKED)
    return state
