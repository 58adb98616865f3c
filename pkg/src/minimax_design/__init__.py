"""Design zero-sum games with a unique row minimax strategy, certify that
uniqueness exactly, and guide no-regret learners to the target in repeated
play."""

from .arena import (
    Claim1Report,
    ConstantYstarSpec,
    LearnerSpec,
    LrcaSpec,
    RegretReport,
    RoundRecord,
    Trajectory,
    claim1_experiment,
    detect_eps_nash,
    regret_report,
    run_match,
)
from .designer import (
    DesignedGame,
    DesignSpec,
    design,
    design_equal_support,
    design_larger_support,
    design_singleton,
)
from .game import (
    GameValue,
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
from .learners import (
    FTRL_ENTROPY,
    FTRL_EUCLIDEAN,
    MWU,
    LearnerState,
    RateSchedule,
    learner_init,
    learner_step,
    project_simplex,
    stability_probe,
)
from .lp import (
    LinearProgram,
    LpOutcome,
    LpStatus,
    MinimaxFace,
    enumerate_minimax_rows,
    feasible,
    find_feasible_point,
    game_value,
    minimax_pair,
    solve_lp,
)
from .lrca import GUIDING, LOCKED, LrcaState, lrca_step, maybe_lock
from .verifier import (
    MinimaxCertificate,
    certify,
    check_lemma_columns,
    check_minimax_pair,
    check_row_uniqueness_kkt,
)

__version__ = "0.1.0"
