"""Shared fixtures: canonical designed games and seeded random families.

The random families are generated once per session and reused across the
unit tests and the acceptance suite (criterion 2 explicitly reuses
criterion 1's games). Seeds are fixed so every run sees the same
instances.
"""

import random
import sys
from fractions import Fraction as F
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import minimax_design as md
from minimax_design.lp import minimax_pair

DESIGN_FAMILY_SEED = 1009
CONTROL_SEED = 2003
GUIDED_SEED = 20240809


def random_support_strategy(dim, sup_size, rng, lo=1, hi=9):
    """Positive integer weights on a random support, normalized exactly."""
    idx = sorted(rng.sample(range(dim), sup_size))
    vals = {i: rng.randint(lo, hi) for i in idx}
    tot = sum(vals.values())
    return [F(vals.get(j, 0), tot) for j in range(dim)]


def make_design_specs(count, rng):
    """Random specs with n, m <= 6, supports 2..min(n,m), v in (0, 5]."""
    specs = []
    while len(specs) < count:
        n = rng.randint(2, 6)
        m = rng.randint(2, 6)
        k = rng.randint(2, min(n, m))
        l = rng.randint(k, m)
        x = random_support_strategy(n, k, rng)
        y = random_support_strategy(m, l, rng)
        v = F(rng.randint(1, 20), rng.randint(4, 20))
        specs.append((x, y, v))
    return specs


def make_guided_games(count, rng):
    """Full-row-support designs with healthy margins for guidance runs.

    support(x*) = n keeps A y* = v 1 (the stability precondition), and the
    z >= 0.2 floor keeps the even-round mixing weight large enough for the
    learners to converge well inside the round budget.
    """
    games = []
    while len(games) < count:
        n = rng.randint(2, 6)
        m = rng.randint(n, 6)
        l = rng.randint(n, m)
        x = random_support_strategy(n, n, rng, lo=2)
        y = random_support_strategy(m, l, rng, lo=3)
        v = F(rng.randint(8, 20), 4)
        game = md.design(x, y, v)
        if float(game.parameters.z) >= 0.2:
            games.append(game)
    return games


def make_controls(count, rng):
    """Deliberately non-unique instances with a solver-found minimax pair.

    Half constant matrices (every strategy optimal), half duplicated-row
    matrices (weight moves freely between the copies).
    """
    controls = []
    while len(controls) < count:
        if len(controls) % 2 == 0:
            n, m = rng.randint(2, 6), rng.randint(2, 6)
            c = F(rng.randint(1, 9), rng.randint(1, 4))
            a = md.exact_matrix([[c] * m for _ in range(n)])
        else:
            base_n, m = rng.randint(2, 3), rng.randint(2, 6)
            rows = [
                [F(rng.randint(0, 9), rng.randint(1, 4)) for _ in range(m)]
                for _ in range(base_n)
            ]
            a = md.exact_matrix(rows + rows)
        x, y, v = minimax_pair(a)
        controls.append((a, x, y))
    return controls


@pytest.fixture(scope="session")
def design_family():
    """200 designed games from random specs (criteria 1 and 2)."""
    rng = random.Random(DESIGN_FAMILY_SEED)
    return [md.design(x, y, v) for x, y, v in make_design_specs(200, rng)]


@pytest.fixture(scope="session")
def control_family():
    """50 non-unique control instances (criterion 2)."""
    return make_controls(50, random.Random(CONTROL_SEED))


@pytest.fixture(scope="session")
def guided_games():
    """20 full-support designed games for guidance runs (criteria 4 and 5)."""
    return make_guided_games(20, random.Random(GUIDED_SEED))


# --- canonical games used throughout ---


@pytest.fixture(scope="session")
def t1_square():
    """Equal-support 2x2 with z = 2/5: [[3/5, 7/5], [7/5, 3/5]]."""
    return md.design([F(1, 2), F(1, 2)], [F(1, 2), F(1, 2)], 1, z=F(2, 5), run_oracle=True)


@pytest.fixture(scope="session")
def t1_extended():
    """Equal-support 3x3 with a below-support row."""
    return md.design(
        [F(1, 2), F(1, 2), 0], [F(1, 2), F(1, 2), 0], 1, z=F(2, 5), run_oracle=True
    )


@pytest.fixture(scope="session")
def t2_extended():
    """Larger-support 3x3 (k = 2 < l = 3) with v1 = 1/10."""
    return md.design(
        [F(1, 2), F(1, 2), 0], [F(2, 5), F(2, 5), F(1, 5)], 1, v1=F(1, 10), run_oracle=True
    )


@pytest.fixture(scope="session")
def t2_wide():
    """Larger-support 2x3 with full row support (stability-compatible)."""
    return md.design(
        [F(1, 2), F(1, 2)], [F(2, 5), F(2, 5), F(1, 5)], 1, v1=F(1, 10), run_oracle=True
    )


@pytest.fixture(scope="session")
def skew_target_game():
    """Equal-support 2x2 with the non-uniform target x* = [1/4, 3/4]."""
    return md.design([F(1, 4), F(3, 4)], [F(1, 2), F(1, 2)], 1, run_oracle=True)


@pytest.fixture(scope="session")
def singleton_game():
    """Dominant-column game for the pure target [1, 0], gap 1/2."""
    return md.design([1, 0], [1, 0], 1, gap=F(1, 2), run_oracle=True)
