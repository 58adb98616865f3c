"""Command-line surface: design games, certify matrices, run simulations.

Subcommands::

    minimax-design design   --config cfg.json --out DIR [--mode rational|float]
    minimax-design verify   --config game.json --out DIR
    minimax-design simulate --config cfg.json --out DIR [--trust] [--sweep N]

Config files are JSON. Every number inside them is parsed losslessly:
rational strings like "1/3" are exact, and decimal literals are read as
exact base-10 rationals before any float ever exists. Structured outputs
are JSON with rationals serialized as "p/q" strings; trajectories are CSV
with a fixed column order.

Exit codes: 0 success, 1 input error, 2 design error, 3 verification
negative.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from ._numeric import format_scalar, to_fraction
from .arena import ConstantYstarSpec, LearnerSpec, LrcaSpec, detect_eps_nash, regret_report, run_match
from .designer import DesignedGame, design
from .errors import MinimaxDesignError
from .game import GameValue, PayoffMatrix, exact_matrix, exact_strategy
from .learners import LEARNER_KINDS, MWU, RateSchedule
from .lrca import GUIDING, LOCKED
from .verifier import MinimaxCertificate, certify

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_DESIGN = 2
EXIT_VERIFY = 3

CSV_FIELDS = ("t", "mode", "alpha", "f_gap", "dist_to_target", "payoff")


class ConfigError(Exception):
    pass


@dataclass(frozen=True)
class ExperimentConfig:
    x_star: tuple | None = None
    y_star: tuple | None = None
    v: Fraction = Fraction(1)
    z: Fraction | None = None
    v1: Fraction | None = None
    gap: Fraction | None = None
    matrix: tuple | None = None
    game_file: str | None = None
    learner: LearnerSpec = LearnerSpec(MWU)
    policy: object = LrcaSpec()
    epsilon_lock: float = 0.05
    horizon: int = 10**4
    seed: int = 0
    mode: str = "rational"


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh, parse_float=lambda s: Fraction(s), parse_int=int)
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc
    except (json.JSONDecodeError, ValueError) as exc:
        raise ConfigError(f"malformed JSON in {path}: {exc}") from exc


def _fractions(seq):
    try:
        return tuple(to_fraction(w) for w in seq)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"cannot parse {seq!r} as exact numbers: {exc}") from exc


def _parse_learner(raw) -> LearnerSpec:
    if raw is None:
        return LearnerSpec(MWU)
    kind = str(raw.get("kind", MWU)).lower()
    if kind not in LEARNER_KINDS:
        raise ConfigError(f"unknown learner kind {kind!r}; expected one of {LEARNER_KINDS}")
    sched_raw = raw.get("schedule")
    schedule = None
    if sched_raw is not None:
        try:
            schedule = RateSchedule(str(sched_raw["kind"]), float(sched_raw["eta"]))
        except (KeyError, ValueError) as exc:
            raise ConfigError(f"bad schedule {sched_raw!r}: {exc}") from exc
    return LearnerSpec(kind, schedule)


def _parse_policy(raw, epsilon_lock: float):
    if raw is None:
        return LrcaSpec(epsilon_lock)
    kind = str(raw.get("kind", "lrca")).lower()
    if kind == "lrca":
        return LrcaSpec(float(raw.get("epsilon_lock", epsilon_lock)))
    if kind == "constant-ystar":
        return ConstantYstarSpec()
    raise ConfigError(f"unknown column policy {kind!r}; expected 'lrca' or 'constant-ystar'")


def parse_config(doc) -> ExperimentConfig:
    if not isinstance(doc, dict):
        raise ConfigError("config root must be a JSON object")
    known = {
        "x_star", "y_star", "v", "z", "v1", "gap", "matrix", "game_file",
        "learner", "policy", "epsilon_lock", "horizon", "seed", "mode",
    }
    unknown = set(doc) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    eps = float(doc.get("epsilon_lock", 0.05))
    horizon = doc.get("horizon", 10**4)
    if not isinstance(horizon, int) or horizon < 1:
        raise ConfigError(f"horizon must be a positive integer, got {horizon!r}")
    mode = doc.get("mode", "rational")
    if mode not in ("rational", "float"):
        raise ConfigError(f"mode must be 'rational' or 'float', got {mode!r}")
    return ExperimentConfig(
        x_star=_fractions(doc["x_star"]) if "x_star" in doc else None,
        y_star=_fractions(doc["y_star"]) if "y_star" in doc else None,
        v=to_fraction(doc.get("v", 1)),
        z=to_fraction(doc["z"]) if doc.get("z") is not None else None,
        v1=to_fraction(doc["v1"]) if doc.get("v1") is not None else None,
        gap=to_fraction(doc["gap"]) if doc.get("gap") is not None else None,
        matrix=tuple(map(_fractions, doc["matrix"])) if "matrix" in doc else None,
        game_file=doc.get("game_file"),
        learner=_parse_learner(doc.get("learner")),
        policy=_parse_policy(doc.get("policy"), eps),
        epsilon_lock=eps,
        horizon=horizon,
        seed=int(doc.get("seed", 0)),
        mode=mode,
    )


# --- serialization -----------------------------------------------------------


def _scalar_out(value, mode: str):
    if mode == "float":
        return float(value)
    return format_scalar(value)


def _vector_out(seq, mode):
    return [_scalar_out(v, mode) for v in seq]


def _certificate_doc(cert: MinimaxCertificate, mode: str) -> dict:
    return {
        "pair_ok": cert.pair_ok,
        "value": _scalar_out(cert.value.v, mode),
        "lemma_ok": cert.lemma_ok,
        "kkt_unique": cert.kkt_unique,
        "oracle_agrees": cert.oracle_agrees,
        "witness": None if cert.witness is None else _vector_out(cert.witness, mode),
        "lemma_columns": None
        if cert.lemma_columns is None
        else [list(pair) for pair in cert.lemma_columns],
    }


def _game_doc(game: DesignedGame, mode: str) -> dict:
    p = game.parameters
    return {
        "construction": game.construction,
        "matrix": [_vector_out(row, mode) for row in game.matrix.entries],
        "x_star": _vector_out(game.x_star.weights, mode),
        "y_star": _vector_out(game.y_star.weights, mode),
        "value": _scalar_out(game.value.v, mode),
        "row_perm": list(game.row_perm),
        "col_perm": list(game.col_perm),
        "parameters": {
            "z": None if p.z is None else _scalar_out(p.z, mode),
            "v1": None if p.v1 is None else _scalar_out(p.v1, mode),
            "y_bar": None if p.y_bar is None else _scalar_out(p.y_bar, mode),
            "alpha": _vector_out(p.alpha, mode),
            "a": _vector_out(p.a, mode),
            "beta": _vector_out(p.beta, mode),
            "gap": None if p.gap is None else _scalar_out(p.gap, mode),
        },
        "certificate": _certificate_doc(game.certificate, mode),
    }


def _write_json(path: Path, doc):
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def _write_trajectory_csv(path: Path, traj):
    path.parent.mkdir(parents=True, exist_ok=True)
    n = traj.xs.shape[1]
    m = traj.ys.shape[1]
    header = list(CSV_FIELDS) + [f"x_{i}" for i in range(n)] + [f"y_{j}" for j in range(m)]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for i in range(traj.horizon):
            row = [
                int(traj.ts[i]),
                LOCKED if traj.locked[i] else GUIDING,
                repr(float(traj.alphas[i])),
                repr(float(traj.f_gaps[i])),
                repr(float(traj.dists[i])),
                repr(float(traj.payoffs[i])),
            ]
            row += [repr(float(v)) for v in traj.xs[i]]
            row += [repr(float(v)) for v in traj.ys[i]]
            writer.writerow(row)


# --- subcommands -------------------------------------------------------------


def cmd_design(args) -> int:
    cfg = parse_config(_load_json(args.config))
    if cfg.x_star is None or cfg.y_star is None:
        print("design needs x_star and y_star in the config", file=sys.stderr)
        return EXIT_INPUT
    mode = args.mode or cfg.mode
    try:
        game = design(
            cfg.x_star, cfg.y_star, cfg.v, z=cfg.z, v1=cfg.v1, gap=cfg.gap,
            run_oracle=True,
        )
    except MinimaxDesignError as exc:
        print(f"design error {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DESIGN
    out = Path(args.out) / "game.json"
    _write_json(out, _game_doc(game, mode))
    print(f"wrote {out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    doc = _load_json(args.config)
    if not isinstance(doc, dict) or not {"matrix", "x_star", "y_star"} <= set(doc):
        print("verify needs matrix, x_star and y_star in the config", file=sys.stderr)
        return EXIT_INPUT
    try:
        matrix = exact_matrix([_fractions(row) for row in doc["matrix"]])
        x = exact_strategy(_fractions(doc["x_star"]))
        y = exact_strategy(_fractions(doc["y_star"]))
        cert = certify(matrix, x, y, run_oracle=True)
    except MinimaxDesignError as exc:
        print(f"input error {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out = Path(args.out) / "certificate.json"
    _write_json(out, _certificate_doc(cert, args.mode or "rational"))
    print(f"wrote {out}")
    if cert.pair_ok and cert.kkt_unique:
        return EXIT_OK
    return EXIT_VERIFY


def _game_from_file(path: str, trust: bool) -> DesignedGame:
    doc = _load_json(path)
    matrix = exact_matrix([_fractions(row) for row in doc["matrix"]])
    x = exact_strategy(_fractions(doc["x_star"]))
    y = exact_strategy(_fractions(doc["y_star"]))
    v = to_fraction(doc["value"])
    if trust:
        raw = doc.get("certificate", {})
        cert = MinimaxCertificate(
            pair_ok=bool(raw.get("pair_ok")),
            value=GameValue(v),
            lemma_ok=bool(raw.get("lemma_ok")),
            kkt_unique=bool(raw.get("kkt_unique")),
            oracle_agrees=raw.get("oracle_agrees"),
        )
    else:
        cert = certify(matrix, x, y, run_oracle=True)
    from .designer import ConstructionParams

    return DesignedGame(
        matrix, x, y, GameValue(v),
        tuple(doc.get("row_perm", range(matrix.n))),
        tuple(doc.get("col_perm", range(matrix.m))),
        doc.get("construction", "Unknown"),
        ConstructionParams(),
        certificate=cert,
    )


def _run_one_match(cfg: ExperimentConfig, game: DesignedGame, seed: int):
    traj = run_match(game, cfg.learner, cfg.policy, cfg.horizon, seed=seed)
    report = regret_report(traj)
    summary = {
        "horizon": traj.horizon,
        "seed": seed,
        "row_regret": report.row_regret,
        "col_regret": report.col_regret,
        "eps_nash_round": detect_eps_nash(traj, cfg.epsilon_lock),
        "lock_round": traj.lock_round,
        "final_distance": float(traj.dists[-1]),
    }
    return traj, summary


def cmd_simulate(args) -> int:
    cfg = parse_config(_load_json(args.config))
    if cfg.game_file is not None:
        game = _game_from_file(cfg.game_file, args.trust)
    elif cfg.x_star is not None and cfg.y_star is not None:
        try:
            game = design(cfg.x_star, cfg.y_star, cfg.v, z=cfg.z, v1=cfg.v1, gap=cfg.gap)
        except MinimaxDesignError as exc:
            print(f"design error {type(exc).__name__}: {exc}", file=sys.stderr)
            return EXIT_DESIGN
    else:
        print("simulate needs a game_file or x_star/y_star in the config", file=sys.stderr)
        return EXIT_INPUT
    out_dir = Path(args.out)
    sweep = args.sweep or 1
    if sweep < 1:
        print(f"--sweep must be positive, got {sweep}", file=sys.stderr)
        return EXIT_INPUT
    if sweep == 1:
        traj, summary = _run_one_match(cfg, game, cfg.seed)
        _write_trajectory_csv(out_dir / "trajectory.csv", traj)
        _write_json(out_dir / "summary.json", summary)
        print(f"wrote {out_dir / 'trajectory.csv'} and {out_dir / 'summary.json'}")
        return EXIT_OK
    with ThreadPoolExecutor(max_workers=min(sweep, 8)) as pool:
        futures = [
            pool.submit(_run_one_match, cfg, game, cfg.seed + i) for i in range(sweep)
        ]
        results = [f.result() for f in futures]
    for i, (traj, summary) in enumerate(results):
        _write_trajectory_csv(out_dir / f"trajectory_{i:03d}.csv", traj)
        _write_json(out_dir / f"summary_{i:03d}.json", summary)
    print(f"wrote {sweep} trajectory/summary pairs under {out_dir}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minimax-design",
        description="design, certify and simulate zero-sum games with a unique row minimax strategy",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn in (("design", cmd_design), ("verify", cmd_verify), ("simulate", cmd_simulate)):
        p = sub.add_parser(name)
        p.add_argument("--config", required=True, help="path to a JSON config")
        p.add_argument("--out", required=True, help="output directory")
        p.add_argument("--mode", choices=("rational", "float"), default=None,
                       help="number serialization for JSON outputs")
        p.add_argument("--trust", action="store_true",
                       help="simulate: accept the game file's certificate without re-checking")
        p.add_argument("--sweep", type=int, default=None, metavar="N",
                       help="simulate: run N seeded matches concurrently")
        p.set_defaults(fn=fn)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except MinimaxDesignError as exc:
        print(f"error {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (KeyError, TypeError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
