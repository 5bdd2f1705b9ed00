"""Command-line surface: scenario sweeps to CSV (+ PNG) and self-checks.

    diraclab run --scenario parallel_negativities --theta pi/4 --xi0 1 \\
        --omega 0:4:0.01 --out parallel.csv
    diraclab verify [--full]

Angles accept plain radians or pi-fraction literals like ``pi/4`` and
``3pi/4``. Exit codes: 0 success, 1 verification failure, 2 config error,
3 I/O error.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
from dataclasses import dataclass, replace

import numpy as np

from . import momentum_superposition as msup, plotting, scenarios, verify as verify_mod
from .dirac import BoostParams
from .errors import ConfigError, DiracLabError
from .measures import mean_negativities

_PI_LITERAL = re.compile(r"^([0-9.]*)\s*\*?\s*pi\s*(?:/\s*([0-9.]+))?$", re.IGNORECASE)


def parse_angle(text) -> float:
    """Parse radians given as a number or a pi-fraction literal."""
    if isinstance(text, (int, float)):
        return float(text)
    raw = str(text).strip()
    m = _PI_LITERAL.match(raw)
    try:
        if m:
            coef = float(m.group(1)) if m.group(1) else 1.0
            den = float(m.group(2)) if m.group(2) else 1.0
            return coef * math.pi / den
        return float(raw)
    except ValueError:
        raise ConfigError(f"cannot parse angle {text!r}") from None


def parse_grid(text) -> tuple[float, float, float]:
    """Parse a ``start:stop:step`` sweep grid."""
    if isinstance(text, (list, tuple)):
        parts = list(text)
    else:
        parts = str(text).split(":")
    if len(parts) != 3:
        raise ConfigError(f"grid must be start:stop:step, got {text!r}")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError:
        raise ConfigError(f"grid must be numeric, got {text!r}") from None
    return start, stop, step


def grid_points(grid: tuple[float, float, float]) -> np.ndarray:
    start, stop, step = grid
    if step <= 0:
        raise ConfigError(f"grid step must be positive, got {step}")
    count = int(round((stop - start) / step)) + 1
    if count < 1 or stop < start:
        raise ConfigError(f"grid {grid} is empty")
    return start + step * np.arange(count)


@dataclass(frozen=True)
class ScenarioConfig:
    scenario: str
    theta: float = math.pi / 4
    alpha: float = math.pi / 4
    xi0: float = 0.5
    omega_grid: tuple[float, float, float] = (0.0, 4.0, 0.01)
    delta: float = math.pi / 4
    mass: float = 1.0
    output_path: str = ""
    plot: bool = True


_NEG_HEADER = [
    "omega",
    "neg_S1_rest",
    "neg_S2_rest",
    "neg_P1_rest",
    "neg_P2_rest",
    "neg_S1_S2",
    "neg_P1P2_S1S2",
    "neg_P1_P2",
]


def _negativity_sweep(cfg: ScenarioConfig, direction: str):
    rows = []
    for omega in grid_points(cfg.omega_grid):
        st = scenarios.boosted_state(cfg.theta, cfg.xi0, float(omega), direction, cfg.mass)
        rows.append((float(omega), *scenarios.negativity_set(st)))
    return _NEG_HEADER, rows


def _delta_mean_sweep(cfg: ScenarioConfig, direction: str):
    table = scenarios.delta_mean_negativities(
        cfg.theta, cfg.xi0, grid_points(cfg.omega_grid), direction
    )
    rows = [(omega, *deltas) for omega, deltas in table]
    return ["omega", "dN1", "dN2", "dN3", "dN4"], rows


def _fig1_sweep(cfg: ScenarioConfig):
    # the swept variable is theta; the generic grid flag supplies the range
    grid = cfg.omega_grid if cfg.omega_grid != (0.0, 4.0, 0.01) else (0.0, math.pi, 0.01)
    p, q = scenarios.com_framework(cfg.xi0, cfg.mass)
    rows = []
    for theta in grid_points(grid):
        means = mean_negativities(scenarios.build_bell_state(p, q, float(theta)).psi)
        rows.append((float(theta), *means))
    return ["theta", "N1", "N2", "N3", "N4"], rows


def _eggtray_sweep(cfg: ScenarioConfig):
    wig = msup.rapidities_for_wigner_angle(cfg.delta)
    boost = BoostParams(wig.omega, scenarios.PERPENDICULAR_AXIS)
    alphas = np.linspace(0.0, math.pi / 2, 25)
    thetas = np.linspace(0.0, math.pi, 49)
    rows = []
    for alpha in alphas:
        for theta in thetas:
            st = msup.build_superposed(wig.xi0, float(alpha), float(theta), cfg.mass)
            rho = msup.project_positive_parity(msup.boost_superposed(st, boost))
            spin_rest, spins_momenta = msup.spin_momentum_negativities(rho)
            rows.append((float(alpha), float(theta), spin_rest, spins_momenta))
    return ["alpha", "theta", "neg_S1_p1S2p2", "neg_S1S2_p1p2"], rows


def _spinspin_sweep(cfg: ScenarioConfig):
    grid = cfg.omega_grid if cfg.omega_grid != (0.0, 4.0, 0.01) else (0.0, 3.0, 0.01)
    base = msup.build_superposed(cfg.xi0, cfg.alpha, cfg.theta, cfg.mass)
    rows = []
    for omega in grid_points(grid):
        st = (
            base
            if omega == 0
            else msup.boost_superposed(base, BoostParams(float(omega), scenarios.PERPENDICULAR_AXIS))
        )
        projected = msup.spin_spin_negativity(msup.project_positive_parity(st))
        traced = msup.spin_spin_negativity(msup.trace_out_parity(st))
        rows.append((float(omega), projected, traced))
    return ["omega", "neg_S1_S2_projected", "neg_S1_S2_traced"], rows


SCENARIOS = {
    "fig1_mean_vs_theta": lambda cfg: _fig1_sweep(cfg),
    "parallel_negativities": lambda cfg: _negativity_sweep(cfg, "parallel"),
    "parallel_delta_means": lambda cfg: _delta_mean_sweep(cfg, "parallel"),
    "perp_negativities": lambda cfg: _negativity_sweep(cfg, "perpendicular"),
    "perp_delta_means": lambda cfg: _delta_mean_sweep(cfg, "perpendicular"),
    "eggtray": lambda cfg: _eggtray_sweep(cfg),
    "spinspin_projection_vs_trace": lambda cfg: _spinspin_sweep(cfg),
}

# scenario-specific defaults on top of ScenarioConfig's
_DEFAULTS = {
    "parallel_negativities": {"xi0": 1.0},
    "parallel_delta_means": {"xi0": 1.0},
}


def _format_row(row) -> str:
    # adding 0.0 normalizes negative zero so reruns stay byte-identical
    return ",".join(f"{float(v) + 0.0:.12g}" for v in row)


def write_csv(path: str, header: list[str], rows) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(_format_row(row) + "\n")


def build_config(args: argparse.Namespace) -> ScenarioConfig:
    values: dict = {}
    if args.config:
        try:
            with open(args.config, "r", encoding="utf-8") as fh:
                values.update(json.load(fh))
        except OSError:
            raise
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config file is not valid JSON: {exc}") from None
    overrides = {
        "scenario": args.scenario,
        "theta": args.theta,
        "alpha": args.alpha,
        "xi0": args.xi0,
        "omega_grid": args.omega,
        "delta": args.delta,
        "mass": args.mass,
        "output_path": args.out,
    }
    values.update({k: v for k, v in overrides.items() if v is not None})

    scenario = values.get("scenario")
    if not scenario:
        raise ConfigError("field 'scenario' is required")
    if scenario not in SCENARIOS:
        raise ConfigError(
            f"field 'scenario': unknown scenario {scenario!r}; choose from {sorted(SCENARIOS)}"
        )
    cfg = ScenarioConfig(scenario=scenario, **_DEFAULTS.get(scenario, {}))
    for field, parser in (
        ("theta", parse_angle),
        ("alpha", parse_angle),
        ("delta", parse_angle),
        ("xi0", float),
        ("mass", float),
    ):
        if field in values:
            try:
                cfg = replace(cfg, **{field: parser(values[field])})
            except (TypeError, ValueError):
                raise ConfigError(f"field {field!r}: cannot parse {values[field]!r}") from None
    if "omega_grid" in values:
        cfg = replace(cfg, omega_grid=parse_grid(values["omega_grid"]))
    if "output_path" in values:
        cfg = replace(cfg, output_path=str(values["output_path"]))
    if not cfg.output_path:
        cfg = replace(cfg, output_path=f"{scenario}.csv")
    if args.no_plot:
        cfg = replace(cfg, plot=False)
    if not math.isfinite(cfg.theta) or not math.isfinite(cfg.alpha):
        raise ConfigError("field 'theta'/'alpha': angles must be finite")
    if cfg.mass <= 0:
        raise ConfigError(f"field 'mass': must be positive, got {cfg.mass}")
    if cfg.xi0 < 0:
        raise ConfigError(f"field 'xi0': must be non-negative, got {cfg.xi0}")
    grid_points(cfg.omega_grid)  # validates the grid early
    return cfg


def run_command(args: argparse.Namespace) -> int:
    cfg = build_config(args)
    header, rows = SCENARIOS[cfg.scenario](cfg)
    write_csv(cfg.output_path, header, rows)
    message = f"{cfg.scenario}: wrote {len(rows)} rows to {cfg.output_path}"
    if cfg.plot:
        png = os.path.splitext(cfg.output_path)[0] + ".png"
        plotting.render(cfg.scenario, header, rows, png)
        message += f" and figure to {png}"
    print(message)
    return 0


def verify_command(args: argparse.Namespace) -> int:
    results = verify_mod.run_suite(full=args.full)
    for res in results:
        print(res.line())
    passed = sum(r.passed for r in results)
    mode = "full" if args.full else "fast"
    print(f"VERIFY: {passed}/{len(results)} checks passed ({mode})")
    return 0 if passed == len(results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diraclab",
        description="Boosted two-particle bispinor states: negativity sweeps and self-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run a scenario sweep, writing CSV (+ PNG)")
    run_p.add_argument("--scenario", choices=sorted(SCENARIOS), help="scenario name")
    run_p.add_argument("--theta", help="spin superposition angle (radians or pi/4 style)")
    run_p.add_argument("--alpha", help="momentum superposition angle")
    run_p.add_argument("--xi0", type=float, help="initial particle rapidity")
    run_p.add_argument(
        "--omega",
        metavar="START:STOP:STEP",
        help="sweep grid (boost rapidity; the theta grid for fig1_mean_vs_theta)",
    )
    run_p.add_argument("--delta", help="Wigner angle for the eggtray scenario")
    run_p.add_argument("--mass", type=float, help="particle mass (natural units)")
    run_p.add_argument("--out", help="output CSV path (default <scenario>.csv)")
    run_p.add_argument("--config", help="JSON file with ScenarioConfig fields")
    run_p.add_argument("--no-plot", action="store_true", help="skip the PNG figure")
    run_p.set_defaults(func=run_command)

    ver_p = sub.add_parser("verify", help="run the invariant self-check suites")
    ver_p.add_argument("--full", action="store_true", help="full grids and 100 random samples")
    ver_p.set_defaults(func=verify_command)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3
    except DiracLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
