"""Command-line surface over the two walk engines.

Subcommands:

    walk     iterate the lattice walk and write the position density
    density  evaluate the closed-form momentum density on a grid
    compare  cross-check the closed form against the iterated walk
    figures  emit the standard momentum-density figure set
    bench    time the closed form against brute-force matrix powers

All file writes are whole-file atomic (temp file, then rename), numeric
cells use the shortest representation that round-trips a double, and every
output is deterministic for a given flag set.

Exit codes: 0 success, 1 verification failure, 2 input validation, 3 I/O.
"""

from __future__ import annotations

import argparse
import cmath
import json
import math
import os
import re
import sys
import tempfile
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .coin import CoinParameters
from .momentum import (momentum_density, s_power_closed, s_power_oracle,
                       sample_closed_form)
from .position import evolve, initial_state, position_density
from .transform import default_grid_size, dtft, make_grid

__all__ = [
    "RunConfig",
    "cmd_walk",
    "cmd_density",
    "cmd_compare",
    "cmd_figures",
    "cmd_bench",
    "main",
]

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_VALIDATION = 2
EXIT_IO = 3

# Both cross-checks (compare and the bench gate) pass at this residual.
RESIDUAL_GATE = 1e-8

SPINOR_NORM_TOL = 1e-9

# The standard figure sweep: three coin angles, four times, walker started
# in component 0 at the origin with gamma = delta = alpha = 0.
FIGURE_BETAS = (("beta8", math.pi / 8),
                ("beta4", math.pi / 4),
                ("beta3x8", 3 * math.pi / 8))
FIGURE_TIMES = (10, 30, 50, 70)


@dataclass
class RunConfig:
    """One CLI run: coin angles (radians), initial spinor, sizes, output."""

    beta: float = 0.0
    gamma: float = 0.0
    delta: float = 0.0
    alpha: float = 0.0
    psi0: complex = 1.0 + 0.0j
    psi1: complex = 0.0 + 0.0j
    steps: int = 0
    grid_size: int = 0  # 0 = auto: next power of two >= 2*steps + 2
    output_path: Path = Path("out.csv")
    format: str = "csv"


_PI_TOKEN = re.compile(r"^([+-]?)(\d+)?pi(?:/(\d+))?$")


def parse_angle(text: str) -> float:
    """Parse decimal radians or exact pi tokens such as pi/8, 3pi/8, -pi."""
    token = text.strip().lower().replace(" ", "")
    m = _PI_TOKEN.match(token)
    if m:
        den = int(m.group(3)) if m.group(3) else 1
        if den == 0:
            raise ValueError(f"bad angle {text!r}")
        num = int(m.group(2)) if m.group(2) else 1
        sign = -1.0 if m.group(1) == "-" else 1.0
        return sign * num * math.pi / den
    return float(text)


def _fmt(value: float) -> str:
    """Shortest decimal form that round-trips the double exactly."""
    return repr(float(value))


def _cell(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return _fmt(value)


def _csv_text(header: str, rows) -> str:
    lines = [header]
    lines.extend(",".join(_cell(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _atomic_write_text(path: Path, text: str) -> None:
    """Write the whole file via a temp name in the same directory, then rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _validate(config: RunConfig) -> None:
    if config.steps < 0:
        raise ValueError(f"--steps must be >= 0, got {config.steps}")
    if config.grid_size < 0:
        raise ValueError(f"--grid must be 0 (auto) or positive, got {config.grid_size}")


def _coin(config: RunConfig) -> CoinParameters:
    return CoinParameters.from_angles(config.beta, config.gamma,
                                      config.delta, config.alpha)


def _spinor(config: RunConfig) -> np.ndarray:
    s = np.array([config.psi0, config.psi1], dtype=complex)
    norm = float(np.sum(np.abs(s) ** 2))
    if abs(norm - 1.0) > SPINOR_NORM_TOL:
        raise ValueError(
            f"initial spinor must be normalized: |psi0|^2 + |psi1|^2 = {norm!r}")
    # exactly-normalized input passes through unchanged (sqrt(1.0) == 1.0)
    return s / math.sqrt(norm)


def _grid_size(config: RunConfig) -> int:
    return config.grid_size if config.grid_size else default_grid_size(config.steps)


def _coin_meta(config: RunConfig) -> dict:
    return {"beta": float(config.beta), "gamma": float(config.gamma),
            "delta": float(config.delta), "alpha": float(config.alpha)}


def _run_title(kind: str, config: RunConfig) -> str:
    return (f"{kind} after {config.steps} steps "
            f"(beta={config.beta:.6g}, gamma={config.gamma:.6g}, "
            f"delta={config.delta:.6g}, alpha={config.alpha:.6g})")


def cmd_walk(config: RunConfig) -> int:
    """Iterate the walk and write the position density."""
    _validate(config)
    state = evolve(initial_state(_spinor(config)), _coin(config), config.steps)
    rows = position_density(state)
    print(f"total probability: {_fmt(state.total_probability())}", file=sys.stderr)
    if config.format == "svg":
        from . import plotting
        plotting.save_line_chart(config.output_path,
                                 [x for x, _ in rows], [p for _, p in rows],
                                 xlabel="x", ylabel="probability",
                                 title=_run_title("position density", config))
    elif config.format == "json":
        payload = {**_coin_meta(config), "steps": config.steps,
                   "x": [x for x, _ in rows], "prob": [p for _, p in rows]}
        _atomic_write_text(config.output_path, _json_text(payload))
    else:
        _atomic_write_text(config.output_path, _csv_text("x,prob", rows))
    return EXIT_OK


def cmd_density(config: RunConfig) -> int:
    """Evaluate the closed-form momentum density on a grid and write it."""
    _validate(config)
    m = _grid_size(config)
    grid = make_grid(m)
    samples = sample_closed_form(_coin(config), _spinor(config), grid, config.steps)
    d0, d1 = momentum_density(samples.values)
    total = d0 + d1
    if config.format == "svg":
        from . import plotting
        plotting.save_line_chart(config.output_path, grid.nodes, d0,
                                 xlabel="p", ylabel="|phi0|^2",
                                 title=_run_title("momentum density", config))
    elif config.format == "json":
        payload = {**_coin_meta(config), "steps": config.steps, "grid_size": m,
                   "p": grid.nodes.tolist(), "density0": d0.tolist(),
                   "density1": d1.tolist(), "total": total.tolist()}
        _atomic_write_text(config.output_path, _json_text(payload))
    else:
        rows = zip(grid.nodes.tolist(), d0.tolist(), d1.tolist(), total.tolist())
        _atomic_write_text(config.output_path,
                           _csv_text("p,density0,density1,total", rows))
    return EXIT_OK


def cmd_compare(config: RunConfig) -> int:
    """Cross-check the closed form against the iterated walk; write a JSON report.

    Exit 0 only when both residuals pass the 1e-8 gate.
    """
    _validate(config)
    coin = _coin(config)
    s = _spinor(config)
    m = _grid_size(config)
    grid = make_grid(m)
    closed = sample_closed_form(coin, s, grid, config.steps).values
    walked = dtft(evolve(initial_state(s), coin, config.steps), grid).values
    r_wave = float(np.max(np.abs(closed - walked)))
    r_op = 0.0
    for p in grid.nodes:
        diff = (s_power_closed(coin, float(p), config.steps)
                - s_power_oracle(coin, float(p), config.steps))
        r_op = max(r_op, float(np.max(np.abs(diff))))
    report = {"max_residual_wavefn": r_wave, "max_residual_operator": r_op,
              "grid_size": m, "steps": config.steps}
    _atomic_write_text(config.output_path, _json_text(report))
    if r_wave > RESIDUAL_GATE or r_op > RESIDUAL_GATE:
        print(f"verification failed: residuals {_fmt(r_wave)} / {_fmt(r_op)} "
              f"exceed {RESIDUAL_GATE}", file=sys.stderr)
        return EXIT_VERIFICATION
    return EXIT_OK


def cmd_figures(output_dir, render_svg: bool = True) -> int:
    """Emit the standard figure set: 12 density CSVs plus a manifest.

    With `render_svg` a chart is rendered next to each CSV; the manifest
    lists every file with its parameters.
    """
    output_dir = Path(output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    entries = []
    for token, beta in FIGURE_BETAS:
        for steps in FIGURE_TIMES:
            config = RunConfig(beta=beta, steps=steps,
                               output_path=output_dir / f"fig_{token}_t{steps}.csv")
            cmd_density(config)
            entry = {"filename": config.output_path.name, **_coin_meta(config),
                     "steps": steps, "grid_size": default_grid_size(steps)}
            if render_svg:
                svg = RunConfig(beta=beta, steps=steps, format="svg",
                                output_path=output_dir / f"fig_{token}_t{steps}.svg")
                cmd_density(svg)
                entry["svg"] = svg.output_path.name
            entries.append(entry)
    _atomic_write_text(output_dir / "manifest.json", _json_text({"files": entries}))
    return EXIT_OK


def cmd_bench(config: RunConfig) -> int:
    """Time the closed form against per-node brute-force matrix powers.

    The two engines must agree to 1e-8 on the full grid before any timing
    is reported; otherwise the benchmark aborts with exit 1.
    """
    _validate(config)
    coin = _coin(config)
    s = _spinor(config)
    m = _grid_size(config)
    grid = make_grid(m)
    n = config.steps
    phase = cmath.exp(1j * n * coin.alpha)

    start = time.perf_counter()
    closed = sample_closed_form(coin, s, grid, n).values
    t_closed = time.perf_counter() - start

    start = time.perf_counter()
    brute = np.empty_like(closed)
    for k, p in enumerate(grid.nodes):
        brute[k] = phase * (s_power_oracle(coin, float(p), n) @ s)
    t_brute = time.perf_counter() - start

    residual = float(np.max(np.abs(closed - brute)))
    if residual > RESIDUAL_GATE:
        print(f"benchmark aborted: engines disagree by {_fmt(residual)}",
              file=sys.stderr)
        return EXIT_VERIFICATION
    rows = [("chebyshev_closed_form", n, m, t_closed),
            ("matrix_power_oracle", n, m, t_brute)]
    _atomic_write_text(config.output_path,
                       _csv_text("engine,steps,grid,seconds", rows))
    print(f"agreement {_fmt(residual)}; closed form {t_closed:.4f} s, "
          f"matrix power {t_brute:.4f} s", file=sys.stderr)
    return EXIT_OK


def _add_run_flags(parser: argparse.ArgumentParser, with_format: bool) -> None:
    parser.add_argument("--beta", type=parse_angle, default=0.0,
                        help="coin angle beta (radians, or tokens like pi/8, 3pi/8)")
    parser.add_argument("--gamma", type=parse_angle, default=0.0,
                        help="phase angle of the a amplitude")
    parser.add_argument("--delta", type=parse_angle, default=0.0,
                        help="phase angle of the b amplitude")
    parser.add_argument("--alpha", type=parse_angle, default=0.0,
                        help="global phase applied once per step")
    parser.add_argument("--psi0", nargs=2, type=float, default=(1.0, 0.0),
                        metavar=("RE", "IM"), help="component 0 of the initial spinor")
    parser.add_argument("--psi1", nargs=2, type=float, default=(0.0, 0.0),
                        metavar=("RE", "IM"), help="component 1 of the initial spinor")
    parser.add_argument("--steps", type=int, default=0, help="number of walk steps")
    parser.add_argument("--grid", type=int, default=0,
                        help="momentum grid size (0 = next power of two >= 2*steps+2)")
    if with_format:
        parser.add_argument("--format", choices=("csv", "json", "svg"),
                            default="csv", help="output format")
    parser.add_argument("--out", type=Path, default=None,
                        help="output path (default: <subcommand>.<format>)")


def _config_from(args: argparse.Namespace, default_suffix: str) -> RunConfig:
    fmt = getattr(args, "format", default_suffix)
    out = args.out if args.out is not None else Path(f"{args.command}.{fmt}")
    return RunConfig(beta=args.beta, gamma=args.gamma, delta=args.delta,
                     alpha=args.alpha,
                     psi0=complex(args.psi0[0], args.psi0[1]),
                     psi1=complex(args.psi1[0], args.psi1[1]),
                     steps=args.steps, grid_size=args.grid,
                     output_path=out, format=fmt)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chebwalk",
        description="Coined quantum walks on the line: lattice iteration and "
                    "a Chebyshev closed form in momentum space.")
    sub = parser.add_subparsers(dest="command", required=True)

    walk = sub.add_parser("walk", help="iterate the walk, write the position density")
    _add_run_flags(walk, with_format=True)
    walk.set_defaults(handler=lambda a: cmd_walk(_config_from(a, "csv")))

    density = sub.add_parser("density", help="closed-form momentum density on a grid")
    _add_run_flags(density, with_format=True)
    density.set_defaults(handler=lambda a: cmd_density(_config_from(a, "csv")))

    compare = sub.add_parser("compare",
                             help="cross-check the engines, write a residual report")
    _add_run_flags(compare, with_format=False)
    compare.set_defaults(handler=lambda a: cmd_compare(_config_from(a, "json")))

    figures = sub.add_parser("figures", help="emit the standard figure set")
    figures.add_argument("--out", type=Path, default=Path("figures"),
                         help="output directory")
    figures.add_argument("--svg", action=argparse.BooleanOptionalAction,
                         default=True, help="render charts next to the CSVs")
    figures.set_defaults(handler=lambda a: cmd_figures(a.out, render_svg=a.svg))

    bench = sub.add_parser("bench", help="time closed form vs matrix powers")
    _add_run_flags(bench, with_format=False)
    bench.set_defaults(handler=lambda a: cmd_bench(_config_from(a, "csv")))

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
