"""
Command-line front end.

Angles are given in degrees on the command line and converted to radians
before anything else sees them.  Every artifact is written inside
``--out-dir``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from . import coins
from .ctqw import evolve_classical_ctrw, evolve_ctqw, graph_generator, line_generator, read_edge_list
from .dtqw import evolve
from .entropy import CHECKPOINTS, entropy_series
from .lightcone import commutator_scan, cone_leakage, fit_exponential_tail, variance_scaling
from .relativity import decouple_check, dirac_residual, effective_params, kg_residual, schrodinger_split
from .state import ProbDist, new_localized, new_localized_2d, probability_distribution
from .walk2d import step2d

__all__ = ["RunConfig", "parse_coin", "parse_theta_grid", "build_parser", "sweep", "run", "main"]

DEFAULT_COIN = "su2:0,45,0"
COMMANDS = ("walk1d", "walk2d", "ctqw", "entropy", "verify", "lightcone", "sweep")


class UsageError(ValueError):
    pass


def parse_coin(spec: str):
    """``hadamard``, ``identity``, ``symmetric:θ``, ``su2:ξ,θ,ζ`` or ``u2:ζ,α,β,γ`` (degrees)."""
    name, _, args = spec.partition(":")
    try:
        vals = [np.deg2rad(float(x)) for x in args.split(",")] if args else []
    except ValueError:
        raise UsageError(f"bad coin angles in {spec!r}") from None
    makers = {
        "hadamard": (0, lambda: coins.hadamard()),
        "identity": (0, lambda: coins.IDENTITY.copy()),
        "symmetric": (1, coins.symmetric_coin),
        "su2": (3, coins.su2_coin),
        "u2": (4, coins.u2_coin),
    }
    if name not in makers:
        raise UsageError(f"unknown coin {name!r}; expected one of {sorted(makers)}")
    arity, make = makers[name]
    if len(vals) != arity:
        raise UsageError(f"coin {name!r} takes {arity} angle(s), got {len(vals)}")
    return make(*vals)


def parse_theta_grid(text: str) -> list[float]:
    """``a:b:step`` in degrees, inclusive of ``b``."""
    try:
        a, b, s = (float(x) for x in text.split(":"))
    except ValueError:
        raise UsageError(f"theta grid must be a:b:step, got {text!r}") from None
    if s <= 0:
        raise UsageError("theta grid step must be > 0")
    n = int(np.floor((b - a) / s + 1e-9)) + 1
    if n <= 0:
        raise UsageError(f"theta grid {text!r} is empty")
    return [round(a + i * s, 12) for i in range(n)]


def _pair(text: str) -> tuple[float, float]:
    try:
        d, e = (float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected δ,η in degrees, got {text!r}") from None
    return d, e


def _positive(text: str) -> float:
    x = float(text)
    if not x > 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {text}")
    return x


@dataclass
class RunConfig:
    command: str
    coin: str | None = None
    init: tuple[float, float] = (45.0, 90.0)
    steps: int = 100
    theta: list[float] = field(default_factory=list)
    theta_grid: str | None = None
    base: str = "2"
    seed: int = 0
    jobs: int = 1
    out_dir: str = "."
    tolerance: float = 1e-12
    collapse_every: int | None = None
    order: str = "coin-shift"
    gamma: float = 1.0
    sites: int = 21
    graph: str | None = None
    time: float = 1.0
    start: int | None = None
    lr_steps: int = 20
    out: str | None = None

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace) -> RunConfig:
        return cls(**{k: v for k, v in vars(ns).items() if k in cls.__dataclass_fields__})

    def to_argv(self) -> list[str]:
        """Textual form; ``parse(cfg.to_argv()) == cfg``."""
        argv = [self.command]
        for name, f in self.__dataclass_fields__.items():
            if name == "command":
                continue
            v = getattr(self, name)
            if v is None:
                continue
            flag = "--" + name.replace("_", "-")
            if name == "init":
                argv += [flag, f"{v[0]!r},{v[1]!r}"]
            elif name == "theta":
                for x in v:
                    argv += [flag, repr(x)]
            else:
                argv += [flag, repr(v) if isinstance(v, float) else str(v)]
        return argv

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    def thetas(self) -> list[float]:
        grid = parse_theta_grid(self.theta_grid) if self.theta_grid else []
        return list(self.theta) + grid

    def init_state(self, half_width: int):
        d, e = np.deg2rad(self.init)
        return new_localized(d, e, half_width)

    def coin_spec(self) -> str:
        if self.coin is not None:
            return self.coin
        return "none" if self.command == "walk2d" else DEFAULT_COIN

    def log_base(self):
        return 2 if self.base == "2" else "e"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qwrel", description="Discrete- and continuous-time quantum walk toolkit.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--coin", default=None,
                   help="hadamard | identity | symmetric:θ | su2:ξ,θ,ζ | u2:ζ,α,β,γ (degrees); "
                        f"default {DEFAULT_COIN}, or none for walk2d")
    p.add_argument("--init", type=_pair, default=(45.0, 90.0), help="initial coin state δ,η in degrees")
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--theta", type=float, action="append", default=[], help="coin angle in degrees (repeatable)")
    p.add_argument("--theta-grid", default=None, help="a:b:step in degrees, inclusive")
    p.add_argument("--base", choices=("2", "e"), default="2")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out-dir", default=".")
    p.add_argument("--out", default=None,
                   help="file name for the primary CSV, relative to --out-dir")
    p.add_argument("--tolerance", type=_positive, default=1e-12)
    p.add_argument("--collapse-every", type=int, default=None)
    p.add_argument("--order", choices=("coin-shift", "shift-coin"), default="coin-shift")
    p.add_argument("--gamma", type=_positive, default=1.0)
    p.add_argument("--sites", type=int, default=21)
    p.add_argument("--graph", default=None, help="edge list file, one 0-indexed 'u v' per line")
    p.add_argument("--time", type=float, default=1.0)
    p.add_argument("--start", type=int, default=None, help="ctqw start vertex (default: middle)")
    p.add_argument("--lr-steps", type=int, default=20, help="steps for the commutator scan")
    return p


def parse(argv) -> RunConfig:
    return RunConfig.from_namespace(build_parser().parse_args(argv))


def _write(out_dir: Path, name: str, text: str) -> Path:
    path = (out_dir / name).resolve()
    if not path.is_relative_to(out_dir.resolve()):
        raise UsageError(f"output {name!r} would land outside --out-dir")
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    return path


def _primary(cfg: RunConfig, default: str) -> str:
    return cfg.out or default


def _walk1d(cfg: RunConfig, out: Path) -> int:
    coin = parse_coin(cfg.coin_spec())
    traj = evolve(cfg.init_state(cfg.steps), coin, cfg.steps, cfg.order)
    dist = probability_distribution(traj.final)
    _write(out, _primary(cfg, "dist.csv"), dist.to_csv())
    _write(out, "dist.json", dist.to_json())
    return 0


def _walk2d(cfg: RunConfig, out: Path) -> int:
    spec = cfg.coin_spec()
    coin = None if spec in ("none", "") else parse_coin(spec)
    d, e = np.deg2rad(cfg.init)
    state = new_localized_2d(d, e, cfg.steps)
    for _ in range(cfg.steps):
        state = step2d(state, coin)
    _write(out, _primary(cfg, "dist.csv"), probability_distribution(state).to_csv())
    return 0


def _ctqw(cfg: RunConfig, out: Path) -> int:
    if cfg.graph:
        H = graph_generator(read_edge_list(cfg.graph), cfg.gamma)
    else:
        H = line_generator(cfg.gamma, cfg.sites)
    start = H.n // 2 if cfg.start is None else cfg.start
    if not 0 <= start < H.n:
        raise UsageError(f"start vertex {start} outside 0..{H.n - 1}")
    psi0 = np.zeros(H.n, dtype=complex)
    psi0[start] = 1.0
    p = np.abs(evolve_ctqw(H, psi0, cfg.time)) ** 2
    q = evolve_classical_ctrw(H, psi0.real, cfg.time)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["j", "p", "p_classical"])
    for j in range(H.n):
        w.writerow([j, repr(float(p[j])), repr(float(q[j]))])
    _write(out, _primary(cfg, "dist.csv"), buf.getvalue())
    return 0


def _entropy(cfg: RunConfig, out: Path) -> int:
    series = entropy_series(
        parse_coin(cfg.coin_spec()),
        cfg.init_state(cfg.steps),
        cfg.steps,
        cfg.log_base(),
        collapse_every=cfg.collapse_every,
        seed=cfg.seed,
        label=cfg.coin_spec(),
    )
    _write(out, _primary(cfg, "entropy.csv"), series.to_csv())
    return 0


def verify_theta(theta_deg: float, steps: int, init=(45.0, 90.0), tol: float = 1e-12) -> dict:
    """Identity suite for one coin angle (shift-coin ordering, symmetric coin)."""
    d, e = np.deg2rad(init)
    theta = np.deg2rad(theta_deg)
    traj = evolve(new_localized(d, e, steps), coins.symmetric_coin(theta), steps, "shift-coin")
    dirac = dirac_residual(traj)
    reports = [decouple_check(traj), kg_residual(traj), dirac.exact_step, dirac.difference_form]
    if dirac.massless is not None:
        reports.append(dirac.massless)
    row = {"theta_deg": theta_deg, "steps": steps, "tolerance": tol}
    row["checks"] = [r.summary() for r in reports]
    row["diagnostics"] = [dirac.differential_form.summary()]
    if theta != 0.0:
        _, recomb = schrodinger_split(traj)
        row["checks"].append(recomb.summary())
    row["passed"] = all(c["max_abs"] <= tol for c in row["checks"])
    return row


def _verify(cfg: RunConfig, out: Path) -> int:
    thetas = cfg.thetas() or [45.0]
    results = [verify_theta(th, cfg.steps, cfg.init, cfg.tolerance) for th in thetas]
    ok = all(r["passed"] for r in results)
    _write(out, "residuals.json", json.dumps({"passed": ok, "results": results}, indent=2))
    if not ok:
        print("verification failed: residual above tolerance", file=sys.stderr)
    return 0 if ok else 1


def _lightcone(cfg: RunConfig, out: Path) -> int:
    thetas = cfg.thetas() or [45.0]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["theta_deg", "t", "variance", "variance_ratio", "predicted_ratio",
                "cone_radius", "kg_radius", "mass_outside_cone", "mass_outside_lattice_cone"])
    for th in thetas:
        r = cone_leakage(np.deg2rad(th), cfg.steps, tuple(np.deg2rad(cfg.init)))
        w.writerow([repr(float(th)), r.t] + [repr(float(x)) for x in (
            r.variance, r.variance_ratio, r.predicted_ratio, r.cone_radius,
            r.kg_radius, r.mass_outside_cone, r.mass_outside_lattice_cone)])
    _write(out, _primary(cfg, "cone.csv"), buf.getvalue())

    theta = np.deg2rad(thetas[0])
    t = cfg.lr_steps
    scan = commutator_scan(theta, t, distances=range(1, t + 11))
    _write(out, "commutator.csv", scan.to_csv())
    summary = {"theta_deg": thetas[0], "t": t}
    try:
        summary.update(fit_exponential_tail(scan).summary(t))
    except ValueError as exc:
        summary["fit_error"] = str(exc)
    _write(out, "commutator.json", json.dumps(summary, indent=2))
    return 0


def sweep_cell(theta_deg: float, steps: int, base=2) -> dict:
    row = {"theta_deg": theta_deg}
    try:
        theta = np.deg2rad(theta_deg)
        params = effective_params(theta)
        cone = cone_leakage(theta, steps)
        row.update(c_eff=params.c_eff, mass=params.mass, variance_ratio=cone.variance_ratio,
                   predicted_ratio=cone.predicted_ratio, leakage=cone.mass_outside_cone)
        series = entropy_series(coins.su2_coin(0.0, theta, 0.0),
                                new_localized(np.pi / 4, np.pi / 2, steps), steps, base)
        for t in CHECKPOINTS:
            if t <= steps:
                row[f"H_{t}"] = series.at(t)
        row["error"] = ""
    except Exception as exc:  # one bad cell must not abort the sweep
        row["error"] = f"{type(exc).__name__}: {exc}"
    return row


def sweep(thetas, steps: int, base=2, jobs: int = 1) -> list[dict]:
    """One summary row per coin angle (degrees)."""
    thetas = list(thetas)
    if not thetas:
        raise UsageError("theta grid is empty")
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(sweep_cell, thetas, [steps] * len(thetas), [base] * len(thetas)))
    return [sweep_cell(th, steps, base) for th in thetas]


def sweep_csv(rows: list[dict], steps: int) -> str:
    cols = ["theta_deg", "c_eff", "mass", "variance_ratio", "predicted_ratio", "leakage"]
    cols += [f"H_{t}" for t in CHECKPOINTS if t <= steps] + ["error"]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for r in rows:
        w.writerow([repr(float(r[c])) if isinstance(r.get(c), float) else r.get(c, "") for c in cols])
    return buf.getvalue()


def _sweep(cfg: RunConfig, out: Path) -> int:
    rows = sweep(cfg.thetas(), cfg.steps, cfg.log_base(), cfg.jobs)
    _write(out, _primary(cfg, "sweep.csv"), sweep_csv(rows, cfg.steps))
    return 0


_HANDLERS = {
    "walk1d": _walk1d,
    "walk2d": _walk2d,
    "ctqw": _ctqw,
    "entropy": _entropy,
    "verify": _verify,
    "lightcone": _lightcone,
    "sweep": _sweep,
}


def run(argv=None) -> int:
    """Run one subcommand; returns the process exit code."""
    try:
        cfg = parse(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = Path(cfg.out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
        return _HANDLERS[cfg.command](cfg, out)
    except (UsageError, ValueError) as exc:
        print(f"qwrel {cfg.command}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
