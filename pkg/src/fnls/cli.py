"""Experiment runner: config ingestion, subcommand dispatch, artifact output.

One experiment per invocation; every artifact is listed in a manifest with
its content hash.  Exit codes: 0 ok, 2 config, 3 nonexistence regime,
4 not converged, 5 blow-up detected, 6 io.
"""
from __future__ import annotations

import argparse
import configparser
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from pathlib import Path
from typing import List, Optional, Tuple

import numpy as np

from . import __version__, io, model, petviashvili as pv, semiclassical as sc
from . import stability, stepper
from .errors import (BadMagic, ConfigInvalid, Diverged, FnlsError,
                     NonexistenceRegime, NotConverged, SpeedTooLarge,
                     TruncatedFile, UnsupportedVersion)
from .model import ModelParams, WaveParams
from .spectral import ComplexField, Grid
from .stepper import Outcome, StepConfig

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NONEXISTENCE = 3
EXIT_NOT_CONVERGED = 4
EXIT_BLOW_UP = 5
EXIT_IO = 6

EXPERIMENTS = ("ground-state", "boosted", "evolve", "perturb", "d-scan",
               "semiclassical", "check")


@dataclass
class ExperimentConfig:
    experiment: str
    a: float = -50.0
    b: float = 50.0
    N: int = 4096
    lam: float = 1.0
    zeta: float = 1.0
    beta: float = 0.0
    sigma: float = 1.0
    omega: float = 1.0
    c: float = 0.0
    tol: float = 1e-12
    max_iter: int = 1000
    nu: Optional[float] = None
    initial_guess: str = "gaussian"
    T: float = 10.0
    M: int = 1000
    scheme: str = "yoshida4"
    monitor_every: Optional[int] = None
    blowup_linf_cap: float = 1e6
    mass_drift_cap: float = 1e-4
    r: Optional[float] = None
    epsilon: Optional[float] = None
    amplitude: str = "sech"
    phase: str = "zero"
    omega_max: float = 3.0
    points: int = 20
    seed: int = 0
    force: bool = False
    initial: Optional[str] = None          # FNLS file seeding an evolve run
    out_dir: str = "out"

    def grid(self) -> Grid:
        return Grid(self.a, self.b, self.N)

    def params(self) -> ModelParams:
        return ModelParams(lam=self.lam, zeta=self.zeta,
                           beta=self.beta, sigma=self.sigma)

    def wave(self) -> WaveParams:
        return WaveParams(omega=self.omega, c=self.c)

    def solve_options(self) -> pv.SolveOptions:
        return pv.SolveOptions(tol=self.tol, max_iter=self.max_iter,
                               nu=self.nu, initial_guess=self.initial_guess)

    def step_config(self) -> StepConfig:
        return StepConfig(T=self.T, M=self.M, scheme=self.scheme,
                          monitor_every=self.monitor_every,
                          blowup_linf_cap=self.blowup_linf_cap,
                          mass_drift_cap=self.mass_drift_cap)


# section.key -> dataclass field; "lambda" is accepted for lam in files/flags
_CONFIG_KEYS = {
    ("run", "experiment"): "experiment",
    ("run", "out_dir"): "out_dir",
    ("run", "seed"): "seed",
    ("run", "force"): "force",
    ("run", "initial"): "initial",
    ("domain", "a"): "a",
    ("domain", "b"): "b",
    ("domain", "n"): "N",
    ("model", "lambda"): "lam",
    ("model", "zeta"): "zeta",
    ("model", "beta"): "beta",
    ("model", "sigma"): "sigma",
    ("wave", "omega"): "omega",
    ("wave", "c"): "c",
    ("solver", "tol"): "tol",
    ("solver", "max_iter"): "max_iter",
    ("solver", "nu"): "nu",
    ("solver", "initial_guess"): "initial_guess",
    ("stepping", "t"): "T",
    ("stepping", "m"): "M",
    ("stepping", "scheme"): "scheme",
    ("stepping", "monitor_every"): "monitor_every",
    ("stepping", "blowup_linf_cap"): "blowup_linf_cap",
    ("stepping", "mass_drift_cap"): "mass_drift_cap",
    ("perturb", "r"): "r",
    ("semiclassical", "epsilon"): "epsilon",
    ("semiclassical", "amplitude"): "amplitude",
    ("semiclassical", "phase"): "phase",
    ("scan", "omega_max"): "omega_max",
    ("scan", "points"): "points",
}

_FIELD_TYPES = {f.name: f.type for f in fields(ExperimentConfig)}
_INT_FIELDS = {"N", "max_iter", "M", "monitor_every", "points", "seed"}
_FLOAT_FIELDS = {"a", "b", "lam", "zeta", "beta", "sigma", "omega", "c", "tol",
                 "nu", "T", "blowup_linf_cap", "mass_drift_cap", "r",
                 "epsilon", "omega_max"}
_BOOL_FIELDS = {"force"}


def _coerce(field_name: str, raw: str):
    try:
        if field_name in _INT_FIELDS:
            return int(raw)
        if field_name in _FLOAT_FIELDS:
            return float(raw)
        if field_name in _BOOL_FIELDS:
            if raw.lower() in ("1", "true", "yes", "on"):
                return True
            if raw.lower() in ("0", "false", "no", "off"):
                return False
            raise ValueError(raw)
        return raw
    except ValueError as exc:
        raise ConfigInvalid(f"field {field_name}: cannot parse {raw!r}") from exc


def load_config_file(path) -> dict:
    """Flat INI sections -> field dict; unknown sections/keys are rejected."""
    cp = configparser.ConfigParser()
    read = cp.read(path)
    if not read:
        raise ConfigInvalid(f"config file not found: {path}")
    out = {}
    for section in cp.sections():
        for key, raw in cp.items(section):
            field_name = _CONFIG_KEYS.get((section.lower(), key.lower()))
            if field_name is None:
                raise ConfigInvalid(f"unknown config key [{section}] {key}")
            out[field_name] = _coerce(field_name, raw)
    return out


def build_config(experiment: str, args: argparse.Namespace) -> ExperimentConfig:
    values = {"experiment": experiment,
              "out_dir": os.environ.get("OUT_DIR", "out")}
    if getattr(args, "config", None):
        values.update(load_config_file(args.config))
        if values.get("experiment") not in (None, experiment):
            raise ConfigInvalid(
                f"config file names experiment {values['experiment']!r}, "
                f"command line says {experiment!r}")
        values["experiment"] = experiment
    for f in fields(ExperimentConfig):
        flag = getattr(args, f.name, None)
        if flag is not None:
            values[f.name] = flag
    cfg = ExperimentConfig(**values)
    _validate(cfg)
    return cfg


def _validate(cfg: ExperimentConfig) -> None:
    if cfg.experiment not in EXPERIMENTS:
        raise ConfigInvalid(f"unknown experiment {cfg.experiment!r}")
    if not (cfg.a < cfg.b):
        raise ConfigInvalid(f"domain: need a < b, got [{cfg.a}, {cfg.b}]")
    if cfg.N < 8 or cfg.N % 2:
        raise ConfigInvalid(f"domain: N must be even and >= 8, got {cfg.N}")
    try:
        cfg.params()
    except FnlsError as exc:
        raise ConfigInvalid(f"model: {exc}") from exc
    if cfg.omega <= 0:
        raise ConfigInvalid(f"wave: omega must be positive, got {cfg.omega}")
    if cfg.tol <= 0 or cfg.max_iter < 1:
        raise ConfigInvalid("solver: need tol > 0 and max_iter >= 1")
    if cfg.initial_guess not in ("gaussian", "sech", "exact-beta0"):
        raise ConfigInvalid(f"solver: unknown initial_guess {cfg.initial_guess!r}")
    if cfg.monitor_every is not None and cfg.monitor_every < 1:
        raise ConfigInvalid("stepping: monitor_every must be positive")
    if cfg.T <= 0 or cfg.M < 1:
        raise ConfigInvalid("stepping: need T > 0 and M >= 1")
    if cfg.scheme not in stepper.SCHEMES:
        raise ConfigInvalid(f"stepping: scheme must be one of {stepper.SCHEMES}")
    if cfg.experiment == "perturb" and cfg.r is None:
        raise ConfigInvalid("perturb: r is required")
    if cfg.experiment == "semiclassical":
        eps = cfg.epsilon
        if eps is None or not (0.0 < eps <= 0.5):
            raise ConfigInvalid(
                f"semiclassical: epsilon must lie in (0, 0.5], got {eps}")
        if cfg.phase not in sc.PHASES:
            raise ConfigInvalid(f"semiclassical: unknown phase {cfg.phase!r}")
        if cfg.amplitude not in sc.AMPLITUDES:
            raise ConfigInvalid(
                f"semiclassical: unknown amplitude {cfg.amplitude!r}")
    if cfg.experiment == "d-scan":
        if cfg.points < 5:
            raise ConfigInvalid("scan: points must be >= 5")
        if cfg.omega_max <= cfg.c ** 2 / (4.0 * cfg.lam):
            raise ConfigInvalid(
                "scan: omega_max must exceed c^2/(4 lambda) "
                f"= {cfg.c ** 2 / (4.0 * cfg.lam):.6g}")


# --- artifact helpers --------------------------------------------------------

def _config_entries(cfg: ExperimentConfig) -> List[Tuple[str, str]]:
    entries = [("experiment", cfg.experiment)]
    for f in fields(ExperimentConfig):
        if f.name == "experiment":
            continue
        entries.append((f"config.{f.name}", str(getattr(cfg, f.name))))
    entries.append(("version.fnls", __version__))
    entries.append(("version.numpy", np.__version__))
    entries.append(("version.python", sys.version.split()[0]))
    return entries


def _write_profile_artifacts(out: Path, rec: pv.ProfileRecord) -> List[Path]:
    g = rec.profile.grid
    vals = rec.profile.values
    arts = []
    io.write_profile(out / "profile.fnls", rec.profile, rec.params, rec.wave)
    arts.append(out / "profile.fnls")
    io.write_trace_csv(out / "trace.csv", rec.trace)
    arts.append(out / "trace.csv")
    for name, y in (("profile_real.xy", vals.real),
                    ("profile_imag.xy", vals.imag),
                    ("profile_abs.xy", np.abs(vals))):
        io.write_xy(out / name, g.x, y, header="x,value")
        arts.append(out / name)
    coeffs = np.abs(g.fft(vals))
    order = np.argsort(g.k)
    io.write_xy(out / "spectrum_abs.xy", g.k[order], coeffs[order], header="k,abs_coeff")
    arts.append(out / "spectrum_abs.xy")
    return arts


def _write_evolution_artifacts(out: Path, res: stepper.EvolutionResult,
                               cfg: ExperimentConfig) -> List[Path]:
    arts = []
    io.write_diagnostics_csv(out / "diagnostics.csv", res.diagnostics.rows)
    arts.append(out / "diagnostics.csv")
    io.write_xy(out / "linf.xy", res.diagnostics.linf_t, res.diagnostics.linf,
                header="t,linf")
    arts.append(out / "linf.xy")
    p, w = cfg.params(), cfg.wave()
    xs, ts, zs = [], [], []
    for idx, (t, snap) in enumerate(res.snapshots):
        path = out / f"snapshot_{idx:04d}.fnls"
        io.write_snapshot(path, snap, p, w, t)
        arts.append(path)
        stride = max(1, snap.grid.N // 512)
        xs.append(snap.grid.x[::stride])
        ts.append(np.full(len(xs[-1]), t))
        zs.append(np.abs(snap.values[::stride]) ** 2)
    io.write_xyz(out / "surface.xyz", np.concatenate(xs), np.concatenate(ts),
                 np.concatenate(zs), header="x,t,abs2")
    arts.append(out / "surface.xyz")
    return arts


def _outcome_entries(res: stepper.EvolutionResult) -> List[Tuple[str, str]]:
    return [("outcome", res.outcome.kind),
            ("outcome_t", model.fmt15(res.outcome.t))]


# --- experiment implementations ------------------------------------------------

def _run_ground_state(cfg: ExperimentConfig, out: Path):
    rec = pv.solve_standing_wave(cfg.params(), cfg.omega, cfg.grid(),
                                 cfg.solve_options(), force=cfg.force)
    arts = _write_profile_artifacts(out, rec)
    entries = [("iterations", str(rec.trace.iterations)),
               ("pohozaev_r0", model.fmt15(rec.pohozaev[0])),
               ("pohozaev_r1", model.fmt15(rec.pohozaev[1])),
               ("pohozaev_rB", model.fmt15(rec.pohozaev[2])),
               ("suspect", str(rec.suspect))]
    return EXIT_OK, entries, arts


def _run_boosted(cfg: ExperimentConfig, out: Path):
    rec = pv.solve_boosted(cfg.params(), cfg.wave(), cfg.grid(),
                           cfg.solve_options(), force=cfg.force)
    arts = _write_profile_artifacts(out, rec)
    entries = [("iterations", str(rec.trace.iterations)),
               ("pohozaev_rB", model.fmt15(rec.pohozaev[2])),
               ("suspect", str(rec.suspect))]
    return EXIT_OK, entries, arts


def _initial_field(cfg: ExperimentConfig) -> ComplexField:
    if cfg.initial is not None:
        field, p_file, w_file = io.read_profile(cfg.initial)
        return field
    p, g = cfg.params(), cfg.grid()
    if cfg.c == 0.0:
        rec = pv.solve_standing_wave(p, cfg.omega, g, cfg.solve_options(),
                                     force=cfg.force)
    else:
        rec = pv.solve_boosted(p, cfg.wave(), g, cfg.solve_options(),
                               force=cfg.force)
    scale = 1.0 if cfg.r is None else cfg.r
    return ComplexField(g, scale * rec.profile.values)


def _run_evolve(cfg: ExperimentConfig, out: Path):
    u0 = _initial_field(cfg)
    res = stepper.evolve(u0, cfg.params(), cfg.step_config())
    arts = _write_evolution_artifacts(out, res, cfg)
    code = EXIT_BLOW_UP if res.outcome.kind == Outcome.BLOW_UP else EXIT_OK
    return code, _outcome_entries(res), arts


def _run_perturb(cfg: ExperimentConfig, out: Path):
    verdict = stability.perturbation_run(
        cfg.params(), cfg.wave(), cfg.r, cfg.step_config(), cfg.grid(),
        cfg.solve_options())
    arts = []
    io.write_xy(out / "chi.xy", verdict.chi_t, verdict.chi, header="t,chi")
    arts.append(out / "chi.xy")
    io.write_xy(out / "linf.xy", verdict.linf_t, verdict.linf, header="t,linf")
    arts.append(out / "linf.xy")
    entries = [("verdict", verdict.outcome)]
    if verdict.blowup_time is not None:
        entries.append(("blowup_time", model.fmt15(verdict.blowup_time)))
    code = EXIT_BLOW_UP if verdict.outcome == verdict.BLOW_UP else EXIT_OK
    return code, entries, arts


def _run_d_scan(cfg: ExperimentConfig, out: Path):
    scan = stability.scan_d(cfg.params(), cfg.c, cfg.omega_max, cfg.points,
                            cfg.grid(), cfg.solve_options())
    io.write_scan_csv(out / "scan.csv", scan)
    entries = [("all_positive", str(scan.all_positive)),
               ("failed_points", str(len(scan.failed)))]
    if scan.omega_c is not None:
        entries.append(("omega_c", model.fmt15(scan.omega_c)))
        entries.append(("omega_c_uncertainty",
                        model.fmt15(scan.omega_c_uncertainty)))
    return EXIT_OK, entries, [out / "scan.csv"]


def _run_semiclassical(cfg: ExperimentConfig, out: Path):
    conf = sc.SemiclassicalConfig(epsilon=cfg.epsilon, p=cfg.params(),
                                  cfg=cfg.step_config(),
                                  amplitude=cfg.amplitude, phase=cfg.phase)
    res = sc.semiclassical_evolve(conf, cfg.grid())
    arts = _write_evolution_artifacts(out, res, cfg)
    entries = _outcome_entries(res)
    tb = sc.first_break_time(res.diagnostics.linf_t, res.diagnostics.linf)
    entries.append(("break_time", "none" if tb is None else model.fmt15(tb)))
    code = EXIT_BLOW_UP if res.outcome.kind == Outcome.BLOW_UP else EXIT_OK
    return code, entries, arts


def _run_check(cfg: ExperimentConfig, out: Path):
    """Fast self-diagnostics: transforms, invariance, files."""
    rng = np.random.default_rng(cfg.seed)
    g = Grid(-20.0, 20.0, 512)
    results = []

    f = ComplexField(g, rng.standard_normal(g.N) + 1j * rng.standard_normal(g.N))
    from .spectral import forward_transform, inverse_transform
    back = inverse_transform(forward_transform(f))
    err = np.max(np.abs(back.values - f.values)) / np.max(np.abs(f.values))
    results.append(("fft-round-trip", err <= 1e-12, f"{err:.2e}"))

    F = forward_transform(f)
    lhs = g.h * np.sum(np.abs(f.values) ** 2)
    rhs = g.L * np.sum(np.abs(F.coeffs) ** 2)
    err = abs(lhs - rhs) / lhs
    results.append(("parseval", err <= 1e-12, f"{err:.2e}"))

    p = ModelParams(beta=0.4, sigma=1.0)
    theta = float(rng.uniform(0, 2 * np.pi))
    rot = ComplexField(g, np.exp(1j * theta) * f.values)
    err = abs(model.mass(rot, p) - model.mass(f, p)) / model.mass(f, p)
    results.append(("gauge-invariance", err <= 1e-13, f"{err:.2e}"))

    shifted = ComplexField(g, np.roll(f.values, 41))
    err = abs(model.energy(shifted, p) - model.energy(f, p)) / abs(model.energy(f, p))
    results.append(("translation-invariance", err <= 1e-11, f"{err:.2e}"))

    u = ComplexField(g, (1.0 / np.cosh(g.x)).astype(complex))
    v = stepper.linear_substep(u, 0.37, 1.0)
    err = abs(model.mass(v, p) - model.mass(u, p)) / model.mass(u, p)
    results.append(("linear-substep-unitarity", err <= 1e-13, f"{err:.2e}"))

    rec = pv.solve_standing_wave(p, 1.0, g, pv.SolveOptions(tol=1e-12))
    ok_gn = True
    worst = 0.0
    for _ in range(20):
        w = rng.standard_normal(g.N) * np.exp(-g.x ** 2 / 50.0)
        field = ComplexField(g, w + 0j)
        lhs, rhs = model.gn_check(field, rec.profile, p, p.sigma)
        if rhs > 0:
            worst = max(worst, lhs / rhs)
        ok_gn = ok_gn and lhs <= rhs * (1 + 1e-8)
    results.append(("embedding-inequality", ok_gn, f"max ratio {worst:.6f}"))

    path = out / "check_roundtrip.fnls"
    io.write_profile(path, rec.profile, p, WaveParams(1.0, 0.0))
    field2, _, _ = io.read_profile(path)
    same = np.array_equal(
        field2.values.view(np.float64), rec.profile.values.view(np.float64))
    results.append(("profile-file-round-trip", bool(same), "bitwise"))

    entries = []
    all_ok = True
    for name, ok, detail in results:
        line = f"{'PASS' if ok else 'FAIL'} {name} ({detail})"
        print(line)
        entries.append((f"check.{name}", "pass" if ok else "fail"))
        all_ok = all_ok and ok
    return (EXIT_OK if all_ok else 1), entries, [path]


_RUNNERS = {
    "ground-state": _run_ground_state,
    "boosted": _run_boosted,
    "evolve": _run_evolve,
    "perturb": _run_perturb,
    "d-scan": _run_d_scan,
    "semiclassical": _run_semiclassical,
    "check": _run_check,
}


def run(cfg: ExperimentConfig) -> int:
    """Execute one experiment; writes artifacts + manifest under cfg.out_dir."""
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    t0 = time.perf_counter()
    code, entries, artifacts = _RUNNERS[cfg.experiment](cfg, out)
    wall = time.perf_counter() - t0
    manifest = _config_entries(cfg) + entries + [("wall_time_s", f"{wall:.3f}")]
    io.write_manifest(out / "manifest.txt", manifest, artifacts)
    return code


def _add_experiment_parser(sub, name: str, help_text: str) -> None:
    sp = sub.add_parser(name, help=help_text)
    sp.add_argument("--config", help="INI config file; flags override it")
    sp.add_argument("--a", type=float)
    sp.add_argument("--b", type=float)
    sp.add_argument("--N", type=int)
    sp.add_argument("--lambda", dest="lam", type=float)
    sp.add_argument("--zeta", type=float)
    sp.add_argument("--beta", type=float)
    sp.add_argument("--sigma", type=float)
    sp.add_argument("--omega", type=float)
    sp.add_argument("--c", type=float)
    sp.add_argument("--tol", type=float)
    sp.add_argument("--max-iter", dest="max_iter", type=int)
    sp.add_argument("--nu", type=float)
    sp.add_argument("--guess", dest="initial_guess")
    sp.add_argument("--T", type=float)
    sp.add_argument("--M", type=int)
    sp.add_argument("--scheme", choices=stepper.SCHEMES)
    sp.add_argument("--monitor-every", dest="monitor_every", type=int)
    sp.add_argument("--blowup-cap", dest="blowup_linf_cap", type=float)
    sp.add_argument("--mass-drift-cap", dest="mass_drift_cap", type=float)
    sp.add_argument("--r", type=float)
    sp.add_argument("--epsilon", type=float)
    sp.add_argument("--amplitude")
    sp.add_argument("--phase")
    sp.add_argument("--omega-max", dest="omega_max", type=float)
    sp.add_argument("--points", type=int)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--initial", help="FNLS profile file seeding an evolution")
    sp.add_argument("--out-dir", dest="out_dir")
    sp.add_argument("--force", action="store_const", const=True, default=None,
                    help="override the nonexistence-regime guard")


def _sweep_worker(args):
    config_path, out_root = args
    overrides = argparse.Namespace(config=config_path)
    values = load_config_file(config_path)
    experiment = values.get("experiment")
    if experiment is None:
        raise ConfigInvalid(f"{config_path}: [run] experiment is required")
    cfg = build_config(experiment, overrides)
    if out_root:
        cfg.out_dir = str(Path(out_root) / Path(config_path).stem)
    return config_path, run(cfg)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="fnls",
        description="Pseudospectral solver suite for the nonlocal NLS equation")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    _add_experiment_parser(sub, "ground-state", "standing-wave profile (c = 0)")
    _add_experiment_parser(sub, "boosted", "boosted profile (c != 0)")
    _add_experiment_parser(sub, "evolve", "split-step time evolution")
    _add_experiment_parser(sub, "perturb", "perturbed-profile stability run")
    _add_experiment_parser(sub, "d-scan", "d''(omega) convexity scan")
    _add_experiment_parser(sub, "semiclassical", "small-dispersion experiment")
    _add_experiment_parser(sub, "check", "fast self-diagnostics")
    sw = sub.add_parser("sweep", help="run several configs across a worker pool")
    sw.add_argument("configs", nargs="+", help="INI config files")
    sw.add_argument("--jobs", type=int, default=None)
    sw.add_argument("--out-root", default=None,
                    help="root directory; each config gets an isolated subdir")

    args = parser.parse_args(argv)
    try:
        if args.command == "sweep":
            out_root = args.out_root or os.environ.get("OUT_DIR", "out")
            work = [(c, out_root) for c in args.configs]
            worst = EXIT_OK
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                for path, code in pool.map(_sweep_worker, work):
                    print(f"{path}: exit {code}")
                    worst = max(worst, code)
            return worst
        cfg = build_config(args.command, args)
        return run(cfg)
    except (ConfigInvalid, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (NonexistenceRegime, SpeedTooLarge) as exc:
        print(f"nonexistence regime: {exc}", file=sys.stderr)
        return EXIT_NONEXISTENCE
    except (NotConverged, Diverged) as exc:
        print(f"iteration failed: {exc}", file=sys.stderr)
        return EXIT_NOT_CONVERGED
    except (BadMagic, UnsupportedVersion, TruncatedFile, OSError) as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_IO
    except FnlsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
