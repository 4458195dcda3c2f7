"""Lyapunov-function machinery and scripted perturbation experiments.

Along the profile branch the Lyapunov function reduces to

    d(omega) = sigma/(2 (sigma+1)) * int |phi_{c,omega}|^{2 sigma + 2},

so convexity in omega (d'' > 0 from central differences over an omega scan)
signals orbital stability and concavity instability.  Perturbation runs
evolve r*phi and classify the chi-norm history.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from . import petviashvili as pv
from .errors import FnlsError
from .model import ModelParams, WaveParams
from .spectral import ComplexField, Grid, _require_finite
from .stepper import EvolutionResult, Outcome, StepConfig, evolve

CHI_BAND = 1.5
BOUNDARY_MARGIN = 0.02   # scan offset off omega = c^2/(4 lam), as range fraction


@dataclass
class DScanResult:
    c: float
    omegas: np.ndarray
    d: np.ndarray
    d2: np.ndarray                    # central differences; len = len(omegas) - 2
    omega_c: Optional[float]          # first sign change of d2, interpolated
    omega_c_uncertainty: Optional[float]
    all_positive: bool
    failed: List[int] = field(default_factory=list)


@dataclass
class PerturbationVerdict:
    r: float
    outcome: str                      # "bounded-oscillation" | "growth" | "blow-up"
    blowup_time: Optional[float]
    chi_t: np.ndarray
    chi: np.ndarray
    linf_t: np.ndarray
    linf: np.ndarray

    BOUNDED = "bounded-oscillation"
    GROWTH = "growth"
    BLOW_UP = "blow-up"


def lyapunov_d(phi: ComplexField, sigma: float) -> float:
    """Trapezoidal quadrature of sigma/(2 (sigma+1)) |phi|^{2 sigma + 2}."""
    _require_finite(phi)
    return float(sigma / (2.0 * (sigma + 1.0)) * phi.grid.h
                 * np.sum(np.abs(phi.values) ** (2.0 * sigma + 2.0)))


def analytic_d2_zero_speed(p: ModelParams, omega: float, norm4: float) -> float:
    """Closed-form d''(omega) for the c = 0 scaling family, from the printed
    display; norm4 is ||phi_1||^{2 sigma + 2}_{L^{2 sigma + 2}} of a converged
    omega = 1 profile.  Positive exactly when sigma < (2-beta)/(1+beta).
    """
    s, b = p.sigma, p.beta
    coeff = (((1.0 - b) * 2.0 * s + 2.0 - b)
             * ((2.0 - b) * (s + 1.0) - 3.0 * s) / (8.0 * (s + 1.0)))
    expo = ((1.0 - b) * 2.0 * s + 2.0 - b) / (2.0 * s) - 2.0
    return float(coeff * omega ** expo * norm4)


def scan_d(p: ModelParams, c: float, omega_max: float, n_points: int,
           grid: Grid, opts: Optional[pv.SolveOptions] = None) -> DScanResult:
    """d(omega) over a uniform grid in (c^2/(4 lam) + margin, omega_max).

    Each solve warm-starts from the previous omega's profile to stay on a
    smooth branch.  Failed solves are flagged and skipped; d'' uses
    second-order central differences on the uniform grid.
    """
    if n_points < 5:
        raise ValueError("n_points must be >= 5")
    lo = c * c / (4.0 * p.lam)
    if omega_max <= lo:
        raise ValueError(f"omega_max must exceed c^2/(4 lam) = {lo:.6g}")
    start = lo + BOUNDARY_MARGIN * (omega_max - lo)
    omegas = np.linspace(start, omega_max, n_points)
    d = np.full(n_points, np.nan)
    failed: List[int] = []
    opts = opts or pv.SolveOptions()
    guess = opts.initial_guess
    for i, om in enumerate(omegas):
        try:
            rec = pv.solve_boosted(
                p, WaveParams(float(om), c), grid,
                pv.SolveOptions(tol=opts.tol, max_iter=opts.max_iter,
                                nu=opts.nu, initial_guess=guess))
        except FnlsError:
            failed.append(i)
            continue
        d[i] = lyapunov_d(rec.profile, p.sigma)
        guess = rec.profile
    dom = omegas[1] - omegas[0]
    d2 = (d[2:] - 2.0 * d[1:-1] + d[:-2]) / dom ** 2
    omega_c = None
    for i in range(len(d2) - 1):
        if np.isfinite(d2[i]) and np.isfinite(d2[i + 1]) and d2[i] * d2[i + 1] < 0.0:
            omega_c = float(omegas[1 + i] + dom * d2[i] / (d2[i] - d2[i + 1]))
            break
    finite = d2[np.isfinite(d2)]
    return DScanResult(
        c=c, omegas=omegas, d=d, d2=d2, omega_c=omega_c,
        omega_c_uncertainty=dom if omega_c is not None else None,
        all_positive=bool(len(finite) and np.all(finite > 0.0)),
        failed=failed)


def classify_chi_series(chi: np.ndarray, aborted_blowup: bool,
                        band: float = CHI_BAND) -> str:
    """Three-way verdict from the chi-norm history.

    Growth requires the final value to exceed band*chi(0), to sit near the
    series maximum, and the tail (last quarter) to be nondecreasing within
    2% jitter; transient band excursions that fall back classify as bounded
    oscillation.
    """
    if aborted_blowup:
        return PerturbationVerdict.BLOW_UP
    chi0 = chi[0]
    if len(chi) >= 2 and chi[-1] > band * chi0:
        tail = chi[max(0, int(0.75 * len(chi))):]
        monotone = bool(np.all(tail[1:] >= 0.98 * tail[:-1]))
        if monotone and chi[-1] >= 0.9 * np.max(chi):
            return PerturbationVerdict.GROWTH
    return PerturbationVerdict.BOUNDED


def perturbation_run(p: ModelParams, w: WaveParams, r: float, cfg: StepConfig,
                     grid: Grid, opts: Optional[pv.SolveOptions] = None) -> PerturbationVerdict:
    """Solve the (omega, c) profile, evolve r*profile, and classify."""
    if w.c == 0.0:
        rec = pv.solve_standing_wave(p, w.omega, grid, opts)
    else:
        rec = pv.solve_boosted(p, w, grid, opts)
    u0 = ComplexField(grid, r * rec.profile.values)
    ev = evolve(u0, p, cfg)
    return verdict_from_evolution(ev, r)


def verdict_from_evolution(ev: EvolutionResult, r: float) -> PerturbationVerdict:
    chi_t = np.array([row.t for row in ev.diagnostics.rows])
    chi = np.array([row.chi for row in ev.diagnostics.rows])
    outcome = classify_chi_series(chi, ev.outcome.kind == Outcome.BLOW_UP)
    return PerturbationVerdict(
        r=r, outcome=outcome,
        blowup_time=ev.outcome.t if ev.outcome.kind == Outcome.BLOW_UP else None,
        chi_t=chi_t, chi=chi,
        linf_t=ev.diagnostics.linf_t, linf=ev.diagnostics.linf)
