"""Stabilized fixed-point iteration for standing-wave and boosted profiles.

A profile traveling with speed c at frequency omega satisfies, in Fourier
space,

    (omega + c k + lam k^2) phi^(k) = zeta |k|^beta (|phi|^{2 sigma} phi)^(k).

The naive fixed-point update is multiplied by M_n^nu, where the stabilizing
factor

    M_n = sum_k d(k) |Q_n^(k)|^2  /  Re[ zeta sum_k |k|^beta N(Q_n)^(k) conj(Q_n^(k)) ]

equals 1 at a true solution; nu = (2 sigma + 2)/(2 sigma + 1) gives the
fastest contraction for power nonlinearities.  The conjugate pairing in M_n
reduces to the plain quadratic pairing for real symmetric spectra and keeps
M_n real for complex boosted iterates.

Three monitors are recorded per iteration: Error(n) = ||Q_n - Q_{n-1}||_inf,
the stabilization error |1 - M_n|, and the residual RES(n) =
||d(k) Q_n^ - zeta |k|^beta N(Q_n)^||_inf.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Union

import numpy as np

from . import model
from .errors import (Diverged, IndefiniteSymbol, NonexistenceRegime,
                     NonFiniteInput, NotConverged, SpeedTooLarge,
                     ZeroDenominator)
from .model import ModelParams, WaveParams
from .spectral import ComplexField, Grid, _require_finite

DIVERGENCE_CAP = 1e6
SUSPECT_RESIDUAL = 1e-4


def default_nu(sigma: float) -> float:
    return (2.0 * sigma + 2.0) / (2.0 * sigma + 1.0)


@dataclass
class SolveOptions:
    tol: float = 1e-12
    max_iter: int = 1000
    nu: Optional[float] = None            # None -> (2 sigma + 2)/(2 sigma + 1)
    initial_guess: Union[str, ComplexField] = "gaussian"

    def __post_init__(self):
        if self.tol <= 0.0:
            raise ValueError("tol must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")


@dataclass
class ConvergenceTrace:
    error: np.ndarray
    stab: np.ndarray
    res: np.ndarray
    converged: bool
    iterations: int


@dataclass
class ProfileRecord:
    profile: ComplexField
    params: ModelParams
    wave: WaveParams
    trace: ConvergenceTrace
    pohozaev: tuple
    suspect: bool


def linear_symbol(grid: Grid, p: ModelParams, w: WaveParams) -> np.ndarray:
    """d(k) = omega + c k + lam k^2; must be positive on every mode."""
    return w.omega + w.c * grid.k + p.lam * grid.k ** 2


def _check_symbol(d: np.ndarray) -> None:
    if np.min(d) <= 0.0:
        raise IndefiniteSymbol(
            f"linear symbol reaches {np.min(d):.3g} <= 0 on the grid")


def _step_arrays(values: np.ndarray, grid: Grid, p: ModelParams,
                 d: np.ndarray, nu: float):
    """One stabilized update on raw samples; returns (new values, M_n, RES(n))."""
    wb = grid.multiplier(p.beta)
    Qh = grid.fft(values)
    Nh = grid.fft(np.abs(values) ** (2.0 * p.sigma) * values)
    num = float(np.sum(d * np.abs(Qh) ** 2))
    den = float(np.real(p.zeta * np.sum(wb * Nh * np.conj(Qh))))
    if abs(den) < 1e-300:
        raise ZeroDenominator("stabilizing-factor denominator vanished")
    M = num / den
    res = float(np.max(np.abs(d * Qh - p.zeta * wb * Nh)))
    with np.errstate(invalid="ignore"):
        scale = np.power(M, nu)
    new = grid.ifft(p.zeta * scale * wb * Nh / d)
    return new, M, res


def iterate_step(Qn: ComplexField, p: ModelParams, w: WaveParams,
                 nu: Optional[float] = None):
    """Single iteration Q_n -> (Q_{n+1}, M_n)."""
    _require_finite(Qn)
    d = linear_symbol(Qn.grid, p, w)
    _check_symbol(d)
    new, M, _ = _step_arrays(Qn.values, Qn.grid, p,
                             d, default_nu(p.sigma) if nu is None else nu)
    return ComplexField(Qn.grid, new), M


def residual_RES(Q: ComplexField, p: ModelParams, w: WaveParams) -> float:
    """sup over modes of |d(k) Q^ - zeta |k|^beta N(Q)^|."""
    _require_finite(Q)
    g = Q.grid
    d = linear_symbol(g, p, w)
    Qh = g.fft(Q.values)
    Nh = g.fft(np.abs(Q.values) ** (2.0 * p.sigma) * Q.values)
    return float(np.max(np.abs(d * Qh - p.zeta * g.multiplier(p.beta) * Nh)))


def exact_profile_beta0(sigma: float, omega: float, grid: Grid) -> ComplexField:
    """Closed-form beta=0 profile omega^{1/(2s)} (s+1)^{1/(2s)} sech^{1/s}(s sqrt(omega) x)."""
    if sigma <= 0.0 or omega <= 0.0:
        raise ValueError("sigma and omega must be positive")
    amp = (omega * (sigma + 1.0)) ** (1.0 / (2.0 * sigma))
    vals = amp / np.cosh(sigma * np.sqrt(omega) * grid.x) ** (1.0 / sigma)
    return ComplexField(grid, vals.astype(complex))


def _named_guess(name: str, grid: Grid, sigma: float) -> np.ndarray:
    if name == "gaussian":
        return np.exp(-grid.x ** 2).astype(complex)
    if name == "sech":
        return (1.0 / np.cosh(grid.x)).astype(complex)
    if name == "exact-beta0":
        return exact_profile_beta0(sigma, 1.0, grid).values
    raise ValueError(f"unknown initial guess preset {name!r}")


def check_existence_window(p: ModelParams, force: bool = False) -> None:
    """Reject parameter ranges with no nontrivial profile (override with force)."""
    if force:
        return
    if p.zeta != 1.0:
        raise NonexistenceRegime(
            "no nontrivial profile exists for the defocusing sign zeta=-1")
    if p.lam <= 0.0:
        raise NonexistenceRegime("profile solves require lam > 0")
    hi = 1.0 + 1.0 / (p.sigma + 1.0)
    lo = -p.sigma / (p.sigma + 1.0)
    if p.beta >= hi:
        raise NonexistenceRegime(
            f"beta={p.beta} >= 1 + 1/(sigma+1) = {hi:.6g}: no profile exists")
    if p.beta <= lo:
        raise NonexistenceRegime(
            f"beta={p.beta} <= -sigma/(sigma+1) = {lo:.6g}: no profile exists")


def _recenter_and_rotate(values: np.ndarray, grid: Grid) -> np.ndarray:
    """Deterministic tie-break: |.|-peak at the node nearest x=0, peak value
    rotated to the positive real axis."""
    peak = int(np.argmax(np.abs(values)))
    target = int(np.argmin(np.abs(grid.x)))
    out = np.roll(values, target - peak)
    z = out[target]
    if np.abs(z) > 0.0:
        out = out * (np.conj(z) / np.abs(z))
    return out


def _run_iteration(grid: Grid, p: ModelParams, w: WaveParams,
                   opts: SolveOptions, guess: np.ndarray):
    d = linear_symbol(grid, p, w)
    _check_symbol(d)
    nu = default_nu(p.sigma) if opts.nu is None else opts.nu
    Q = np.asarray(guess, dtype=complex)
    if not np.all(np.isfinite(Q)):
        raise NonFiniteInput("initial guess contains NaN/Inf")
    errors, stabs, ress = [], [], []
    converged = False
    for _ in range(opts.max_iter):
        new, M, res = _step_arrays(Q, grid, p, d, nu)
        err = float(np.max(np.abs(new - Q)))
        errors.append(err)
        stabs.append(abs(1.0 - M))
        ress.append(res)
        Q = new
        if not np.isfinite(err) or err > DIVERGENCE_CAP:
            raise Diverged(
                f"iteration error reached {err:.3g}",
                ConvergenceTrace(np.array(errors), np.array(stabs),
                                 np.array(ress), False, len(errors)))
        if err <= opts.tol:
            converged = True
            break
    trace = ConvergenceTrace(np.array(errors), np.array(stabs),
                             np.array(ress), converged, len(errors))
    if not converged:
        raise NotConverged(
            f"no convergence after {opts.max_iter} iterations "
            f"(last error {errors[-1]:.3g})", trace)
    return Q, trace


def _solve_unit_frequency(grid: Grid, p: ModelParams, opts: SolveOptions,
                          guess: np.ndarray):
    """Solve at omega=1 (c=0), with continuation in beta when beta >= 1."""
    w1 = WaveParams(1.0, 0.0)
    if p.beta < 1.0:
        return _run_iteration(grid, p, w1, opts, guess)
    betas = list(np.arange(0.9, p.beta, 0.1)) + [p.beta]
    Q, trace = guess, None
    for b in betas:
        Q, trace = _run_iteration(grid, replace(p, beta=float(b)), w1, opts, Q)
    return Q, trace


def _finalize(grid: Grid, values: np.ndarray, p: ModelParams, w: WaveParams,
              trace: ConvergenceTrace) -> ProfileRecord:
    prof = ComplexField(grid, _recenter_and_rotate(values, grid))
    poho = model.pohozaev_residuals(prof, p, w)
    suspect = any(r > SUSPECT_RESIDUAL for r in poho if r >= 0.0)
    return ProfileRecord(prof, p, w, trace, poho, suspect)


def solve_standing_wave(p: ModelParams, omega: float, grid: Grid,
                        opts: Optional[SolveOptions] = None,
                        force: bool = False) -> ProfileRecord:
    """Standing-wave profile at frequency omega (c = 0).

    The frequency is reduced to 1 internally through the exact rescaling
    phi(x) = omega^{(2-beta)/(4 sigma)} phi_1(sqrt(omega) x) on the
    correspondingly stretched grid, which maps the discrete problems onto
    each other exactly.
    """
    opts = opts or SolveOptions()
    if omega <= 0.0:
        raise NonexistenceRegime(f"omega must be positive, got {omega}")
    check_existence_window(p, force)

    if isinstance(opts.initial_guess, ComplexField):
        guess = opts.initial_guess.values
    else:
        guess = _named_guess(opts.initial_guess, grid, p.sigma)

    if omega == 1.0:
        Q, trace = _solve_unit_frequency(grid, p, opts, guess)
        return _finalize(grid, Q, p, WaveParams(1.0, 0.0), trace)

    root = np.sqrt(omega)
    amp = omega ** ((2.0 - p.beta) / (4.0 * p.sigma))
    inner = Grid(root * grid.a, root * grid.b, grid.N)
    Q1, trace = _solve_unit_frequency(inner, p, opts, guess / amp)
    return _finalize(grid, amp * Q1, p, WaveParams(omega, 0.0), trace)


def solve_boosted(p: ModelParams, w: WaveParams, grid: Grid,
                  opts: Optional[SolveOptions] = None,
                  force: bool = False) -> ProfileRecord:
    """Boosted profile at (omega, c); requires c^2 < 4 lam omega so the
    linear symbol stays positive.  No frequency reduction exists for c != 0,
    so the iteration runs at the requested parameters directly."""
    opts = opts or SolveOptions()
    check_existence_window(p, force)
    if w.c ** 2 >= 4.0 * p.lam * w.omega:
        raise SpeedTooLarge(
            f"c^2 = {w.c**2:.6g} >= 4 lam omega = {4*p.lam*w.omega:.6g}")
    if isinstance(opts.initial_guess, ComplexField):
        guess = opts.initial_guess.values
    else:
        guess = _named_guess(opts.initial_guess, grid, p.sigma)
    if p.beta < 1.0 or isinstance(opts.initial_guess, ComplexField):
        Q, trace = _run_iteration(grid, p, w, opts, guess)
    else:
        Q, trace = guess, None
        for b in list(np.arange(0.9, p.beta, 0.1)) + [p.beta]:
            Q, trace = _run_iteration(grid, replace(p, beta=float(b)), w, opts, Q)
    return _finalize(grid, Q, p, w, trace)
