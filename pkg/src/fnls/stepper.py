"""Split-step Fourier evolution of i u_t - lam u_xx = zeta D^beta(|u|^{2s} u).

The linear flow is integrated exactly in Fourier space (phase rotation by
exp(i lam k^2 tau), unitary on every mode).  The nonlinear flow
u_t^ = -i zeta |k|^beta (|u|^{2s} u)^ is advanced by one classical RK4 step
per substep, with each stage evaluated through physical space.  A symmetric
second-order step

    phi2(tau) = N(tau/2) o L(tau) o N(tau/2)

is upgraded to fourth order by the triple jump
phi2(w tau) o phi2((1-2w) tau) o phi2(w tau), w = (2 + 2^{1/3} + 2^{-1/3})/3;
the middle substep runs backward in time (1 - 2w < 0), which both flows
support.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from .errors import NonFiniteOutput
from .model import InvariantSnapshot, ModelParams
from .spectral import ComplexField, Grid, _require_finite

W_YOSHIDA = (2.0 + 2.0 ** (1.0 / 3.0) + 2.0 ** (-1.0 / 3.0)) / 3.0

SCHEMES = ("strang2", "yoshida4")


class StiffnessAdvisory(UserWarning):
    """tau exceeds the linearized stiffness proxy of the nonlinear substep."""


@dataclass
class StepConfig:
    """Time-stepping configuration; tau = T/M."""

    T: float
    M: int
    scheme: str = "yoshida4"
    monitor_every: Optional[int] = None     # None -> max(1, M//100)
    blowup_linf_cap: float = 1e6
    mass_drift_cap: float = 1e-4

    def __post_init__(self):
        if self.T <= 0.0 or self.M < 1:
            raise ValueError("need T > 0 and M >= 1")
        if self.scheme not in SCHEMES:
            raise ValueError(f"scheme must be one of {SCHEMES}")
        if self.monitor_every is not None and self.monitor_every < 1:
            raise ValueError("monitor_every must be positive")

    @property
    def tau(self) -> float:
        return self.T / self.M

    @property
    def cadence(self) -> int:
        return self.monitor_every if self.monitor_every is not None \
            else max(1, self.M // 100)


@dataclass
class Outcome:
    kind: str              # "completed" | "blow-up" | "mass-drift"
    t: float

    COMPLETED = "completed"
    BLOW_UP = "blow-up"
    MASS_DRIFT = "mass-drift"

    @property
    def completed(self) -> bool:
        return self.kind == Outcome.COMPLETED


@dataclass
class RunDiagnostics:
    """Cadence rows of conserved quantities plus the L_inf(t) series."""

    rows: List[InvariantSnapshot] = field(default_factory=list)
    linf_t: np.ndarray = field(default_factory=lambda: np.empty(0))
    linf: np.ndarray = field(default_factory=lambda: np.empty(0))


@dataclass
class EvolutionResult:
    final: Optional[ComplexField]
    snapshots: List[Tuple[float, ComplexField]]
    diagnostics: RunDiagnostics
    outcome: Outcome


class _Engine:
    """Per-run operator tables; one instance per evolution (not shareable).

    Internally the state is the unnormalized spectrum A = N * u^ (numpy's
    plain fft/ifft pair), which the flows act on identically; the factor is
    removed only at monitor points.
    """

    def __init__(self, grid: Grid, p: ModelParams, lam_eff: float,
                 zeta_eff: float, scheme: str):
        self.grid = grid
        self.k2 = grid.k ** 2
        self.wz = (-1j * zeta_eff) * grid.multiplier(p.beta)
        self.sigma = p.sigma
        self.lam_eff = lam_eff
        self.zeta_eff = zeta_eff
        self.scheme = scheme
        self._phase: dict = {}

    def rhs(self, A: np.ndarray) -> np.ndarray:
        u = np.fft.ifft(A)
        a2 = u.real * u.real + u.imag * u.imag
        if self.sigma != 1.0:
            a2 = a2 ** self.sigma
        return self.wz * np.fft.fft(a2 * u)

    def linear(self, A: np.ndarray, t: float) -> np.ndarray:
        ph = self._phase.get(t)
        if ph is None:
            ph = np.exp((1j * self.lam_eff * t) * self.k2)
            self._phase[t] = ph
        return A * ph

    def nonlinear(self, A: np.ndarray, t: float) -> np.ndarray:
        k1 = self.rhs(A)
        k2 = self.rhs(A + (0.5 * t) * k1)
        k3 = self.rhs(A + (0.5 * t) * k2)
        k4 = self.rhs(A + t * k3)
        return A + (t / 6.0) * (k1 + 2.0 * (k2 + k3) + k4)

    def phi2(self, A: np.ndarray, t: float) -> np.ndarray:
        return self.nonlinear(self.linear(self.nonlinear(A, 0.5 * t), t), 0.5 * t)

    def step(self, A: np.ndarray, t: float) -> np.ndarray:
        if self.scheme == "strang2":
            return self.phi2(A, t)
        w = W_YOSHIDA
        return self.phi2(self.phi2(self.phi2(A, w * t), (1.0 - 2.0 * w) * t), w * t)


def _zeta_eff(p: ModelParams, zeta_scale: float) -> float:
    return p.zeta * zeta_scale


def linear_substep(u: ComplexField, tau: float, lambda_eff: float) -> ComplexField:
    """Exact linear flow: multiply modes by exp(i lambda_eff k^2 tau)."""
    _require_finite(u)
    g = u.grid
    return ComplexField(g, g.ifft(g.fft(u.values) * np.exp((1j * lambda_eff * tau) * g.k ** 2)))


def nonlinear_substep(u: ComplexField, tau: float, p: ModelParams,
                      zeta_scale: float = 1.0) -> ComplexField:
    """One RK4 step of the nonlinear flow at fixed tau."""
    _require_finite(u)
    eng = _Engine(u.grid, p, 0.0, _zeta_eff(p, zeta_scale), "strang2")
    with np.errstate(over="ignore", invalid="ignore"):
        out = np.fft.ifft(eng.nonlinear(np.fft.fft(u.values), tau))
    if not np.all(np.isfinite(out)):
        raise NonFiniteOutput("nonlinear substep produced NaN/Inf (blow-up candidate)")
    return ComplexField(u.grid, out)


def step(u: ComplexField, tau: float, p: ModelParams,
         lambda_eff: Optional[float] = None, scheme: str = "yoshida4",
         zeta_scale: float = 1.0) -> ComplexField:
    """One full composite step of length tau."""
    _require_finite(u)
    lam = p.lam if lambda_eff is None else lambda_eff
    eng = _Engine(u.grid, p, lam, _zeta_eff(p, zeta_scale), scheme)
    with np.errstate(over="ignore", invalid="ignore"):
        out = np.fft.ifft(eng.step(np.fft.fft(u.values), tau))
    if not np.all(np.isfinite(out)):
        raise NonFiniteOutput("step produced NaN/Inf (blow-up candidate)")
    return ComplexField(u.grid, out)


def stiffness_proxy(u0: ComplexField, p: ModelParams, tau: float,
                    zeta_scale: float = 1.0) -> float:
    """tau * max|k|^beta * max|u|^{2s} * |zeta_eff|, a linearized RK4 load
    estimate for the nonlinear substep; > 1 earns an advisory warning."""
    g = u0.grid
    return float(abs(tau) * np.max(g.multiplier(p.beta))
                 * u0.linf() ** (2.0 * p.sigma) * abs(_zeta_eff(p, zeta_scale)))


def evolve(u0: ComplexField, p: ModelParams, cfg: StepConfig,
           lambda_eff: Optional[float] = None, zeta_scale: float = 1.0,
           linf_every_step: bool = False) -> EvolutionResult:
    """March M steps of tau = T/M, recording diagnostics at the monitor cadence.

    All failures are structured outcomes rather than exceptions so parameter
    sweeps can proceed: the run halts with outcome "blow-up" when non-finite
    values appear or L_inf exceeds the cap, and with "mass-drift" when the
    relative drift of F exceeds cfg.mass_drift_cap at a monitor tick.
    lambda_eff and zeta_scale replace / rescale the PDE coefficients (the
    semiclassical module uses lam*eps and eps^{beta-1}); diagnostics rows are
    computed with the effective coefficients so their conservation is the
    meaningful check.
    """
    _require_finite(u0)
    g = u0.grid
    lam = p.lam if lambda_eff is None else lambda_eff
    zeta_eff = _zeta_eff(p, zeta_scale)
    eng = _Engine(g, p, lam, zeta_eff, cfg.scheme)
    tau = cfg.tau
    cadence = cfg.cadence

    proxy = stiffness_proxy(u0, p, tau, zeta_scale)
    if proxy > 1.0:
        warnings.warn(
            f"nonlinear-substep stiffness proxy {proxy:.2f} > 1; "
            f"consider a smaller time step", StiffnessAdvisory)

    wFm = g.multiplier(-p.beta)
    wGm = g.multiplier(2.0 - p.beta)
    norm2 = 1.0 / g.N ** 2     # engine state is the unnormalized spectrum

    def snapshot_row(A, u_phys, t, F0):
        a2 = (A.real ** 2 + A.imag ** 2) * norm2
        F = float(g.L * np.sum(wFm * a2))
        grad = float(g.L * np.sum(wGm * a2))
        P = float(g.L * np.sum(g.k * wFm * a2))
        lp = float(g.h * np.sum(np.abs(u_phys) ** (2.0 * p.sigma + 2.0)))
        E = 0.5 * (lam * grad - zeta_eff / (p.sigma + 1.0) * lp)
        linf = float(np.max(np.abs(u_phys)))
        dF = abs((F - F0) / F0) if F0 > 0.0 else 0.0
        return InvariantSnapshot(t, F, E, P, np.sqrt(F + grad), linf, dF), F

    uh = np.fft.fft(u0.values)
    row0, F0 = snapshot_row(uh, u0.values, 0.0, -1.0)
    row0.deltaF = 0.0
    diag = RunDiagnostics(rows=[row0])
    linf_t, linf_v = [0.0], [row0.linf]
    snaps: List[Tuple[float, ComplexField]] = [(0.0, u0.copy())]

    def result(outcome, final_uh=None):
        diag.linf_t = np.array(linf_t)
        diag.linf = np.array(linf_v)
        final = None
        if final_uh is not None:
            final = ComplexField(g, np.fft.ifft(final_uh))
        return EvolutionResult(final, snaps, diag, outcome)

    # overflow inside a diverging step is the blow-up signal, not an error
    with np.errstate(over="ignore", invalid="ignore"):
        for n in range(1, cfg.M + 1):
            uh = eng.step(uh, tau)
            t = n * tau
            if not np.all(np.isfinite(uh)):
                return result(Outcome(Outcome.BLOW_UP, t))
            if linf_every_step:
                li = float(np.max(np.abs(np.fft.ifft(uh))))
                linf_t.append(t)
                linf_v.append(li)
                if li > cfg.blowup_linf_cap:
                    return result(Outcome(Outcome.BLOW_UP, t))
            if n % cadence == 0 or n == cfg.M:
                u_phys = np.fft.ifft(uh)
                row, _ = snapshot_row(uh, u_phys, t, F0)
                diag.rows.append(row)
                snaps.append((t, ComplexField(g, u_phys.copy())))
                if not linf_every_step:
                    linf_t.append(t)
                    linf_v.append(row.linf)
                if row.linf > cfg.blowup_linf_cap:
                    return result(Outcome(Outcome.BLOW_UP, t))
                if row.deltaF > cfg.mass_drift_cap:
                    return result(Outcome(Outcome.MASS_DRIFT, t))
    return result(Outcome(Outcome.COMPLETED, cfg.T), uh)
