"""Small-dispersion experiments: WKB data, scaled coefficients, break detection.

The scaled equation  i u_t - lam*eps u_xx = zeta eps^{beta-1} D^beta(|u|^{2s} u)
is integrated with initial data A(x) exp(i S(x)/eps).  The L_inf history is
sampled every step so the first break (onset of focusing) can be located.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np

from .errors import BoundaryNotDecayed, SeriesTooShort
from .model import ModelParams
from .spectral import ComplexField, Grid
from .stepper import EvolutionResult, StepConfig, evolve

BOUNDARY_DECAY_CAP = 1e-8     # max |A| allowed at the domain endpoints
EDGE_FRACTION = 0.1           # outer fraction of the domain watched for leakage
EDGE_AMPLITUDE_FRACTION = 0.01


def _sech(x: np.ndarray) -> np.ndarray:
    return 1.0 / np.cosh(x)


AMPLITUDES = {"sech": _sech}
PHASES = {"zero": lambda x: np.zeros_like(x), "2sech": lambda x: 2.0 / np.cosh(x)}

ProfileSpec = Union[str, Callable[[np.ndarray], np.ndarray]]


@dataclass
class SemiclassicalConfig:
    epsilon: float
    p: ModelParams
    cfg: StepConfig
    amplitude: ProfileSpec = "sech"
    phase: ProfileSpec = "zero"

    def __post_init__(self):
        if not (0.0 < self.epsilon <= 0.5):
            raise ValueError(f"epsilon must lie in (0, 0.5], got {self.epsilon}")

    def amplitude_fn(self) -> Callable[[np.ndarray], np.ndarray]:
        return AMPLITUDES[self.amplitude] if isinstance(self.amplitude, str) \
            else self.amplitude

    def phase_fn(self) -> Callable[[np.ndarray], np.ndarray]:
        return PHASES[self.phase] if isinstance(self.phase, str) else self.phase


def build_initial(sc: SemiclassicalConfig, grid: Grid) -> ComplexField:
    """u_0 = A(x) exp(i S(x)/eps); the grid must contain the data (A must
    decay below 1e-8 at both endpoints)."""
    A = sc.amplitude_fn()(grid.x)
    edge = max(abs(A[0]), abs(A[-1]))
    if edge > BOUNDARY_DECAY_CAP:
        raise BoundaryNotDecayed(
            f"|A| = {edge:.3g} at the domain boundary; widen the interval")
    S = sc.phase_fn()(grid.x)
    return ComplexField(grid, A * np.exp(1j * S / sc.epsilon))


def semiclassical_evolve(sc: SemiclassicalConfig, grid: Grid) -> EvolutionResult:
    """Evolve the WKB data with effective coefficients lam*eps and
    zeta*eps^{beta-1}; L_inf is sampled every step.  Aborts if a snapshot
    shows significant amplitude within the outer 10% of the domain (the
    desk-scale interval is only valid while the data stays localized)."""
    u0 = build_initial(sc, grid)
    res = evolve(u0, sc.p, sc.cfg,
                 lambda_eff=sc.p.lam * sc.epsilon,
                 zeta_scale=sc.epsilon ** (sc.p.beta - 1.0),
                 linf_every_step=True)
    n_edge = max(1, int(EDGE_FRACTION * grid.N / 2))
    for t, snap in res.snapshots:
        a = np.abs(snap.values)
        edge = max(a[:n_edge].max(), a[-n_edge:].max())
        if edge > EDGE_AMPLITUDE_FRACTION * a.max():
            raise BoundaryNotDecayed(
                f"amplitude reached the outer {EDGE_FRACTION:.0%} of the "
                f"domain at t = {t:.4g}; widen the interval")
    return res


def first_break_time(times: np.ndarray, linf: np.ndarray,
                     rise: float = 0.2, window: int = 5) -> Optional[float]:
    """Earliest local maximum of the smoothed L_inf series exceeding the
    initial value by at least `rise`, via a three-point peak test after a
    moving-average smoothing; None when no such peak exists."""
    times = np.asarray(times, dtype=float)
    linf = np.asarray(linf, dtype=float)
    if len(linf) < max(window, 5):
        raise SeriesTooShort(f"need at least {max(window, 5)} samples, got {len(linf)}")
    smooth = np.convolve(linf, np.ones(window) / window, mode="same")
    threshold = (1.0 + rise) * linf[0]
    for i in range(1, len(smooth) - 1):
        if smooth[i] >= smooth[i - 1] and smooth[i] >= smooth[i + 1] \
                and smooth[i] > threshold:
            return float(times[i])
    return None
