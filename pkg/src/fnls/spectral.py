"""Periodic grid, discrete Fourier transforms, and fractional-derivative multipliers.

All operators act diagonally in Fourier space.  The fractional derivative of
order gamma is the multiplier |k|^gamma; its k=0 entry is set to 0 for every
gamma != 0 (so the operator annihilates the mean mode) and to 1 for gamma = 0.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInterval, MismatchedGrids, NonEvenN, NonFiniteInput


class Grid:
    """Uniform periodic mesh on [a, b) with its angular wavenumber table.

    x_j = a + j*h, h = (b-a)/N, and k runs over 2*pi*m/(b-a) for
    m in [-N/2, N/2-1], stored in FFT ordering.  N must be even; powers of
    two transform fastest and are what the large production runs use.
    """

    def __init__(self, a: float, b: float, N: int):
        if not (a < b):
            raise DegenerateInterval(f"need a < b, got a={a}, b={b}")
        if N < 8 or N % 2 != 0:
            raise NonEvenN(f"N must be even and >= 8, got N={N}")
        self.a = float(a)
        self.b = float(b)
        self.N = int(N)
        self.L = self.b - self.a
        self.h = self.L / self.N
        self.x = self.a + self.h * np.arange(self.N)
        self.k = 2.0 * np.pi * np.fft.fftfreq(self.N, d=self.h)
        self.x.flags.writeable = False
        self.k.flags.writeable = False
        self._multipliers: dict[float, np.ndarray] = {}

    # Plain 1/N-normalized transforms (no endpoint phase): sufficient for all
    # diagonal operators because the e^{-i k a} factors cancel.
    def fft(self, values: np.ndarray) -> np.ndarray:
        return np.fft.fft(values, norm="forward")

    def ifft(self, coeffs: np.ndarray) -> np.ndarray:
        return np.fft.ifft(coeffs, norm="forward")

    def multiplier(self, gamma: float) -> np.ndarray:
        """|k|^gamma with the zero-mode rule; cached, read-only."""
        gamma = float(gamma)
        m = self._multipliers.get(gamma)
        if m is None:
            if gamma == 0.0:
                m = np.ones(self.N)
            else:
                with np.errstate(divide="ignore"):
                    m = np.abs(self.k) ** gamma
                m[0] = 0.0
            m.flags.writeable = False
            self._multipliers[gamma] = m
        return m

    def two_thirds_mask(self) -> np.ndarray:
        """Boolean dealiasing mask keeping |k| <= (2/3)*k_max."""
        kmax = np.pi / self.h
        return np.abs(self.k) <= (2.0 / 3.0) * kmax

    def __eq__(self, other) -> bool:
        return (isinstance(other, Grid) and self.N == other.N
                and self.a == other.a and self.b == other.b)

    def __hash__(self):
        return hash((self.a, self.b, self.N))

    def __repr__(self) -> str:
        return f"Grid(a={self.a}, b={self.b}, N={self.N})"


def make_grid(a: float, b: float, N: int) -> Grid:
    return Grid(a, b, N)


@dataclass
class ComplexField:
    """Physical-space complex samples u_j on a grid."""

    grid: Grid
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=complex)
        if self.values.shape != (self.grid.N,):
            raise MismatchedGrids(
                f"field has {self.values.shape} values for N={self.grid.N}")

    def copy(self) -> "ComplexField":
        return ComplexField(self.grid, self.values.copy())

    def linf(self) -> float:
        return float(np.max(np.abs(self.values)))

    def is_finite(self) -> bool:
        return bool(np.all(np.isfinite(self.values)))


@dataclass
class SpectralField:
    """Fourier coefficients normalized as (1/N) * sum_j u_j exp(-i k x_j)."""

    grid: Grid
    coeffs: np.ndarray

    def __post_init__(self):
        self.coeffs = np.asarray(self.coeffs, dtype=complex)
        if self.coeffs.shape != (self.grid.N,):
            raise MismatchedGrids(
                f"spectrum has {self.coeffs.shape} coeffs for N={self.grid.N}")


def _require_finite(f: ComplexField) -> None:
    if not f.is_finite():
        raise NonFiniteInput("field contains NaN/Inf samples")


def require_same_grid(f: ComplexField, g: ComplexField) -> None:
    if f.grid != g.grid:
        raise MismatchedGrids(f"{f.grid!r} vs {g.grid!r}")


def fractional_multiplier(grid: Grid, gamma: float) -> np.ndarray:
    """Symbol table of D^gamma on the grid (see Grid.multiplier)."""
    return grid.multiplier(gamma)


def forward_transform(f: ComplexField) -> SpectralField:
    """DFT with the x_j-anchored convention, coeffs_k = (1/N) sum u_j e^{-i k x_j}."""
    _require_finite(f)
    g = f.grid
    phase = np.exp(-1j * g.k * g.a)
    return SpectralField(g, g.fft(f.values) * phase)


def inverse_transform(F: SpectralField) -> ComplexField:
    g = F.grid
    if not np.all(np.isfinite(F.coeffs)):
        raise NonFiniteInput("spectrum contains NaN/Inf coefficients")
    phase = np.exp(1j * g.k * g.a)
    return ComplexField(g, g.ifft(F.coeffs * phase))


def apply_multiplier(f: ComplexField, m: np.ndarray) -> ComplexField:
    """Pointwise spectral multiplier m(k) applied to f (phase factors cancel)."""
    _require_finite(f)
    g = f.grid
    return ComplexField(g, g.ifft(m * g.fft(f.values)))


def apply_D(f: ComplexField, gamma: float) -> ComplexField:
    """Fractional derivative D^gamma f."""
    return apply_multiplier(f, f.grid.multiplier(gamma))


def spatial_derivative(f: ComplexField) -> ComplexField:
    """d/dx via the i*k multiplier."""
    return apply_multiplier(f, 1j * f.grid.k)
