"""PDE coefficients, conserved functionals, and parameter-regime classification.

The evolution equation is  i u_t - lam u_xx = zeta D^beta(|u|^{2 sigma} u)  on a
periodic interval.  Conserved functionals (all quadratures spectral, zero mode
handled by the multiplier convention):

    F(u)   = int |D^{-beta/2} u|^2
    E(u)   = 1/2 int ( lam |D^{-beta/2} u_x|^2 - zeta/(sigma+1) |u|^{2 sigma+2} )
    P(u)   = Im <D^{-beta/2} u, D^{-beta/2} u_x>   = L sum_k k |k|^{-beta} |u_k|^2
    chi^2  = F(u) + ||D^{1-beta/2} u||^2

For beta > 0 the k=0 term of F and P is dropped (weight 0), so F is a seminorm
on fields with mean; this mirrors the iteration's zero-mode convention.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import InadmissibleExponent, InvalidRegime, ZeroProfile
from .spectral import ComplexField, _require_finite, require_same_grid


def fmt15(x: float) -> str:
    """15-significant-digit float formatting used by every CSV artifact."""
    return format(float(x), ".15g")


@dataclass(frozen=True)
class ModelParams:
    """Coefficients (lam, zeta, beta, sigma) of the equation."""

    lam: float = 1.0
    zeta: float = 1.0
    beta: float = 0.0
    sigma: float = 1.0

    def __post_init__(self):
        if self.lam == 0.0:
            raise InvalidRegime("dispersion coefficient lam must be nonzero")
        if self.zeta not in (1.0, -1.0):
            raise InvalidRegime(f"zeta must be +1 or -1, got {self.zeta}")
        if self.sigma <= 0.0:
            raise InvalidRegime(f"sigma must be positive, got {self.sigma}")
        if not (-1.0 < self.beta < 2.0):
            raise InvalidRegime(
                f"beta must lie in (-1, 2), got {self.beta}")


@dataclass(frozen=True)
class WaveParams:
    """Standing-wave frequency omega and speed c (c=0 for plain waves)."""

    omega: float
    c: float = 0.0

    def __post_init__(self):
        if self.omega <= 0.0:
            raise InvalidRegime(f"omega must be positive, got {self.omega}")


@dataclass
class InvariantSnapshot:
    """One diagnostics row: conserved quantities and run monitors at time t."""

    t: float
    F: float
    E: float
    P: float
    chi: float
    linf: float
    deltaF: float

    CSV_HEADER = "t,F,E,P,chi,linf,deltaF"

    def csv_row(self) -> str:
        return ",".join(fmt15(v) for v in
                        (self.t, self.F, self.E, self.P, self.chi,
                         self.linf, self.deltaF))


class Regime(enum.Enum):
    SUBCRITICAL = "subcritical"
    CRITICAL = "critical"
    SUPERCRITICAL = "supercritical"


@dataclass
class Classification:
    """Outcome of the global-boundedness / blow-up indicator checks."""

    regime: Regime
    bounded_guarantee: bool
    blowup_indicated: bool
    scaled_energy: Optional[float] = None


# --- spectral quadratures ----------------------------------------------------

def weighted_spectral_sum(u: ComplexField, gamma: float) -> float:
    """L * sum_k |k|^gamma |u_k|^2 with the zero-mode rule (= ||D^{gamma/2} u||^2)."""
    g, uh = _field_spectrum(u)
    return float(g.L * np.sum(g.multiplier(gamma) * np.abs(uh) ** 2))


def _field_spectrum(u: ComplexField):
    g = u.grid
    return g, g.fft(u.values)


def lebesgue_power(u: ComplexField, power: float) -> float:
    """h * sum_j |u_j|^power, the trapezoidal/rectangle quadrature of int |u|^power."""
    return float(u.grid.h * np.sum(np.abs(u.values) ** power))


def mass(u: ComplexField, p: ModelParams) -> float:
    _require_finite(u)
    return weighted_spectral_sum(u, -p.beta)


def energy(u: ComplexField, p: ModelParams) -> float:
    _require_finite(u)
    grad = weighted_spectral_sum(u, 2.0 - p.beta)
    return 0.5 * (p.lam * grad
                  - p.zeta / (p.sigma + 1.0) * lebesgue_power(u, 2.0 * p.sigma + 2.0))


def momentum(u: ComplexField, p: ModelParams) -> float:
    _require_finite(u)
    g, uh = _field_spectrum(u)
    return float(g.L * np.sum(g.k * g.multiplier(-p.beta) * np.abs(uh) ** 2))


def chi_norm(u: ComplexField, p: ModelParams) -> float:
    _require_finite(u)
    g, uh = _field_spectrum(u)
    a2 = np.abs(uh) ** 2
    F = g.L * np.sum(g.multiplier(-p.beta) * a2)
    grad = g.L * np.sum(g.multiplier(2.0 - p.beta) * a2)
    return float(np.sqrt(F + grad))


def nonlinear_term(u: ComplexField, p: ModelParams, dealias: bool = False) -> ComplexField:
    """zeta * D^beta(|u|^{2 sigma} u), power computed pointwise in physical space."""
    _require_finite(u)
    g = u.grid
    nl = np.abs(u.values) ** (2.0 * p.sigma) * u.values
    nlh = g.multiplier(p.beta) * g.fft(nl)
    if dealias:
        nlh = nlh * g.two_thirds_mask()
    return ComplexField(g, p.zeta * g.ifft(nlh))


# --- criticality and identities ------------------------------------------------

def critical_sigma(beta: float) -> float:
    """Stability/criticality index (2-beta)/(1+beta)."""
    if beta <= -1.0:
        raise InvalidRegime(f"index undefined for beta <= -1, got {beta}")
    return (2.0 - beta) / (1.0 + beta)


def critical_exponent(beta: float, sigma: float) -> float:
    """Sobolev index s_c = (sigma-2+beta)/(2 sigma) left invariant by the scaling."""
    return (sigma - 2.0 + beta) / (2.0 * sigma)


def theta0(beta: float, sigma: float) -> float:
    """Mass-side constant of the stationary integral identities."""
    return ((sigma + 1.0) * (1.0 - beta) + 1.0) / (2.0 * (sigma + 1.0))


def pohozaev_residuals(phi: ComplexField, p: ModelParams, w: WaveParams):
    """Relative residuals of the stationary integral identities.

    c == 0: returns (r0, r1, rB) where r0 checks omega*F = theta0*zeta*||phi||^{2s+2},
    r1 checks lam*||D^{1-beta/2}phi||^2 = theta1*zeta*||phi||^{2s+2}, and rB is the
    paired identity common to both.  c != 0: r0 = r1 = -1 (not applicable) and rB
    checks omega*F + c*P + lam*||D^{1-beta/2}phi||^2 = zeta*||phi||^{2s+2}.
    """
    _require_finite(phi)
    g, uh = _field_spectrum(phi)
    a2 = np.abs(uh) ** 2
    F = g.L * np.sum(g.multiplier(-p.beta) * a2)
    grad = g.L * np.sum(g.multiplier(2.0 - p.beta) * a2)
    P = g.L * np.sum(g.k * g.multiplier(-p.beta) * a2)
    pnorm = lebesgue_power(phi, 2.0 * p.sigma + 2.0)
    if pnorm <= 0.0:
        raise ZeroProfile("identities undefined for the zero profile")
    rB = abs(w.omega * F + w.c * P + p.lam * grad - p.zeta * pnorm) / pnorm
    if w.c != 0.0:
        return (-1.0, -1.0, float(rB))
    th0 = theta0(p.beta, p.sigma)
    r0 = abs(w.omega * F - th0 * p.zeta * pnorm) / pnorm
    r1 = abs(p.lam * grad - (1.0 - th0) * p.zeta * pnorm) / pnorm
    return (float(r0), float(r1), float(rB))


def supercritical_bound_margin(r: float, beta: float, sigma: float) -> float:
    """Left side of the boundedness condition for scaled initial data r*Q.

    In the supercritical regime the two-inequality guarantee reduces, for
    u0 = r*Q, to r^{2 sigma} < 1 together with this quantity being < 1.
    """
    m = beta * (sigma + 1.0) + sigma
    return ((m / 2.0 - r ** (2.0 * sigma))
            * 2.0 * r ** (4.0 * sigma / (m - 2.0)) / (m - 2.0))


def scaled_profile_energy(r: float, p: ModelParams, EQ: float,
                          pnorm: Optional[float] = None) -> float:
    """E(r*Q) from E(Q) (or from ||Q||^{2s+2} at criticality, where E(Q)=0)."""
    m = p.beta * (p.sigma + 1.0) + p.sigma
    if abs(m - 2.0) > 1e-12:
        return (m / 2.0 - r ** (2.0 * p.sigma)) * 2.0 * r * r / (m - 2.0) * EQ
    if pnorm is None:
        raise ZeroProfile("critical case needs ||Q||^{2s+2} to scale the energy")
    return r * r / (2.0 * (p.sigma + 1.0)) * (m / 2.0 - r ** (2.0 * p.sigma)) * pnorm


def classify_global(u0: ComplexField, Q: ComplexField, p: ModelParams,
                    r: Optional[float] = None) -> Classification:
    """Global-boundedness guarantee and blow-up indicator for initial data u0.

    Q must be a converged ground-state profile for the same (beta, sigma).
    When the caller declares u0 = r*Q, the closed-form reductions are used;
    otherwise every functional is evaluated numerically.  The blow-up branch
    is an indicator only (the underlying argument is formal), stated for
    lam = zeta = 1.
    """
    if p.lam <= 0.0:
        raise InvalidRegime("classification requires lam > 0")
    sc = critical_sigma(p.beta)
    lo = max(0.0, -p.beta / (1.0 + p.beta))
    if p.sigma <= lo:
        raise InvalidRegime(f"sigma must exceed {lo} for beta={p.beta}")
    require_same_grid(u0, Q)
    _require_finite(u0)
    _require_finite(Q)

    if abs(p.sigma - sc) <= 1e-12 * max(1.0, sc):
        regime = Regime.CRITICAL
    elif p.sigma < sc:
        regime = Regime.SUBCRITICAL
    else:
        regime = Regime.SUPERCRITICAL

    pnormQ = lebesgue_power(Q, 2.0 * p.sigma + 2.0)
    if pnormQ <= 0.0:
        raise ZeroProfile("ground-state profile is identically zero")
    EQ = energy(Q, p)
    scaled_E = None
    if r is not None:
        scaled_E = scaled_profile_energy(r, p, EQ, pnormQ)

    if regime is Regime.SUBCRITICAL:
        return Classification(regime, True, False, scaled_E)

    if regime is Regime.CRITICAL:
        lam_pow = p.lam ** ((1.0 + p.beta) / (2.0 - p.beta))
        if r is not None:
            ok = r * r < lam_pow
        else:
            ok = mass(u0, p) < lam_pow * mass(Q, p)
        return Classification(regime, bool(ok), False, scaled_E)

    # supercritical: guarantee from the two-inequality smallness condition;
    # blow-up is indicated only when E < 0 or both inequalities reverse,
    # and it is an indicator, not a guarantee
    s = (p.beta * (p.sigma + 1.0) + p.sigma - 2.0) / 2.0
    mexp = ((1.0 + p.sigma) * (1.0 - p.beta) + 1.0) / 2.0
    if r is not None:
        margin = supercritical_bound_margin(r, p.beta, p.sigma)
        guarantee = r ** (2.0 * p.sigma) < 1.0 and margin < 1.0
        blowup = scaled_E < 0.0 or (r * r > 1.0 and margin > 1.0)
        return Classification(regime, bool(guarantee), bool(blowup), scaled_E)

    F0, FQ = mass(u0, p), mass(Q, p)
    G0 = np.sqrt(weighted_spectral_sum(u0, 2.0 - p.beta))
    GQ = np.sqrt(weighted_spectral_sum(Q, 2.0 - p.beta))
    E0 = energy(u0, p)
    lhs1 = G0 ** (2.0 * s) * F0 ** mexp
    rhs1 = GQ ** (2.0 * s) * FQ ** mexp
    if E0 > 0.0 and EQ > 0.0:
        lhs2 = E0 ** s * F0 ** mexp
        rhs2 = EQ ** s * FQ ** mexp
        guarantee = (lhs1 < p.lam * rhs1
                     and lhs2 < p.lam ** ((p.beta * (1.0 + p.sigma) + p.sigma) / 2.0) * rhs2)
        blowup = lhs1 > rhs1 and lhs2 > rhs2
    else:
        guarantee = False
        blowup = E0 < 0.0
    return Classification(regime, bool(guarantee), bool(blowup), scaled_E)


# --- embedding inequality -------------------------------------------------------

def gn_admissible(beta: float, q: float) -> bool:
    lo = max(0.0, -beta / (1.0 + beta))
    if q < lo:
        return False
    if beta > 1.0:
        return q <= (2.0 - beta) / (beta - 1.0)
    return np.isfinite(q)


def gn_optimal_constant(Q: ComplexField, p: ModelParams) -> float:
    """Sharp constant of the embedding inequality at q = sigma.

    Derived from the extremal property of the ground state: with
    theta1 = 1 - theta0,

        C^{-1} = theta0^{theta0/2} * theta1^{theta1/2} * ||Q||_{L^{2s+2}}^{sigma}.

    The norm power sigma (rather than 2 sigma + 2) is forced by requiring
    equality at u = Q; see gn_printed_constant for the uncorrected variant.
    """
    th0 = theta0(p.beta, p.sigma)
    th1 = 1.0 - th0
    pnorm = lebesgue_power(Q, 2.0 * p.sigma + 2.0)
    if pnorm <= 0.0:
        raise ZeroProfile("constant undefined for the zero profile")
    qnorm = pnorm ** (1.0 / (2.0 * p.sigma + 2.0))
    return 1.0 / (th0 ** (th0 / 2.0) * th1 ** (th1 / 2.0) * qnorm ** p.sigma)


def gn_printed_constant(Q: ComplexField, p: ModelParams) -> float:
    """Constant with the norm power 2 sigma + 2 as printed in the source
    derivation; dimensionally inconsistent with the equality case and kept
    only so the disagreement can be reported."""
    th0 = theta0(p.beta, p.sigma)
    th1 = 1.0 - th0
    pnorm = lebesgue_power(Q, 2.0 * p.sigma + 2.0)
    if pnorm <= 0.0:
        raise ZeroProfile("constant undefined for the zero profile")
    return 1.0 / (th0 ** (th0 / 2.0) * th1 ** (th1 / 2.0) * pnorm)


def gn_check(u: ComplexField, Q: ComplexField, p: ModelParams, q: float):
    """Both sides of the interpolation inequality
    ||u||_{L^{2q+2}} <= C F(u)^{1/2 - (beta + q/(q+1))/4} ||D^{1-beta/2}u||^{beta/2 + q/(2(q+1))}
    with the sharp constant formed at q = sigma from the ground state Q.
    """
    if not gn_admissible(p.beta, q):
        raise InadmissibleExponent(f"q={q} outside the admissible range for beta={p.beta}")
    require_same_grid(u, Q)
    _require_finite(u)
    lhs = lebesgue_power(u, 2.0 * q + 2.0) ** (1.0 / (2.0 * q + 2.0))
    F = mass(u, p)
    G = np.sqrt(weighted_spectral_sum(u, 2.0 - p.beta))
    if F == 0.0 or G == 0.0:
        return (float(lhs), 0.0)
    C = gn_optimal_constant(Q, p)
    a = 0.5 - 0.25 * (p.beta + q / (q + 1.0))
    b = 0.5 * p.beta + q / (2.0 * (q + 1.0))
    return (float(lhs), float(C * F ** a * G ** b))
