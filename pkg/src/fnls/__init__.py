"""Pseudospectral solver suite for the 1-d nonlocal nonlinear Schrödinger
equation i u_t - lam u_xx = zeta D^beta(|u|^{2 sigma} u): profile computation
by stabilized fixed-point iteration, fourth-order split-step evolution, and
stability / blow-up / semiclassical experiments with conserved-quantity
diagnostics."""

__version__ = "0.1.0"

from .model import (Classification, InvariantSnapshot, ModelParams, Regime,
                    WaveParams, chi_norm, classify_global, critical_sigma,
                    energy, gn_check, mass, momentum, nonlinear_term,
                    pohozaev_residuals)
from .petviashvili import (ConvergenceTrace, ProfileRecord, SolveOptions,
                           exact_profile_beta0, iterate_step, residual_RES,
                           solve_boosted, solve_standing_wave)
from .semiclassical import (SemiclassicalConfig, build_initial,
                            first_break_time, semiclassical_evolve)
from .spectral import (ComplexField, Grid, SpectralField, apply_D,
                       forward_transform, fractional_multiplier,
                       inverse_transform, make_grid, spatial_derivative)
from .stability import (DScanResult, PerturbationVerdict,
                        analytic_d2_zero_speed, lyapunov_d, perturbation_run,
                        scan_d)
from .stepper import (EvolutionResult, Outcome, StepConfig, evolve,
                      linear_substep, nonlinear_substep, step)

__all__ = [
    "Classification", "ComplexField", "ConvergenceTrace", "DScanResult",
    "EvolutionResult", "Grid", "InvariantSnapshot", "ModelParams", "Outcome",
    "PerturbationVerdict", "ProfileRecord", "Regime", "SemiclassicalConfig",
    "SolveOptions", "SpectralField", "StepConfig", "WaveParams",
    "analytic_d2_zero_speed", "apply_D", "build_initial", "chi_norm",
    "classify_global", "critical_sigma", "energy", "evolve",
    "exact_profile_beta0", "first_break_time", "forward_transform",
    "fractional_multiplier", "gn_check", "inverse_transform", "iterate_step",
    "linear_substep", "lyapunov_d", "make_grid", "mass", "momentum",
    "nonlinear_term", "nonlinear_substep", "perturbation_run",
    "pohozaev_residuals", "residual_RES", "scan_d", "semiclassical_evolve",
    "solve_boosted", "solve_standing_wave", "spatial_derivative", "step",
]
