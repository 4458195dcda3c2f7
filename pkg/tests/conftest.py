import numpy as np
import pytest

from fnls import ComplexField, Grid, ModelParams, SolveOptions, solve_standing_wave


@pytest.fixture(scope="session")
def grid50():
    return Grid(-50.0, 50.0, 4096)


@pytest.fixture(scope="session")
def sech_pair(grid50):
    """(field, params): u = sqrt(2) sech(x) with the local cubic model."""
    u = ComplexField(grid50, (np.sqrt(2.0) / np.cosh(grid50.x)).astype(complex))
    return u, ModelParams(beta=0.0, sigma=1.0)


@pytest.fixture(scope="session")
def profile_beta04(grid50):
    """Converged standing-wave profile at beta=0.4, sigma=1, omega=1."""
    p = ModelParams(beta=0.4, sigma=1.0)
    rec = solve_standing_wave(p, 1.0, grid50, SolveOptions(tol=1e-13))
    return rec, p


@pytest.fixture(scope="session")
def profile_beta04_wide():
    """Same profile on a wide mesh; its identity residuals sit near 5e-4,
    small enough for the sharp-constant equality check."""
    p = ModelParams(beta=0.4, sigma=1.0)
    g = Grid(-200.0, 200.0, 2 ** 14)
    rec = solve_standing_wave(p, 1.0, g, SolveOptions(tol=1e-13))
    return rec, p


def rng(seed=0):
    return np.random.default_rng(seed)
