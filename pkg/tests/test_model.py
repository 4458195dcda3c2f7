import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.integrate import quad

from fnls import (ComplexField, Grid, ModelParams, Regime, WaveParams,
                  chi_norm, classify_global, critical_sigma, energy, gn_check,
                  mass, momentum, nonlinear_term, pohozaev_residuals)
from fnls.errors import (InadmissibleExponent, InvalidRegime, MismatchedGrids,
                         ZeroProfile)
from fnls.model import (InvariantSnapshot, critical_exponent, fmt15,
                        gn_printed_constant, lebesgue_power,
                        supercritical_bound_margin, theta0,
                        weighted_spectral_sum)


class TestParams:
    def test_validation(self):
        with pytest.raises(InvalidRegime):
            ModelParams(lam=0.0)
        with pytest.raises(InvalidRegime):
            ModelParams(zeta=0.5)
        with pytest.raises(InvalidRegime):
            ModelParams(sigma=-1.0)
        with pytest.raises(InvalidRegime):
            ModelParams(beta=2.0)
        with pytest.raises(InvalidRegime):
            WaveParams(omega=0.0)

    def test_snapshot_csv_row_is_15_digits(self):
        row = InvariantSnapshot(t=1.0 / 3.0, F=4.0, E=-2.0 / 3.0, P=0.0,
                                chi=1.0, linf=2.0, deltaF=0.0)
        assert row.csv_row() == ("0.333333333333333,4,-0.666666666666667,"
                                 "0,1,2,0")


class TestConservedFunctionals:
    def test_sech_closed_forms_match_independent_quadrature(self, sech_pair):
        u, p = sech_pair
        # oracle: adaptive quadrature of the continuum integrands
        F_quad = quad(lambda x: 2.0 / np.cosh(x) ** 2, -50, 50)[0]
        p4_quad = quad(lambda x: 4.0 / np.cosh(x) ** 4, -50, 50)[0]
        grad_quad = quad(lambda x: 2.0 * np.tanh(x) ** 2 / np.cosh(x) ** 2,
                         -50, 50)[0]
        assert F_quad == pytest.approx(4.0, abs=1e-12)
        assert p4_quad == pytest.approx(16.0 / 3.0, abs=1e-12)
        assert grad_quad == pytest.approx(4.0 / 3.0, abs=1e-12)

        assert mass(u, p) == pytest.approx(F_quad, rel=1e-12)
        assert lebesgue_power(u, 4.0) == pytest.approx(p4_quad, rel=1e-12)
        assert energy(u, p) == pytest.approx(
            0.5 * (grad_quad - 0.5 * p4_quad), rel=1e-10)
        assert chi_norm(u, p) == pytest.approx(
            np.sqrt(F_quad + grad_quad), rel=1e-10)

    def test_momentum_of_real_field_vanishes(self, sech_pair):
        u, p = sech_pair
        assert momentum(u, p) == 0.0

    def test_gauge_invariance(self, sech_pair):
        u, p = sech_pair
        r = np.random.default_rng(5)
        base = (mass(u, p), energy(u, p), momentum(u, p), chi_norm(u, p))
        for theta in r.uniform(0.0, 2.0 * np.pi, size=100):
            v = ComplexField(u.grid, np.exp(1j * theta) * u.values)
            got = (mass(v, p), energy(v, p), momentum(v, p), chi_norm(v, p))
            np.testing.assert_allclose(got, base, rtol=1e-13, atol=1e-13)

    def test_translation_invariance(self, profile_beta04):
        rec, p = profile_beta04
        u = rec.profile
        shifted = ComplexField(u.grid, np.roll(u.values, 137))
        assert mass(shifted, p) == pytest.approx(mass(u, p), rel=1e-13)
        assert energy(shifted, p) == pytest.approx(energy(u, p), rel=1e-12)
        assert momentum(shifted, p) == pytest.approx(momentum(u, p), abs=1e-13)

    def test_scaling_covariance_of_critical_norm(self):
        # tau-rescaled copies share the H^{s_c} seminorm; both live on the
        # same interval so the comparison is a genuine two-discretization one,
        # and the defect shrinks under joint (domain, mesh) refinement
        beta, sigma = 1.2, 1.0
        sc = critical_exponent(beta, sigma)
        tau = 2.0
        diffs = []
        for L, N in ((100.0, 4096), (400.0, 16384)):
            g = Grid(-L, L, N)
            with np.errstate(over="ignore"):
                u1 = ComplexField(g, (1 / np.cosh(g.x)).astype(complex))
                u2 = ComplexField(
                    g, (tau ** ((2 - beta) / (2 * sigma)) / np.cosh(tau * g.x)
                        ).astype(complex))
            n1 = np.sqrt(weighted_spectral_sum(u1, 2.0 * sc))
            n2 = np.sqrt(weighted_spectral_sum(u2, 2.0 * sc))
            diffs.append(abs(n1 - n2) / n1)
        assert diffs[1] < diffs[0]
        assert diffs[1] < 1e-3


class TestNonlinearTerm:
    def test_zero_field(self):
        g = Grid(-5.0, 5.0, 32)
        p = ModelParams(beta=0.7, sigma=1.0)
        out = nonlinear_term(ComplexField(g, np.zeros(32, complex)), p)
        assert np.all(out.values == 0.0)

    def test_local_cubic_case(self, sech_pair):
        u, p = sech_pair
        out = nonlinear_term(u, p)
        np.testing.assert_allclose(out.values, u.values ** 3, atol=1e-12)

    def test_matches_brute_force_triple_convolution(self):
        # oracle: N(u)^_m = sum_{m1,m2} c_{m1} c_{m2} conj(c_{(m1+m2-m) mod N})
        # in index space, the exact circular convolution the grid computes
        N = 16
        g = Grid(-2.0, 6.0, N)
        r = np.random.default_rng(9)
        u = r.standard_normal(N) + 1j * r.standard_normal(N)
        c = np.fft.fft(u) / N
        conv = np.zeros(N, dtype=complex)
        for m in range(N):
            for m1 in range(N):
                for m2 in range(N):
                    conv[m] += c[m1] * c[m2] * np.conj(c[(m1 + m2 - m) % N])
        for beta in (0.0, 0.6):
            p = ModelParams(beta=beta, sigma=1.0)
            out = nonlinear_term(ComplexField(g, u), p)
            expected = np.fft.ifft(g.multiplier(beta) * conv * N)
            np.testing.assert_allclose(out.values, expected, atol=1e-11)

    def test_single_mode(self):
        N = 16
        g = Grid(0.0, 2.0 * np.pi, N)
        u = np.exp(1j * g.x)
        p = ModelParams(beta=0.4, sigma=1.0)
        out = nonlinear_term(ComplexField(g, u), p)
        # |u|^2 u = u for a unit mode; D^beta scales mode 1 by 1^0.4 = 1
        np.testing.assert_allclose(out.values, u, atol=1e-13)


class TestCriticalitySigma:
    def test_values(self):
        assert critical_sigma(0.0) == 2.0
        assert critical_sigma(0.5) == 1.0
        assert critical_sigma(1.0) == 0.5
        with pytest.raises(InvalidRegime):
            critical_sigma(-1.0)


class TestPohozaev:
    def test_sech_identities(self, sech_pair):
        u, p = sech_pair
        # theta0 = 3/4 at beta=0, sigma=1: omega F = 4 and (3/4)(16/3) = 4
        assert theta0(0.0, 1.0) == pytest.approx(0.75)
        r0, r1, rB = pohozaev_residuals(u, p, WaveParams(1.0, 0.0))
        assert r0 <= 1e-12
        assert r1 <= 1e-12
        assert rB <= 1e-12

    def test_converged_profile_residuals(self, profile_beta04):
        rec, p = profile_beta04
        r0, r1, rB = rec.pohozaev
        # rB is exact for the discrete fixed point; the split identities carry
        # the domain-truncation defect of the singular-quadrature cell
        assert rB <= 1e-11
        assert r0 == pytest.approx(r1, rel=1e-6)
        assert r0 < 5e-3

    def test_boosted_markers(self, sech_pair):
        u, p = sech_pair
        r0, r1, rB = pohozaev_residuals(u, p, WaveParams(1.0, 0.5))
        assert r0 == -1.0 and r1 == -1.0
        assert rB >= 0.0

    def test_zero_profile_rejected(self):
        g = Grid(-5.0, 5.0, 32)
        with pytest.raises(ZeroProfile):
            pohozaev_residuals(ComplexField(g, np.zeros(32, complex)),
                               ModelParams(), WaveParams(1.0))


class TestClassifyGlobal:
    def test_supercritical_margin_value(self):
        # frozen from the closed form: ((m/2 - r^2) * 2 r^{4/(m-2)} / (m-2))
        assert supercritical_bound_margin(0.9, 0.8, 1.0) == pytest.approx(
            0.8091423, abs=1e-6)

    def test_scaled_profile_guarantee_and_gap(self, grid50):
        from fnls import SolveOptions, solve_standing_wave
        p = ModelParams(beta=0.8, sigma=1.0)
        Q = solve_standing_wave(p, 1.0, grid50, SolveOptions(tol=1e-12)).profile
        c = classify_global(Q, Q, p, r=0.9)
        assert c.regime is Regime.SUPERCRITICAL
        assert c.bounded_guarantee and not c.blowup_indicated
        c = classify_global(Q, Q, p, r=1.1)
        assert not c.bounded_guarantee and not c.blowup_indicated
        assert c.scaled_energy is not None and c.scaled_energy >= 0.0

    def test_subcritical_is_unconditional(self, profile_beta04):
        rec, p = profile_beta04
        u0 = ComplexField(rec.profile.grid, 3.0 * rec.profile.values)
        c = classify_global(u0, rec.profile, p)
        assert c.regime is Regime.SUBCRITICAL
        assert c.bounded_guarantee

    def test_critical_threshold_is_r_squared(self, grid50):
        from fnls import SolveOptions, solve_standing_wave
        p = ModelParams(beta=0.5, sigma=1.0)
        rec = solve_standing_wave(p, 1.0, grid50, SolveOptions(tol=1e-12))
        for r, expect in ((0.5, True), (0.9, True), (1.0, False), (1.1, False)):
            c = classify_global(rec.profile, rec.profile, p, r=r)
            assert c.regime is Regime.CRITICAL
            assert c.bounded_guarantee is expect

    def test_grid_mismatch_and_regime_errors(self, profile_beta04):
        rec, p = profile_beta04
        other = Grid(-10.0, 10.0, 64)
        with pytest.raises(MismatchedGrids):
            classify_global(ComplexField(other, np.ones(64, complex)),
                            rec.profile, p)
        with pytest.raises(InvalidRegime):
            classify_global(rec.profile, rec.profile,
                            ModelParams(beta=-0.6, sigma=0.5))


class TestEmbeddingInequality:
    def test_equality_at_ground_state(self, profile_beta04_wide):
        # the ratio defect is quadratic in the profile's identity residual,
        # so the wide mesh (residual ~5e-4) reaches the 1e-6 band
        rec, p = profile_beta04_wide
        lhs, rhs = gn_check(rec.profile, rec.profile, p, p.sigma)
        assert lhs / rhs == pytest.approx(1.0, abs=1e-6)

    def test_printed_constant_disagrees(self, profile_beta04):
        # the as-printed norm power (2 sigma + 2) does not reproduce the
        # equality case; keep the discrepancy visible
        from fnls.model import gn_optimal_constant
        rec, p = profile_beta04
        assert gn_printed_constant(rec.profile, p) != pytest.approx(
            gn_optimal_constant(rec.profile, p), rel=1e-3)

    def test_holds_on_random_bumps(self, profile_beta04):
        rec, p = profile_beta04
        g = rec.profile.grid
        r = np.random.default_rng(23)
        for _ in range(100):
            vals = ((r.standard_normal(g.N) + 1j * r.standard_normal(g.N))
                    * np.exp(-g.x ** 2 / r.uniform(5.0, 60.0)))
            lhs, rhs = gn_check(ComplexField(g, vals), rec.profile, p, p.sigma)
            assert lhs <= rhs * (1.0 + 1e-8)

    def test_zero_field(self, profile_beta04):
        rec, p = profile_beta04
        z = ComplexField(rec.profile.grid,
                         np.zeros(rec.profile.grid.N, complex))
        lhs, rhs = gn_check(z, rec.profile, p, p.sigma)
        assert lhs == 0.0 and rhs == 0.0

    def test_inadmissible_exponents(self, profile_beta04):
        rec, _ = profile_beta04
        with pytest.raises(InadmissibleExponent):
            gn_check(rec.profile, rec.profile,
                     ModelParams(beta=1.2, sigma=1.0), 5.0)
        with pytest.raises(InadmissibleExponent):
            gn_check(rec.profile, rec.profile,
                     ModelParams(beta=-0.4, sigma=1.0), 0.5)


@settings(max_examples=20, deadline=None)
@given(st.floats(0.1, 3.0), st.floats(-0.9, 1.9))
def test_theta_matches_branch_scaling_exponent(sigma, beta):
    # mass-side weight matches the d(omega) power law of the branch:
    # theta0 = e * sigma/(sigma+1), an independent consistency check
    e = ((1.0 - beta) * sigma + 2.0 - beta) / (2.0 * sigma)
    assert theta0(beta, sigma) == pytest.approx(e * sigma / (sigma + 1.0),
                                                rel=1e-12, abs=1e-12)


def test_fmt15_examples():
    assert fmt15(4.0) == "4"
    assert fmt15(1.0 / 3.0) == "0.333333333333333"
