import numpy as np
import pytest
from scipy.integrate import quad

from fnls import (ComplexField, Grid, ModelParams, SolveOptions, StepConfig,
                  WaveParams, analytic_d2_zero_speed, lyapunov_d,
                  perturbation_run, scan_d, solve_standing_wave)
from fnls.stability import PerturbationVerdict, classify_chi_series


class TestLyapunovD:
    def test_sech_oracle(self, sech_pair):
        u, p = sech_pair
        # oracle: (1/4) * quadrature of |sqrt(2) sech|^4
        target = 0.25 * quad(lambda x: 4.0 / np.cosh(x) ** 4, -50, 50)[0]
        assert target == pytest.approx(4.0 / 3.0, abs=1e-12)
        assert lyapunov_d(u, 1.0) == pytest.approx(target, rel=1e-12)

    def test_zero_field(self):
        g = Grid(-5.0, 5.0, 64)
        assert lyapunov_d(ComplexField(g, np.zeros(64, complex)), 1.0) == 0.0

    def test_power_law_along_frequency_family(self):
        # derived scaling oracle: d(omega) ~ omega^e with
        # e = ((1-beta) sigma + 2 - beta)/(2 sigma)
        beta, sigma = 0.3, 1.0
        g = Grid(-400.0, 400.0, 2 ** 15)
        p = ModelParams(beta=beta, sigma=sigma)
        d1 = lyapunov_d(solve_standing_wave(p, 1.0, g,
                                            SolveOptions(tol=1e-12)).profile, sigma)
        d2 = lyapunov_d(solve_standing_wave(p, 2.0, g,
                                            SolveOptions(tol=1e-12)).profile, sigma)
        e = ((1.0 - beta) * sigma + 2.0 - beta) / (2.0 * sigma)
        assert d2 / d1 == pytest.approx(2.0 ** e, rel=1e-3)

    def test_beta0_family_matches_exact_solution(self):
        # closed form: d(omega) = (4/3) omega^{3/2} for beta=0, sigma=1
        g = Grid(-100.0, 100.0, 4096)
        p = ModelParams(beta=0.0, sigma=1.0)
        for om in (1.0, 2.0, 4.0):
            d = lyapunov_d(solve_standing_wave(p, om, g,
                                               SolveOptions(tol=1e-12)).profile, 1.0)
            assert d == pytest.approx(4.0 / 3.0 * om ** 1.5, rel=1e-6)


class TestAnalyticD2:
    def test_beta0_value(self):
        p = ModelParams(beta=0.0, sigma=1.0)
        # (4 * 1 / 16) * (16/3) = 4/3, omega-independent in this formula
        for om in (0.5, 1.0, 2.0):
            assert analytic_d2_zero_speed(p, om, 16.0 / 3.0) == pytest.approx(4.0 / 3.0)

    def test_vanishes_at_critical_sigma(self):
        p = ModelParams(beta=0.5, sigma=1.0)    # sigma == (2-beta)/(1+beta)
        assert analytic_d2_zero_speed(p, 1.3, 2.0) == 0.0

    def test_sign_tracks_criticality(self):
        assert analytic_d2_zero_speed(ModelParams(beta=0.8, sigma=1.0), 1.0, 2.0) < 0.0
        assert analytic_d2_zero_speed(ModelParams(beta=0.3, sigma=1.0), 1.0, 2.0) > 0.0
        assert analytic_d2_zero_speed(ModelParams(beta=0.1, sigma=1.5), 1.0, 2.0) > 0.0
        assert analytic_d2_zero_speed(ModelParams(beta=0.5, sigma=1.5), 1.0, 2.0) < 0.0


class TestScanD:
    def test_stable_scan_all_positive(self):
        g = Grid(-100.0, 100.0, 2048)
        scan = scan_d(ModelParams(beta=0.3, sigma=1.0), 1.0, 2.5, 8, g)
        assert scan.all_positive
        assert scan.omega_c is None
        assert not scan.failed
        assert len(scan.d2) == len(scan.omegas) - 2
        assert np.all(np.diff(scan.omegas) > 0)
        assert np.all(scan.d[np.isfinite(scan.d)] > 0)

    def test_sign_change_located(self):
        g = Grid(-100.0, 100.0, 2048)
        scan = scan_d(ModelParams(beta=0.8, sigma=1.0), 1.0, 3.0, 12, g)
        assert not scan.all_positive
        assert scan.omega_c is not None
        assert 0.3 < scan.omega_c < 1.2
        assert scan.omega_c_uncertainty == pytest.approx(np.diff(scan.omegas)[0])

    @pytest.mark.parametrize("beta,sigma", [(0.1, 1.5), (0.5, 1.5)])
    def test_zero_speed_signs_match_closed_form(self, beta, sigma):
        # scanned d'' at c=0 carries one sign along the whole branch, the one
        # the closed-form expression predicts
        g = Grid(-100.0, 100.0, 2048)
        p = ModelParams(beta=beta, sigma=sigma)
        scan = scan_d(p, 0.0, 2.5, 9, g)
        assert not scan.failed
        assert np.all(scan.d[np.isfinite(scan.d)] > 0)
        ana = analytic_d2_zero_speed(p, 1.0, 1.0)
        fin = np.isfinite(scan.d2)
        assert np.all(np.sign(scan.d2[fin]) == np.sign(ana))


class TestVerdicts:
    def test_series_classifier(self):
        up = np.linspace(1.0, 3.0, 50)
        assert classify_chi_series(up, False) == PerturbationVerdict.GROWTH
        osc = 1.0 + 0.8 * np.abs(np.sin(np.linspace(0, 6, 80)))
        assert classify_chi_series(osc, False) == PerturbationVerdict.BOUNDED
        flat = np.ones(30)
        assert classify_chi_series(flat, False) == PerturbationVerdict.BOUNDED
        assert classify_chi_series(up, True) == PerturbationVerdict.BLOW_UP

    def test_transient_excursion_is_not_growth(self):
        # rises past the band, returns, ends mid-fall: bounded oscillation
        t = np.linspace(0, 1, 100)
        chi = 1.0 + 1.2 * np.exp(-((t - 0.4) / 0.15) ** 2)
        chi[-1] = 1.6
        assert classify_chi_series(chi, False) == PerturbationVerdict.BOUNDED

    def test_unstable_profile_blows_up(self):
        g = Grid(-100.0, 100.0, 4096)
        p = ModelParams(beta=0.8, sigma=1.0)
        v = perturbation_run(p, WaveParams(1.0), 1.1,
                             StepConfig(T=2.0, M=800, mass_drift_cap=1e9), g,
                             SolveOptions(tol=1e-12))
        assert v.outcome == PerturbationVerdict.BLOW_UP
        assert v.blowup_time is not None and 0.0 < v.blowup_time < 2.0
        assert v.chi[-1] > v.chi[0]

    def test_damped_profile_stays_bounded(self):
        g = Grid(-100.0, 100.0, 2048)
        p = ModelParams(beta=0.4, sigma=1.0)
        v = perturbation_run(p, WaveParams(1.0), 0.9,
                             StepConfig(T=2.0, M=400), g,
                             SolveOptions(tol=1e-12))
        assert v.outcome == PerturbationVerdict.BOUNDED
        assert v.blowup_time is None
        assert np.all(v.chi <= 1.5 * v.chi[0])
        assert np.all(v.chi >= v.chi[0] / 1.5)
