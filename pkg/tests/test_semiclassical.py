import numpy as np
import pytest

from fnls import (ComplexField, Grid, ModelParams, SemiclassicalConfig,
                  StepConfig, build_initial, evolve, first_break_time,
                  semiclassical_evolve)
from fnls.errors import BoundaryNotDecayed, SeriesTooShort


def _config(beta=1.5, eps=0.1, T=0.1, M=100, phase="zero", amplitude="sech",
            cap=1e-2):
    return SemiclassicalConfig(
        epsilon=eps, p=ModelParams(beta=beta, sigma=1.0),
        cfg=StepConfig(T=T, M=M, mass_drift_cap=cap),
        amplitude=amplitude, phase=phase)


class TestBuildInitial:
    def test_zero_phase_gives_real_sech(self):
        g = Grid(-50.0, 50.0, 1024)
        u = build_initial(_config(), g)
        np.testing.assert_allclose(u.values, 1.0 / np.cosh(g.x), atol=1e-15)

    def test_phase_preset(self):
        g = Grid(-50.0, 50.0, 1024)
        u = build_initial(_config(phase="2sech"), g)
        A = 1.0 / np.cosh(g.x)
        np.testing.assert_allclose(u.values, A * np.exp(20j * A), atol=1e-14)

    def test_custom_zero_amplitude(self):
        g = Grid(-50.0, 50.0, 512)
        u = build_initial(_config(amplitude=lambda x: np.zeros_like(x)), g)
        assert np.all(u.values == 0.0)

    def test_rejects_undecayed_boundary(self):
        g = Grid(-5.0, 5.0, 256)
        with pytest.raises(BoundaryNotDecayed):
            build_initial(_config(), g)

    def test_epsilon_window(self):
        with pytest.raises(ValueError):
            _config(eps=0.7)
        with pytest.raises(ValueError):
            _config(eps=0.0)


class TestEvolveDelegation:
    def test_unit_epsilon_coefficients_reduce_to_plain_evolve(self):
        # the effective coefficients at eps=1 are bitwise the plain ones
        g = Grid(-50.0, 50.0, 512)
        p = ModelParams(beta=1.3, sigma=1.0)
        u0 = ComplexField(g, (1.0 / np.cosh(g.x)).astype(complex))
        cfg = StepConfig(T=0.05, M=10, mass_drift_cap=1e-2)
        plain = evolve(u0, p, cfg)
        scaled = evolve(u0, p, cfg, lambda_eff=p.lam * 1.0,
                        zeta_scale=1.0 ** (p.beta - 1.0), linf_every_step=True)
        assert np.array_equal(plain.final.values, scaled.final.values)

    def test_linf_sampled_every_step(self):
        g = Grid(-50.0, 50.0, 512)
        res = semiclassical_evolve(_config(T=0.02, M=20), g)
        assert len(res.diagnostics.linf) == 21
        assert res.outcome.completed

    def test_edge_guard_aborts(self):
        g = Grid(-50.0, 50.0, 512)
        bump = lambda x: np.exp(-((x - 47.0) / 0.6) ** 2)
        with pytest.raises(BoundaryNotDecayed):
            semiclassical_evolve(_config(T=0.02, M=10, amplitude=bump), g)


class TestFirstBreak:
    def test_monotone_decreasing_has_no_break(self):
        t = np.linspace(0, 1, 50)
        assert first_break_time(t, 2.0 - t) is None

    def test_synthetic_peak_located(self):
        t = np.linspace(0.0, 1.0, 101)
        v = np.ones(101)
        v[30:55] = 1.0 + np.bartlett(25)          # symmetric peak at sample 42
        assert first_break_time(t, v) == pytest.approx(t[42])

    def test_small_peak_below_rise_threshold_ignored(self):
        t = np.linspace(0.0, 1.0, 101)
        v = np.ones(101)
        v[40:45] = 1.1                             # only a 10% bump
        assert first_break_time(t, v) is None

    def test_series_too_short(self):
        with pytest.raises(SeriesTooShort):
            first_break_time(np.array([0.0, 1.0]), np.array([1.0, 2.0]))

    def test_rise_parameter(self):
        t = np.linspace(0.0, 1.0, 101)
        v = np.ones(101)
        v[40:45] = 1.1
        assert first_break_time(t, v, rise=0.05) is not None

class TestFocusingRun:
    def test_linf_flat_before_first_break(self):
        # pre-break the amplitude moves by well under 1%; the break then
        # lifts it far beyond the 20% detection rise
        g = Grid(-50.0, 50.0, 2 ** 11)
        sc = _config(beta=1.5, T=0.4, M=800)
        res = semiclassical_evolve(sc, g)
        lt, lv = res.diagnostics.linf_t, res.diagnostics.linf
        tb = first_break_time(lt, lv)
        assert tb is not None
        pre = lv[lt <= 0.8 * tb]
        assert np.min(pre) >= 0.99 * lv[0]
        assert np.max(lv) > 1.5 * lv[0]
