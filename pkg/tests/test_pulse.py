import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ccars.errors import InvalidParameterError
from ccars.pulse import (
    ChirpSchedule,
    PulseParams,
    Role,
    chirped_duration,
    envelope_at,
    instantaneous_chirp,
    ridge_argmax,
    spectral_from_temporal,
    temporal_chirp,
    wigner_grid,
    wigner_value,
)

tau0s = st.floats(0.1, 100.0)
chirps = st.floats(-1e4, 1e4)


class TestChirpRelations:
    def test_zero_chirp(self):
        assert temporal_chirp(0.0, 10.0) == 0.0
        assert chirped_duration(0.0, 10.0) == 10.0

    @pytest.mark.parametrize("tau0", [0.5, 3.0, 10.0, 25.0])
    def test_symmetry_point(self, tau0):
        assert temporal_chirp(tau0**2, tau0) == pytest.approx(1 / (2 * tau0**2), rel=1e-14)
        assert chirped_duration(tau0**2, tau0) == pytest.approx(tau0 * math.sqrt(2), rel=1e-14)

    def test_symmetry_point_is_maximum(self):
        tau0 = 10.0
        grid = np.linspace(0, 1000, 100001)
        vals = [temporal_chirp(a, tau0) for a in grid]
        assert grid[int(np.argmax(vals))] == pytest.approx(tau0**2, abs=0.02)

    def test_fig4_operating_point(self):
        assert temporal_chirp(-750.0, 10.0) == pytest.approx(-750 / 572500, rel=1e-15)
        assert temporal_chirp(-750.0, 10.0) == pytest.approx(-1.31004e-3, rel=1e-5)
        assert chirped_duration(-750.0, 10.0) == pytest.approx(75.66373, rel=1e-6)

    @pytest.mark.parametrize("bad", [0.0, -1.0])
    def test_bad_tau0(self, bad):
        with pytest.raises(InvalidParameterError):
            temporal_chirp(1.0, bad)
        with pytest.raises(InvalidParameterError):
            chirped_duration(1.0, bad)

    @given(chirps, tau0s)
    def test_identity(self, a, tau0):
        alpha = temporal_chirp(a, tau0)
        tau = chirped_duration(a, tau0)
        assert alpha * tau**2 == pytest.approx(a / tau0**2, rel=1e-12, abs=1e-300)
        assert tau >= tau0

    @given(st.floats(-1.0, 1.0), st.floats(0.1, 50.0))
    def test_inverse(self, alpha, tau):
        a_sp, tau0 = spectral_from_temporal(alpha, tau)
        assert temporal_chirp(a_sp, tau0) == pytest.approx(alpha, rel=1e-12, abs=1e-15)
        assert chirped_duration(a_sp, tau0) == pytest.approx(tau, rel=1e-12)


class TestEnvelope:
    def test_transform_limited_peak(self):
        p = PulseParams(Role.PUMP, 4.0, 2.5, 10.0, 0.0, 30.0)
        assert envelope_at(p, 30.0) == 2.5

    def test_chirped_peak(self):
        p = PulseParams(Role.PUMP, 4.0, 1.0, 10.0, -750.0, 0.0)
        assert envelope_at(p, 0.0) == pytest.approx(57.25**-0.25, rel=1e-14)
        assert envelope_at(p, 0.0) == pytest.approx(0.363543, rel=1e-5)

    def test_tail_and_symmetry(self):
        p = PulseParams(Role.STOKES, 3.0, 1.0, 10.0, 200.0, 50.0)
        assert envelope_at(p, 50 + 10 * p.tau) < 1e-21
        t = np.linspace(0, 40, 17)
        np.testing.assert_array_equal(envelope_at(p, 50 + t), envelope_at(p, 50 - t))

    @pytest.mark.parametrize("a", [0.0, 50.0, -750.0, 3000.0])
    def test_energy_independent_of_chirp(self, a):
        p = PulseParams(Role.PUMP, 4.0, 1.3, 10.0, a, 0.0)
        t = np.linspace(-12 * p.tau, 12 * p.tau, 200001)
        energy = np.trapezoid(envelope_at(p, t) ** 2, t)
        assert energy == pytest.approx(1.3**2 * 10.0 * math.sqrt(math.pi), rel=1e-9)

    def test_antistokes_must_start_empty(self):
        PulseParams(Role.ANTISTOKES, 5.0, 0.0, 10.0)
        with pytest.raises(InvalidParameterError):
            PulseParams(Role.ANTISTOKES, 5.0, 0.1, 10.0)


class TestSchedule:
    def setup_method(self):
        self.s = ChirpSchedule("ccars", -750.0, 10.0, t_center=100.0)
        self.a = temporal_chirp(-750.0, 10.0)

    def test_ccars_pump_flips(self):
        eps = 1e-9
        assert instantaneous_chirp(self.s, "pump", 100 - eps) == -self.a
        assert instantaneous_chirp(self.s, "pump", 100 + eps) == self.a

    def test_switch_point_is_left_branch(self):
        assert instantaneous_chirp(self.s, "pump", 100.0) == -self.a
        assert instantaneous_chirp(self.s, "pump", 100.0, side="right") == self.a

    def test_ccars_probe(self):
        assert instantaneous_chirp(self.s, "probe", 100 + 1e-9) == 0.0
        assert instantaneous_chirp(self.s, "probe", 50.0) == 2 * self.a
        assert instantaneous_chirp(self.s, "stokes", 500.0) == self.a

    def test_constant_opposite_probe(self):
        s = ChirpSchedule("constant_opposite", -750.0, 10.0, 100.0)
        t = np.linspace(0, 200, 11)
        np.testing.assert_array_equal(instantaneous_chirp(s, Role.PROBE, t), 2 * self.a)

    def test_antistokes_rejected(self):
        with pytest.raises(InvalidParameterError):
            instantaneous_chirp(self.s, "antistokes", 0.0)

    @pytest.mark.parametrize("mode", ["ccars", "constant_opposite", "constant", "custom"])
    def test_probe_condition_everywhere(self, mode):
        kw = {}
        if mode == "custom":
            kw = dict(stokes_fn=lambda t: 1e-3 * np.sin(t), pump_fn=lambda t: 2e-3 * np.cos(t))
        s = ChirpSchedule(mode, 300.0, 10.0, 40.0, **kw)
        t = np.linspace(-100, 200, 3001)
        for side in ("left", "right"):
            pr = instantaneous_chirp(s, "probe", t, side)
            assert np.array_equal(pr, s.stokes(t, side) - s.pump(t, side))

    @pytest.mark.parametrize("mode", ["ccars", "constant_opposite", "constant"])
    def test_pump_stokes_magnitudes_constant(self, mode):
        s = ChirpSchedule(mode, 300.0, 10.0, 40.0)
        t = np.linspace(-100, 200, 301)
        for role in ("pump", "stokes"):
            mags = np.abs(instantaneous_chirp(s, role, t))
            assert np.all(mags == mags[0])


class TestWigner:
    def test_peak_value(self):
        p = PulseParams.from_chirped(Role.STOKES, 3.0, 0.7, 3.0, -0.2, 7.5)
        expected = 3.0 * math.sqrt(math.pi) / 2 * 0.7 * (1 + math.exp(-4 * 9.0 * 9.0))
        assert wigner_value(p, 7.5, 3.0) == pytest.approx(expected, rel=1e-14)

    def test_unchirped_ridge_is_flat(self):
        p = PulseParams(Role.PUMP, 4.0, 1.0, 3.0, 0.0, 7.5)
        om = np.linspace(0, 8, 801)
        g = wigner_grid(p, np.linspace(0, 15, 31), om)
        np.testing.assert_allclose(ridge_argmax(g, om), 4.0, atol=1e-12)

    def test_real(self):
        p = PulseParams(Role.PUMP, 4.0, 1.0, 3.0, 2.0, 7.5)
        assert np.isrealobj(wigner_grid(p, np.linspace(0, 15, 5), np.linspace(-5, 5, 7)))

    @settings(max_examples=40, deadline=None)
    @given(st.floats(2.0, 6.0), st.floats(-0.3, 0.3), st.floats(2.0, 5.0))
    def test_ridge_tracks_instantaneous_frequency(self, omega_q, alpha, tau):
        p = PulseParams.from_chirped(Role.STOKES, omega_q, 1.0, tau, alpha, 0.0)
        times = np.linspace(-tau, tau, 9)
        om = np.linspace(0.0, 10.0, 5001)
        arg = ridge_argmax(wigner_grid(p, times, om), om)
        step = om[1] - om[0]
        assert np.all(np.abs(arg - (omega_q + alpha * times)) <= step)

    def test_fig3_stokes_ridge(self):
        p = PulseParams.from_chirped(Role.STOKES, 3.0, 1.0, 3.0, -0.2, 7.5)
        s = ChirpSchedule.from_temporal("ccars", -0.2, 3.0, 7.5)
        times = np.linspace(0, 15, 151)
        om = np.linspace(0, 8, 801)
        arg = ridge_argmax(wigner_grid(p, times, om, s), om)
        slope, icpt = np.polyfit(times - 7.5, arg, 1)
        assert slope == pytest.approx(-0.2, rel=0.02)
        assert icpt == pytest.approx(3.0, abs=om[1] - om[0])
