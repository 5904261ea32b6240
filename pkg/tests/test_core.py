"""Pulse evaluation, action closed forms, and the wire format."""
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twolevel.core import (
    AmplitudeState,
    Cosine,
    GaussianApprox,
    HarmonicSum,
    Trajectory,
    TwoLevelAtom,
    action,
    probabilities,
    pulse_derivative,
    pulse_from_dict,
    pulse_from_json,
    pulse_to_dict,
    pulse_to_json,
    pulse_value,
)

from _oracles import action_by_quadrature, central_derivative


def action_scale(pulse) -> float:
    """Amplitude scale of the action integral, for relative comparisons."""
    if isinstance(pulse, Cosine):
        return abs(pulse.chi) / pulse.omega
    if isinstance(pulse, HarmonicSum):
        return sum(abs(c) / (k * pulse.omega) for k, c in pulse.coefficients)
    return abs(pulse.area)


class TestPulseValue:
    def test_cosine_at_zero(self):
        assert pulse_value(Cosine(chi=1.0, omega=1.0), 0.0) == -1.0

    def test_cosine_at_quarter_period(self):
        assert abs(pulse_value(Cosine(chi=1.0, omega=1.0), math.pi / 2)) < 1e-15

    def test_single_harmonic_reduces_to_cosine(self):
        hs = HarmonicSum(omega=2.0, coefficients=((1, 0.7),))
        assert pulse_value(hs, 0.3) == pulse_value(Cosine(chi=0.7, omega=2.0), 0.3)

    def test_single_harmonic_equivalence_on_dense_grid(self):
        hs = HarmonicSum(omega=2.0, coefficients=((1, 0.7),))
        cos = Cosine(chi=0.7, omega=2.0)
        t = np.linspace(-5.0, 15.0, 1000)
        np.testing.assert_array_equal(pulse_value(hs, t), pulse_value(cos, t))

    def test_cosine_bounded_by_chi(self):
        pulse = Cosine(chi=0.83, omega=1.7)
        t = np.linspace(0.0, 40.0, 5000)
        assert np.all(np.abs(pulse_value(pulse, t)) <= pulse.chi + 1e-15)

    def test_gaussian_peak_value(self):
        g = GaussianApprox(area=2.0, center=1.0, width=0.5)
        assert pulse_value(g, 1.0) == pytest.approx(2.0 / (0.5 * math.sqrt(2 * math.pi)))


class TestAction:
    def test_cosine_zero_at_half_period(self):
        pulse = Cosine(chi=0.9, omega=1.3)
        assert abs(action(pulse, math.pi / 1.3)) < 1e-15

    def test_normalized_cosine_reaches_half_pi(self):
        omega = 1.7
        pulse = Cosine(chi=0.5 * math.pi * omega, omega=omega)
        assert abs(action(pulse, math.pi / (2 * omega))) == pytest.approx(
            math.pi / 2, rel=1e-12
        )

    def test_gaussian_fully_contained(self):
        g = GaussianApprox(area=math.pi / 2, center=5.0, width=0.1)
        assert action(g, 10.0) == pytest.approx(math.pi / 2, abs=1e-12)

    @pytest.mark.parametrize(
        "pulse",
        [
            Cosine(chi=0.7, omega=1.3),
            Cosine(chi=-2.1, omega=0.4),
            HarmonicSum(omega=0.9, coefficients=((1, 0.8), (3, -0.3), (5, 0.12))),
            GaussianApprox(area=1.4, center=3.0, width=0.7),
        ],
    )
    def test_action_matches_quadrature(self, pulse):
        period = 2 * math.pi / pulse.omega if not isinstance(pulse, GaussianApprox) else 2.0
        scale = action_scale(pulse)
        for t in np.linspace(0.13, 10 * period, 9):
            expected = action_by_quadrature(pulse, float(t))
            assert abs(action(pulse, float(t)) - expected) <= 1e-9 * max(abs(expected), scale)

    @settings(max_examples=25, deadline=None)
    @given(
        chi=st.floats(-3.0, 3.0),
        omega=st.floats(0.2, 4.0),
        periods=st.floats(0.0, 10.0),
    )
    def test_cosine_action_quadrature_property(self, chi, omega, periods):
        pulse = Cosine(chi=chi, omega=omega)
        t = periods * 2 * math.pi / omega
        expected = action_by_quadrature(pulse, t)
        scale = max(action_scale(pulse), 1e-6)
        assert abs(action(pulse, t) - expected) <= 1e-9 * max(abs(expected), scale)


class TestPulseDerivative:
    def test_order_zero_is_value(self):
        pulse = HarmonicSum(omega=1.1, coefficients=((1, 0.5), (3, 0.2)))
        assert pulse_derivative(pulse, 0.37, 0) == pytest.approx(
            float(pulse_value(pulse, 0.37)), rel=1e-15
        )

    @pytest.mark.parametrize(
        "pulse",
        [
            Cosine(chi=1.2, omega=0.9),
            HarmonicSum(omega=0.8, coefficients=((1, 0.6), (3, 0.25), (5, -0.1))),
            GaussianApprox(area=1.3, center=2.0, width=0.6),
        ],
    )
    @pytest.mark.parametrize("order", [1, 2, 3, 4])
    def test_matches_finite_differences(self, pulse, order):
        t = 1.71
        expected = central_derivative(lambda x: float(pulse_value(pulse, x)), t, order, h=0.1)
        got = pulse_derivative(pulse, t, order)
        assert got == pytest.approx(expected, rel=1e-6, abs=1e-8)

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError):
            pulse_derivative(Cosine(chi=1.0, omega=1.0), 0.0, -1)


class TestProbabilities:
    def test_ground_state(self):
        assert probabilities(AmplitudeState(1.0 + 0.0j, 0.0 + 0.0j)) == (1.0, 0.0)

    def test_excited_state_phase_invariant(self):
        assert probabilities(AmplitudeState(0.0 + 0.0j, 1.0j)) == (0.0, 1.0)

    def test_equal_superposition(self):
        s = AmplitudeState(1 / math.sqrt(2) + 0.0j, 1j / math.sqrt(2))
        p1, p2 = probabilities(s)
        assert p1 == pytest.approx(0.5, rel=1e-15)
        assert p2 == pytest.approx(0.5, rel=1e-15)

    def test_norm_defect(self):
        assert AmplitudeState(1.0 + 0.0j, 0.0j).norm_defect == 0.0
        assert AmplitudeState(1.0 + 0.0j, 1.0 + 0.0j).norm_defect == pytest.approx(1.0)


class TestValidation:
    def test_cosine_rejects_nonpositive_omega(self):
        with pytest.raises(ValueError):
            Cosine(chi=1.0, omega=0.0)

    def test_harmonic_sum_rejects_even_harmonics(self):
        with pytest.raises(ValueError):
            HarmonicSum(omega=1.0, coefficients=((2, 0.5),))

    def test_harmonic_sum_rejects_duplicates(self):
        with pytest.raises(ValueError):
            HarmonicSum(omega=1.0, coefficients=((1, 0.5), (1, 0.2)))

    def test_harmonic_sum_rejects_empty(self):
        with pytest.raises(ValueError):
            HarmonicSum(omega=1.0, coefficients=())

    def test_gaussian_rejects_nonpositive_width(self):
        with pytest.raises(ValueError):
            GaussianApprox(area=1.0, center=0.0, width=0.0)

    def test_atom_rejects_negative_splitting(self):
        with pytest.raises(ValueError):
            TwoLevelAtom(omega21=-1e-6, dipole_projection=3.0)

    def test_atom_rejects_nonfinite_dipole(self):
        with pytest.raises(ValueError):
            TwoLevelAtom(omega21=0.0, dipole_projection=math.nan)


class TestTrajectory:
    def test_rejects_decreasing_times(self):
        with pytest.raises(ValueError):
            Trajectory(times=[0.0, 0.0], a1=[1.0, 1.0], a2=[0.0, 0.0])

    def test_rejects_length_mismatch(self):
        with pytest.raises(ValueError):
            Trajectory(times=[0.0, 1.0], a1=[1.0], a2=[0.0, 0.0])

    def test_states_round_trip(self):
        traj = Trajectory(times=[0.0, 1.0], a1=[1.0, 0.5], a2=[0.0, 0.5j])
        assert traj.state(0) == AmplitudeState(1.0 + 0.0j, 0.0 + 0.0j)
        assert len(traj.states) == 2
        assert traj.p2[1] == pytest.approx(0.25)

    def test_arrays_are_frozen(self):
        traj = Trajectory(times=[0.0, 1.0], a1=[1.0, 1.0], a2=[0.0, 0.0])
        with pytest.raises(ValueError):
            traj.times[0] = -1.0


class TestWireFormat:
    @pytest.mark.parametrize(
        "pulse",
        [
            Cosine(chi=1.5, omega=0.7),
            HarmonicSum(omega=1.1, coefficients=((1, 0.4), (5, -0.2))),
            GaussianApprox(area=math.pi / 2, center=4.0, width=0.25),
        ],
    )
    def test_round_trip(self, pulse):
        assert pulse_from_dict(pulse_to_dict(pulse)) == pulse
        assert pulse_from_json(pulse_to_json(pulse)) == pulse

    def test_tags(self):
        assert pulse_to_dict(Cosine(chi=1.0, omega=1.0))["type"] == "cosine"
        assert (
            pulse_to_dict(HarmonicSum(omega=1.0, coefficients=((1, 1.0),)))["type"]
            == "harmonic_sum"
        )
        assert pulse_to_dict(GaussianApprox(area=1.0, center=0.0, width=1.0))["type"] == "gaussian"

    def test_unknown_tag_rejected(self):
        with pytest.raises(ValueError):
            pulse_from_dict({"type": "square", "chi": 1.0})

    def test_missing_field_rejected(self):
        with pytest.raises(ValueError):
            pulse_from_dict({"type": "cosine", "chi": 1.0})

    def test_missing_tag_rejected(self):
        with pytest.raises(ValueError):
            pulse_from_dict({"chi": 1.0, "omega": 1.0})
