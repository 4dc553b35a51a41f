"""Classical wave-optics intensities and mirror momentum."""

import math

import pytest
from hypothesis import given, strategies as st

from mzkick.classical_optics import (
    ClassicalBeam,
    classical_mirror_momentum,
    interferometer_intensities,
    plain_mirror_kick,
)
from mzkick.errors import ConstraintViolationError
from mzkick.photon_modes import BeamsplitterSpec


class TestPlainMirrorKick:
    def test_oblique_incidence(self):
        beam = ClassicalBeam(intensity=100.0, incidence_angle=math.radians(60.0))
        assert plain_mirror_kick(beam) == pytest.approx(100.0, abs=1e-12)

    def test_dark_beam(self):
        assert plain_mirror_kick(ClassicalBeam(0.0, 0.3)) == 0.0

    def test_grazing_incidence_limit(self):
        beam = ClassicalBeam(100.0, math.radians(89.999))
        assert plain_mirror_kick(beam) == pytest.approx(0.0, abs=1e-2)

    def test_rejects_negative_intensity(self):
        with pytest.raises(ConstraintViolationError):
            ClassicalBeam(-1.0, 0.3)

    def test_rejects_bad_angle(self):
        with pytest.raises(ConstraintViolationError):
            ClassicalBeam(1.0, math.pi / 2.0)


class TestInterferometerIntensities:
    def test_unbalanced_split(self):
        bs = BeamsplitterSpec.from_r_squared(0.75)
        i_a, i_b, i_d1, i_d2 = interferometer_intensities(100.0, bs)
        assert i_a == pytest.approx(75.0, abs=1e-12)
        assert i_b == pytest.approx(25.0, abs=1e-12)
        assert i_d1 == pytest.approx(75.0, abs=1e-12)
        assert i_d2 == pytest.approx(25.0, abs=1e-12)

    def test_balanced_dark_port(self):
        bs = BeamsplitterSpec.from_r_squared(0.5)
        assert interferometer_intensities(100.0, bs)[3] == pytest.approx(0.0, abs=1e-12)

    @given(st.floats(min_value=0.0, max_value=1e6), st.floats(min_value=0.01, max_value=0.99))
    def test_energy_conservation(self, intensity, r_squared):
        bs = BeamsplitterSpec.from_r_squared(r_squared)
        i_a, i_b, i_d1, i_d2 = interferometer_intensities(intensity, bs)
        scale = max(intensity, 1.0)
        assert abs(i_a + i_b - intensity) < 1e-12 * scale
        assert abs(i_d1 + i_d2 - intensity) < 1e-12 * scale


class TestClassicalMirrorMomentum:
    def test_headline_value(self):
        bs = BeamsplitterSpec.from_r_squared(0.75)
        got = classical_mirror_momentum(100.0, bs, math.radians(60.0))
        assert got == pytest.approx(-12.5, abs=1e-12)  # -2 t^2 I (r^2 - t^2) cos(alpha)

    def test_balanced_interferometer_is_neutral(self):
        bs = BeamsplitterSpec.from_r_squared(0.5)
        got = classical_mirror_momentum(100.0, bs, math.radians(60.0))
        assert got == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize("r_squared", [0.51, 0.6, 0.75, 0.9, 0.99])
    def test_reflective_splitters_push_inward(self, r_squared):
        bs = BeamsplitterSpec.from_r_squared(r_squared)
        assert classical_mirror_momentum(100.0, bs, math.radians(60.0)) < 0.0

    @given(
        st.floats(min_value=0.0, max_value=1e4),
        st.floats(min_value=0.01, max_value=0.99),
        st.floats(min_value=0.02, max_value=math.pi / 2.0 - 0.02),
    )
    def test_two_path_sum_equals_closed_form(self, intensity, r_squared, alpha):
        # inside + outside bookkeeping against -2 t^2 I (r^2 - t^2) cos(alpha)
        bs = BeamsplitterSpec.from_r_squared(r_squared)
        got = classical_mirror_momentum(intensity, bs, alpha)
        closed = -2.0 * bs.t**2 * intensity * (bs.r**2 - bs.t**2) * math.cos(alpha)
        assert abs(got - closed) < 1e-12 * max(intensity, 1.0)

    def test_rejects_bad_inputs(self):
        bs = BeamsplitterSpec.from_r_squared(0.75)
        with pytest.raises(ConstraintViolationError):
            classical_mirror_momentum(-1.0, bs, 0.3)
        with pytest.raises(ConstraintViolationError):
            classical_mirror_momentum(1.0, bs, 0.0)
