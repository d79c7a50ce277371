# ADR: 2026-10-01-delay-aware-platoon-toolkit
"""Tests for reference parameter sets."""

import pytest

from platoon_v2i.core.presets import (
    REFERENCE_STANDSTILL,
    STEP_PROFILE,
    STEP_PROFILE_ZERO_GAP,
    HANDOVER_PLATOON,
    REPORTED_VMAX,
    REFERENCE_DELAYS,
    REFERENCE_GAINS,
    reference_platoon,
)


class TestGainTables:
    """Gain rows match the reference (K_v, K_vo, K_x, K_xo) values."""

    @pytest.mark.parametrize(
        "key,row,tau",
        [
            ("fig3a", (0.75, 0.75, 0.273, 0.281), 0.1),
            ("fig3b", (0.75, 0.75, 0.213, 0.297), 0.2),
            ("fig3c", (0.75, 0.75, 0.249, 0.228), 0.3),
            ("fig4", (0.1, 0.2, 0.5, 0.1), 0.3),
        ],
    )
    def test_rows(self, key, row, tau):
        assert REFERENCE_GAINS[key].as_table_row() == row
        assert REFERENCE_DELAYS[key] == tau


class TestGeometry:
    """Test platoon presets."""

    def test_standstill_from_product(self):
        """M*l = 15 m with M = 9."""
        assert 9 * REFERENCE_STANDSTILL == pytest.approx(15.0)

    def test_reference_platoon(self):
        pc = reference_platoon(m_followers=6, delay=0.1)
        assert (pc.m_followers, pc.headway, pc.target_velocity, pc.delay) == (6, 0.2, 20.0, 0.1)

    def test_handover_table_platoon(self):
        assert HANDOVER_PLATOON.m_followers == 9
        assert HANDOVER_PLATOON.target_velocity == 24.0

    def test_reported_cells(self):
        """Two bands times three handover frequencies."""
        assert len(REPORTED_VMAX) == 6


class TestStepProfiles:
    """Test the piecewise disturbance presets."""

    def test_zero_gap_profile_segments(self):
        values = [s.acceleration for s in STEP_PROFILE_ZERO_GAP.segments]
        assert values == [1.0, 0.0, -1.0]
        assert STEP_PROFILE_ZERO_GAP.window == (10.0, 20.0)

    def test_step_profile_segments(self):
        assert [(s.start, s.end) for s in STEP_PROFILE.segments] == [(10.0, 15.0), (15.0, 20.0)]
