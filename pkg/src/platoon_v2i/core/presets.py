# ADR: 2026-10-01-delay-aware-platoon-toolkit
"""
Reference parameter sets.

Gain rows are stored in (K_v, K_vo, K_x, K_xo) order. The
radio preset carries the reference link budget with the
standstill distance derived from M*l = 15 m.

Usage:
    from platoon_v2i.core.presets import REFERENCE_GAINS, HANDOVER_RADIO

    gains = REFERENCE_GAINS["fig3c"]
"""

from __future__ import annotations

from platoon_v2i.core.types import (
    ControlGains,
    DisturbanceKind,
    DisturbanceProfile,
    DisturbanceSegment,
    PlatoonConfig,
    RadioParams,
)

# Headway and target velocity of the reference simulations
REFERENCE_HEADWAY = 0.2
REFERENCE_VELOCITY = 20.0
REFERENCE_M_TIMES_L = 15.0
REFERENCE_STANDSTILL = REFERENCE_M_TIMES_L / 9  # M = 9 in the handover preset

# (tau, gains) per corpus scenario
REFERENCE_DELAYS: dict[str, float] = {
    "fig3a": 0.1,
    "fig3b": 0.2,
    "fig3c": 0.3,
    "fig4": 0.3,
}

REFERENCE_GAINS: dict[str, ControlGains] = {
    "fig3a": ControlGains.from_table_row((0.75, 0.75, 0.273, 0.281)),
    "fig3b": ControlGains.from_table_row((0.75, 0.75, 0.213, 0.297)),
    "fig3c": ControlGains.from_table_row((0.75, 0.75, 0.249, 0.228)),
    "fig4": ControlGains.from_table_row((0.1, 0.2, 0.5, 0.1)),
}

# Control-gain comparison (tau = 0.1 s)
GAIN_STUDY_GAINS: dict[str, ControlGains] = {
    "fig5a": ControlGains.from_table_row((1.5, 1.5, 0.273, 0.281)),
    "fig5b": ControlGains.from_table_row((1.5, 1.5, 0.4, 0.4)),
}

SINUSOID_PROFILE = DisturbanceProfile(kind=DisturbanceKind.SINUSOID, window=(10.0, 30.0))

# 1 on [10, 13], 0 on (13, 17], -1 on (17, 20]
STEP_PROFILE_ZERO_GAP = DisturbanceProfile(
    kind=DisturbanceKind.PIECEWISE,
    window=(10.0, 20.0),
    segments=(
        DisturbanceSegment(10.0, 13.0, 1.0),
        DisturbanceSegment(13.0, 17.0, 0.0),
        DisturbanceSegment(17.0, 20.0, -1.0),
    ),
)

# 1 on [10, 15], -1 on (15, 20]
STEP_PROFILE = DisturbanceProfile(
    kind=DisturbanceKind.PIECEWISE,
    window=(10.0, 20.0),
    segments=(
        DisturbanceSegment(10.0, 15.0, 1.0),
        DisturbanceSegment(15.0, 20.0, -1.0),
    ),
)

NO_DISTURBANCE = DisturbanceProfile(kind=DisturbanceKind.NONE)


def reference_platoon(m_followers: int = 4, delay: float = 0.3) -> PlatoonConfig:
    """Platoon used by the reference simulations (h = 0.2 s, v_o = 20 m/s)."""
    return PlatoonConfig(
        m_followers=m_followers,
        headway=REFERENCE_HEADWAY,
        standstill=REFERENCE_STANDSTILL,
        target_velocity=REFERENCE_VELOCITY,
        delay=delay,
    )


HANDOVER_PLATOON = PlatoonConfig(
    m_followers=9,
    headway=0.2,
    standstill=REFERENCE_STANDSTILL,
    target_velocity=24.0,
    delay=0.3,
)

HANDOVER_RADIO = RadioParams(
    n_antennas=64,
    m_followers=9,
    tx_power_leader_dbm=20.0,
    bandwidth_hz=5e6,
    carrier_freq_hz=3.5e9,
    path_loss_exp=2.0,
    perp_distance_m=10.0,
    elev_diff_m=6.0,
    rate_threshold_bps=75e6,
    handover_freq_hz=1.0 / 30.0,
)

HANDOVER_CARRIER_FREQS: tuple[float, ...] = (3.5e9, 5.9e9)
HANDOVER_FREQS: tuple[float, ...] = (1.0 / 30.0, 1.0 / 20.0, 1.0 / 10.0)

# Reference maximum velocities (m/s) keyed by (f_c, f_handover)
REPORTED_VMAX: dict[tuple[float, float], float] = {
    (3.5e9, 1.0 / 30.0): 24.0,
    (3.5e9, 1.0 / 20.0): 35.0,
    (3.5e9, 1.0 / 10.0): 65.0,
    (5.9e9, 1.0 / 30.0): 14.0,
    (5.9e9, 1.0 / 20.0): 20.0,
    (5.9e9, 1.0 / 10.0): 38.0,
}
