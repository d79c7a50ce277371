# ADR: 2026-10-01-delay-aware-platoon-toolkit
"""
Shared domain types for the platoon toolkit.

Every type here is an immutable value object: validation happens once in
``__post_init__`` and derived fields are computed on access. No physics lives
in this module beyond the (lambda, eta) reduction of the control gains.

Usage:
    from platoon_v2i.core.types import ControlGains, PlatoonConfig

    gains = ControlGains(k_x=0.249, k_v=0.75, k_vo=0.75, k_xo=0.228)
    le = gains.lambda_eta(headway=0.2)
    print(le.lam, le.eta)  # 0.477 1.5498
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import TYPE_CHECKING

import numpy as np

from platoon_v2i.core.units import dbm_to_watts, thermal_noise_dbm
from platoon_v2i.exceptions import InsufficientAntennasError, ValidationError

if TYPE_CHECKING:
    import pandas as pd

SPEED_OF_LIGHT = 3.0e8  # m/s, as used for the free-space beta constant


def _require_positive(name: str, value: float) -> None:
    if not (math.isfinite(value) and value > 0):
        raise ValidationError(f"{name} must be a finite positive number, got {value}")


def _require_non_negative(name: str, value: float) -> None:
    if not (math.isfinite(value) and value >= 0):
        raise ValidationError(f"{name} must be finite and non-negative, got {value}")


@dataclass(frozen=True)
class ControlGains:
    """The four positive gains of the RSU control law.

    Attributes:
        k_x: Gap gain towards the preceding vehicle (1/s^2)
        k_v: Relative-velocity gain towards the preceding vehicle (1/s)
        k_vo: Gain on the deviation from the target velocity (1/s)
        k_xo: Gap gain towards the leader (1/s^2)
    """

    k_x: float
    k_v: float
    k_vo: float
    k_xo: float

    def __post_init__(self) -> None:
        for name in ("k_x", "k_v", "k_vo", "k_xo"):
            _require_positive(name, getattr(self, name))

    def lambda_eta(self, headway: float) -> LambdaEta:
        """Shortcut for ``derive_lambda_eta(self, headway)``."""
        return derive_lambda_eta(self, headway)

    def as_table_row(self) -> tuple[float, float, float, float]:
        """Gains in reference order (K_v, K_vo, K_x, K_xo)."""
        return (self.k_v, self.k_vo, self.k_x, self.k_xo)

    @classmethod
    def from_table_row(cls, row: Sequence[float]) -> ControlGains:
        """Build gains from a (K_v, K_vo, K_x, K_xo) sequence."""
        if len(row) != 4:
            raise ValidationError(f"Expected 4 gains (K_v, K_vo, K_x, K_xo), got {len(row)}")
        k_v, k_vo, k_x, k_xo = (float(g) for g in row)
        return cls(k_x=k_x, k_v=k_v, k_vo=k_vo, k_xo=k_xo)


@dataclass(frozen=True)
class LambdaEta:
    """Reduced gain pair driving the characteristic function.

    ``lam`` stands for lambda (reserved word in Python).
    """

    lam: float
    eta: float

    def __post_init__(self) -> None:
        _require_positive("lambda", self.lam)
        _require_positive("eta", self.eta)


def derive_lambda_eta(gains: ControlGains, headway: float) -> LambdaEta:
    """
    Reduce the control gains to (lambda, eta).

    lambda = K_x + K_xo and eta = K_x*h + K_v + K_vo.

    Raises:
        ValidationError: If the headway is not positive
    """
    _require_positive("headway", headway)
    return LambdaEta(
        lam=gains.k_x + gains.k_xo,
        eta=gains.k_x * headway + gains.k_v + gains.k_vo,
    )


@dataclass(frozen=True)
class PlatoonConfig:
    """Platoon geometry and timing.

    Attributes:
        m_followers: Number of followers M (the leader is vehicle 0)
        headway: Time headway h (s)
        standstill: Standstill distance l (m)
        target_velocity: Target platoon velocity v_o (m/s)
        delay: Total communication plus edge-processing delay tau (s)
    """

    m_followers: int
    headway: float
    standstill: float
    target_velocity: float
    delay: float

    def __post_init__(self) -> None:
        if isinstance(self.m_followers, bool) or int(self.m_followers) != self.m_followers:
            raise ValidationError(f"m_followers must be an integer, got {self.m_followers}")
        if self.m_followers < 1:
            raise ValidationError(f"m_followers must be >= 1, got {self.m_followers}")
        _require_positive("headway", self.headway)
        _require_non_negative("standstill", self.standstill)
        _require_positive("target_velocity", self.target_velocity)
        _require_positive("delay", self.delay)
        if not self.desired_gap > 0:
            raise ValidationError(f"Desired gap h*v_o + l must be positive, got {self.desired_gap}")

    @property
    def desired_gap(self) -> float:
        """Desired inter-vehicle distance h*v_o + l (m)."""
        return self.headway * self.target_velocity + self.standstill

    @property
    def n_vehicles(self) -> int:
        """Leader plus followers."""
        return self.m_followers + 1

    def with_updates(self, **changes: float) -> PlatoonConfig:
        """Return a copy with some fields replaced (re-validated)."""
        return replace(self, **changes)


class DisturbanceKind(str, Enum):
    """Shape of the external disturbance acting on the leader."""

    NONE = "none"
    SINUSOID = "sinusoid"
    PIECEWISE = "piecewise"


@dataclass(frozen=True)
class DisturbanceSegment:
    """Constant leader acceleration over one interval (s, m/s^2)."""

    start: float
    end: float
    acceleration: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.start) and math.isfinite(self.end)):
            raise ValidationError(f"Segment bounds must be finite, got [{self.start}, {self.end}]")
        if self.end <= self.start:
            raise ValidationError(f"Segment end must exceed start, got [{self.start}, {self.end}]")
        if not math.isfinite(self.acceleration):
            raise ValidationError(f"Segment acceleration must be finite, got {self.acceleration}")


@dataclass(frozen=True)
class DisturbanceProfile:
    """External disturbance on the leader plus its post-window recovery.

    Attributes:
        kind: none, sinusoid (-sin(t) inside the window) or piecewise
        window: (t_start, t_end) in seconds
        segments: Piecewise-constant accelerations; the first segment is
            closed on both ends, later ones are left-open, so they tile the
            window exactly once
        recovery_gain: k_r (1/s) of the regulator dv0/dt = -k_r (v0 - v_o)
            applied outside the window; 0 disables it
    """

    kind: DisturbanceKind = DisturbanceKind.NONE
    window: tuple[float, float] = (10.0, 30.0)
    segments: tuple[DisturbanceSegment, ...] = ()
    recovery_gain: float = 1.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", DisturbanceKind(self.kind))
        t_start, t_end = self.window
        if not (math.isfinite(t_start) and math.isfinite(t_end)) or t_start < 0:
            raise ValidationError(f"Window must be finite and start at t >= 0, got {self.window}")
        if t_end <= t_start:
            raise ValidationError(f"Window end must exceed start, got {self.window}")
        _require_non_negative("recovery_gain", self.recovery_gain)

        if self.kind is DisturbanceKind.PIECEWISE:
            if not self.segments:
                raise ValidationError("Piecewise disturbance needs at least one segment")
            if self.segments[0].start != t_start or self.segments[-1].end != t_end:
                raise ValidationError(
                    f"Segments must cover the window {self.window} exactly, "
                    f"got [{self.segments[0].start}, {self.segments[-1].end}]"
                )
            for prev, curr in zip(self.segments, self.segments[1:]):
                if curr.start != prev.end:
                    raise ValidationError(
                        f"Segments must tile the window without gap or overlap: "
                        f"[{prev.start}, {prev.end}] then [{curr.start}, {curr.end}]"
                    )
        elif self.segments:
            raise ValidationError(f"Segments are only allowed for piecewise kind, not {self.kind}")

    def contains(self, t: float) -> bool:
        """Whether t lies inside the closed disturbance window."""
        return self.kind is not DisturbanceKind.NONE and self.window[0] <= t <= self.window[1]


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Time-indexed platoon state on one uniform grid.

    Arrays are time-major: ``x[n, i]`` is the position of vehicle i at
    ``times[n]``; vehicle 0 is the leader. ``u`` and ``e`` only carry the
    followers, so ``e[n, i - 1]`` is the spacing error of follower i.

    Attributes:
        dt: Grid step (s)
        times: Sample instants, shape (n,)
        x: Positions (m), shape (n, M + 1)
        v: Velocities (m/s), shape (n, M + 1)
        u: Follower control inputs (m/s^2), shape (n, M)
        e: Follower spacing errors (m), shape (n, M)
        headway: h used for the spacing errors (s)
        target_velocity: v_o used for the spacing errors (m/s)
        standstill: l used for the spacing errors (m)
        diverged: True when integration stopped at a non-finite state
    """

    dt: float
    times: np.ndarray
    x: np.ndarray
    v: np.ndarray
    u: np.ndarray
    e: np.ndarray
    headway: float
    target_velocity: float
    standstill: float
    diverged: bool = False
    metadata: dict[str, object] = field(default_factory=dict)

    def __post_init__(self) -> None:
        n = len(self.times)
        if self.x.shape != self.v.shape or self.x.shape[0] != n:
            raise ValidationError(
                f"x and v must share the time grid, got {self.x.shape}, {self.v.shape} for {n} samples"
            )
        m = self.x.shape[1] - 1
        if self.u.shape != (n, m) or self.e.shape != (n, m):
            raise ValidationError(
                f"u and e must have shape {(n, m)}, got {self.u.shape} and {self.e.shape}"
            )

    def __len__(self) -> int:
        return len(self.times)

    @property
    def m_followers(self) -> int:
        """Number of followers M."""
        return self.x.shape[1] - 1

    @property
    def t_end(self) -> float:
        """Last sample instant (s)."""
        return float(self.times[-1]) if len(self.times) else 0.0

    def recompute_spacing_errors(self) -> np.ndarray:
        """Spacing errors recomputed from positions: x_i - x_{i-1} + h*v_o + l."""
        gap = self.headway * self.target_velocity + self.standstill
        return self.x[:, 1:] - self.x[:, :-1] + gap

    def to_frame(self) -> pd.DataFrame:
        """Wide DataFrame with columns t, x_0..x_M, v_0..v_M, u_1..u_M, e_1..e_M."""
        import pandas as pd

        m = self.m_followers
        data: dict[str, np.ndarray] = {"t": self.times}
        data.update({f"x_{i}": self.x[:, i] for i in range(m + 1)})
        data.update({f"v_{i}": self.v[:, i] for i in range(m + 1)})
        data.update({f"u_{i}": self.u[:, i - 1] for i in range(1, m + 1)})
        data.update({f"e_{i}": self.e[:, i - 1] for i in range(1, m + 1)})
        return pd.DataFrame(data)


@dataclass(frozen=True)
class RadioParams:
    """V2I link-budget inputs.

    Attributes:
        n_antennas: RSU antennas N
        m_followers: Followers M (M + 1 single-antenna vehicles share the RSU)
        tx_power_leader_dbm: Leader transmit power (dBm)
        bandwidth_hz: System bandwidth B (Hz)
        carrier_freq_hz: Carrier frequency f_c (Hz)
        path_loss_exp: Path-loss exponent alpha (may be non-integer)
        perp_distance_m: Perpendicular lane-to-RSU distance r_o (m)
        elev_diff_m: Antenna elevation difference h_o (m)
        rate_threshold_bps: QoS rate threshold R_th (bps)
        handover_freq_hz: Maximum allowable handover frequency (1/s)
        noise_power_dbm: Noise power; None selects the thermal floor
        noise_figure_db: Calibration offset added to the noise power (dB)
    """

    n_antennas: int
    m_followers: int
    tx_power_leader_dbm: float
    bandwidth_hz: float
    carrier_freq_hz: float
    path_loss_exp: float
    perp_distance_m: float
    elev_diff_m: float
    rate_threshold_bps: float
    handover_freq_hz: float
    noise_power_dbm: float | None = None
    noise_figure_db: float = 0.0

    def __post_init__(self) -> None:
        if self.m_followers < 1:
            raise ValidationError(f"m_followers must be >= 1, got {self.m_followers}")
        if self.n_antennas <= self.m_followers + 1:
            raise InsufficientAntennasError(
                f"Zero-forcing needs N > M + 1 antennas, got N={self.n_antennas}, "
                f"M={self.m_followers}"
            )
        for name in ("bandwidth_hz", "carrier_freq_hz", "path_loss_exp", "rate_threshold_bps",
                     "handover_freq_hz"):
            _require_positive(name, getattr(self, name))
        _require_non_negative("perp_distance_m", self.perp_distance_m)
        _require_non_negative("elev_diff_m", self.elev_diff_m)
        if not math.isfinite(self.tx_power_leader_dbm):
            raise ValidationError(f"tx_power_leader_dbm must be finite, got {self.tx_power_leader_dbm}")
        if self.noise_power_dbm is not None and not math.isfinite(self.noise_power_dbm):
            raise ValidationError(f"noise_power_dbm must be finite, got {self.noise_power_dbm}")
        if not math.isfinite(self.noise_figure_db):
            raise ValidationError(f"noise_figure_db must be finite, got {self.noise_figure_db}")

    @property
    def beta(self) -> float:
        """Free-space constant (c / (4*pi*f_c))^2."""
        return (SPEED_OF_LIGHT / (4.0 * math.pi * self.carrier_freq_hz)) ** 2

    @property
    def effective_noise_dbm(self) -> float:
        """Noise power in dBm including the calibration offset."""
        base = (
            thermal_noise_dbm(self.bandwidth_hz)
            if self.noise_power_dbm is None
            else self.noise_power_dbm
        )
        return base + self.noise_figure_db

    @property
    def noise_power_w(self) -> float:
        """Noise power sigma^2 in watts."""
        return dbm_to_watts(self.effective_noise_dbm)

    @property
    def tx_power_leader_w(self) -> float:
        """Leader transmit power in watts."""
        return dbm_to_watts(self.tx_power_leader_dbm)

    @property
    def zf_array_gain(self) -> int:
        """Zero-forcing array gain N - M - 1."""
        return self.n_antennas - self.m_followers - 1

    def with_updates(self, **changes: float | int | None) -> RadioParams:
        """Return a copy with some fields replaced (re-validated)."""
        return replace(self, **changes)


@dataclass(frozen=True)
class StabilityVerdict:
    """Outcome of one stability test.

    Attributes:
        stable: Verdict of the test
        margin: Signed distance to the boundary in the tested coordinate;
            positive when strictly inside, zero on a boundary the test
            accepts or rejects
        witness: Quantity certifying the verdict (lambda* for the plant test,
            the violating frequency for the string sweep)
        criterion: Short name of the test that produced the verdict
    """

    stable: bool
    margin: float
    witness: float | None = None
    criterion: str = ""

    def __post_init__(self) -> None:
        if self.stable and self.margin < 0:
            raise ValidationError(f"Stable verdict with negative margin {self.margin}")
        if not self.stable and self.margin > 0:
            raise ValidationError(f"Unstable verdict with positive margin {self.margin}")

    @property
    def label(self) -> str:
        """'stable' or 'unstable'."""
        return "stable" if self.stable else "unstable"
