"""Closed-loop platoon simulation under the delayed RSU control law."""

from platoon_v2i.dynamics.control import (
    control_input,
    control_inputs,
    leader_acceleration,
    spacing_error,
)
from platoon_v2i.dynamics.export import read_trajectory_csv, trajectory_columns, write_trajectory_csv
from platoon_v2i.dynamics.history import HistoryBuffer
from platoon_v2i.dynamics.metrics import peak_spacing_errors, post_window_envelope, settling_time
from platoon_v2i.dynamics.simulator import (
    DEFAULT_DT,
    Integrator,
    SimulationScenario,
    simulate,
)

__all__ = [
    "DEFAULT_DT",
    "HistoryBuffer",
    "Integrator",
    "SimulationScenario",
    "control_input",
    "control_inputs",
    "leader_acceleration",
    "peak_spacing_errors",
    "post_window_envelope",
    "read_trajectory_csv",
    "settling_time",
    "simulate",
    "spacing_error",
    "trajectory_columns",
    "write_trajectory_csv",
]
