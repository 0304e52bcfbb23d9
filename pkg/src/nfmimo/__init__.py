"""Near-field line-of-sight MIMO modeling for uniform planar arrays.

Builds spherical-wave (free-space Green's function) channel matrices between
two planar arrays facing each other, computes the effective degrees of
freedom and Shannon capacity both exactly and through closed-form analytical
models, and sweeps distance or array size into machine-readable tables.
"""

from .channel import (
    build_channel_matrix,
    correlation_matrix,
    distance_exact,
    distance_fresnel,
    dump_channel_text,
    green_gain,
    received_field,
)
from .errors import DegenerateGeometryError, InvalidScenarioError, UndefinedMetricError
from .geometry import (
    SPEED_OF_LIGHT,
    ArrayConfig,
    Position3D,
    Scenario,
    planar_indices,
    rayleigh_distance,
    rx_element_position,
    rx_positions,
    tx_element_position,
    tx_positions,
)
from .metrics import (
    CapacityResult,
    EdofResult,
    capacity_closed_form,
    capacity_edof,
    capacity_eigen_oracle,
    edof_closed_form,
    edof_eigen,
    edof_exact,
    eigen_rank,
)
from .output import emit, format_csv, format_json
from .sweeps import (
    MetricsRow,
    SweepError,
    SweepSpec,
    default_scenario,
    distance_values,
    run_sweep,
    shape_for_count,
)

__version__ = "0.1.0"

__all__ = [
    "SPEED_OF_LIGHT",
    "ArrayConfig",
    "CapacityResult",
    "DegenerateGeometryError",
    "EdofResult",
    "InvalidScenarioError",
    "MetricsRow",
    "Position3D",
    "Scenario",
    "SweepError",
    "SweepSpec",
    "UndefinedMetricError",
    "build_channel_matrix",
    "capacity_closed_form",
    "capacity_edof",
    "capacity_eigen_oracle",
    "correlation_matrix",
    "default_scenario",
    "distance_exact",
    "distance_fresnel",
    "distance_values",
    "dump_channel_text",
    "edof_closed_form",
    "edof_eigen",
    "edof_exact",
    "eigen_rank",
    "emit",
    "format_csv",
    "format_json",
    "green_gain",
    "planar_indices",
    "rayleigh_distance",
    "received_field",
    "run_sweep",
    "rx_element_position",
    "rx_positions",
    "shape_for_count",
    "tx_element_position",
    "tx_positions",
]
