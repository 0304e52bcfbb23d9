"""Parameter-sweep engine: distance and element-count scans as metric tables."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .channel import build_channel_matrix, correlation_matrix
from .geometry import ArrayConfig, Position3D, Scenario, rayleigh_distance
from .metrics import (
    capacity_closed_form,
    capacity_edof,
    capacity_eigen_oracle,
    edof_exact,
    eigen_rank,
)

SWEEP_VARIABLES = ("distance", "tx_elements", "rx_elements", "distance_x_tx_grid")
ALL_METHODS = frozenset({"exact_trace", "closed_form", "eigen_oracle"})
RANK_POLICIES = ("auto", "min_mn")


class SweepError(RuntimeError):
    """A sweep point failed; the message names the point."""


def shape_for_count(count: int) -> tuple[int, int]:
    """Shape rule for element-count sweeps: count -> (count // 2, 2).

    Keeps the two-row layout of the stock arrays as the count grows. Odd
    counts have no shape under this rule and are rejected.
    """
    if count < 2 or count % 2 != 0:
        raise ValueError(f"count sweep values must be even and >= 2 (got {count})")
    return count // 2, 2


def distance_values(start: float, end: float, step: float) -> tuple[float, ...]:
    """Inclusive arithmetic grid start, start+step, ..., halting at end.

    A 1e-9 slack keeps the endpoint included when binary float steps land
    a hair past it.
    """
    if start <= 0.0:
        raise ValueError("start must be > 0")
    if step <= 0.0:
        raise ValueError("step must be > 0")
    if end < start:
        raise ValueError("end must be >= start")
    n = int(math.floor((end - start) / step + 1e-9)) + 1
    return tuple(start + k * step for k in range(n))


@dataclass(frozen=True)
class SweepSpec:
    """One parameter scan: what varies, over which values, from which base.

    `distances` is only consulted by the 2-D grid variable (its distance
    axis); the 1-D count sweeps run at the base scenario's distance.
    """

    variable: str
    values: tuple
    base_tx: ArrayConfig
    base_rx: ArrayConfig
    base_scenario: Scenario
    methods: frozenset = ALL_METHODS
    distances: tuple | None = None
    rank_policy: str = "min_mn"

    def __post_init__(self):
        if self.variable not in SWEEP_VARIABLES:
            raise ValueError(f"variable must be one of {SWEEP_VARIABLES}")
        object.__setattr__(self, "values", tuple(self.values))
        object.__setattr__(self, "methods", frozenset(self.methods))
        _check_axis(self.values, "values")
        if not self.methods <= ALL_METHODS:
            raise ValueError(f"methods must be a subset of {sorted(ALL_METHODS)}")
        if self.rank_policy not in RANK_POLICIES:
            raise ValueError(f"rank_policy must be one of {RANK_POLICIES}")
        if self.variable == "distance":
            if any(d <= 0 for d in self.values):
                raise ValueError("distances must be > 0")
        else:
            for c in self.values:
                shape_for_count(int(c))
        if self.variable == "distance_x_tx_grid":
            if not self.distances:
                raise ValueError("the grid sweep needs a distances axis")
            object.__setattr__(self, "distances", tuple(self.distances))
            _check_axis(self.distances, "distances")
            if any(d <= 0 for d in self.distances):
                raise ValueError("distances must be > 0")


def _check_axis(values: tuple, name: str) -> None:
    if len(values) == 0:
        raise ValueError(f"{name} must be nonempty")
    if any(b <= a for a, b in zip(values, values[1:])):
        raise ValueError(f"{name} must be strictly increasing")


@dataclass(frozen=True)
class MetricsRow:
    """One sweep point's outputs. Methods not requested come out as NaN."""

    sweep_value: float
    distance_m: float
    n_tx: int
    n_rx: int
    edof_exact: float
    edof_closed: float
    cap_edof: float
    cap_closed: float
    cap_oracle: float
    rank_r: int
    rayleigh_m: float


def default_scenario() -> tuple[ArrayConfig, ArrayConfig, Scenario]:
    """Stock configuration: 13 GHz carrier, 64x2 transmit and 4x2 receive
    arrays at half-wave spacing, boresight link at 1 m, 70 dB transmit SNR."""
    tx = ArrayConfig(count_h=64, count_v=2, frequency_hz=13e9)
    rx = ArrayConfig(count_h=4, count_v=2, frequency_hz=13e9)
    s = Scenario(rx_center=Position3D(1.0, 0.0, 0.0), snr_db=70.0)
    return tx, rx, s


def _with_distance(s: Scenario, x_r: float) -> Scenario:
    return replace(s, rx_center=Position3D(x_r, s.rx_center.y, s.rx_center.z))


def _point_row(sweep_value, tx, rx, s, methods, rank_policy) -> MetricsRow:
    nan = float("nan")
    e_exact = e_closed = cap_e = cap_c = cap_o = nan

    h = build_channel_matrix(tx, rx, s)
    r = correlation_matrix(h)
    rank = min(h.shape) if rank_policy == "min_mn" else eigen_rank(r)

    if "exact_trace" in methods:
        res = edof_exact(r)
        e_exact = res.beta
        cap_e = capacity_edof(res, rank, s.snr_db).capacity_bps_hz
    if "closed_form" in methods:
        cres = capacity_closed_form(tx, rx, s, rank)
        e_closed = cres.edof.beta
        cap_c = cres.capacity_bps_hz
    if "eigen_oracle" in methods:
        cap_o = capacity_eigen_oracle(h, s.snr_db)

    return MetricsRow(
        sweep_value=float(sweep_value),
        distance_m=s.rx_center.x,
        n_tx=tx.count,
        n_rx=rx.count,
        edof_exact=e_exact,
        edof_closed=e_closed,
        cap_edof=cap_e,
        cap_closed=cap_c,
        cap_oracle=cap_o,
        rank_r=rank,
        rayleigh_m=rayleigh_distance(tx, rx),
    )


def _sweep_points(spec: SweepSpec):
    """Yield (label, sweep_value, tx, rx, scenario) in emission order."""
    tx, rx, s = spec.base_tx, spec.base_rx, spec.base_scenario
    if spec.variable == "distance":
        for d in spec.values:
            yield f"distance={d:g} m", d, tx, rx, _with_distance(s, float(d))
    elif spec.variable == "tx_elements":
        for c in spec.values:
            ch, cv = shape_for_count(int(c))
            yield f"n_tx={int(c)}", c, replace(tx, count_h=ch, count_v=cv), rx, s
    elif spec.variable == "rx_elements":
        for c in spec.values:
            ch, cv = shape_for_count(int(c))
            yield f"n_rx={int(c)}", c, tx, replace(rx, count_h=ch, count_v=cv), s
    else:  # distance_x_tx_grid: count-major, distance inner
        for c in spec.values:
            ch, cv = shape_for_count(int(c))
            txc = replace(tx, count_h=ch, count_v=cv)
            for d in spec.distances:
                yield f"n_tx={int(c)}, distance={d:g} m", d, txc, rx, _with_distance(s, float(d))


def run_sweep(spec: SweepSpec) -> list[MetricsRow]:
    """Evaluate every sweep point, in order.

    Any per-point failure aborts the whole sweep with the offending point
    named in the raised SweepError.
    """
    rows = []
    for label, value, txc, rxc, sc in _sweep_points(spec):
        try:
            rows.append(_point_row(value, txc, rxc, sc, spec.methods, spec.rank_policy))
        except Exception as exc:
            raise SweepError(f"sweep point {label} failed: {exc}") from exc
    return rows
