"""Uniform planar array geometry.

Both arrays are rectangular element grids with uniform spacing, facing each
other broadside: the transmit array lies on the x=0 plane, the receive array
is centered at (x_R, y_R, z_R) with x_R > 0, and both planes are parallel to
Y-Z. Element indices are 1-based at the API boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidScenarioError

SPEED_OF_LIGHT = 299792458.0  # m/s, exact by definition

DISTANCE_MODES = ("exact", "fresnel")
INDEXING_MODES = ("literal", "centered")


@dataclass(frozen=True)
class ArrayConfig:
    """A uniform planar array: count_h elements per row, count_v rows.

    spacing_m defaults to half the carrier wavelength when omitted.
    """

    count_h: int
    count_v: int
    frequency_hz: float
    spacing_m: float | None = None

    def __post_init__(self):
        if self.count_h < 1 or self.count_v < 1:
            raise ValueError("element counts must be >= 1")
        if not (math.isfinite(self.frequency_hz) and self.frequency_hz > 0):
            raise ValueError("frequency_hz must be positive and finite")
        if self.spacing_m is None:
            object.__setattr__(self, "spacing_m", self.wavelength_m / 2.0)
        elif not (math.isfinite(self.spacing_m) and self.spacing_m > 0):
            raise ValueError("spacing_m must be positive and finite")

    @property
    def count(self) -> int:
        return self.count_h * self.count_v

    @property
    def wavelength_m(self) -> float:
        return SPEED_OF_LIGHT / self.frequency_hz

    @property
    def diagonal_m(self) -> float:
        """Physical aperture diagonal (zero for a single element)."""
        return self.spacing_m * math.hypot(self.count_h - 1, self.count_v - 1)


@dataclass(frozen=True)
class Position3D:
    x: float
    y: float
    z: float

    def __post_init__(self):
        if not all(math.isfinite(c) for c in (self.x, self.y, self.z)):
            raise ValueError("coordinates must be finite")

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)


@dataclass(frozen=True)
class Scenario:
    """Receive-array placement plus link-level parameters.

    indexing_mode selects how grid indices map to coordinates: `literal`
    keeps the model's printed offsets (grid spans [-count*dl, -dl] around the
    nominal center, asymmetric on purpose), `centered` places the grid
    symmetrically about the center.
    """

    rx_center: Position3D
    snr_db: float = 70.0
    distance_mode: str = "exact"
    indexing_mode: str = "literal"

    def __post_init__(self):
        if self.rx_center.x <= 0:
            raise InvalidScenarioError(
                "rx_center.x must be > 0 (receive array strictly in front of the transmit plane)"
            )
        if not math.isfinite(self.snr_db):
            raise InvalidScenarioError("snr_db must be finite")
        if self.distance_mode not in DISTANCE_MODES:
            raise InvalidScenarioError(f"distance_mode must be one of {DISTANCE_MODES}")
        if self.indexing_mode not in INDEXING_MODES:
            raise InvalidScenarioError(f"indexing_mode must be one of {INDEXING_MODES}")


def planar_indices(n: int, count_h: int, count_v: int | None = None) -> tuple[int, int]:
    """Map a 1-based element index to (horizontal, vertical) grid indices.

    The horizontal index runs fastest: n = vertical * count_h + horizontal + 1.
    The upper bound is only enforced when count_v is given.
    """
    if n < 1:
        raise IndexError(f"element index {n} out of range (indices are 1-based)")
    if count_v is not None and n > count_h * count_v:
        raise IndexError(f"element index {n} out of range for a {count_h}x{count_v} array")
    return (n - 1) % count_h, (n - 1) // count_h


def _offset(idx, count: int, spacing: float, mode: str):
    """Grid index -> coordinate offset from the nominal center. Works on
    scalars and numpy arrays alike."""
    if mode == "literal":
        return (idx - count) * spacing
    if mode == "centered":
        return (idx - (count - 1) / 2.0) * spacing
    raise InvalidScenarioError(f"indexing mode must be one of {INDEXING_MODES}")


def tx_element_position(n: int, cfg: ArrayConfig, mode: str = "literal") -> Position3D:
    """Position of transmit element n; the transmit array lies on x = 0."""
    i, v = planar_indices(n, cfg.count_h, cfg.count_v)
    return Position3D(
        0.0,
        _offset(i, cfg.count_h, cfg.spacing_m, mode),
        _offset(v, cfg.count_v, cfg.spacing_m, mode),
    )


def rx_element_position(m: int, cfg: ArrayConfig, scenario: Scenario) -> Position3D:
    """Position of receive element m, offset from scenario.rx_center."""
    k, w = planar_indices(m, cfg.count_h, cfg.count_v)
    mode = scenario.indexing_mode
    c = scenario.rx_center
    return Position3D(
        c.x,
        c.y + _offset(k, cfg.count_h, cfg.spacing_m, mode),
        c.z + _offset(w, cfg.count_v, cfg.spacing_m, mode),
    )


def _grid_offsets(cfg: ArrayConfig, mode: str) -> tuple[np.ndarray, np.ndarray]:
    """(y, z) offsets of every element, in element-index order."""
    idx = np.arange(cfg.count)
    i = idx % cfg.count_h
    v = idx // cfg.count_h
    return (
        _offset(i, cfg.count_h, cfg.spacing_m, mode),
        _offset(v, cfg.count_v, cfg.spacing_m, mode),
    )


def tx_positions(cfg: ArrayConfig, mode: str = "literal") -> np.ndarray:
    """All transmit element positions as an (N, 3) array."""
    y, z = _grid_offsets(cfg, mode)
    out = np.zeros((cfg.count, 3))
    out[:, 1] = y
    out[:, 2] = z
    return out


def rx_positions(cfg: ArrayConfig, scenario: Scenario) -> np.ndarray:
    """All receive element positions as an (M, 3) array."""
    y, z = _grid_offsets(cfg, scenario.indexing_mode)
    c = scenario.rx_center
    out = np.empty((cfg.count, 3))
    out[:, 0] = c.x
    out[:, 1] = c.y + y
    out[:, 2] = c.z + z
    return out


def rayleigh_distance(tx: ArrayConfig, rx: ArrayConfig) -> float:
    """Conventional near/far-field boundary 2*(D_tx + D_rx)^2 / wavelength.

    D is the physical aperture diagonal; a pair of single elements has no
    aperture and yields 0.
    """
    d = tx.diagonal_m + rx.diagonal_m
    return 2.0 * d * d / tx.wavelength_m
