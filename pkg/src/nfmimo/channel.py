"""Spherical-wave channel construction.

The per-link gain is the scalar free-space Green's function
exp(-j*k0*d) / (4*pi*d). The channel matrix H is dense complex with one row
per receive element and one column per transmit element; the correlation
matrix is the Gram matrix R = H^H H.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .errors import DegenerateGeometryError, InvalidScenarioError
from .geometry import ArrayConfig, Position3D, Scenario, rx_positions, tx_positions


def distance_exact(t: Position3D, r: Position3D) -> float:
    """Euclidean distance between a transmit and a receive element."""
    d = math.dist((t.x, t.y, t.z), (r.x, r.y, r.z))
    if d <= 0.0:
        raise DegenerateGeometryError("transmit and receive elements coincide")
    return d


def distance_fresnel(t: Position3D, r: Position3D, x_r: float) -> float:
    """Second-order Taylor approximation of the link distance.

    Assumes the transmit element sits on the x=0 plane and the receive plane
    at x = x_r. Always >= x_r and always overshoots the exact distance.
    """
    if x_r <= 0.0:
        raise InvalidScenarioError("x_r must be > 0")
    dy = r.y - t.y
    dz = r.z - t.z
    return x_r + (dy * dy + dz * dz) / (2.0 * x_r)


def green_gain(d: float, wavelength: float) -> complex:
    """Free-space scalar Green's function exp(-j*k0*d) / (4*pi*d)."""
    if d <= 0.0:
        raise DegenerateGeometryError("distance must be > 0")
    if wavelength <= 0.0:
        raise ValueError("wavelength must be > 0")
    k0 = 2.0 * math.pi / wavelength
    return cmath.exp(-1j * k0 * d) / (4.0 * math.pi * d)


def _pairwise_distances(tx: ArrayConfig, rx: ArrayConfig, s: Scenario) -> np.ndarray:
    tp = tx_positions(tx, s.indexing_mode)
    rp = rx_positions(rx, s)
    dy = rp[:, 1][:, None] - tp[:, 1][None, :]
    dz = rp[:, 2][:, None] - tp[:, 2][None, :]
    if s.distance_mode == "fresnel":
        x_r = s.rx_center.x
        return x_r + (dy * dy + dz * dz) / (2.0 * x_r)
    dx = rp[:, 0][:, None] - tp[:, 0][None, :]
    return np.sqrt(dx * dx + dy * dy + dz * dz)


def build_channel_matrix(tx: ArrayConfig, rx: ArrayConfig, s: Scenario) -> np.ndarray:
    """Dense M x N channel matrix: entry (m, n) is the Green's-function gain
    of the link from transmit element n to receive element m, with distances
    per s.distance_mode."""
    if tx.frequency_hz != rx.frequency_hz:
        raise InvalidScenarioError("transmit and receive arrays must share one carrier frequency")
    d = _pairwise_distances(tx, rx, s)
    if np.any(d <= 0.0):
        raise DegenerateGeometryError("transmit and receive elements coincide")
    k0 = 2.0 * math.pi / tx.wavelength_m
    return np.exp(-1j * k0 * d) / (4.0 * math.pi * d)


def correlation_matrix(h: np.ndarray) -> np.ndarray:
    """Transmit-side Gram matrix R = H^H H (N x N, Hermitian PSD)."""
    h = np.asarray(h)
    return h.conj().T @ h


def received_field(h: np.ndarray, a: np.ndarray) -> np.ndarray:
    """Superpose transmit amplitudes through the channel: E = H a."""
    h = np.asarray(h)
    a = np.asarray(a)
    if a.shape != (h.shape[1],):
        raise ValueError(
            f"amplitude vector of shape {a.shape} does not match {h.shape[1]} transmit elements"
        )
    return h @ a


def dump_channel_text(h: np.ndarray) -> str:
    """Text dump of H: one line per entry, `m,n,re,im`, 1-based indices.

    17 significant digits so a reloaded dump reproduces the matrix bit-exactly.
    """
    h = np.asarray(h)
    lines = []
    for m in range(h.shape[0]):
        for n in range(h.shape[1]):
            v = h[m, n]
            lines.append(f"{m + 1},{n + 1},{v.real:.17g},{v.imag:.17g}")
    return "\n".join(lines) + "\n"
