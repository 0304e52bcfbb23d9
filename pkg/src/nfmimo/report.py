"""Report generation: the full sweep suite rendered as CSV + PNG pairs.

Four families:

- capacity_vs_distance:            stock arrays, capacity over the distance grid
- capacity_vs_tx_count:            transmit-count scan at the base distance
- capacity_vs_distance_rx_family:  one distance curve per receive count
- capacity_vs_distance_tx_grid:    one distance curve per transmit count
"""

from __future__ import annotations

import os
from dataclasses import replace

import matplotlib

matplotlib.use("Agg")  # file output only; must precede the pyplot import

import matplotlib.pyplot as plt

from .geometry import rayleigh_distance
from .output import format_csv
from .sweeps import SweepSpec, default_scenario, distance_values, run_sweep, shape_for_count

DEFAULT_TX_COUNTS = (8, 16, 32, 64, 128, 256)
DEFAULT_RX_COUNTS = (8, 64, 128)


def _base_metadata(tx, rx, scenario, rank_policy):
    return {
        "freq_ghz": tx.frequency_hz / 1e9,
        "tx": f"{tx.count_h}x{tx.count_v}",
        "rx": f"{rx.count_h}x{rx.count_v}",
        "snr_db": float(scenario.snr_db),
        "distance_mode": scenario.distance_mode,
        "indexing": scenario.indexing_mode,
        "rank": rank_policy,
        "shape_rule": "half_by_two",
        "rayleigh_m": rayleigh_distance(tx, rx),
    }


def _new_axes(xlabel):
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    ax.set_xlabel(xlabel)
    ax.set_ylabel("capacity (bits/s/Hz)")
    ax.grid(True, alpha=0.3)
    return fig, ax


def _mark_rayleigh(ax, rd, xs):
    if min(xs) <= rd <= max(xs):
        ax.axvline(rd, color="gray", ls="--", lw=1.0, label="near/far boundary")


def _finish(fig, ax, png_path):
    ax.legend()
    fig.savefig(png_path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def _write_family(outdir, name, rows, metadata):
    csv_path = os.path.join(outdir, f"{name}.csv")
    with open(csv_path, "w", encoding="utf-8", newline="") as f:
        f.write(format_csv(rows, metadata))
    return csv_path


def write_report(
    outdir,
    tx=None,
    rx=None,
    scenario=None,
    distances=None,
    tx_counts=DEFAULT_TX_COUNTS,
    rx_counts=DEFAULT_RX_COUNTS,
    rank_policy="min_mn",
) -> list[str]:
    """Run the four sweep families and write a CSV + PNG pair for each.

    Returns the written paths, CSV before PNG within each family.
    """
    if tx is None or rx is None or scenario is None:
        dtx, drx, ds = default_scenario()
        tx = dtx if tx is None else tx
        rx = drx if rx is None else rx
        scenario = ds if scenario is None else scenario
    if distances is None:
        distances = distance_values(1.0, 10.0, 0.5)
    distances = tuple(distances)
    os.makedirs(outdir, exist_ok=True)
    paths = []
    meta = _base_metadata(tx, rx, scenario, rank_policy)

    # capacity vs distance, all three capacity estimates
    spec = SweepSpec(
        variable="distance", values=distances, base_tx=tx, base_rx=rx,
        base_scenario=scenario, rank_policy=rank_policy,
    )
    rows = run_sweep(spec)
    paths.append(_write_family(outdir, "capacity_vs_distance", rows, {**meta, "family": "distance"}))
    xs = [r.distance_m for r in rows]
    fig, ax = _new_axes("distance (m)")
    ax.plot(xs, [r.cap_edof for r in rows], marker="o", ms=4, label="EDoF capacity")
    ax.plot(xs, [r.cap_closed for r in rows], marker="s", ms=4, label="closed form")
    ax.plot(xs, [r.cap_oracle for r in rows], marker="^", ms=4, label="spectral oracle")
    _mark_rayleigh(ax, rows[0].rayleigh_m, xs)
    png = os.path.join(outdir, "capacity_vs_distance.png")
    _finish(fig, ax, png)
    paths.append(png)

    # capacity vs transmit element count at the base distance
    spec = SweepSpec(
        variable="tx_elements", values=tuple(tx_counts), base_tx=tx, base_rx=rx,
        base_scenario=scenario, rank_policy=rank_policy,
    )
    rows = run_sweep(spec)
    paths.append(_write_family(outdir, "capacity_vs_tx_count", rows, {**meta, "family": "tx_count"}))
    xs = [r.n_tx for r in rows]
    fig, ax = _new_axes("transmit elements")
    ax.set_xscale("log", base=2)
    ax.set_xticks(xs, labels=[str(x) for x in xs])
    ax.plot(xs, [r.cap_edof for r in rows], marker="o", ms=4, label="EDoF capacity")
    ax.plot(xs, [r.cap_closed for r in rows], marker="s", ms=4, label="closed form")
    ax.plot(xs, [r.cap_oracle for r in rows], marker="^", ms=4, label="spectral oracle")
    _finish(fig, ax, os.path.join(outdir, "capacity_vs_tx_count.png"))
    paths.append(os.path.join(outdir, "capacity_vs_tx_count.png"))

    # distance curves for each receive count
    family_rows = []
    fig, ax = _new_axes("distance (m)")
    for c in rx_counts:
        ch, cv = shape_for_count(int(c))
        rxc = replace(rx, count_h=ch, count_v=cv)
        spec = SweepSpec(
            variable="distance", values=distances, base_tx=tx, base_rx=rxc,
            base_scenario=scenario, rank_policy=rank_policy,
        )
        rows = run_sweep(spec)
        family_rows.extend(rows)
        ax.plot([r.distance_m for r in rows], [r.cap_edof for r in rows],
                marker="o", ms=4, label=f"{int(c)} receive elements")
    paths.append(_write_family(outdir, "capacity_vs_distance_rx_family", family_rows,
                               {**meta, "family": "rx_family", "rx_counts": ",".join(str(int(c)) for c in rx_counts)}))
    _finish(fig, ax, os.path.join(outdir, "capacity_vs_distance_rx_family.png"))
    paths.append(os.path.join(outdir, "capacity_vs_distance_rx_family.png"))

    # distance curves for each transmit count (2-D grid)
    spec = SweepSpec(
        variable="distance_x_tx_grid", values=tuple(tx_counts), base_tx=tx, base_rx=rx,
        base_scenario=scenario, distances=distances, rank_policy=rank_policy,
    )
    rows = run_sweep(spec)
    paths.append(_write_family(outdir, "capacity_vs_distance_tx_grid", rows,
                               {**meta, "family": "tx_grid", "tx_counts": ",".join(str(int(c)) for c in tx_counts)}))
    fig, ax = _new_axes("distance (m)")
    for c in tx_counts:
        group = [r for r in rows if r.n_tx == int(c)]
        ax.plot([r.distance_m for r in group], [r.cap_edof for r in group],
                marker="o", ms=3, label=f"{int(c)} transmit elements")
    _finish(fig, ax, os.path.join(outdir, "capacity_vs_distance_tx_grid.png"))
    paths.append(os.path.join(outdir, "capacity_vs_distance_tx_grid.png"))

    return paths
