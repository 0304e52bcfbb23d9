"""Command-line front end.

`nfmimo` (or `nfmimo run`) executes one sweep and emits CSV or JSON; with no
flags it reproduces the stock 13 GHz, 64x2-vs-4x2 scenario over 1..10 m.
`nfmimo report` renders the full sweep suite as CSV + PNG pairs.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .geometry import ArrayConfig, Position3D, Scenario, rayleigh_distance
from .output import emit
from .sweeps import SweepError, SweepSpec, distance_values, run_sweep

DEFAULT_COUNTS = {
    "tx": (8, 16, 32, 64, 128, 256),
    "grid": (8, 16, 32, 64, 128, 256),
    "rx": (8, 64, 128),
}


@dataclass(frozen=True)
class RunConfig:
    """One run-mode invocation, fully resolved. Defaults mirror the stock
    scenario so a bare invocation regenerates it."""

    freq_ghz: float = 13.0
    tx_shape: tuple[int, int] = (64, 2)
    rx_shape: tuple[int, int] = (4, 2)
    snr_db: float = 70.0
    distance_start: float = 1.0
    distance_end: float = 10.0
    distance_step: float = 0.5
    sweep: str = "distance"
    distance_mode: str = "exact"
    indexing: str = "literal"
    rank: str = "min-mn"
    fmt: str = "csv"
    out: str | None = None
    counts: tuple[int, ...] | None = None


def _shape(text: str) -> tuple[int, int]:
    parts = text.lower().split("x")
    try:
        h, v = (int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected COUNT_HxCOUNT_V (e.g. 64x2), got {text!r}") from None
    if h < 1 or v < 1:
        raise argparse.ArgumentTypeError("element counts must be >= 1")
    return h, v


def _counts(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list, got {text!r}") from None
    return vals


def _add_scenario_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--freq-ghz", type=float, default=13.0, help="carrier frequency in GHz")
    p.add_argument("--tx", type=_shape, default=(64, 2), metavar="NHxNV", help="transmit array shape")
    p.add_argument("--rx", type=_shape, default=(4, 2), metavar="MHxMV", help="receive array shape")
    p.add_argument("--snr-db", type=float, default=70.0, help="transmit SNR in dB")
    p.add_argument("--distance-start", type=float, default=1.0, metavar="M",
                   help="first link distance in meters (also the fixed distance for count sweeps)")
    p.add_argument("--distance-end", type=float, default=10.0, metavar="M")
    p.add_argument("--distance-step", type=float, default=0.5, metavar="M")
    p.add_argument("--distance-mode", choices=("exact", "fresnel"), default="exact",
                   help="exact Euclidean link distances or their second-order Taylor form")
    p.add_argument("--indexing", choices=("literal", "centered"), default="literal",
                   help="grid-to-coordinate convention")
    p.add_argument("--rank", choices=("auto", "min-mn"), default="min-mn",
                   help="SNR-splitting rank: eigenvalue threshold or min(M, N)")


def _run_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="nfmimo",
        description="Near-field LOS MIMO sweeps: EDoF and capacity tables.",
    )
    _add_scenario_flags(p)
    p.add_argument("--sweep", choices=("distance", "tx", "rx", "grid"), default="distance",
                   help="sweep variable; grid scans distance x transmit count")
    p.add_argument("--counts", type=_counts, default=None, metavar="C1,C2,...",
                   help="element counts for tx/rx/grid sweeps (even totals, shape rule count/2 x 2)")
    p.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None, metavar="PATH", help="output file (stdout when absent)")
    return p


def _validate_scenario_flags(p: argparse.ArgumentParser, ns) -> None:
    if ns.freq_ghz <= 0:
        p.error("--freq-ghz must be > 0")
    if ns.distance_start <= 0:
        p.error("--distance-start must be > 0 (the receive array sits strictly in front of the transmit plane)")
    if ns.distance_end < ns.distance_start:
        p.error("--distance-end must be >= --distance-start")
    if ns.distance_step <= 0:
        p.error("--distance-step must be > 0")


def parse_args(argv) -> RunConfig:
    """Parse run-mode flags. Malformed or conflicting flags exit with a
    usage error."""
    p = _run_parser()
    ns = p.parse_args(argv)
    _validate_scenario_flags(p, ns)
    if ns.counts is not None:
        if ns.sweep == "distance":
            p.error("--counts only applies to tx/rx/grid sweeps")
        if len(ns.counts) == 0:
            p.error("--counts must not be empty")
    return RunConfig(
        freq_ghz=ns.freq_ghz,
        tx_shape=ns.tx,
        rx_shape=ns.rx,
        snr_db=ns.snr_db,
        distance_start=ns.distance_start,
        distance_end=ns.distance_end,
        distance_step=ns.distance_step,
        sweep=ns.sweep,
        distance_mode=ns.distance_mode,
        indexing=ns.indexing,
        rank=ns.rank,
        fmt=ns.fmt,
        out=ns.out,
        counts=ns.counts,
    )


def _configs(cfg: RunConfig) -> tuple[ArrayConfig, ArrayConfig, Scenario]:
    f_hz = cfg.freq_ghz * 1e9
    tx = ArrayConfig(count_h=cfg.tx_shape[0], count_v=cfg.tx_shape[1], frequency_hz=f_hz)
    rx = ArrayConfig(count_h=cfg.rx_shape[0], count_v=cfg.rx_shape[1], frequency_hz=f_hz)
    scenario = Scenario(
        rx_center=Position3D(cfg.distance_start, 0.0, 0.0),
        snr_db=cfg.snr_db,
        distance_mode=cfg.distance_mode,
        indexing_mode=cfg.indexing,
    )
    return tx, rx, scenario


_SWEEP_VARIABLE = {"distance": "distance", "tx": "tx_elements", "rx": "rx_elements", "grid": "distance_x_tx_grid"}


def build_sweep_spec(cfg: RunConfig) -> SweepSpec:
    tx, rx, scenario = _configs(cfg)
    rank_policy = "min_mn" if cfg.rank == "min-mn" else "auto"
    dvals = distance_values(cfg.distance_start, cfg.distance_end, cfg.distance_step)
    if cfg.sweep == "distance":
        values, distances = dvals, None
    else:
        values = cfg.counts if cfg.counts is not None else DEFAULT_COUNTS[cfg.sweep]
        distances = dvals if cfg.sweep == "grid" else None
    return SweepSpec(
        variable=_SWEEP_VARIABLE[cfg.sweep],
        values=values,
        base_tx=tx,
        base_rx=rx,
        base_scenario=scenario,
        distances=distances,
        rank_policy=rank_policy,
    )


def _metadata(cfg: RunConfig, tx: ArrayConfig, rx: ArrayConfig) -> dict:
    return {
        "freq_ghz": float(cfg.freq_ghz),
        "tx": f"{tx.count_h}x{tx.count_v}",
        "rx": f"{rx.count_h}x{rx.count_v}",
        "snr_db": float(cfg.snr_db),
        "sweep": cfg.sweep,
        "distance_mode": cfg.distance_mode,
        "indexing": cfg.indexing,
        "rank": cfg.rank,
        "shape_rule": "half_by_two",
        "rayleigh_m": rayleigh_distance(tx, rx),
    }


def _report_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="nfmimo report",
        description="Render the full sweep suite as CSV + PNG pairs.",
    )
    _add_scenario_flags(p)
    p.add_argument("--tx-counts", type=_counts, default=DEFAULT_COUNTS["tx"], metavar="C1,C2,...")
    p.add_argument("--rx-counts", type=_counts, default=DEFAULT_COUNTS["rx"], metavar="C1,C2,...")
    p.add_argument("--outdir", default="nfmimo-report", metavar="DIR")
    return p


def _main_report(argv) -> int:
    p = _report_parser()
    ns = p.parse_args(argv)
    _validate_scenario_flags(p, ns)
    f_hz = ns.freq_ghz * 1e9
    tx = ArrayConfig(count_h=ns.tx[0], count_v=ns.tx[1], frequency_hz=f_hz)
    rx = ArrayConfig(count_h=ns.rx[0], count_v=ns.rx[1], frequency_hz=f_hz)
    scenario = Scenario(
        rx_center=Position3D(ns.distance_start, 0.0, 0.0),
        snr_db=ns.snr_db,
        distance_mode=ns.distance_mode,
        indexing_mode=ns.indexing,
    )
    # matplotlib loads only on the report path; plain runs stay light
    from .report import write_report

    try:
        paths = write_report(
            ns.outdir,
            tx=tx,
            rx=rx,
            scenario=scenario,
            distances=distance_values(ns.distance_start, ns.distance_end, ns.distance_step),
            tx_counts=ns.tx_counts,
            rx_counts=ns.rx_counts,
            rank_policy="min_mn" if ns.rank == "min-mn" else "auto",
        )
    except (SweepError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for path in paths:
        print(path)
    return 0


def main(argv=None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    if argv[:1] == ["report"]:
        return _main_report(argv[1:])
    if argv[:1] == ["run"]:
        argv = argv[1:]
    cfg = parse_args(argv)
    tx, rx, _ = _configs(cfg)
    spec = build_sweep_spec(cfg)
    try:
        rows = run_sweep(spec)
    except SweepError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        emit(rows, cfg.fmt, cfg.out, _metadata(cfg, tx, rx))
    except OSError as exc:
        print(f"error: cannot write {cfg.out}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
