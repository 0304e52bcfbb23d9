"""Acceptance gate: one test per shipped guarantee, one printed line each.

Every test records its verdict through _criteria.record before asserting, so
the terminal summary always shows the full pass/fail table even when an
individual criterion trips.
"""

import math
import time

import numpy as np

import _criteria
from nfmimo import (
    ArrayConfig,
    Position3D,
    Scenario,
    build_channel_matrix,
    capacity_edof,
    correlation_matrix,
    edof_closed_form,
    edof_eigen,
    edof_exact,
    eigen_rank,
    rx_positions,
    tx_positions,
)
from nfmimo.cli import RunConfig, build_sweep_spec, main
from nfmimo.sweeps import run_sweep

SEED = 20260814

# measured once on first run of the 1% tracking check and frozen; guards the
# implementation against drift independently of whether the bound itself holds
MAX_CLOSED_FORM_DEV = 0.2250536876631198

SISO_CAPACITY_70DB = 23.25349680848103


def random_configs(rng, n=50):
    """Seeded grab bag of small links: array shapes, range, and carrier."""
    out = []
    while len(out) < n:
        nh, nv = int(rng.integers(1, 17)), int(rng.integers(1, 5))
        if nh * nv > 32:
            continue
        mh, mv = int(rng.integers(1, 5)), int(rng.integers(1, 3))
        x = float(rng.uniform(0.5, 20.0))
        f = float(rng.uniform(6e9, 24e9))
        tx = ArrayConfig(count_h=nh, count_v=nv, frequency_hz=f)
        rx = ArrayConfig(count_h=mh, count_v=mv, frequency_hz=f)
        out.append((tx, rx, Scenario(rx_center=Position3D(x, 0.0, 0.0))))
    return out


def stock(x=1.0, mode="exact"):
    tx = ArrayConfig(count_h=64, count_v=2, frequency_hz=13e9)
    rx = ArrayConfig(count_h=4, count_v=2, frequency_hz=13e9)
    return tx, rx, Scenario(rx_center=Position3D(x, 0.0, 0.0), distance_mode=mode)


def test_criterion_1_trace_edof_matches_eigen_oracle():
    """Trace-form EDoF agrees with the eigenvalue definition to 1e-9."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for tx, rx, s in random_configs(rng):
        r = correlation_matrix(build_channel_matrix(tx, rx, s))
        a, b = edof_exact(r).beta, edof_eigen(r).beta
        worst = max(worst, abs(a - b) / b)
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-9 and elapsed < 10.0
    _criteria.record(
        1,
        "trace EDoF vs eigen oracle",
        ok,
        f"max rel dev {worst:.3e} over 50 random links in {elapsed:.2f} s (tol 1e-9, budget 10 s)",
    )
    assert worst <= 1e-9
    assert elapsed < 10.0


def test_criterion_2_closed_form_tracks_fresnel_exact():
    """Closed-form EDoF stays within 1% of the exact EDoF of the same
    Fresnel-regime correlation matrix at every meter mark from 1 to 10."""
    t0 = time.perf_counter()
    tx, rx, _ = stock()
    devs = []
    for i in range(1, 11):
        s = Scenario(rx_center=Position3D(float(i), 0.0, 0.0), distance_mode="fresnel")
        beta_ref = edof_exact(correlation_matrix(build_channel_matrix(tx, rx, s))).beta
        beta_cf = edof_closed_form(tx, rx, s).beta
        devs.append(abs(beta_cf / beta_ref - 1.0))
    elapsed = time.perf_counter() - t0
    max_dev = max(devs)
    ok = max_dev <= 0.01 and elapsed < 30.0
    _criteria.record(
        2,
        "closed-form EDoF within 1% of Fresnel-regime exact",
        ok,
        f"max rel dev {max_dev:.6g} at 1 m, falling to {devs[-1]:.3g} at 10 m "
        f"in {elapsed:.2f} s (tol 0.01, budget 30 s)",
    )
    # regression pin: the measured curve itself must not drift
    assert math.isclose(max_dev, MAX_CLOSED_FORM_DEV, rel_tol=1e-9)
    assert elapsed < 30.0
    assert max_dev <= 0.01, (
        "the closed form substitutes the boresight amplitude 1/(4 pi x) for "
        "every pair amplitude 1/(4 pi d); at meter ranges that inflates "
        "tr(R^2) by ~31% and pushes the EDoF ratio to 0.775, so the 1% band "
        "only opens up beyond roughly 6 m"
    )


def test_criterion_3_stock_sweep_capacity_decays_concavely():
    """The stock 1..10 m sweep yields strictly decreasing capacity with
    strictly shrinking step-to-step losses."""
    rows = run_sweep(build_sweep_spec(RunConfig()))
    caps = [row.cap_edof for row in rows]
    gaps = [a - b for a, b in zip(caps, caps[1:])]
    mono = all(g > 0.0 for g in gaps)
    shrink = all(a > b + 1e-9 for a, b in zip(gaps, gaps[1:]))
    ok = len(rows) == 19 and mono and shrink
    _criteria.record(
        3,
        "stock distance sweep decays concavely",
        ok,
        f"{len(rows)} points, capacity {caps[0]:.4f} -> {caps[-1]:.4f} bit/s/Hz, "
        f"decrements {gaps[0]:.4f} -> {gaps[-1]:.4f}",
    )
    assert len(rows) == 19
    assert mono
    assert shrink


def test_criterion_4_receive_count_orders_near_converges_far():
    """Against the stock 128-element transmitter, more receive elements mean
    strictly more EDoF at 1 m; by 1000 m the three curves agree within 5%."""
    tx, _, _ = stock()
    shapes = [(4, 2), (32, 2), (64, 2)]
    near, far = [], []
    for ch, cv in shapes:
        rx = ArrayConfig(count_h=ch, count_v=cv, frequency_hz=13e9)
        for x, sink in ((1.0, near), (1000.0, far)):
            s = Scenario(rx_center=Position3D(x, 0.0, 0.0))
            sink.append(edof_exact(correlation_matrix(build_channel_matrix(tx, rx, s))).beta)
    ordered = near[0] < near[1] < near[2]
    spread = (max(far) - min(far)) / min(far)
    ok = ordered and spread < 0.05
    _criteria.record(
        4,
        "receive-count family: ordered near, converged far",
        ok,
        f"EDoF at 1 m {near[0]:.3f} < {near[1]:.3f} < {near[2]:.3f}; "
        f"1000 m spread {spread:.3e} (tol 0.05)",
    )
    assert ordered
    assert spread < 0.05


def test_criterion_5_far_field_collapses_to_one_mode():
    """EDoF of the stock link falls monotonically with range and lands within
    5% of a single mode by 1000 m."""
    betas = []
    for x in (1.0, 10.0, 100.0, 1000.0):
        tx, rx, s = stock(x)
        betas.append(edof_exact(correlation_matrix(build_channel_matrix(tx, rx, s))).beta)
    mono = all(a >= b for a, b in zip(betas, betas[1:]))
    ok = mono and betas[-1] <= 1.05
    _criteria.record(
        5,
        "far-field collapse to one mode",
        ok,
        f"EDoF {betas[0]:.4f} at 1 m -> {betas[-1]:.7f} at 1000 m (cap 1.05)",
    )
    assert mono
    assert betas[-1] <= 1.05


def test_criterion_6_invariants_on_random_links():
    """Physical invariants hold on every seeded random link: inverse-distance
    magnitudes, Hermitian PSD correlation, scale-free EDoF, reciprocity, and
    1 <= EDoF <= rank <= min(M, N)."""
    rng = np.random.default_rng(SEED)
    checked = 0
    for tx, rx, s in random_configs(rng):
        h = build_channel_matrix(tx, rx, s)
        tp, rp = tx_positions(tx), rx_positions(rx, s)
        d = np.sqrt(((rp[:, None, :] - tp[None, :, :]) ** 2).sum(axis=2))
        assert float(np.max(np.abs(np.abs(h) * 4.0 * np.pi * d - 1.0))) <= 1e-12

        r = correlation_matrix(h)
        scale = float(np.max(np.abs(r)))
        assert float(np.max(np.abs(r - r.conj().T))) <= 1e-12 * scale
        lam = np.linalg.eigvalsh(r)
        assert float(lam[0]) >= -1e-10 * float(lam[-1])

        beta = edof_exact(r).beta
        assert math.isclose(edof_exact(3.7 * r).beta, beta, rel_tol=1e-12)
        assert math.isclose(beta, edof_exact(h @ h.conj().T).beta, rel_tol=1e-9)

        rank = eigen_rank(r)
        assert beta >= 1.0 - 1e-12
        assert beta <= rank + 1e-9
        assert rank <= min(h.shape)
        checked += 1
    _criteria.record(
        6,
        "channel and metric invariants on random links",
        True,
        f"{checked} seeded links: magnitude law, Hermitian PSD, scale-free "
        f"EDoF, reciprocity, 1 <= EDoF <= rank <= min(M, N)",
    )
    assert checked == 50


def test_criterion_7_single_link_capacity_anchor():
    """A centered 1x1-vs-1x1 link at 1 m has EDoF exactly 1 and hits the
    textbook log2(1 + SNR) capacity at 70 dB."""
    cfg = ArrayConfig(count_h=1, count_v=1, frequency_hz=13e9)
    s = Scenario(rx_center=Position3D(1.0, 0.0, 0.0), indexing_mode="centered")
    r = correlation_matrix(build_channel_matrix(cfg, cfg, s))
    beta = edof_exact(r).beta
    cap = capacity_edof(beta, 1, 70.0).capacity_bps_hz
    ok = beta == 1.0 and abs(cap - SISO_CAPACITY_70DB) <= 1e-9
    _criteria.record(
        7,
        "single-link capacity anchor",
        ok,
        f"EDoF {beta}, capacity {cap:.9f} vs {SISO_CAPACITY_70DB} (abs tol 1e-9)",
    )
    assert beta == 1.0
    assert abs(cap - SISO_CAPACITY_70DB) <= 1e-9


def test_criterion_8_cli_output_is_reproducible(tmp_path):
    """Two stock CLI runs exit 0 and write byte-identical tables."""
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    rc_a = main(["--out", str(a)])
    rc_b = main(["--out", str(b)])
    same = a.read_bytes() == b.read_bytes()
    ok = rc_a == 0 and rc_b == 0 and same
    _criteria.record(
        8,
        "byte-identical CLI reruns",
        ok,
        f"exit codes {rc_a}/{rc_b}, {a.stat().st_size} bytes, identical={same}",
    )
    assert rc_a == 0 and rc_b == 0
    assert same
