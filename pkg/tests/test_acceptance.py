"""Acceptance suite: one test per shipped guarantee, one report line each.

Every test funnels through _record(), so the terminal summary always shows
a pass/fail line per criterion (see conftest.py).  Expected values are
either exact mathematical facts of the synthetic inputs (line/plane),
frozen outputs of the independent brute-force counter (noise kept-scale
sets), or direct cross-checks against that counter.
"""

import math
import time

import numpy as np
import pytest

from boxmerge import cli
from boxmerge.core import PointSet, box_merge_series, initial_partition, make_scale_plan, merge_halve
from boxmerge.errors import InsufficientPoints
from boxmerge.estimator import estimate_dimension
from boxmerge.imaging import FIXTURE_KINDS, gen_fixture, gen_noise
from boxmerge.oracle import naive_series

RESULTS: list[tuple[int, str, bool, str]] = []


def _record(num: int, label: str, ok: bool, detail: str) -> None:
    RESULTS.append((num, label, ok, detail))
    print(f"criterion {num} {'PASS' if ok else 'FAIL'} - {label}: {detail}")
    assert ok, f"criterion {num} ({label}) failed: {detail}"


def test_criterion_1_diagonal_line():
    """A 1-D curve through the 5-D space measures D = 1 exactly.

    n(s) = s at every scale; with 256 points the saturation threshold sits
    at 7.2, so the finest entry (log2 n = 8) is dropped and the fit runs on
    the remaining seven exact powers of two.  The slope is 1 either way.
    """
    ps = gen_fixture("line")
    started = time.perf_counter()
    est = estimate_dimension(ps)
    elapsed = time.perf_counter() - started
    err = abs(est.dimension - 1.0)
    ok = err <= 1e-9 and elapsed < 1.0
    _record(
        1,
        "diagonal line D=1",
        ok,
        f"D={est.dimension:.12f} |err|={err:.2e} (tol 1e-9), "
        f"R^2={est.r_squared:.6f}, {elapsed*1000:.0f} ms (< 1000)",
    )


def test_criterion_2_gradient_plane():
    """A full-frame smooth gradient measures D = 2 exactly.

    n(s) = s^2 for all eight scales; P = 65536 puts the threshold at
    14.4, rejecting exactly the s=256 entry (log2 n = 16).
    """
    ps = gen_fixture("plane")
    started = time.perf_counter()
    est = estimate_dimension(ps)
    elapsed = time.perf_counter() - started
    err = abs(est.dimension - 2.0)
    rejected_ok = est.rejected == ((8.0, 16.0),)
    ok = err <= 1e-9 and rejected_ok and elapsed < 2.0
    _record(
        2,
        "gradient plane D=2",
        ok,
        f"D={est.dimension:.12f} |err|={err:.2e} (tol 1e-9), "
        f"rejected={'s=256 only' if rejected_ok else est.rejected}, "
        f"{elapsed*1000:.0f} ms (< 2000)",
    )


# Kept-scale sets per noise level, frozen from brute-force occupancy
# enumeration (expected distinct boxes = bins * (1 - (1 - 1/bins)^draws)
# per spatial cell, checked against naive_series before any tolerance was
# chosen).  The rejected log2 n values clear the 14.4 threshold by >= 0.38,
# about 40 standard deviations of the occupancy count, so the sets are
# stable across seeds.
_NOISE_KEPT_SCALES = {1: (16, 8, 4, 2), 2: (8, 4, 2), 3: (4, 2)}
_NOISE_TOLERANCE = {1: 0.10, 2: 0.15, 3: 0.15}


def test_criterion_3_noise_dimensions():
    """Uniform noise in k colour channels measures D = 2 + k (10 seeds)."""
    details = []
    ok = True
    for channels in (1, 2, 3):
        target = 2 + channels
        dims = []
        for seed in range(10):
            est = estimate_dimension(gen_noise(channels, seed))
            dims.append(est.dimension)
            kept_scales = tuple(int(round(2**x)) for x, _ in est.kept)
            if kept_scales != _NOISE_KEPT_SCALES[channels]:
                ok = False
                details.append(f"noise{channels} seed {seed} kept {kept_scales}")
        mean = sum(dims) / len(dims)
        tol = _NOISE_TOLERANCE[channels]
        if abs(mean - target) > tol:
            ok = False
        details.append(f"noise{channels} mean D={mean:.4f} (target {target}±{tol})")
    _record(3, "noise D=3/4/5 over 10 seeds", ok, "; ".join(details))


def test_criterion_4_oracle_equivalence():
    """Merged counts equal brute-force counts exactly, everywhere tried.

    100 seeded random point sets across E in {1, 2, 3, 5} with axis
    lengths in [4, 256] and up to 10^4 points, plus all five fixtures.
    """
    rng = np.random.default_rng(20260819)
    checked = 0
    ok = True
    first_diff = ""
    for _ in range(100):
        ndim = int(rng.choice([1, 2, 3, 5]))
        lengths = rng.integers(4, 257, size=ndim)
        count = int(rng.integers(1, 10_001))
        pts = rng.integers(0, lengths, size=(count, ndim))
        ps = PointSet([int(length) for length in lengths], pts)
        if list(box_merge_series(ps).entries) != naive_series(ps):
            ok = False
            first_diff = f"random set E={ndim} lengths={lengths.tolist()}"
            break
        checked += 1
    if ok:
        for kind in FIXTURE_KINDS:
            ps = gen_fixture(kind, seed=0)
            if list(box_merge_series(ps).entries) != naive_series(ps):
                ok = False
                first_diff = f"fixture {kind}"
                break
            checked += 1
    _record(
        4,
        "oracle equivalence",
        ok,
        f"{checked} point sets agree entry-for-entry" if ok else f"mismatch: {first_diff}",
    )


def _random_pointset(rng: np.random.Generator) -> PointSet:
    ndim = int(rng.integers(1, 6))
    lengths = rng.integers(2, 65, size=ndim)
    count = int(rng.integers(1, 201))
    pts = rng.integers(0, lengths, size=(count, ndim))
    return PointSet([int(length) for length in lengths], pts)


def test_criterion_5_invariants():
    """Five structural invariants over 1000 seeded cases (200 each)."""
    rng = np.random.default_rng(55)
    cases = 0
    ok = True
    failure = ""

    def check(name, condition):
        nonlocal ok, failure
        if ok and not condition:
            ok = False
            failure = name

    for _ in range(200):  # monotone counts
        counts = box_merge_series(_random_pointset(rng)).counts
        check("monotonicity", all(a >= b for a, b in zip(counts, counts[1:])))
        cases += 1
    for _ in range(200):  # 2^E halving bound
        ps = _random_pointset(rng)
        counts = box_merge_series(ps).counts
        bound = 2 ** ps.ndim
        check("2^E bound", all(f <= bound * c for f, c in zip(counts, counts[1:])))
        cases += 1
    for _ in range(200):  # axis permutation
        ps = _random_pointset(rng)
        perm = rng.permutation(ps.ndim)
        permuted = PointSet([ps.axes[i].length for i in perm], ps.coords[:, perm])
        check(
            "axis permutation",
            box_merge_series(permuted).entries == box_merge_series(ps).entries,
        )
        cases += 1
    for _ in range(200):  # duplicate insertion
        ps = _random_pointset(rng)
        doubled = np.vstack([ps.coords, ps.coords[rng.permutation(len(ps))]])
        rebuilt = PointSet([a.length for a in ps.axes], doubled)
        check("duplicate insertion", np.array_equal(rebuilt.coords, ps.coords))
        cases += 1
    for _ in range(200):  # merge == fresh partition at halved scale
        ps = _random_pointset(rng)
        plan = make_scale_plan(ps.axes)
        table = initial_partition(ps, plan.s_max)
        same = True
        for s in plan.scales[1:]:
            table = merge_halve(table)
            if not np.array_equal(table.rows, initial_partition(ps, s).rows):
                same = False
                break
        check("coarsening identity", same)
        cases += 1

    _record(
        5,
        "invariant suite",
        ok,
        f"{cases} cases across 5 invariants" if ok else f"violated: {failure}",
    )


def test_criterion_6_single_point():
    """One point: every scale counts one box, the fit is a flat D = 0 line.

    The cut-off threshold is 0.9*log2(1) = 0 and every log-count is 0, so
    rejection (strictly greater) never fires.  With only one scale in the
    ladder the slope is undefined and InsufficientPoints is raised instead.
    """
    ps = PointSet([256, 256, 256, 256, 256], [(3, 7, 11, 200, 5)])
    est = estimate_dimension(ps)
    flat_ok = (
        est.series.counts == (1,) * 8
        and est.rejected == ()
        and abs(est.dimension) <= 1e-12
        and est.r_squared == 1.0
    )
    try:
        estimate_dimension(PointSet([2, 2], [(1, 0)]))
        raised = False
    except InsufficientPoints:
        raised = True
    ok = flat_ok and raised
    _record(
        6,
        "single point D=0",
        ok,
        f"slope={est.dimension:.2e} (tol 1e-12), all 8 scales kept; "
        f"single-scale ladder raises InsufficientPoints={raised}",
    )


def test_criterion_7_performance():
    """1 MP measures in under a second; 4 MP costs at most 6x 1 MP."""
    ps = gen_noise(3, seed=0, size=1024)  # 1024^2 = 1 MP
    started = time.perf_counter()
    estimate_dimension(ps)
    one_mp_s = time.perf_counter() - started
    # Scaling check via the bench used by the CLI; one retry absorbs
    # scheduler noise since the claim is about algorithmic growth.
    ratio = math.inf
    for _ in range(2):
        rows = cli.run_bench([1024, 2048], seed=0)
        ratio = min(ratio, rows[1].wall_ms / rows[0].wall_ms)
        if ratio <= 6.0:
            break
    ok = one_mp_s < 1.0 and ratio <= 6.0
    _record(
        7,
        "performance",
        ok,
        f"1 MP in {one_mp_s*1000:.0f} ms (< 1000); 4 MP / 1 MP ratio {ratio:.2f} (<= 6)",
    )


def test_criterion_8_synth_measure_round_trip(tmp_path):
    """Fixtures written to PNG and re-measured reproduce the CSV bit-for-bit."""
    ok = True
    bad = ""
    for kind in FIXTURE_KINDS:
        png = str(tmp_path / f"{kind}.png")
        csv = str(tmp_path / f"{kind}.csv")
        assert cli.main(["synth", kind, "-o", png, "--seed", "0"]) == 0
        assert cli.main(["measure", png, "--csv", csv]) == 0
        direct = cli.RunReport.from_estimate(
            estimate_dimension(gen_fixture(kind, seed=0)), wall_ms=0.0
        ).to_csv()
        with open(csv) as fh:
            via_files = fh.read()
        if via_files != direct:
            ok = False
            bad = kind
            break
    _record(
        8,
        "synth/measure round trip",
        ok,
        f"all {len(FIXTURE_KINDS)} fixture CSVs identical to in-memory reports"
        if ok
        else f"divergence on {bad}",
    )


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
