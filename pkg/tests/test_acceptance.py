"""Acceptance suite: one test per criterion, each printing a PASS line and
enforcing its stated tolerance and runtime budget.

Criterion 5 (the q=7 census) is the long run; it goes through the CLI with
--confirm-long exactly as a user would launch it, and still finishes in
seconds thanks to the table-driven engine.
"""

import json
import time
from fractions import Fraction

import pytest

from rootcensus.census import (
    CensusConfig,
    MONTECARLO,
    fq_pair_census,
    mv_census,
    unlucky_sim,
    zn_root_census,
)
from rootcensus.cli import main
from rootcensus.incexc import b_direct, b_from_t, moment_check, t_vector
from rootcensus.multipoly import ShapedMultiPoly
from rootcensus.numtheory import a006579, is_prime_power, theory_var_zn
from rootcensus.polytext import parse_terms
from rootcensus.rings import EXTENSION_FIELD, field_make
from rootcensus.serialize import result_json
from rootcensus.validate import (
    incexc_check_exhaustive,
    incexc_check_random,
    resultant_check,
)

REMARK_VARIANCES = (
    Fraction(1, 2), Fraction(2, 3), Fraction(1), Fraction(4, 5), Fraction(3, 2),
    Fraction(6, 7), Fraction(3, 2), Fraction(4, 3), Fraction(17, 10),
    Fraction(10, 11), Fraction(7, 3), Fraction(12, 13), Fraction(25, 14),
    Fraction(2), Fraction(2),
)

TABLE1_F = (96606636, 110666892, 56053746, 17287200, 1728720, 0, 0, 132055)
TABLE1_B = (96018048, 112021056, 56010528, 15558480, 2593080, 259308, 14406, 343)

CRITERION4_CONFIGS = ((2, 2, 2), (3, 2, 2), (4, 2, 2), (5, 2, 2), (2, 3, 3))


def report(criterion, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {criterion}: {status} {detail}")
    assert ok, f"criterion {criterion} failed: {detail}"


def test_criterion_1_remark_table_exact():
    start = time.monotonic()
    variances = []
    for n in range(2, 17):
        res = zn_root_census(n, 2, CensusConfig(workers=1))
        assert res.mean == 1, f"E[X] != 1 at n={n}"
        variances.append(res.variance)
    elapsed = time.monotonic() - start
    report(1, tuple(variances) == REMARK_VARIANCES and elapsed < 60,
           f"(variance table n=2..16 exact, {elapsed:.1f}s)")


def test_criterion_2_variance_degree_independent():
    start = time.monotonic()
    for n in range(2, 13):
        values = {m: zn_root_census(n, m).variance for m in (2, 3, 4)}
        assert values[2] == values[3] == values[4], f"variance varies with m at n={n}"
        assert values[2] == theory_var_zn(n)
    elapsed = time.monotonic() - start
    report(2, elapsed < 300, f"(m=2,3,4 identical for n=2..12, {elapsed:.1f}s)")


def test_criterion_3_divisor_sum_identities():
    start = time.monotonic()
    for n in range(2, 10_001):
        assert theory_var_zn(n) * n == a006579(n), f"identity fails at n={n}"
        pk = is_prime_power(n)
        if pk is not None:
            p, k = pk
            assert theory_var_zn(n) == Fraction(k * (p - 1), p), f"prime power {n}"
    elapsed = time.monotonic() - start
    report(3, elapsed < 10, f"(n up to 10^4, {elapsed:.1f}s)")


def test_criterion_4_theorem2_small_fields_exact():
    start = time.monotonic()
    assert field_make(4).spec.kind == EXTENSION_FIELD
    for q, n, m in CRITERION4_CONFIGS:
        res = fq_pair_census(q, n, m, CensusConfig(workers=4))
        assert res.mean == 1, f"mean != 1 at {(q, n, m)}"
        assert res.variance == Fraction(q - 1, q), f"variance at {(q, n, m)}"
    elapsed = time.monotonic() - start
    report(4, elapsed < 180, f"(5 exhaustive runs, 4 workers, {elapsed:.1f}s)")


def test_criterion_5_table1_reproduction(tmp_path):
    start = time.monotonic()
    out = tmp_path / "table1"
    code = main([
        "pair-census", "--q", "7", "--deg-f", "2", "--deg-g", "2",
        "--mode", "exhaustive", "--workers", "8", "--confirm-long",
        "--out", str(out), "--format", "both",
    ])
    assert code == 0
    data = json.loads((tmp_path / "table1.json").read_text())
    freq = tuple(int(x) for x in data["freq"])
    assert freq == TABLE1_F, f"F_k mismatch: {freq}"
    ref = tuple(
        Fraction(int(b["num"]), int(b["den"])) for b in data["binomial_ref"])
    assert ref == TABLE1_B, f"B_k mismatch: {ref}"
    elapsed = time.monotonic() - start
    report(5, elapsed < 1800, f"(q=7 exhaustive, 8 workers, {elapsed:.1f}s)")


def test_criterion_6_resultant_property_suite():
    start = time.monotonic()
    rep = resultant_check(trials=1000, seed=20240809, qs=(5, 7, 11),
                          nvars_choices=(2, 3), max_deg=4)
    elapsed = time.monotonic() - start
    report(6, rep.passed and elapsed < 120,
           f"({rep.trials} pairs, {rep.points_checked} points, "
           f"{len(rep.failures)} failures, {elapsed:.1f}s)")


def test_criterion_7_inclusion_exclusion():
    start = time.monotonic()
    exhaustive = incexc_check_exhaustive(max_sets=3, max_universe=4)
    randomized = incexc_check_random(1000, seed=7, max_sets=6, max_universe=50)
    elapsed = time.monotonic() - start
    ok = exhaustive.passed and randomized.passed and elapsed < 30
    report(7, ok, f"({exhaustive.systems} exhaustive + "
                  f"{randomized.systems} random systems, {elapsed:.1f}s)")


def test_criterion_8_theorem3_tiny_exhaustive():
    start = time.monotonic()
    res = mv_census(2, 3, 1, 1)
    elapsed = time.monotonic() - start
    ok = (res.population == 64 and res.mean == 2 and res.variance == 1
          and elapsed < 1)
    report(8, ok, f"(64 pairs, mean {res.mean}, var {res.variance}, "
                  f"{elapsed:.2f}s)")


def test_criterion_9_theorem3_monte_carlo():
    start = time.monotonic()
    res = mv_census(5, 3, 2, 2, CensusConfig(mode=MONTECARLO, samples=100_000,
                                             seed=12345, workers=1))
    st = res.mc
    mean_ok = abs(st.mean - 5.0) <= 3 * st.stderr_mean
    var_ok = abs(st.variance - 4.0) <= 4 * st.stderr_variance
    rate = res.extras["point_rate"]
    rate_ok = abs(rate - 0.2) <= 3 * res.extras["point_rate_stderr"]
    elapsed = time.monotonic() - start
    report(9, mean_ok and var_ok and rate_ok and elapsed < 120,
           f"(mean {st.mean:.4f}+-{st.stderr_mean:.4f}, "
           f"var {st.variance:.4f}+-{st.stderr_variance:.4f}, "
           f"rate {rate:.5f}, {elapsed:.1f}s)")


def test_criterion_10_pathological_regression():
    ring = field_make(101)
    ahat = ShapedMultiPoly.from_terms(ring, 3, parse_terms("x0^2 + x2", 3))
    bhat = ShapedMultiPoly.from_terms(
        ring, 3, parse_terms("x0^2 + x2 + x1 - 1", 3))
    rep = unlucky_sim(101, 150_000, 7, ahat=ahat, bhat=bhat)
    count, bad = rep.slice_counts.get(1, (0, 0))
    slice_ok = count >= 1000 and bad == count
    overall_ok = abs(rep.frequency - 1 / 101) <= 3 * rep.stderr
    report(10, slice_ok and overall_ok,
           f"(x1=1 slice {bad}/{count} unlucky, overall "
           f"{rep.frequency:.5f} vs 1/101={1 / 101:.5f})")


def test_criterion_11_worker_determinism():
    jsons = {}
    for workers in (1, 2, 8):
        blobs = []
        for q, n, m in CRITERION4_CONFIGS:
            res = fq_pair_census(q, n, m, CensusConfig(workers=workers))
            blobs.append(result_json(res))
        jsons[workers] = blobs
    ok = jsons[1] == jsons[2] == jsons[8]
    report(11, ok, "(criterion-4 runs byte-identical at workers 1, 2, 8)")
