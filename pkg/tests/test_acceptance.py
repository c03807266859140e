"""Acceptance checks, one test per criterion, each printing a PASS/FAIL line."""

import random
import time
from math import comb

import pytest

from staircase.census import (
    enumerate_all_artinian,
    enumerate_strongly_stable,
    random_artinian,
    search_extremes,
)
from staircase.core import colength, format_ideal, is_strongly_stable, min_x_power, power_ideal
from staircase.families import SPECIAL_39, counterexample_ideal, lex_truncation_ideal
from staircase.formulas import (
    e_ideal_colength,
    e_ideal_socle_part,
    e_ideal_tangent_formula,
    fat_point_graded_dim,
    fat_point_total,
    minimal_level,
)
from staircase.oracle import hom_dim, two_var_length_identity_check
from staircase.tangent import (
    box_degrees,
    duality_slice_pairs,
    is_smooth_monomial_point,
    ppn_column,
    ppn_upper_bound,
    tangent_report,
)
from staircase.core import z_slice_table


@pytest.fixture
def report_line(capsys):
    """Print one status line per criterion, bypassing output capture."""

    def emit(number, title, ok, detail=""):
        with capsys.disabled():
            print(f"\n[criterion {number:>2}] {'PASS' if ok else 'FAIL'}  {title}  {detail}".rstrip())
        assert ok, f"criterion {number}: {title} {detail}"

    return emit


@pytest.fixture(scope="module")
def all_small():
    return [I for d in range(1, 9) for I in enumerate_all_artinian(3, d)]


@pytest.fixture(scope="module")
def all_small_reports(all_small):
    return [tangent_report(I) for I in all_small]


def test_criterion_01_fat_point_totals(report_line):
    t0 = time.perf_counter()
    totals = [tangent_report(power_ideal(3, r)).total for r in range(1, 6)]
    elapsed = time.perf_counter() - t0
    expected = [comb(r + 2, 2) * comb(r + 1, 2) for r in range(1, 6)]
    ok = totals == expected == [3, 18, 60, 150, 315] and elapsed < 1.0
    report_line(1, "fat-point totals", ok, f"{totals} in {elapsed:.3f}s")


def test_criterion_02_fat_point_signatures(report_line):
    bad = []
    for r in range(1, 6):
        rep = tangent_report(power_ideal(3, r))
        hi, lo = comb(r + 3, 4), comb(r + 2, 4)
        if not (rep["ppn"] == rep["pnp"] == rep["npp"] == hi and rep["pnn"] == rep["npn"] == rep["nnp"] == lo):
            bad.append(r)
    report_line(2, "fat-point signatures", not bad, f"failing r: {bad}" if bad else "r = 1..5")


def test_criterion_03_graded_fat_point(report_line):
    bad = []
    checked = 0
    for r in range(1, 5):
        I = power_ideal(3, r)
        rep = tangent_report(I, exhaustive=True)
        for alpha in map(tuple, box_degrees(I).tolist()):
            checked += 1
            if rep.per_degree.get(alpha, 0) != fat_point_graded_dim(3, r, alpha):
                bad.append((r, alpha))
    report_line(3, "graded fat-point dims", not bad, f"{checked} degrees, {len(bad)} mismatches")


def test_criterion_04_pairing(report_line, all_small_reports):
    t0 = time.perf_counter()
    bad = [format_ideal(rep.ideal) for rep in all_small_reports
           if not (rep["ppn"] == rep["nnp"] + rep.d and rep["pnp"] == rep["npn"] + rep.d
                   and rep["npp"] == rep["pnn"] + rep.d)]
    elapsed = time.perf_counter() - t0
    report_line(4, "pairing", not bad and len(all_small_reports) == 341,
                f"{len(all_small_reports)} ideals, {len(bad)} failures, {elapsed:.2f}s")


def test_criterion_05_parity(report_line, all_small_reports):
    bad = [rep.ideal for rep in all_small_reports if (rep.total - rep.d) % 2]
    report_line(5, "parity", not bad, f"{len(all_small_reports)} ideals, {len(bad)} failures")


def test_criterion_06_duality_slices(report_line, all_small):
    bad = []
    pairs = 0
    for I in all_small:
        for ij, (lhs, rhs) in duality_slice_pairs(I).items():
            pairs += 1
            if lhs != rhs:
                bad.append((format_ideal(I), ij))
    report_line(6, "duality slices", not bad, f"{pairs} slice pairs, {len(bad)} failures")


def test_criterion_07_smoothness(report_line, all_small_reports):
    bad = [rep.ideal for rep in all_small_reports
           if all(rep[s] == 0 for s in ("pnn", "npn", "nnp")) != (rep.total == 3 * rep.d)]
    ss = [I for d in range(1, 13) for I in enumerate_strongly_stable(d)]
    bad_ss = [I for I in ss if is_smooth_monomial_point(I) != (min_x_power(I) == 1)]
    report_line(7, "smoothness", not bad and not bad_ss,
                f"{len(all_small_reports)} ideals + {len(ss)} strongly stable")


def test_criterion_08_haiman_two_variables(report_line):
    bad = []
    count = 0
    for d in range(1, 11):
        for I in enumerate_all_artinian(2, d):
            count += 1
            rep = tangent_report(I)
            ok = rep["pn"] == rep["np"] == d and rep.total == 2 * d
            for i in range(I.pure_powers[0] + 1):
                b_i = sum(1 for g in I.standard_monomials if g[0] == i)
                ok &= rep.x_degree_slices.get(i, 0) == b_i
                ok &= rep.x_degree_slices.get(-i - 1, 0) == b_i
            if not ok:
                bad.append(format_ideal(I))
    report_line(8, "two-variable dimension 2d", not bad, f"{count} ideals, {len(bad)} failures")


def test_criterion_09_oracle_equivalence(report_line):
    t0 = time.perf_counter()
    rng = random.Random(9)
    ideals = [I for d in range(1, 7) for I in enumerate_all_artinian(3, d)]
    ideals += [random_artinian(3, rng.randint(1, 12), rng) for _ in range(200)]
    bad = []
    for I in ideals:
        total = tangent_report(I).total
        for p in (2, 32003):
            if hom_dim(I, I, p) != total:
                bad.append((format_ideal(I), p))
    elapsed = time.perf_counter() - t0
    report_line(9, "oracle equivalence", not bad,
                f"{len(ideals)} ideals x 2 primes, {len(bad)} mismatches, {elapsed:.1f}s")


def test_criterion_10_two_variable_length_identity(report_line):
    rng = random.Random(10)
    bad = []
    for _ in range(500):
        I = random_artinian(2, rng.randint(1, 12), rng)
        J = random_artinian(2, rng.randint(1, 12), rng)
        lhs, rhs, ok = two_var_length_identity_check(I, J)
        if not ok:
            bad.append((format_ideal(I), format_ideal(J), lhs, rhs))
    report_line(10, "two-variable length identity", not bad, f"500 pairs, {len(bad)} failures")


def test_criterion_11_lex_truncation_formula(report_line):
    rows = []
    for r in (3, 4, 5):
        d = e_ideal_colength(r)
        E = lex_truncation_ideal(d)
        rows.append((r, d, colength(E), tangent_report(E).total, e_ideal_tangent_formula(r)))
    ok = all(d == c and t == f for _, d, c, t, f in rows)
    ok &= [f for *_, f in rows] == [84, 183, 359]
    report_line(11, "lexsegment truncation formula", ok,
                "; ".join(f"r={r} d={d} total={t} formula={f}" for r, d, _, t, f in rows))


def test_criterion_12_counterexamples(report_line):
    bad = []
    cases = 0
    for r in range(3, 7):
        for i in range(2, r):
            cases += 1
            J = counterexample_ideal(r, i)
            d = colength(J)
            rep_j = tangent_report(J)
            rep_e = tangent_report(lex_truncation_ideal(d))
            if not rep_j.total > rep_e.total:
                bad.append((r, i, rep_j.total, rep_e.total))
    rep_j = tangent_report(counterexample_ideal(3, 2))
    rep_e = tangent_report(lex_truncation_ideal(16))
    split_ok = (rep_j.socle_dim == rep_e.socle_dim == e_ideal_socle_part(3) == 77
                and rep_e.non_socle == 7 and rep_j.total == 88)
    report_line(12, "counterexamples", not bad and split_ok,
                f"{cases} (r, i) cases; r=3 socle 77/77, non-socle {rep_e.non_socle} vs {rep_j.non_socle}")


@pytest.mark.slow
def test_criterion_13_census_39(report_line):
    t0 = time.perf_counter()
    records = search_extremes(39)
    elapsed = time.perf_counter() - t0
    free = [r for r in records if r.min_x_power > 3]
    best = max(r.total for r in free)
    argmax = [r for r in free if r.total == best]
    ok = len(records) == 39098 and len(free) == 2654
    ok &= len(argmax) == 1 and argmax[0].ideal == format_ideal(SPECIAL_39)
    filtered = search_extremes(39, filter_xpow=3)
    ok &= [r.ideal for r in filtered] == [r.ideal for r in free]
    report_line(13, "census at d = 39", ok,
                f"{len(records)} ideals, {len(free)} x^3-free, max {best} unique={len(argmax) == 1}, {elapsed:.0f}s")


def test_criterion_14_extremal_subspaces(report_line):
    bad = []
    count = 0
    for r in (2, 3, 4):
        fat = power_ideal(3, r)
        top, low = comb(r + 3, 4), comb(r + 2, 4)
        for I in enumerate_strongly_stable(comb(r + 2, 3)):
            count += 1
            rep = tangent_report(I)
            for sig, bound in (("ppn", top), ("pnp", top), ("nnp", low), ("npn", low)):
                if rep[sig] > bound or (rep[sig] == bound and I != fat):
                    bad.append((format_ideal(I), sig))
    report_line(14, "extremal subspaces", not bad, f"{count} ideals at d = 4, 10, 20")


def test_criterion_15_global_bounds(report_line):
    bad = []
    count = 0
    for d in range(1, 21):
        r = minimal_level(d)
        cap = fat_point_total(r)
        for I in enumerate_strongly_stable(d):
            count += 1
            total = tangent_report(I).total
            p = min_x_power(I)
            if 3 * total > 4 * cap or total > (2 * p + 1) * d:
                bad.append(format_ideal(I))
            elif 4 * p <= 3 * r + 1 and total > cap:
                bad.append(format_ideal(I))
    report_line(15, "global bounds", not bad, f"{count} strongly stable ideals, d <= 20")


def test_criterion_16_ppn_column_bound(report_line):
    bad = []
    columns = 0
    for d in range(1, 13):
        for I in enumerate_strongly_stable(d):
            rep = tangent_report(I)
            for a1, a2 in z_slice_table(I).support():
                columns += 1
                if ppn_column(rep, a1, a2) > ppn_upper_bound(I, a1, a2):
                    bad.append((format_ideal(I), a1, a2))
    assert all(is_strongly_stable(I) for I in enumerate_strongly_stable(12))
    report_line(16, "ppn column bound", not bad, f"{columns} columns, {len(bad)} failures")
