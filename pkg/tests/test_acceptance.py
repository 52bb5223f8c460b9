"""Acceptance gate: one test per criterion, each reporting a PASS/FAIL line.

The lines are printed in the pytest terminal summary under "acceptance criteria".
"""

import json
import subprocess
import sys
import time

from cubicsurf import data, reference
from cubicsurf.chars import decompose
from cubicsurf.cohomology import uconf2_cohomology
from cubicsurf.counting import (
    _count_polys,
    absolute_count,
    class_count_poly,
    config_count,
    exceptions,
    table2,
    table3,
    table4,
    uconf2_trace_poly,
    weighted_average,
)
from cubicsurf.qpoly import QPoly

q = QPoly.gen()

# the vanishing list as stated in prose; it names (1^-2,2^2,4) where the table's
# third column (and the census) have (1^2,2^-2,4^2)
STATED_EXCEPTIONS = {
    "1^6": [2, 3, 5],
    "1^2,2^2": [2, 3],
    "1^-2,2^4": [2, 3],
    "3^2": [2],
    "1^-2,2^2,4": [2],
    "2,4": [2],
    "1^-2,2,6": [2],
}


def _report(criterion, n, ok, detail):
    criterion(n, ok, detail)
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def test_criterion_1_class_counts(G, criterion):
    _count_polys.cache_clear()
    t0 = time.perf_counter()
    polys = {c.name: class_count_poly(c) for c in G.classes}
    elapsed = time.perf_counter() - t0
    matched = sum(polys[n].int_coeffs() == reference.TABLE1[n][0].int_coeffs() for n in polys)
    ok = matched == 25 and len(polys) == 25 and elapsed < 1.0
    _report(criterion, 1, ok, f"{matched}/25 class polynomials equal, {elapsed:.3f}s")


def test_criterion_2_distribution_tables(criterion):
    parts = []
    ok = True
    for name, rows, ref, n in (("points", table2(), reference.TABLE2, 9),
                               ("tritangents", table3(), reference.TABLE3, 12),
                               ("uconf2", table4(), reference.TABLE4, 19)):
        got = {r.key: r.value.int_coeffs() for r in rows}
        want = {k: v.int_coeffs() for k, v in ref.items()}
        good = got == want and len(rows) == n
        ok &= good
        parts.append(f"{name} {sum(got.get(k) == v for k, v in want.items())}/{n}")
    _report(criterion, 2, ok, ", ".join(parts))


def test_criterion_3_exceptions(G, criterion):
    got = {c.name: exceptions(c) for c in G.classes}
    want = {n: list(v[1]) for n, v in reference.TABLE1.items()}
    bad = [n for n in got if got[n] != want[n]]
    # the prose list agrees with the table except for one class label
    stated = {c.name: STATED_EXCEPTIONS.get(c.name, []) for c in G.classes}
    differ = sorted(n for n in got if got[n] != stated[n])
    typo = differ == ["1^-2,2^2,4", "1^2,2^-2,4^2"] and absolute_count("1^-2,2^2,4", 2) == 420
    ok = not bad and typo
    _report(criterion, 3, ok, f"{25 - len(bad)}/25 vanishing sets equal the table column; prose list differs "
                              f"only at {differ} (census: 420 surfaces of class (1^-2,2^2,4) over F_2)")


def test_criterion_4_group(table, criterion):
    code = ("import time; t=time.perf_counter(); from cubicsurf.weyl import weyl_group; "
            "G=weyl_group(); import json; print(json.dumps([time.perf_counter()-t, G.order, "
            "[[c.name, c.size, c.order, c.trace_V6] for c in G.classes]]))")
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True)
    elapsed, order, classes = json.loads(out.stdout)
    rows = {r.name: r for r in data.CLASS_TABLE}
    rows_ok = sum(1 for n, s, o, _ in classes if n in rows and (rows[n].size, rows[n].order) == (s, o))
    v6 = {n: data.CHARACTER_VALUES[n][data.BASE_IRREPS.index("V6")] for n in data.CLASS_NAMES}
    traces_ok = sum(1 for n, _, _, t in classes if v6.get(n) == t)
    ok = order == 51840 and len(classes) == 25 and rows_ok == 25 and traces_ok == 25 and elapsed < 60
    _report(criterion, 4, ok,
            f"order {order}, {len(classes)} classes, {rows_ok}/25 rows, {traces_ok}/25 V6 traces, {elapsed:.1f}s")


def test_criterion_5_character_table(G, table, criterion):
    failures = table.check_orthogonality()
    sq = sum(d * d for d in table.degrees().values())
    odd = [c.index for c in G.classes if not c.even]
    u_ok = len(odd) == 10 and all(table[u][i] == 0 for u in data.U_IRREPS for i in odd)
    ok = not failures and sq == 51840 and u_ok
    _report(criterion, 5, ok, f"orthogonality failures {len(failures)}, sum dim^2 = {sq}, U-rows vanish: {u_ok}")


def test_criterion_6_census(criterion):
    t0 = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "cubicsurf", "census", "--jobs", "8"],
                          capture_output=True, text=True, timeout=15 * 60)
    elapsed = time.perf_counter() - t0
    body = json.loads(proc.stdout[: proc.stdout.rindex("}") + 1])
    per = body["per_class"]
    agree = sum(e["expected"] == e["observed"] for e in per.values())
    exact = all(e["observed"] == absolute_count(n, 2) for n, e in per.items())
    total = body["smooth_forms"] + body["singular_forms"]
    ok = (proc.returncode == 0 and agree == 25 and exact and per["1^6"]["observed"] == 0
          and total == 2**20 - 1 and elapsed < 15 * 60)
    _report(criterion, 6, ok, f"{agree}/25 classes agree over {total} forms, (1^6) observed "
                              f"{per['1^6']['observed']}, {elapsed:.1f}s with 8 jobs")


def test_criterion_7_averages(G, criterion):
    num, den = weighted_average(lambda c: G.fixed_points(c, "tritangents"))
    tri = num == den
    num, den = weighted_average(lambda c: config_count(c, "uconf", 2))
    uc = num == q**2 * (q**2 + q + 2) * den
    _report(criterion, 7, tri and uc, f"tritangent average 1: {tri}; UConf^2 average q^2(q^2+q+2): {uc}")


def test_criterion_8_uconf2(G, criterion):
    uconf2_cohomology.cache_clear()
    H = uconf2_cohomology()
    want = {0: {"V1": 1}, 2: {"V1": 1, "V6": 1}, 4: {"V1": 2, "V6": 1, "V20": 1}}
    decomp = {i: decompose(H[i]) for i in range(len(H))}
    dec_ok = all(decomp[i] == want.get(i, {}) for i in decomp)
    traces = sum(uconf2_trace_poly(c) == config_count(c, "uconf", 2) for c in G.classes)
    _report(criterion, 8, dec_ok and traces == 25, f"decomposition matches: {dec_ok}; trace route {traces}/25")


PROPERTY_SCRIPT = r"""
import sys, time
t0 = time.perf_counter()
from cubicsurf.verify import run_checks
results = run_checks()
bad = [r.id for r in results if not r.ok]
heavy = any(m.startswith("cubicsurf.oracle") for m in sys.modules)
print(f"{time.perf_counter() - t0:.2f} {len(results)} {int(heavy)} {','.join(bad)}")
"""


def test_criterion_9_property_suites_without_census(criterion):
    out = subprocess.run([sys.executable, "-c", PROPERTY_SCRIPT], capture_output=True, text=True, check=True)
    elapsed, n, heavy, *bad = out.stdout.split()
    elapsed = float(elapsed)
    ok = elapsed < 120 and heavy == "0" and not bad
    _report(criterion, 9, ok, f"{n} checks (criteria 1-5, 7-8) in {elapsed:.1f}s from a cold start, "
                              f"oracle imported: {heavy == '1'}" + (f"; failed {bad}" if bad else ""))
