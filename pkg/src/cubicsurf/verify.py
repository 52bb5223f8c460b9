"""Invariant checks across all modules, each with a stable id.

``run_checks`` never raises on a failed invariant; it records it. Exceptions
raised inside a check are reported as failures of that check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Sequence

import numpy as np

from . import data, reference
from .chars import CharacterTable, build_character_table, decompose, permutation_character
from .cohomology import uconf2_cohomology
from .counting import (
    absolute_count,
    class_count_poly,
    closed_point_counts,
    config_count,
    exceptions,
    is_prime_power,
    surface_point_counts,
    table1,
    table2,
    table3,
    table4,
    t_values,
    uconf2_trace_poly,
    weighted_average,
)
from .qpoly import QPoly
from .schlafli import build_incidence, enumerate_double_sixes, enumerate_tritangents
from .weyl import (
    ACTIONS,
    CANONICAL,
    LINE_VECTORS,
    PICARD_FORM,
    WEYL_ORDER,
    element_matrix_on_picard,
    pairing,
    weyl_group,
)

Q = QPoly.gen()


@dataclass
class CheckResult:
    id: str
    description: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        tail = f": {self.detail}" if self.detail else ""
        return f"[{'PASS' if self.ok else 'FAIL'}] {self.id} {self.description}{tail}"


def _compare_rows(rows, ref: Mapping) -> tuple[bool, str]:
    got = {r.key: r.value for r in rows}
    bad = [k for k in ref if got.get(k) != ref[k]]
    extra = [k for k in got if k not in ref]
    matched = len(ref) - len(bad)
    ok = not bad and not extra
    detail = f"{matched}/{len(ref)} rows matched"
    if bad:
        detail += f"; mismatched {[str(k) for k in bad]}"
    if extra:
        detail += f"; unexpected {[str(k) for k in extra]}"
    return ok, detail


def _checks(table: CharacterTable) -> list[tuple[str, str, Callable[[], tuple[bool, str]]]]:
    G = weyl_group()
    g = build_incidence()

    def srg():
        p = g.srg_parameters()
        return p == (27, 10, 1, 5), f"parameters {p}"

    def tritangents():
        ts = enumerate_tritangents(g)
        per_line = np.bincount(np.array(ts).ravel(), minlength=27)
        return len(ts) == 45 and (per_line == 5).all(), f"{len(ts)} tritangents"

    def pairs_in_tritangents():
        ts = enumerate_tritangents(g)
        cover = {}
        for t in ts:
            for a in t:
                for b in t:
                    if a < b:
                        cover[(a, b)] = cover.get((a, b), 0) + 1
        edges = {(a, b) for a in range(27) for b in range(a + 1, 27) if g.adjacent(a, b)}
        ok = set(cover) == edges and set(cover.values()) == {1}
        return ok, f"{len(edges)} adjacent pairs, each in exactly one tritangent" if ok else "cover mismatch"

    def line_vectors():
        ok = all(pairing(v, v) == -1 and pairing(v, CANONICAL) == -1 for v in LINE_VECTORS)
        return ok, "<v,v> = <v,K> = -1 for all 27 lines"

    def double_sixes():
        n = len(enumerate_double_sixes(g))
        return n == 36, f"{n} double sixes"

    def transitive():
        orbit = set(G.elements[:, 0].tolist())
        return len(orbit) == 27, f"orbit of E1 has {len(orbit)} lines"

    def order():
        return G.order == WEYL_ORDER, f"order {G.order}"

    def classes():
        rows = {r.name: r for r in data.CLASS_TABLE}
        bad = [c.name for c in G.classes
               if c.name not in rows or (rows[c.name].size, rows[c.name].order, rows[c.name].even)
               != (c.size, c.order, c.even)]
        return len(G.classes) == 25 and not bad, f"{25 - len(bad)}/25 rows of the class table matched"

    def v6_traces():
        bad = [c.name for c in G.classes if c.trace_V6 != int(table["V6"][c.index])]
        return not bad, f"{25 - len(bad)}/25 traces agree" + (f"; {bad}" if bad else "")

    def charpolys():
        polys = {c.char_poly_V6 for c in G.classes}
        return len(polys) == 25, f"{len(polys)} distinct polynomials"

    def power_maps():
        bad = []
        for c in G.classes:
            x = np.arange(27)
            for k in range(1, c.order + 1):
                x = c.representative[x]
                if G.identify_class(x).index != c.power(k):
                    bad.append((c.name, k))
            if c.power(c.order) != G.identity_class.index:
                bad.append((c.name, "order"))
        return not bad, f"{len(bad)} inconsistencies"

    def burnside():
        out = {}
        for a in ACTIONS:
            out[a] = sum(Fraction(c.size, WEYL_ORDER) * G.fixed_points(c, a) for c in G.classes)
        return all(v == 1 for v in out.values()), ", ".join(f"{a}: {v}" for a, v in out.items())

    def lattice():
        rng = np.random.default_rng(0)
        sample = [G.elements[i] for i in rng.integers(0, G.order, 100)]
        for p in sample + [c.representative for c in G.classes]:
            M = element_matrix_on_picard(p)
            if not (M.T @ PICARD_FORM @ M == PICARD_FORM).all() or not (M @ CANONICAL == CANONICAL).all():
                return False, "an element fails to preserve the form or the canonical class"
        return True, "form and canonical class preserved"

    def parity():
        even = sum(c.even for c in G.classes)
        return (even, 25 - even) == (15, 10), f"{even} even, {25 - even} odd"

    def orthogonality():
        failures = table.check_orthogonality()
        return not failures, "; ".join(failures[:3]) if failures else "rows and columns orthonormal"

    def degrees():
        s = sum(d * d for d in table.degrees().values())
        return s == WEYL_ORDER, f"sum of squared degrees {s}"

    def u_vanish():
        odd = [c.index for c in G.classes if not c.even]
        bad = [u for u in data.U_IRREPS if any(table[u][i] for i in odd)]
        return not bad, f"nonvanishing: {bad}" if bad else "U-characters vanish on odd classes"

    def t1():
        rows = table1()
        ref = {k: v[0] for k, v in reference.TABLE1.items()}
        return _compare_rows(rows, ref)

    def t2():
        return _compare_rows(table2(), reference.TABLE2)

    def t3():
        return _compare_rows(table3(), reference.TABLE3)

    def t4():
        return _compare_rows(table4(), reference.TABLE4)

    def exc():
        bad = [c.name for c in G.classes if tuple(exceptions(c)) != reference.TABLE1[c.name][1]]
        return not bad, f"{25 - len(bad)}/25 exception sets agree"

    def averages():
        num, den = weighted_average(lambda c: G.fixed_points(c, "tritangents"))
        ok3 = num == reference.TABLE3_AVERAGE * den
        num, den = weighted_average(lambda c: config_count(c, "uconf", 2))
        ok4 = num == reference.TABLE4_AVERAGE * den
        return ok3 and ok4, f"tritangent average 1: {ok3}; UConf^2 average q^2(q^2+q+2): {ok4}"

    def uconf2():
        H = uconf2_cohomology()
        bad = [c.name for c in G.classes if uconf2_trace_poly(c) != config_count(c, "uconf", 2)]
        decomp = {k: decompose(H[k], table) for k in (0, 2, 4)}
        return not bad, f"{decomp}; trace route agrees on {25 - len(bad)}/25 classes"

    def tvals():
        ts = t_values()
        return ts == sorted(reference.TABLE2), f"t in {ts}"

    def mobius_identity():
        for c in G.classes:
            a = closed_point_counts(c, Q, 12)
            for k in range(1, 13):
                lhs = sum((d * a[d - 1] for d in range(1, k + 1) if k % d == 0), QPoly())
                if lhs != surface_point_counts(c, k, Q):
                    return False, f"fails for ({c.name}), k={k}"
        return True, "sum_{d|k} d a_d = n_k for k <= 12"

    def nonneg():
        for qq in range(2, 998):
            if not is_prime_power(qq):
                continue
            for c in G.classes:
                absolute_count(c, qq)
        return True, "all prime powers q <= 997"

    def monic():
        bad = [c.name for c in G.classes
               if not (class_count_poly(c).degree == 4 and class_count_poly(c).is_monic()
                       and class_count_poly(c).is_integral())]
        return not bad, f"{25 - len(bad)}/25 monic integer quartics"

    def perm_chars():
        d = decompose(permutation_character("lines"), table)
        dt = decompose(permutation_character("tritangents"), table)
        ok = d == {"V1": 1, "V6": 1, "V20": 1} and dt.get("V1") == 1 and min(dt.values()) > 0
        return ok, f"lines = {d}; tritangents = {dt}"

    return [
        ("schlafli.srg", "incidence graph is SRG(27,10,1,5)", srg),
        ("schlafli.tritangents", "45 tritangents, 5 through each line", tritangents),
        ("schlafli.tritangent_pairs", "each adjacent pair lies in one tritangent", pairs_in_tritangents),
        ("schlafli.double_sixes", "36 double sixes", double_sixes),
        ("schlafli.transitive", "group acts transitively on lines", transitive),
        ("weyl.order", "automorphism group order 51840", order),
        ("weyl.classes", "25 classes with published sizes, orders, parity", classes),
        ("weyl.v6_traces", "V6 traces agree with the character table", v6_traces),
        ("weyl.charpoly_injective", "V6 characteristic polynomials separate classes", charpolys),
        ("weyl.power_maps", "power maps consistent with class identification", power_maps),
        ("weyl.burnside", "Burnside average 1 on lines, tritangents, double sixes", burnside),
        ("weyl.lattice", "Picard matrices preserve the form and fix K", lattice),
        ("weyl.line_vectors", "line classes have self-intersection and degree -1", line_vectors),
        ("weyl.parity", "15 even and 10 odd classes", parity),
        ("chars.orthogonality", "row and column orthogonality", orthogonality),
        ("chars.degrees", "sum of squared degrees is 51840", degrees),
        ("chars.u_vanish", "U-characters vanish on odd classes", u_vanish),
        ("chars.permutation", "permutation characters decompose as expected", perm_chars),
        ("counting.monic", "class counts are monic integer quartics", monic),
        ("counting.table1", "per-class counts reproduced (table 1)", t1),
        ("counting.table2", "point-count distribution reproduced (table 2)", t2),
        ("counting.table3", "tritangent distribution reproduced (table 3)", t3),
        ("counting.table4", "UConf^2 distribution reproduced (table 4)", t4),
        ("counting.exceptions", "vanishing prime powers per class", exc),
        ("counting.t_values", "only the published t values occur", tvals),
        ("counting.averages", "average identities for tritangents and UConf^2", averages),
        ("counting.uconf2", "UConf^2 cohomology and its trace agree with direct counts", uconf2),
        ("counting.mobius", "closed-point Möbius identity", mobius_identity),
        ("counting.nonnegative", "absolute counts are non-negative integers", nonneg),
    ]


def run_checks(character_values: Mapping[str, Sequence[int]] | None = None,
               only: Sequence[str] | None = None) -> list[CheckResult]:
    """Run every check (or those whose id starts with one of ``only``).

    ``character_values`` replaces the character table data, for fault injection.
    """
    table = build_character_table(character_values, check=False)
    out = []
    for cid, desc, fn in _checks(table):
        if only and not any(cid.startswith(p) for p in only):
            continue
        try:
            ok, detail = fn()
        except Exception as exc:  # a crashing check is a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(cid, desc, bool(ok), detail))
    return out
