"""Exhaustive census of cubic surfaces over F_2.

The 2^20 - 1 nonzero forms are split into PGL(4, F_2)-orbits; each orbit is
classified once, at its numerically smallest member.
"""

from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ..counting import absolute_count
from ..qpoly import QPoly
from ..weyl import ConjugacyClass, weyl_group
from .forms import (
    GL4_GENERATORS,
    GL4_ORDER,
    N_FORMS,
    apply_substitution,
    count_rational_lines,
    is_smooth,
    point_count,
    substitution_matrix,
    to_hex,
)

log = logging.getLogger(__name__)

MAX_K = 6


class InconsistentCounts(ValueError):
    pass


class CensusMismatch(AssertionError):
    pass


@dataclass
class OrbitTable:
    labels: np.ndarray  # labels[v] = smallest member of the orbit of v; labels[0] = 0
    representatives: np.ndarray
    sizes: np.ndarray

    def __len__(self):
        return len(self.representatives)

    def members(self, rep: int) -> np.ndarray:
        return np.flatnonzero(self.labels == rep)


def compute_orbits(generators=GL4_GENERATORS) -> OrbitTable:
    """Orbits of the nonzero forms under substitution by the generated group.

    Labels are propagated along generator edges until every form carries the
    minimum of its orbit.
    """
    forms = np.arange(N_FORMS, dtype=np.int64)
    images = [apply_substitution(substitution_matrix(g), forms) for g in generators]
    labels = forms.copy()
    rounds = 0
    while True:
        rounds += 1
        new = labels
        for img in images:
            new = np.minimum(new, new[img])
        new = new[new]  # pointer jumping
        if np.array_equal(new, labels):
            break
        labels = new
    log.debug("orbit labels stable after %d rounds", rounds)
    reps, sizes = np.unique(labels[1:], return_counts=True)
    return OrbitTable(labels, reps, sizes)


@lru_cache(maxsize=1)
def orbits() -> OrbitTable:
    return compute_orbits()


def power_sums_from_counts(counts, q: int = 2) -> list[int]:
    """Traces of Frob^k on V6 from n_k = q^{2k} + (1 + p_k) q^k + 1."""
    out = []
    for k, n in enumerate(counts, start=1):
        num = n - q ** (2 * k) - 1
        if num % q**k:
            raise InconsistentCounts(f"n_{k} = {n} is not of the form q^2k + t q^k + 1")
        p = num // q**k - 1
        if abs(p) > 6:
            raise InconsistentCounts(f"trace {p} on V6 is out of range")
        out.append(p)
    return out


def newton_charpoly(power_sums) -> QPoly:
    """Monic degree-n polynomial whose roots have the given power sums (Newton's identities)."""
    n = len(power_sums)
    e = [Fraction(1)]
    for k in range(1, n + 1):
        s = sum((-1) ** (i - 1) * e[k - i] * power_sums[i - 1] for i in range(1, k + 1))
        e.append(s / k)
    if any(x.denominator != 1 for x in e):
        raise InconsistentCounts("non-integral elementary symmetric functions")
    return QPoly([(-1) ** (n - j) * e[n - j] for j in range(n + 1)])


def classify_frobenius(counts, q: int = 2) -> ConjugacyClass:
    """Frobenius class from point counts n_1..n_6 over F_q, ..., F_{q^6}."""
    if len(counts) != MAX_K:
        raise ValueError(f"need {MAX_K} point counts, got {len(counts)}")
    cp = newton_charpoly(power_sums_from_counts(counts, q))
    try:
        return weyl_group().class_by_charpoly(cp)
    except LookupError:
        raise InconsistentCounts(f"no class has V6 characteristic polynomial {cp}") from None


@dataclass
class Classification:
    form: int
    smooth: bool
    counts: tuple[int, ...] = ()
    cls: str | None = None
    rational_lines: int | None = None

    def as_dict(self) -> dict:
        out = {"form": to_hex(self.form), "smooth": self.smooth}
        if self.smooth:
            out.update(counts=list(self.counts), cls=self.cls, rational_lines=self.rational_lines)
        return out


def classify_form(v: int, depth: int = 6) -> Classification:
    if not is_smooth(v, depth):
        return Classification(v, False)
    counts = tuple(point_count(v, k) for k in range(1, MAX_K + 1))
    c = classify_frobenius(counts)
    return Classification(v, True, counts, c.name, count_rational_lines(v))


def _classify_batch(args) -> list[Classification]:
    forms, depth = args
    return [classify_form(int(v), depth) for v in forms]


def _classify_all(forms: np.ndarray, depth: int, jobs: int) -> list[Classification]:
    forms = [int(v) for v in forms]
    if jobs <= 1 or len(forms) < 2:
        return _classify_batch((forms, depth))
    chunks = [forms[i::jobs] for i in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        parts = list(ex.map(_classify_batch, [(c, depth) for c in chunks]))
    by_form = {r.form: r for part in parts for r in part}
    return [by_form[v] for v in forms]


@dataclass
class CensusReport:
    q: int
    per_class: dict[str, dict]
    smooth_forms: int
    singular_forms: int
    orbits: int
    smooth_orbits: int
    mismatches: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_json(self) -> str:
        body = {
            "q": self.q,
            "orbits": self.orbits,
            "smooth_orbits": self.smooth_orbits,
            "smooth_forms": self.smooth_forms,
            "singular_forms": self.singular_forms,
            "per_class": self.per_class,
            "mismatches": self.mismatches,
            "result": "PASS" if self.passed else "FAIL",
        }
        return json.dumps(body, indent=2)

    def status_line(self) -> str:
        agree = sum(1 for v in self.per_class.values() if v["expected"] == v["observed"])
        return f"{'PASS' if self.passed else 'FAIL'} census q={self.q}: {agree}/{len(self.per_class)} classes agree"


def census(q: int = 2, jobs: int = 1, depth: int = 6, sample_members: int = 0, seed: int = 0,
           table: OrbitTable | None = None) -> CensusReport:
    """Classify every orbit and compare per-class totals with the counting formula.

    ``sample_members`` random non-representative forms are also classified
    and must agree with their orbit representative.
    """
    if q != 2:
        raise ValueError("only the census over F_2 is implemented")
    table = table or orbits()
    if int(table.sizes.sum()) != N_FORMS - 1:
        raise CensusMismatch("orbits do not cover every nonzero form")
    bad = [int(r) for r, s in zip(table.representatives, table.sizes) if GL4_ORDER % int(s)]
    if bad:
        raise CensusMismatch(f"orbit sizes do not divide {GL4_ORDER}: {bad[:5]}")
    results = _classify_all(table.representatives, depth, jobs)

    G = weyl_group()
    per_class = {c.name: {"expected": absolute_count(c, q), "observed": 0, "orbits": 0, "orbit_sizes": []}
                 for c in G.classes}
    mismatches: list[str] = []
    smooth_forms = smooth_orbits = 0
    rep_class: dict[int, str | None] = {}
    for res, size in zip(results, table.sizes):
        rep_class[res.form] = res.cls
        if not res.smooth:
            continue
        smooth_orbits += 1
        smooth_forms += int(size)
        entry = per_class[res.cls]
        entry["observed"] += int(size)
        entry["orbits"] += 1
        entry["orbit_sizes"].append(int(size))
        fixed = G.fixed_points(G.class_by_name(res.cls), "lines")
        if res.rational_lines != fixed:
            mismatches.append(f"orbit {to_hex(res.form)}: {res.rational_lines} rational lines, "
                              f"class ({res.cls}) fixes {fixed}")
    for name, entry in per_class.items():
        entry["orbit_sizes"].sort()
        if entry["expected"] != entry["observed"]:
            offenders = [to_hex(r.form) for r in results if r.cls == name]
            mismatches.append(f"class ({name}): expected {entry['expected']}, observed {entry['observed']}; "
                              f"orbits {offenders}")

    if sample_members:
        rng = np.random.default_rng(seed)
        nonreps = rng.integers(1, N_FORMS, size=sample_members * 2)
        nonreps = [int(v) for v in nonreps if table.labels[v] != v][:sample_members]
        for v, res in zip(nonreps, _classify_all(np.array(nonreps), depth, jobs)):
            want = rep_class[int(table.labels[v])]
            if res.cls != want:
                mismatches.append(f"form {to_hex(v)} classified ({res.cls}) but its orbit is ({want})")

    return CensusReport(q, per_class, smooth_forms, N_FORMS - 1 - smooth_forms, len(table), smooth_orbits,
                        mismatches)
