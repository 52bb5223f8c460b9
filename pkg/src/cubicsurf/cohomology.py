"""Graded W(E6)-characters of the cohomology groups that feed the point counts.

A graded character is a list indexed by cohomological degree whose entries
are ``ClassFunction``s.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

import numpy as np

from . import data
from .chars import CharacterError, ClassFunction, CharacterTable, decompose, invariant_dim, load_character_table
from .qpoly import QPoly
from .weyl import PICARD_FORM, WeylGroup, element_matrix_on_picard, weyl_group

Graded = list  # list[ClassFunction], index = degree


class CohomologyMismatch(AssertionError):
    pass


def quotient_cohomology(table: CharacterTable | None = None) -> Graded:
    """Characters of H^i(Y/PGL(4)), i = 0..4, from the known decomposition."""
    table = table or load_character_table()
    return [table.combination(d) for d in data.QUOTIENT_COHOMOLOGY]


def surface_cohomology(table: CharacterTable | None = None) -> Graded:
    """H*(S): trivial in degrees 0 and 4, V1 + V6 in degree 2."""
    table = table or load_character_table()
    zero = ClassFunction.zero(len(table.sizes))
    return [table["V1"], zero, table["V1"] + table["V6"], zero, table["V1"]]


def graded_dims(gr: Graded) -> list[int]:
    return [int(f.degree) for f in gr]


def _graded_product(a: Graded, b: Graded) -> Graded:
    n = len(a[0])
    out = [ClassFunction.zero(n) for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def _partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def _z(lam: Sequence[int]) -> int:
    out = 1
    for part in set(lam):
        m = lam.count(part)
        out *= part**m * factorial(m)
    return out


def graded_sym_character(n: int, G: WeylGroup | None = None, table: CharacterTable | None = None) -> Graded:
    """Graded character of H*(Sym^n S).

    For each class, the graded trace on Sym^n is the cycle-index sum over
    partitions of n of products of power traces P_l, where P_l is the graded
    trace of g^l on H*(S) with degrees scaled by l.
    """
    G = G or weyl_group()
    table = table or load_character_table()
    hs = surface_cohomology(table)
    if n == 0:
        return [table["V1"]]
    top = 4 * n
    per_class: list[QPoly] = []
    for c in G.classes:
        def power_trace(l: int) -> QPoly:
            ci = c.power(l)
            coeffs = [0] * (4 * l + 1)
            for deg, f in enumerate(hs):
                coeffs[deg * l] += f[ci]
            return QPoly(coeffs)

        total = QPoly()
        for lam in _partitions(n):
            term = QPoly([1])
            for part in lam:
                term = term * power_trace(part)
            total = total + term / _z(list(lam))
        per_class.append(total)
    return [ClassFunction(p.coefficient(k) for p in per_class) for k in range(top + 1)]


def graded_product_character(n: int, table: CharacterTable | None = None) -> Graded:
    """Graded character of H*(S^n) (Künneth)."""
    table = table or load_character_table()
    out: Graded = [table["V1"]]
    hs = surface_cohomology(table)
    for _ in range(n):
        out = _graded_product(out, hs)
    return out


def fiber_character(flavor: str, n: int, table: CharacterTable | None = None) -> Graded:
    if flavor == "product":
        return graded_product_character(n, table)
    if flavor == "sym":
        return graded_sym_character(n, table=table)
    raise ValueError(f"unknown fiber flavor {flavor!r}; expected 'product' or 'sym'")


def marked_cohomology(gens: Sequence | None = None, flavor: str = "product", n: int = 0,
                      G: WeylGroup | None = None, elements: np.ndarray | None = None) -> list[int]:
    """Dimensions of (H*(Y/PGL) ⊗ H*(F))^H by total degree, F = S^n or Sym^n S.

    The subgroup H is generated by ``gens`` (trivial when empty) or given
    explicitly as ``elements``. The PGL(4) tensor factor is not applied.
    """
    G = G or weyl_group()
    table = load_character_table()
    if elements is None:
        elements = G.elements[G.subgroup(gens)] if gens else G.elements[[G.identity_index]]
    total = _graded_product(quotient_cohomology(table), fiber_character(flavor, n, table))
    return [int(invariant_dim(f, G=G, elements=elements)) for f in total]


# ---------------------------------------------------------------------------
# H*(UConf^2 S) from the two-point Totaro complex


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    m = [r[:] for r in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def _rank(cols: list[list[Fraction]]) -> int:
    if not cols:
        return 0
    return len(_rref([list(c) for c in cols])[0])


def _independent(cols: list[list[Fraction]]) -> list[list[Fraction]]:
    out: list[list[Fraction]] = []
    for c in cols:
        if _rank(out + [c]) > len(out):
            out.append(c)
    return out


def _lift(W: list[dict], keys: list, chosen: list[list[Fraction]]) -> list[dict]:
    vecs = [_vec(w, keys) for w in W]
    return [W[vecs.index(c)] for c in chosen]


def _trace_on_span(basis: list[list[Fraction]], images: list[list[Fraction]]) -> Fraction:
    """Trace of the map sending basis[i] -> images[i], where images lie in the span.

    Solves images[i] = sum_j A[j][i] basis[j] and returns trace(A).
    """
    if not basis:
        return Fraction(0)
    k, dim = len(basis), len(basis[0])
    # transpose: rows are coordinates
    aug = [[basis[j][r] for j in range(k)] + [images[i][r] for i in range(k)] for r in range(dim)]
    red, piv = _rref(aug)
    if any(p >= k for p in piv):
        raise CohomologyMismatch("image leaves the subspace")
    # red[t] has pivot piv[t] = t (basis independent), solution A[t][i] = red[t][k+i]
    return sum(red[t][k + t] for t in range(k))


class _SurfaceRing:
    """H*(S; Q) with basis 1, e0..e6, pt and its square H*(S x S)."""

    def __init__(self):
        self.n = 9
        self.deg = [0] + [2] * 7 + [4]
        Q = PICARD_FORM
        # structure constants: mult[a][b] = {c: coeff}
        self.mult = [[{} for _ in range(9)] for _ in range(9)]
        for a in range(9):
            self.mult[0][a] = {a: 1}
            self.mult[a][0] = {a: 1}
        for i in range(7):
            for j in range(7):
                if Q[i, j]:
                    self.mult[1 + i][1 + j] = {8: int(Q[i, j])}
        Qinv = np.rint(np.linalg.inv(Q)).astype(int)
        # Poincaré-dual basis: 1 <-> pt, e_i <-> sum_j Qinv[i, j] e_j
        diag = {}
        diag[(0, 8)] = 1
        diag[(8, 0)] = 1
        for i in range(7):
            for j in range(7):
                if Qinv[i, j]:
                    diag[(1 + i, 1 + j)] = diag.get((1 + i, 1 + j), 0) + int(Qinv[i, j])
        self.diagonal = diag
        self.pairs = [(a, b) for a in range(9) for b in range(9)]
        self.pair_index = {p: k for k, p in enumerate(self.pairs)}

    def pair_degree(self, p) -> int:
        return self.deg[p[0]] + self.deg[p[1]]

    def mul2(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for (a, b), u in x.items():
            for (c, d), v in y.items():
                for e, s in self.mult[a][c].items():
                    for f, t in self.mult[b][d].items():
                        out[(e, f)] = out.get((e, f), 0) + u * v * s * t
        return {k: v for k, v in out.items() if v}

    def swap(self, x: dict) -> dict:
        return {(b, a): v for (a, b), v in x.items()}

    def act1(self, M: np.ndarray) -> np.ndarray:
        g = np.zeros((9, 9), dtype=np.int64)
        g[0, 0] = g[8, 8] = 1
        g[1:8, 1:8] = M
        return g

    def act2(self, g1: np.ndarray, x: dict) -> dict:
        out: dict = {}
        for (a, b), v in x.items():
            for e in np.flatnonzero(g1[:, a]):
                for f in np.flatnonzero(g1[:, b]):
                    key = (int(e), int(f))
                    out[key] = out.get(key, 0) + v * int(g1[e, a]) * int(g1[f, b])
        return {k: w for k, w in out.items() if w}


def _vec(x: dict, keys: list) -> list[Fraction]:
    return [Fraction(x.get(k, 0)) for k in keys]


@lru_cache(maxsize=1)
def uconf2_cohomology(check: bool = True) -> tuple[ClassFunction, ...]:
    """Graded character of H*(UConf^2 S), degrees 0..8, computed from Totaro's complex.

    The complex is H*(S x S) ⊕ H*(S)·G with G in degree 3 and d(x·G) = p1*(x)·[Δ].
    Cohomology is taken in the swap-invariant part. With ``check`` the result
    must decompose as the known answer.
    """
    G = weyl_group()
    table = load_character_table()
    R = _SurfaceRing()
    delta = R.diagonal
    # the diagonal class is characterised by p1*(x) Δ = p2*(x) Δ
    for a in range(9):
        if R.mul2({(a, 0): 1}, delta) != R.mul2({(0, a): 1}, delta):
            raise CohomologyMismatch("diagonal class expansion is inconsistent")
    if R.swap(delta) != delta:
        raise CohomologyMismatch("diagonal class is not swap-invariant")

    # basis of swap-invariants of H*(S x S) in each degree
    inv_basis: dict[int, list[dict]] = {}
    for a in range(9):
        for b in range(a, 9):
            v = {(a, b): 1} if a == b else {(a, b): 1, (b, a): 1}
            inv_basis.setdefault(R.deg[a] + R.deg[b], []).append(v)
    keys_by_deg: dict[int, list] = {}
    for p in R.pairs:
        keys_by_deg.setdefault(R.pair_degree(p), []).append(p)
    # image of d from x·G, x of degree k-4
    image: dict[int, list[dict]] = {}
    for x in range(9):
        image.setdefault(R.deg[x] + 4, []).append(R.mul2({(x, 0): 1}, delta))

    values = [[Fraction(0)] * len(G.classes) for _ in range(9)]
    for c in G.classes:
        M = element_matrix_on_picard(c.representative)
        g1 = R.act1(M)
        for k in range(0, 9, 2):
            keys = keys_by_deg.get(k, [])
            V = inv_basis.get(k, [])
            Vv = [_vec(v, keys) for v in V]
            tr_V = _trace_on_span(Vv, [_vec(R.act2(g1, v), keys) for v in V])
            W = image.get(k, [])
            for w in W:
                if R.swap(w) != w:
                    raise CohomologyMismatch("image of d is not swap-invariant")
            Wv = _independent([_vec(w, keys) for w in W])
            tr_W = _trace_on_span(Wv, [_vec(R.act2(g1, w), keys) for w in _lift(W, keys, Wv)])
            values[k][c.index] = tr_V - tr_W
            if W:
                # kernel of d on H^{k-4}(S)·G sits in degree k-1
                src = [x for x in range(9) if R.deg[x] == k - 4]
                tr_src = sum(Fraction(int(g1[x, x])) for x in src)
                values[k - 1][c.index] = tr_src - tr_W
    result = tuple(ClassFunction(v) for v in values)
    if check:
        want = {k: table.combination(d) for k, d in data.UCONF2_COHOMOLOGY.items()}
        for k, f in enumerate(result):
            expected = want.get(k, ClassFunction.zero(len(G.classes)))
            if f != expected:
                raise CohomologyMismatch(f"H^{k}(UConf^2 S) = {decompose(f, table)}, expected "
                                         f"{decompose(expected, table)}")
    return result


def alternating_trace_poly(graded: Sequence[ClassFunction], class_index: int, dim: int) -> QPoly:
    """Point count sum_i (-1)^i q^(dim - i/2) tr(g | H^i) for even-weight pure cohomology."""
    coeffs = [Fraction(0)] * (dim + 1)
    for i, f in enumerate(graded):
        v = f[class_index]
        if not v:
            continue
        if i % 2:
            raise CharacterError("odd cohomology needs weight data")
        coeffs[dim - i // 2] += v
    return QPoly(coeffs)
