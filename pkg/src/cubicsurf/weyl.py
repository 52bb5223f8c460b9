"""W(E6) as the automorphism group of the Schläfli graph.

The group is enumerated outright (51840 permutations of the 27 lines) by a
backtracking automorphism search; conjugacy classes are exact orbits under
conjugation; the 6-dimensional reflection representation is realised on the
orthogonal complement of the canonical class in the Picard lattice.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

import numpy as np

from . import data
from .qpoly import QPoly
from .schlafli import (
    C,
    E,
    INDEX,
    LABELS,
    N_LINES,
    IncidenceGraph,
    L,
    LineLabel,
    build_incidence,
    enumerate_double_sixes,
    enumerate_tritangents,
)

log = logging.getLogger(__name__)

WEYL_ORDER = 51840


class GroupConstructionError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# permutations


def compose(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """``(a*b)[x] = a[b[x]]``: apply ``b`` first."""
    return a[b]


def inverse(p: np.ndarray) -> np.ndarray:
    p = np.asarray(p)
    inv = np.empty_like(p)
    if p.ndim == 1:
        inv[p] = np.arange(len(p), dtype=p.dtype)
    else:
        rows = np.arange(p.shape[0])[:, None]
        inv[rows, p] = np.arange(p.shape[1], dtype=p.dtype)[None, :]
    return inv


def perm_order(p: np.ndarray) -> int:
    from math import lcm

    seen = np.zeros(len(p), dtype=bool)
    out = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        n, j = 0, i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            n += 1
        out = lcm(out, n)
    return out


def relabeling(sigma: Sequence[int]) -> np.ndarray:
    """Line permutation induced by a permutation of the indices 1..6 (given 0-based)."""
    s = lambda i: sigma[i - 1] + 1  # noqa: E731
    out = np.empty(N_LINES, dtype=np.int8)
    for k, lab in enumerate(LABELS):
        if lab.kind == "E":
            img = E(s(lab.idx[0]))
        elif lab.kind == "C":
            img = C(s(lab.idx[0]))
        else:
            img = L(s(lab.idx[0]), s(lab.idx[1]))
        out[k] = INDEX[img]
    return out


def ec_swap() -> np.ndarray:
    out = np.arange(N_LINES, dtype=np.int8)
    for i in range(1, 7):
        out[INDEX[E(i)]] = INDEX[C(i)]
        out[INDEX[C(i)]] = INDEX[E(i)]
    return out


def preserves(adjacency: np.ndarray, p: np.ndarray) -> bool:
    return bool(np.array_equal(adjacency[np.ix_(p, p)], adjacency))


def closure(gens: Iterable[np.ndarray], limit: int | None = None) -> np.ndarray:
    """All products of the generators, breadth first, as a sorted (n, 27) array."""
    gens = [np.asarray(g, dtype=np.int8) for g in gens]
    n = N_LINES if not gens else len(gens[0])
    ident = np.arange(n, dtype=np.int8)
    seen = {ident.tobytes()}
    frontier = [ident]
    elems = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g[x]
                key = y.tobytes()
                if key not in seen:
                    seen.add(key)
                    nxt.append(y)
                    elems.append(y)
                    if limit and len(elems) > limit:
                        raise GroupConstructionError(f"closure exceeds {limit} elements")
        frontier = nxt
    arr = np.array(elems, dtype=np.int8)
    return arr[np.lexsort(arr.T[::-1])]


def _distinguishing_base(A: np.ndarray) -> list[int]:
    """Prefix of the vertex order after which every other vertex has a unique
    adjacency signature relative to the prefix."""
    n = len(A)
    for k in range(1, n + 1):
        base = list(range(k))
        sigs = [tuple(A[v, base]) for v in range(k, n)]
        if len(set(sigs)) == len(sigs):
            return base
    return list(range(n))


def graph_automorphisms(g: IncidenceGraph) -> np.ndarray:
    """Every adjacency-preserving permutation, by backtracking.

    Images of a distinguishing base are chosen by backtracking under the full
    adjacency constraint; the remaining images are then forced by their
    adjacency pattern to the base (branching if they are not), and every
    resulting candidate is verified against the whole graph.
    """
    A = g.adjacency
    n = len(A)
    full = (1 << n) - 1
    adj = g.masks
    nonadj = tuple(full & ~m & ~(1 << v) for v, m in enumerate(adj))
    base = _distinguishing_base(A)
    rest = [v for v in range(n) if v not in base]
    # for each non-base vertex, which base positions it is adjacent to
    pattern = [[bool(A[v, b]) for b in base] for v in rest]

    results: list[list[int]] = []

    def extend_rest(img_base: list[int], used: int):
        masks = [adj[w] for w in img_base], [nonadj[w] for w in img_base]
        cand_lists = []
        for pat in pattern:
            m = full & ~used
            for i, hit in enumerate(pat):
                m &= masks[0][i] if hit else masks[1][i]
                if not m:
                    return
            cand_lists.append(m)
        img = [0] * n
        for b, w in zip(base, img_base):
            img[b] = w

        def assign(k: int, used_now: int):
            if k == len(rest):
                results.append(img.copy())
                return
            m = cand_lists[k] & ~used_now
            while m:
                low = m & -m
                w = low.bit_length() - 1
                img[rest[k]] = w
                assign(k + 1, used_now | low)
                m ^= low

        assign(0, used)

    def choose_base(k: int, img_base: list[int], used: int):
        if k == len(base):
            extend_rest(img_base, used)
            return
        m = full & ~used
        for i in range(k):
            m &= adj[img_base[i]] if A[base[k], base[i]] else nonadj[img_base[i]]
        while m:
            low = m & -m
            w = low.bit_length() - 1
            img_base.append(w)
            choose_base(k + 1, img_base, used | low)
            img_base.pop()
            m ^= low

    choose_base(0, [], 0)
    perms = np.array(results, dtype=np.int8)
    ok = (A[perms[:, :, None], perms[:, None, :]] == A[None, :, :]).all(axis=(1, 2))
    perms = perms[ok]
    return perms[np.lexsort(perms.T[::-1])]


# ---------------------------------------------------------------------------
# Picard lattice model

PICARD_FORM = np.diag([1, -1, -1, -1, -1, -1, -1]).astype(np.int64)
CANONICAL = np.array([-3, 1, 1, 1, 1, 1, 1], dtype=np.int64)


def line_to_picard(l: LineLabel | int) -> np.ndarray:
    lab = LABELS[l] if not isinstance(l, LineLabel) else l
    v = np.zeros(7, dtype=np.int64)
    if lab.kind == "E":
        v[lab.idx[0]] = 1
    elif lab.kind == "L":
        v[0] = 1
        v[lab.idx[0]] = v[lab.idx[1]] = -1
    else:
        v[0] = 2
        v[1:] = -1
        v[lab.idx[0]] = 0
    return v


def pairing(u: np.ndarray, v: np.ndarray) -> int:
    return int(u @ PICARD_FORM @ v)


LINE_VECTORS = np.array([line_to_picard(i) for i in range(N_LINES)], dtype=np.int64)  # (27, 7)

# E1..E6 and L12 span the lattice over Z
_BASIS_LINES = [INDEX[E(i)] for i in range(1, 7)] + [INDEX[L(1, 2)]]
_BASIS = LINE_VECTORS[_BASIS_LINES].T  # columns
_BASIS_INV = np.rint(np.linalg.inv(_BASIS)).astype(np.int64)
assert (_BASIS @ _BASIS_INV == np.eye(7, dtype=np.int64)).all()


def element_matrix_on_picard(g: np.ndarray) -> np.ndarray:
    """The integer 7x7 matrix sending each line class to the class of its image."""
    g = np.asarray(g)
    M = LINE_VECTORS[g[_BASIS_LINES]].T @ _BASIS_INV
    if not (M @ LINE_VECTORS.T == LINE_VECTORS[g].T).all():
        raise ValueError("permutation has no linear extension to the Picard lattice")
    return M


def charpoly(M: np.ndarray) -> QPoly:
    """Characteristic polynomial det(xI - M) of an integer matrix (Faddeev-LeVerrier)."""
    A = [[int(x) for x in row] for row in M]
    n = len(A)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    Mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # Mk = A @ M_{k-1} + c_{n-k+1} I
        prod = [[sum(A[i][t] * Mk[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            prod[i][i] += coeffs[n - k + 1]
        Mk = prod
        tr = sum(sum(A[i][t] * Mk[t][i] for t in range(n)) for i in range(n))
        if tr % k:
            raise ArithmeticError("non-integral characteristic polynomial")
        coeffs[n - k] = -tr // k
    return QPoly(coeffs)


# ---------------------------------------------------------------------------
# cyclotomic bookkeeping


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> QPoly:
    x = QPoly.gen()
    p = x**m - 1
    for d in range(1, m):
        if m % d == 0:
            p = p / cyclotomic(d)
    return p


def mobius(n: int) -> int:
    out, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        p += 1
    return -out if n > 1 else out


def cyclotomic_exponents(p: QPoly, max_index: int = 60) -> dict[int, int]:
    """Exponents ``a_m`` with ``p = prod Phi_m^{a_m}``; raises if p is not such a product."""
    out: dict[int, int] = {}
    rest = p
    for m in range(1, max_index + 1):
        phi = cyclotomic(m)
        if phi.degree > rest.degree:
            continue
        while rest.degree >= phi.degree:
            quo, rem = rest.divmod(phi)
            if not rem.is_zero():
                break
            rest = quo
            out[m] = out.get(m, 0) + 1
    if rest != QPoly([1]):
        raise ValueError(f"{p} is not a product of cyclotomic polynomials")
    return out


def virtual_cycle_type_from_charpoly(p: QPoly) -> tuple[tuple[int, int], ...]:
    """``((d, i_d), ...)`` with ``i_d != 0``, by Möbius inversion over divisors of the order."""
    from math import lcm

    a = cyclotomic_exponents(p)
    n = 1
    for m in a:
        n = lcm(n, m)
    out = []
    for d in range(1, n + 1):
        if n % d:
            continue
        i_d = sum(mobius(m // d) * a.get(m, 0) for m in range(d, n + 1, d) if n % m == 0)
        if i_d:
            out.append((d, i_d))
    if sum(d * i for d, i in out) != p.degree:
        raise ArithmeticError(f"virtual cycle type {out} has wrong dimension")
    return tuple(out)


def format_cycle_type(vct: Sequence[tuple[int, int]]) -> str:
    return ",".join(str(d) if i == 1 else f"{d}^{i}" for d, i in vct)


def display_name(name: str) -> str:
    return f"({name})"


# ---------------------------------------------------------------------------
# classes and the group


@dataclass
class ConjugacyClass:
    index: int
    representative: np.ndarray
    size: int
    order: int
    char_poly_V6: QPoly
    cycle_type: tuple[tuple[int, int], ...]
    even: bool
    power_map: tuple[int, ...] = ()  # power_map[k-1] = class index of rep^k, k = 1..order
    fixed: dict[str, int] = field(default_factory=dict)
    table_row: data.ClassRow | None = None

    @property
    def name(self) -> str:
        return format_cycle_type(self.cycle_type)

    @property
    def trace_V6(self) -> int:
        # coefficient of x^5 in det(xI - g) is -trace
        return -int(self.char_poly_V6.coefficient(5))

    @property
    def parity(self) -> str:
        return "even" if self.even else "odd"

    def power(self, k: int) -> int:
        return self.power_map[(k - 1) % self.order]

    def __repr__(self):
        return f"ConjugacyClass(({self.name}), size={self.size}, order={self.order})"


ACTIONS = ("lines", "tritangents", "double_sixes")


class WeylGroup:
    """Enumerated W(E6) together with its conjugacy classes and class data."""

    def __init__(self, graph: IncidenceGraph | None = None):
        self.graph = graph or build_incidence()
        self.elements = self._construct()
        self.order = len(self.elements)
        base = _distinguishing_base(self.graph.adjacency)
        self._base = base
        self._weights = (27 ** np.arange(len(base))).astype(np.int64)
        keys = self._keys(self.elements)
        self._sorted = np.argsort(keys, kind="stable")
        self._sorted_keys = keys[self._sorted]
        if len(np.unique(keys)) != self.order:
            raise GroupConstructionError("base images do not determine group elements")
        self.identity_index = self.index_of(np.arange(N_LINES))
        self.tritangents = enumerate_tritangents(self.graph)
        self.double_sixes = enumerate_double_sixes(self.graph)
        self._build_classes()

    # construction -----------------------------------------------------------

    def _construct(self) -> np.ndarray:
        A = self.graph.adjacency
        seeds = [relabeling(s) for s in ([1, 0, 2, 3, 4, 5], [1, 2, 3, 4, 5, 0])] + [ec_swap()]
        for s in seeds:
            if not preserves(A, s):
                raise GroupConstructionError("seed permutation does not preserve incidence")
        seeded = closure(seeds, limit=WEYL_ORDER)
        if len(seeded) == WEYL_ORDER:
            return seeded
        log.info("seed closure has order %d; running automorphism search", len(seeded))
        elems = graph_automorphisms(self.graph)
        if len(elems) != WEYL_ORDER:
            raise GroupConstructionError(f"automorphism group has order {len(elems)}, expected {WEYL_ORDER}")
        return elems

    def _keys(self, perms: np.ndarray) -> np.ndarray:
        perms = np.atleast_2d(perms)
        return perms[:, self._base].astype(np.int64) @ self._weights

    def index_of(self, perms) -> np.ndarray | int:
        """Element index of one permutation or a stack of them."""
        perms = np.asarray(perms)
        single = perms.ndim == 1
        keys = self._keys(perms)
        pos = np.searchsorted(self._sorted_keys, keys)
        pos = np.minimum(pos, self.order - 1)
        if not (self._sorted_keys[pos] == keys).all():
            raise ValueError("permutation is not in the group")
        idx = self._sorted[pos]
        if not (self.elements[idx] == np.atleast_2d(perms)).all():
            raise ValueError("permutation is not in the group")
        return int(idx[0]) if single else idx

    def contains(self, p) -> bool:
        try:
            self.index_of(np.asarray(p, dtype=np.int8))
            return True
        except ValueError:
            return False

    # classes ----------------------------------------------------------------

    def _build_classes(self):
        G = self.elements
        Ginv = inverse(G)
        class_of = np.full(self.order, -1, dtype=np.int64)
        reps = []
        for start in range(self.order):
            if class_of[start] >= 0:
                continue
            g = G[start]
            # h g h^-1 for all h
            conj = np.take_along_axis(G, g[Ginv], axis=1)
            idx = np.unique(self.index_of(conj))
            class_of[idx] = len(reps)
            reps.append(start)
        raw = []
        for ci, start in enumerate(reps):
            rep = G[start]
            M = element_matrix_on_picard(rep)
            cp7 = charpoly(M)
            cp6 = cp7 / QPoly([-1, 1])
            raw.append(dict(
                representative=rep,
                size=int((class_of == ci).sum()),
                order=perm_order(rep),
                char_poly_V6=cp6,
                cycle_type=virtual_cycle_type_from_charpoly(cp6),
                even=round(np.linalg.det(M)) == 1,
            ))
        # canonical order: that of the published class list, unmatched classes last
        names = [format_cycle_type(r["cycle_type"]) for r in raw]
        position = {n: k for k, n in enumerate(data.CLASS_NAMES)}
        order = sorted(range(len(raw)), key=lambda k: (position.get(names[k], len(position)), names[k]))
        remap = np.empty(len(raw), dtype=np.int64)
        remap[order] = np.arange(len(raw))
        self.class_of = remap[class_of]
        self.classes = [ConjugacyClass(index=new, **raw[old]) for new, old in enumerate(order)]
        by_poly = {}
        for c in self.classes:
            if c.char_poly_V6 in by_poly:
                raise GroupConstructionError("two classes share a V6 characteristic polynomial")
            by_poly[c.char_poly_V6] = c.index
        self._by_poly = by_poly
        rows = {r.name: r for r in data.CLASS_TABLE}
        for c in self.classes:
            c.table_row = rows.get(c.name)
            pm = []
            x = np.arange(N_LINES, dtype=np.int8)
            for _ in range(c.order):
                x = c.representative[x]
                pm.append(int(self.class_of[self.index_of(x)]))
            c.power_map = tuple(pm)
            for action in ACTIONS:
                c.fixed[action] = self.fixed_points_of(c.representative, action)

    # queries ----------------------------------------------------------------

    @property
    def identity_class(self) -> ConjugacyClass:
        return self.classes[int(self.class_of[self.identity_index])]

    def class_by_name(self, name: str) -> ConjugacyClass:
        key = name.strip().strip("()").replace(" ", "")
        for c in self.classes:
            if c.name == key:
                return c
        raise KeyError(f"no class named ({key})")

    def class_by_charpoly(self, p: QPoly) -> ConjugacyClass:
        try:
            return self.classes[self._by_poly[p]]
        except KeyError:
            raise LookupError(f"no class has V6 characteristic polynomial {p}") from None

    def identify_class(self, g) -> ConjugacyClass:
        """Class of ``g`` from its action on V6 (not from the stored partition)."""
        g = np.asarray(g)
        if not self.contains(g):
            raise ValueError("permutation is not in the group")
        return self.class_by_charpoly(char_poly_V6(g))

    def fixed_points_of(self, g: np.ndarray, action: str) -> int:
        g = np.asarray(g)
        if action == "lines":
            return int((g == np.arange(N_LINES)).sum())
        if action == "tritangents":
            return sum({int(g[x]) for x in t} == set(t) for t in self.tritangents)
        if action == "double_sixes":
            n = 0
            for ds in self.double_sixes:
                img = frozenset([frozenset(int(g[x]) for x in ds.first), frozenset(int(g[x]) for x in ds.second)])
                n += img == ds.key()
            return n
        raise ValueError(f"unknown action {action!r}; expected one of {ACTIONS}")

    def fixed_points(self, c: ConjugacyClass | int, action: str) -> int:
        c = self.classes[c] if isinstance(c, int) else c
        if action not in c.fixed:
            raise ValueError(f"unknown action {action!r}; expected one of {ACTIONS}")
        return c.fixed[action]

    def random_element(self, rng: np.random.Generator) -> np.ndarray:
        return self.elements[rng.integers(self.order)]

    # subgroups --------------------------------------------------------------

    def subgroup(self, gens: Sequence) -> np.ndarray:
        """Element indices of the subgroup generated by ``gens``."""
        gens = [np.asarray(g, dtype=np.int8) for g in gens]
        for g in gens:
            if not self.contains(g):
                raise ValueError("generator is not in the group")
        return np.sort(self.index_of(closure(gens, limit=self.order)))

    def stabilizer(self, lines: Iterable[int] = (), setwise: Iterable[Iterable[int]] = ()) -> np.ndarray:
        """Elements fixing each line in ``lines`` and each set in ``setwise`` (as a set)."""
        G = self.elements
        ok = np.ones(self.order, dtype=bool)
        for x in lines:
            ok &= G[:, x] == x
        for s in setwise:
            s = sorted(set(s))
            img = np.sort(G[:, s], axis=1)
            ok &= (img == np.array(s)).all(axis=1)
        return G[ok]

    def class_distribution(self, elems: np.ndarray) -> np.ndarray:
        """Number of elements of ``elems`` in each class."""
        idx = self.index_of(np.atleast_2d(elems))
        return np.bincount(self.class_of[idx], minlength=len(self.classes))

    def coset_fixed_points(self, c: ConjugacyClass | int, gens: Sequence) -> int:
        """Number of cosets xH fixed by left multiplication with an element of ``c``.

        xH is fixed by g iff x^-1 g x lies in H, so the count is
        |C(g)| * |H ∩ c| / |H|.
        """
        c = self.classes[c] if isinstance(c, int) else c
        H = self.elements[self.subgroup(gens)] if len(gens) else np.arange(N_LINES, dtype=np.int8)[None]
        dist = self.class_distribution(H)
        num = (self.order // c.size) * int(dist[c.index])
        if num % len(H):
            raise ArithmeticError("non-integral fixed coset count")
        return num // len(H)


def char_poly_V6(g) -> QPoly:
    return charpoly(element_matrix_on_picard(g)) / QPoly([-1, 1])


def trace_V6(g) -> int:
    return int(np.trace(element_matrix_on_picard(g))) - 1


@lru_cache(maxsize=1)
def weyl_group() -> WeylGroup:
    return WeylGroup()


def automorphism_group(g: IncidenceGraph | None = None) -> WeylGroup:
    return weyl_group() if g is None or g is build_incidence() else WeylGroup(g)


def conjugacy_classes(G: WeylGroup | None = None) -> list[ConjugacyClass]:
    return (G or weyl_group()).classes


def all_relabelings() -> np.ndarray:
    return np.array([relabeling(s) for s in permutations(range(6))], dtype=np.int8)
