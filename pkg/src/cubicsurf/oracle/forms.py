"""Cubic forms in four variables with F_2 coefficients.

A form is a 20-bit integer: bit ``i`` is the coefficient of ``CUBIC_MONOMIALS[i]``,
the degree-3 monomials listed as sorted index triples (x0^3, x0^2 x1, ...).
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations_with_replacement, product

import numpy as np

from .gf import field, projective_points

CUBIC_MONOMIALS: tuple[tuple[int, int, int], ...] = tuple(combinations_with_replacement(range(4), 3))
QUADRATIC_MONOMIALS: tuple[tuple[int, int], ...] = tuple(combinations_with_replacement(range(4), 2))
N_MONOMIALS = len(CUBIC_MONOMIALS)  # 20
N_FORMS = 1 << N_MONOMIALS
_CUBIC_INDEX = {m: i for i, m in enumerate(CUBIC_MONOMIALS)}
_QUAD_INDEX = {m: i for i, m in enumerate(QUADRATIC_MONOMIALS)}


def form_from_monomials(monos) -> int:
    """Bit vector of a sum of monomials given as index triples (order irrelevant)."""
    v = 0
    for m in monos:
        v ^= 1 << _CUBIC_INDEX[tuple(sorted(m))]
    return v


def to_hex(v: int) -> str:
    return f"{v:05x}"


def from_hex(s: str) -> int:
    v = int(s, 16)
    if not 0 < v < N_FORMS:
        raise ValueError(f"{s!r} is not a nonzero 20-bit coefficient vector")
    return v


def coefficients(v: int) -> list[int]:
    return [(v >> i) & 1 for i in range(N_MONOMIALS)]


def from_coefficients(cs) -> int:
    cs = [int(c) % 2 for c in cs]
    if len(cs) != N_MONOMIALS:
        raise ValueError(f"expected {N_MONOMIALS} coefficients, got {len(cs)}")
    return sum(c << i for i, c in enumerate(cs))


def format_form(v: int) -> str:
    terms = []
    for i, m in enumerate(CUBIC_MONOMIALS):
        if (v >> i) & 1:
            c = Counter(m)
            terms.append("*".join(f"x{j}" + (f"^{e}" if e > 1 else "") for j, e in sorted(c.items())))
    return " + ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# linear substitutions


def _matmul2(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return (a.astype(np.int64) @ b.astype(np.int64)) % 2


def is_invertible2(g: np.ndarray) -> bool:
    m = (np.array(g, dtype=np.int64) % 2).copy()
    n = len(m)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r, col]), None)
        if piv is None:
            return False
        m[[col, piv]] = m[[piv, col]]
        for r in range(n):
            if r != col and m[r, col]:
                m[r] ^= m[col]
    return True


def substitution_matrix(g) -> np.ndarray:
    """20x20 F_2 matrix S with coeffs(F∘g) = S @ coeffs(F), where (F∘g)(x) = F(g x)."""
    g = np.array(g, dtype=np.int64) % 2
    if g.shape != (4, 4) or not is_invertible2(g):
        raise ValueError("substitution must be an invertible 4x4 matrix over F_2")
    S = np.zeros((N_MONOMIALS, N_MONOMIALS), dtype=np.uint8)
    for col, mono in enumerate(CUBIC_MONOMIALS):
        # x_i -> sum_j g[i, j] x_j; expand the product of three linear forms mod 2
        expansion: Counter = Counter()
        rows = [[j for j in range(4) if g[i, j]] for i in mono]
        for choice in product(*rows):
            expansion[tuple(sorted(choice))] += 1
        for m, cnt in expansion.items():
            if cnt % 2:
                S[_CUBIC_INDEX[m], col] ^= 1
    return S


def apply_substitution(S: np.ndarray, forms):
    """Apply a substitution matrix to one form or an array of forms (bit vectors)."""
    cols = np.array([sum(int(S[r, c]) << r for r in range(N_MONOMIALS)) for c in range(N_MONOMIALS)],
                    dtype=np.int64)
    arr = np.asarray(forms, dtype=np.int64)
    out = np.zeros_like(arr)
    for i in range(N_MONOMIALS):
        out ^= ((arr >> i) & 1) * cols[i]
    return int(out) if out.ndim == 0 else out


# generators of GL(4, F_2): a transvection and the cyclic coordinate shift
TRANSVECTION = np.array([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], dtype=np.int64)
CYCLE = np.array([[0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]], dtype=np.int64)
GL4_GENERATORS = (TRANSVECTION, CYCLE)
GL4_ORDER = 20160


def matrix_group_closure(gens) -> list[np.ndarray]:
    """All elements of the matrix group over F_2 generated by ``gens``."""
    ident = np.eye(4, dtype=np.int64)
    seen = {ident.tobytes(): ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = _matmul2(g, x)
                key = y.tobytes()
                if key not in seen:
                    seen[key] = y
                    nxt.append(y)
        frontier = nxt
    return list(seen.values())


# ---------------------------------------------------------------------------
# evaluation over GF(2^k)


@lru_cache(maxsize=None)
def monomial_values(k: int) -> tuple[np.ndarray, np.ndarray]:
    """Values of the cubic and quadratic monomials at every point of P^3(GF(2^k)).

    Returns arrays of shape (20, N) and (10, N), uint8.
    """
    F = field(k)
    P = projective_points(k).astype(np.intp)
    M = F.mul
    quad = np.stack([M[P[:, a], P[:, b]] for a, b in QUADRATIC_MONOMIALS])
    cub = np.stack([M[M[P[:, a], P[:, b]], P[:, c]] for a, b, c in CUBIC_MONOMIALS])
    return cub, quad


def _partial_table() -> np.ndarray:
    """D[i, m] = bit vector over quadratic monomials of d/dx_i of cubic monomial m (mod 2)."""
    D = np.zeros((4, N_MONOMIALS), dtype=np.int64)
    for m_idx, mono in enumerate(CUBIC_MONOMIALS):
        c = Counter(mono)
        for i in range(4):
            e = c.get(i, 0)
            if e % 2 == 0:
                continue
            rest = list(mono)
            rest.remove(i)
            D[i, m_idx] = 1 << _QUAD_INDEX[tuple(sorted(rest))]
    return D


PARTIALS = _partial_table()


def partials(v: int) -> list[int]:
    """The four partial derivatives as 10-bit vectors over the quadratic monomials."""
    out = []
    for i in range(4):
        acc = 0
        for m in range(N_MONOMIALS):
            if (v >> m) & 1:
                acc ^= int(PARTIALS[i, m])
        out.append(acc)
    return out


def _xor_columns(table: np.ndarray, bits: int) -> np.ndarray:
    acc = np.zeros(table.shape[1], dtype=np.uint8)
    i = 0
    while bits:
        if bits & 1:
            acc ^= table[i]
        bits >>= 1
        i += 1
    return acc


def evaluate(v: int, k: int) -> np.ndarray:
    """F at every point of P^3(GF(2^k))."""
    cub, _ = monomial_values(k)
    return _xor_columns(cub, v)


def point_count(v: int, k: int) -> int:
    """#{x in P^3(GF(2^k)) : F(x) = 0}."""
    return int((evaluate(v, k) == 0).sum())


def singular_points(v: int, k: int) -> np.ndarray:
    """Indices of points of P^3(GF(2^k)) where all four partials vanish."""
    _, quad = monomial_values(k)
    mask = np.ones(quad.shape[1], dtype=bool)
    for d in partials(v):
        mask &= _xor_columns(quad, d) == 0
    return np.flatnonzero(mask)


def is_smooth(v: int, depth: int = 6) -> bool:
    """No common zero of the partials over GF(2^k) for any k <= depth.

    In characteristic 2 the Euler relation reads sum x_i dF/dx_i = F, so such
    a zero always lies on the surface; that is asserted, not assumed.
    """
    if v == 0:
        raise ValueError("the zero form does not define a surface")
    for k in range(1, depth + 1):
        sing = singular_points(v, k)
        if len(sing):
            assert (evaluate(v, k)[sing] == 0).all(), "Euler relation violated"
            return False
    return True


# ---------------------------------------------------------------------------
# lines of P^3(F_2)


@lru_cache(maxsize=1)
def rational_lines() -> list[tuple[int, int]]:
    """The 35 lines of P^3(F_2), each as a pair of spanning vectors (4-bit ints)."""
    seen = set()
    out = []
    for u in range(1, 16):
        for w in range(u + 1, 16):
            pts = frozenset([u, w, u ^ w])
            if pts not in seen:
                seen.add(pts)
                out.append((u, w))
    return out


@lru_cache(maxsize=1)
def _line_points_f4() -> np.ndarray:
    """For each rational line, its 5 points over GF(4), as (35, 5, 4) coordinates."""
    F = field(2)
    coeffs = [(1, 0)] + [(a, 1) for a in range(4)]
    lines = []
    for u, w in rational_lines():
        U = [(u >> (3 - j)) & 1 for j in range(4)]
        W = [(w >> (3 - j)) & 1 for j in range(4)]
        lines.append([[int(F.mul[a, U[j]]) ^ int(F.mul[b, W[j]]) for j in range(4)] for a, b in coeffs])
    return np.array(lines, dtype=np.intp)


def _evaluate_at(v: int, pts: np.ndarray, k: int) -> np.ndarray:
    M = field(k).mul
    acc = np.zeros(pts.shape[:-1], dtype=np.uint8)
    for i, (a, b, c) in enumerate(CUBIC_MONOMIALS):
        if (v >> i) & 1:
            acc ^= M[M[pts[..., a], pts[..., b]], pts[..., c]]
    return acc


def count_rational_lines(v: int) -> int:
    """Number of F_2-rational lines contained in the surface.

    A binary cubic vanishing at the 5 points of P^1(GF(4)) is zero, so a line
    lies on the surface iff F vanishes at its 5 points over GF(4).
    """
    vals = _evaluate_at(v, _line_points_f4(), 2)
    return int((vals == 0).all(axis=1).sum())
