"""Point counts of smooth cubic surfaces split by Frobenius class, and everything built on them.

``q`` is accepted either as an integer prime power or as the symbolic
``QPoly`` generator, in which case counts come back as polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Union

import numpy as np

from .cohomology import alternating_trace_poly, quotient_cohomology, uconf2_cohomology
from .qpoly import QPoly
from .weyl import ACTIONS, WEYL_ORDER, ConjugacyClass, WeylGroup, mobius, weyl_group

Q = QPoly.gen()
QLike = Union[int, QPoly]
FLAVORS = ("product", "sym", "pconf", "uconf")


@dataclass(frozen=True)
class CountRow:
    """One row of a distribution table.

    ``value`` is the count normalised by #W(E6)/#PGL(4, F_q), i.e.
    ``sum(#c * class_count_poly(c))`` over the classes in the row; ``weight``
    is the sum of their class sizes.
    """

    key: object
    value: QPoly
    weight: int
    classes: tuple[str, ...] = field(default=())


def _cls(c, G: WeylGroup | None = None) -> ConjugacyClass:
    G = G or weyl_group()
    if isinstance(c, ConjugacyClass):
        return c
    if isinstance(c, (int, np.integer)):
        return G.classes[int(c)]
    return G.class_by_name(c)


# ---------------------------------------------------------------------------
# per-class counts


@lru_cache(maxsize=None)
def _count_polys() -> tuple[QPoly, ...]:
    H = quotient_cohomology()
    G = weyl_group()
    out = []
    for c in G.classes:
        coeffs = [0] * 5
        for i, f in enumerate(H):
            coeffs[4 - i] += (-1) ** i * f[c.index]
        out.append(QPoly(coeffs))
    return tuple(out)


def class_count_poly(c) -> QPoly:
    """Normalised count ``sum_i (-1)^i q^(4-i) chi_{H^i}(c)``: monic of degree 4."""
    return _count_polys()[_cls(c).index]


def pgl4_order(q: QLike = Q):
    return q**6 * (q**2 - 1) * (q**3 - 1) * (q**4 - 1)


def is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
        p += 1
    return True


def absolute_count(c, q: int) -> int:
    """Number of smooth cubic surfaces over F_q with Frobenius class ``c``."""
    c = _cls(c)
    if not is_prime_power(q):
        raise ValueError(f"q = {q} is not a prime power")
    val = Fraction(pgl4_order(q) * c.size * class_count_poly(c)(q), WEYL_ORDER)
    if val.denominator != 1 or val < 0:
        raise ArithmeticError(f"count for ({c.name}) at q={q} is {val}")
    return int(val)


def total_count_poly() -> QPoly:
    """sum_c #c * poly_c: the whole of X(F_q), normalised."""
    G = weyl_group()
    return sum((c.size * class_count_poly(c) for c in G.classes), QPoly())


def exceptions(c) -> list[int]:
    """Prime powers at which the class count vanishes."""
    p = class_count_poly(c)
    bound = 1 + max(abs(x) for x in p.coeffs[:-1]) if p.degree > 0 else 1
    return [q for q in range(2, int(bound) + 1) if is_prime_power(q) and p(q) == 0]


# ---------------------------------------------------------------------------
# point counts on the surface and its configuration spaces


def trace_t(c, k: int = 1) -> int:
    """t_k = 1 + chi_V6(c^k), so that #S(F_{q^k}) = q^{2k} + t_k q^k + 1."""
    G = weyl_group()
    c = _cls(c, G)
    return 1 + G.classes[c.power(k)].trace_V6


def surface_point_counts(c, k: int, q: QLike = Q):
    if k < 1:
        raise ValueError("k must be >= 1")
    t = trace_t(c, k)
    return q ** (2 * k) + t * q**k + 1


def closed_point_counts(c, q: QLike = Q, max_degree: int = 6) -> list:
    """a_1..a_max_degree: numbers of closed points of each degree (Möbius inversion)."""
    out = []
    for d in range(1, max_degree + 1):
        acc = 0
        for e in range(1, d + 1):
            if d % e == 0:
                acc = acc + mobius(d // e) * surface_point_counts(c, e, q)
        if isinstance(acc, QPoly):
            out.append(acc / d)
        else:
            if acc % d:
                raise ArithmeticError(f"non-integral closed point count in degree {d}")
            out.append(acc // d)
    return out


def _binom(a, j: int):
    """binomial(a, j) for an integer or polynomial ``a``."""
    if isinstance(a, QPoly):
        out = QPoly([1])
        for i in range(j):
            out = out * (a - i)
        fact = 1
        for i in range(2, j + 1):
            fact *= i
        return out / fact
    return comb(a, j) if a >= 0 else 0


def _multichoose(a, j: int):
    """Number of j-element multisets from a set of size ``a``."""
    if j == 0:
        return QPoly([1]) if isinstance(a, QPoly) else 1
    return _binom(a + j - 1, j)


def _series_coefficient(c, q, n: int, exterior: bool):
    """Coefficient of x^n in prod_d (1 + x^d)^{a_d} (exterior) or (1 - x^d)^{-a_d}."""
    a = closed_point_counts(c, q, max(n, 1))
    zero = QPoly() if isinstance(q, QPoly) else 0
    series = [zero] * (n + 1)
    series[0] = series[0] + 1
    for d in range(1, n + 1):
        ad = a[d - 1]
        factor = [zero] * (n + 1)
        for j in range(0, n // d + 1):
            factor[d * j] = _binom(ad, j) if exterior else _multichoose(ad, j)
        new = [zero] * (n + 1)
        for i, s in enumerate(series):
            if not s:
                continue
            for k, f in enumerate(factor[: n + 1 - i]):
                if f:
                    new[i + k] = new[i + k] + s * f
        series = new
    return series[n]


def config_count(c, flavor: str, n: int, q: QLike = Q):
    """#F(F_q) for F = S^n, Sym^n S, PConf^n S or UConf^n S, given Frob class ``c``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    n1 = surface_point_counts(c, 1, q)
    if flavor == "product":
        return n1**n
    if flavor == "pconf":
        out = 1
        for i in range(n):
            out = out * (n1 - i)
        return out
    if flavor == "uconf":
        return _series_coefficient(c, q, n, exterior=True)
    if flavor == "sym":
        return _series_coefficient(c, q, n, exterior=False)
    raise ValueError(f"unknown flavor {flavor!r}; expected one of {FLAVORS}")


def uconf2_trace_poly(c) -> QPoly:
    """#UConf^2 S from the graded character of H*(UConf^2 S) via the trace formula."""
    return alternating_trace_poly(uconf2_cohomology(), _cls(c).index, dim=4)


# ---------------------------------------------------------------------------
# tables


def _aggregate(key_of: Callable[[ConjugacyClass], object], sort_key=None) -> list[CountRow]:
    G = weyl_group()
    groups: dict = {}
    for c in G.classes:
        groups.setdefault(key_of(c), []).append(c)
    rows = []
    for key, cs in groups.items():
        value = sum((c.size * class_count_poly(c) for c in cs), QPoly())
        rows.append(CountRow(key, value, sum(c.size for c in cs), tuple(c.name for c in cs)))
    rows.sort(key=lambda r: sort_key(r.key) if sort_key else r.key)
    return rows


def table1() -> list[CountRow]:
    G = weyl_group()
    return [CountRow(c.name, class_count_poly(c), c.size, (c.name,)) for c in G.classes]


def table2() -> list[CountRow]:
    return _aggregate(lambda c: trace_t(c, 1))


def table3() -> list[CountRow]:
    return marking_distribution("tritangents")


def table4() -> list[CountRow]:
    return _aggregate(lambda c: config_count(c, "uconf", 2))


def marking_distribution(marking, fiber: tuple[str, int] | None = None) -> list[CountRow]:
    """Distribution of d (or d * #F) over X(F_q).

    ``marking`` is one of the actions ``lines``/``tritangents``/``double_sixes``,
    or a list of generators of a subgroup H, in which case d is the number of
    Frobenius-fixed cosets of H. ``fiber`` is ``(flavor, n)`` to multiply by
    the fiber count, keying rows by a polynomial.
    """
    G = weyl_group()
    if isinstance(marking, str):
        if marking not in ACTIONS:
            raise ValueError(f"unknown marking {marking!r}; expected one of {ACTIONS}")
        d_of = lambda c: G.fixed_points(c, marking)  # noqa: E731
    else:
        gens = list(marking)
        d_of = lambda c: G.coset_fixed_points(c, gens)  # noqa: E731
    if fiber is None:
        return _aggregate(d_of)
    flavor, n = fiber
    return _aggregate(lambda c: d_of(c) * QPoly.coerce(config_count(c, flavor, n)))


def weighted_average(f: Callable[[ConjugacyClass], QLike]) -> tuple[QPoly, QPoly]:
    """(sum_c #c poly_c f(c), sum_c #c poly_c): the average of f over X(F_q) is their ratio."""
    G = weyl_group()
    num = sum((c.size * class_count_poly(c) * f(c) for c in G.classes), QPoly())
    return num, total_count_poly()


def t_values() -> list[int]:
    return sorted({trace_t(c) for c in weyl_group().classes})
