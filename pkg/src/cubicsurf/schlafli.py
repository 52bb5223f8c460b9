"""Combinatorics of the 27 lines: labels, incidence graph, tritangents, double sixes.

Labels follow the blow-up model of a cubic surface: ``E(i)`` are the six
exceptional curves, ``L(i,j)`` the transforms of the lines through two of the
blown-up points and ``C(i)`` the transforms of the conics through five.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

N_LINES = 27


@dataclass(frozen=True, order=True)
class LineLabel:
    kind: str  # "E", "L" or "C"
    idx: tuple[int, ...]

    def __post_init__(self):
        if self.kind in ("E", "C"):
            ok = len(self.idx) == 1 and 1 <= self.idx[0] <= 6
        elif self.kind == "L":
            ok = len(self.idx) == 2 and 1 <= self.idx[0] < self.idx[1] <= 6
        else:
            ok = False
        if not ok:
            raise ValueError(f"invalid line label {self.kind}{self.idx}")

    def __str__(self):
        return f"{self.kind}{''.join(map(str, self.idx))}"


def E(i: int) -> LineLabel:
    return LineLabel("E", (i,))


def C(i: int) -> LineLabel:
    return LineLabel("C", (i,))


def L(i: int, j: int) -> LineLabel:
    i, j = min(i, j), max(i, j)
    return LineLabel("L", (i, j))


# canonical order: E1..E6, L12..L56, C1..C6
LABELS: tuple[LineLabel, ...] = tuple(
    [E(i) for i in range(1, 7)]
    + [L(i, j) for i, j in combinations(range(1, 7), 2)]
    + [C(i) for i in range(1, 7)]
)
INDEX: dict[LineLabel, int] = {lab: k for k, lab in enumerate(LABELS)}


def parse_label(s: str) -> LineLabel:
    s = s.strip().upper()
    kind, digits = s[0], [int(ch) for ch in s[1:] if ch.isdigit()]
    if kind == "L":
        return L(*digits)
    return LineLabel(kind, tuple(digits))


def _meets(a: LineLabel, b: LineLabel) -> bool:
    if a == b:
        return False
    ka, kb = a.kind, b.kind
    if ka == kb and ka in "EC":
        return False
    if {ka, kb} == {"E", "C"}:
        return a.idx[0] != b.idx[0]
    if ka == "L" and kb == "L":
        return not set(a.idx) & set(b.idx)
    # one L, one E or C
    lab, other = (a, b) if ka == "L" else (b, a)
    return other.idx[0] in lab.idx


@dataclass(frozen=True)
class IncidenceGraph:
    """Line-intersection graph on the canonical labels (the Schläfli graph)."""

    adjacency: np.ndarray  # (27, 27) bool, symmetric, zero diagonal

    def adjacent(self, a, b) -> bool:
        return bool(self.adjacency[_ix(a), _ix(b)])

    def neighbors(self, a) -> list[int]:
        return [int(j) for j in np.flatnonzero(self.adjacency[_ix(a)])]

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhood of each vertex as an int bitmask."""
        return tuple(sum(1 << int(j) for j in np.flatnonzero(row)) for row in self.adjacency)

    def srg_parameters(self) -> tuple[int, int, int, int]:
        """Return ``(v, k, lambda, mu)``; raises if the graph is not strongly regular."""
        A = self.adjacency.astype(np.int64)
        n = len(A)
        degrees = set(A.sum(axis=1).tolist())
        if len(degrees) != 1:
            raise ValueError(f"graph is not regular: degrees {sorted(degrees)}")
        common = A @ A
        off = ~np.eye(n, dtype=bool)
        lam = set(common[self.adjacency].tolist())
        mu = set(common[~self.adjacency & off].tolist())
        if len(lam) != 1 or len(mu) != 1:
            raise ValueError(f"graph is not strongly regular: lambda {lam}, mu {mu}")
        return n, degrees.pop(), lam.pop(), mu.pop()


def _ix(a) -> int:
    return INDEX[a] if isinstance(a, LineLabel) else int(a)


@lru_cache(maxsize=None)
def build_incidence() -> IncidenceGraph:
    A = np.zeros((N_LINES, N_LINES), dtype=bool)
    for i, a in enumerate(LABELS):
        for j, b in enumerate(LABELS):
            A[i, j] = _meets(a, b)
    A.setflags(write=False)
    return IncidenceGraph(A)


Tritangent = tuple[int, int, int]


def enumerate_tritangents(g: IncidenceGraph | None = None) -> list[Tritangent]:
    """All triangles of the graph as sorted index triples, lexicographically ordered."""
    A = (g or build_incidence()).adjacency
    out = []
    for a, b, c in combinations(range(len(A)), 3):
        if A[a, b] and A[a, c] and A[b, c]:
            out.append((a, b, c))
    return out


@dataclass(frozen=True, order=True)
class DoubleSix:
    """Two sextuples of skew lines; ``first[i]`` is the partner of ``second[i]``.

    Stored canonically: ``first`` holds the half whose smallest line index is
    smaller, and ``first`` is sorted.
    """

    first: tuple[int, ...]
    second: tuple[int, ...]

    def lines(self) -> frozenset[int]:
        return frozenset(self.first) | frozenset(self.second)

    def key(self) -> frozenset[frozenset[int]]:
        return frozenset([frozenset(self.first), frozenset(self.second)])


def is_double_six(a, b, g: IncidenceGraph | None = None) -> bool:
    A = (g or build_incidence()).adjacency
    a = [_ix(x) for x in a]
    b = [_ix(x) for x in b]
    if len(a) != 6 or len(b) != 6 or len(set(a) | set(b)) != 12:
        return False
    for half in (a, b):
        if any(A[x, y] for x, y in combinations(half, 2)):
            return False
    return all(bool(A[a[i], b[j]]) == (i != j) for i in range(6) for j in range(6))


def _cocliques(A: np.ndarray, size: int) -> list[tuple[int, ...]]:
    n = len(A)
    out: list[tuple[int, ...]] = []

    def grow(clique, cands):
        if len(clique) == size:
            out.append(tuple(clique))
            return
        for k, v in enumerate(cands):
            grow(clique + [v], [w for w in cands[k + 1:] if not A[v, w]])

    grow([], list(range(n)))
    return out


def six_partner(six: tuple[int, ...], g: IncidenceGraph | None = None) -> tuple[int, ...] | None:
    """Partner half of a 6-coclique, ordered to match ``six``, or None.

    The partner of ``six[i]`` is the unique line skew to ``six[i]`` and meeting
    the other five.
    """
    A = (g or build_incidence()).adjacency
    partner = []
    for i, x in enumerate(six):
        cands = [v for v in range(len(A)) if v not in six and not A[v, x]
                 and all(A[v, y] for j, y in enumerate(six) if j != i)]
        if len(cands) != 1:
            return None
        partner.append(cands[0])
    return tuple(partner)


def enumerate_double_sixes(g: IncidenceGraph | None = None) -> list[DoubleSix]:
    g = g or build_incidence()
    seen = set()
    out = []
    for six in _cocliques(g.adjacency, 6):
        other = six_partner(six, g)
        if other is None or not is_double_six(six, other, g):
            continue
        if six[0] < min(other):
            ds = DoubleSix(six, other)
        else:
            order = sorted(range(6), key=lambda i: other[i])
            ds = DoubleSix(tuple(other[i] for i in order), tuple(six[i] for i in order))
        if ds.key() not in seen:
            seen.add(ds.key())
            out.append(ds)
    out.sort()
    return out
