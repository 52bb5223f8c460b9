"""Line combinatorics, checked against the Picard-lattice model of the 27 lines."""

from itertools import combinations, product

import networkx as nx
import numpy as np
import pytest

from cubicsurf.schlafli import (
    C,
    E,
    INDEX,
    LABELS,
    L,
    DoubleSix,
    build_incidence,
    enumerate_double_sixes,
    enumerate_tritangents,
    is_double_six,
    parse_label,
)
from cubicsurf.weyl import CANONICAL, LINE_VECTORS, PICARD_FORM


@pytest.fixture(scope="module")
def g():
    return build_incidence()


def test_labels():
    assert len(LABELS) == 27
    assert LABELS[:6] == tuple(E(i) for i in range(1, 7))
    assert LABELS[6] == L(1, 2) and LABELS[20] == L(5, 6)
    assert LABELS[-1] == C(6)
    assert list(LABELS) == sorted(LABELS, key=lambda x: ("ELC".index(x.kind), x.idx))
    assert parse_label("l21") == L(1, 2)
    with pytest.raises(ValueError):
        E(7)


def test_rules(g):
    assert not g.adjacent(E(1), E(2))
    assert not g.adjacent(C(1), C(2))
    assert g.adjacent(E(1), C(2)) and not g.adjacent(E(3), C(3))
    assert g.adjacent(E(1), L(1, 5)) and not g.adjacent(E(2), L(1, 5))
    assert g.adjacent(L(1, 2), L(3, 4)) and not g.adjacent(L(1, 2), L(2, 3))


def test_adjacency_from_lattice(g):
    # independent model: two distinct lines meet iff their classes pair to 1
    gram = LINE_VECTORS @ PICARD_FORM @ LINE_VECTORS.T
    assert (np.diag(gram) == -1).all()
    off = gram - np.diag(np.diag(gram))
    assert set(np.unique(off)) <= {0, 1}
    assert np.array_equal(off == 1, g.adjacency.astype(bool))


def test_strongly_regular(g):
    assert g.srg_parameters() == (27, 10, 1, 5)
    A = g.adjacency.astype(int)
    assert (A.sum(axis=1) == 10).all()
    common = A @ A
    for a, b in combinations(range(27), 2):
        assert common[a, b] == (1 if A[a, b] else 5)


def test_tritangents(g):
    ts = enumerate_tritangents(g)
    assert len(ts) == 45
    assert ts == sorted(ts)
    assert (INDEX[E(1)], INDEX[L(1, 2)], INDEX[C(2)]) in ts
    assert tuple(sorted((INDEX[L(1, 2)], INDEX[L(3, 4)], INDEX[L(5, 6)]))) in ts
    # oracle: triangles of the graph (networkx) and triples with l1 + l2 + l3 = -K
    G = nx.from_numpy_array(g.adjacency.astype(int))
    assert sum(nx.triangles(G).values()) // 3 == 45
    anti = {t for t in combinations(range(27), 3)
            if (LINE_VECTORS[list(t)].sum(axis=0) == -CANONICAL).all()}
    assert anti == set(ts)
    per_line = np.bincount(np.array(ts).ravel(), minlength=27)
    assert (per_line == 5).all()


def test_adjacent_pairs_in_one_tritangent(g):
    ts = enumerate_tritangents(g)
    for a, b in combinations(range(27), 2):
        n = sum(a in t and b in t for t in ts)
        assert n == (1 if g.adjacent(a, b) else 0)


def _roots():
    out = []
    for v in product(range(-2, 3), repeat=7):
        v = np.array(v)
        if v @ PICARD_FORM @ v == -2 and v @ PICARD_FORM @ CANONICAL == 0:
            out.append(v)
    return out


def test_double_sixes_match_roots(g):
    dss = enumerate_double_sixes(g)
    assert len(dss) == 36
    assert dss == sorted(dss)
    # oracle: a root r splits 12 lines into halves {<l,r> = 1} and {<l,r> = -1}
    roots = _roots()
    assert len(roots) == 72
    from_roots = set()
    for r in roots:
        p = LINE_VECTORS @ PICARD_FORM @ r
        from_roots.add(frozenset([frozenset(np.flatnonzero(p == 1)), frozenset(np.flatnonzero(p == -1))]))
    assert from_roots == {ds.key() for ds in dss}


def test_classical_double_six(g):
    es = [INDEX[E(i)] for i in range(1, 7)]
    cs = [INDEX[C(i)] for i in range(1, 7)]
    assert is_double_six(es, cs, g)
    assert DoubleSix(tuple(es), tuple(cs)) in enumerate_double_sixes(g)
    assert not is_double_six(es[:5] + es[:1], cs, g)
    assert not is_double_six(es, es, g)


def test_every_six_coclique_has_one_partner(g):
    from cubicsurf.schlafli import _cocliques, six_partner

    sixes = _cocliques(g.adjacency, 6)
    assert len(sixes) == 72
    for s in sixes:
        other = six_partner(s, g)
        assert other is not None and is_double_six(s, other, g)
