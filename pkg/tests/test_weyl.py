from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubicsurf import data
from cubicsurf.qpoly import QPoly
from cubicsurf.schlafli import INDEX, E, L, build_incidence
from cubicsurf.weyl import (
    CANONICAL,
    LINE_VECTORS,
    PICARD_FORM,
    WEYL_ORDER,
    char_poly_V6,
    compose,
    cyclotomic,
    ec_swap,
    element_matrix_on_picard,
    inverse,
    line_to_picard,
    pairing,
    preserves,
    relabeling,
    trace_V6,
    virtual_cycle_type_from_charpoly,
)

x = QPoly.gen()
elements = st.integers(min_value=0, max_value=WEYL_ORDER - 1)


# ---------------------------------------------------------------------------
# oracle: W(E6) as the group generated by the simple reflections on Z^7


def _simple_reflections():
    e = np.eye(7, dtype=np.int64)
    roots = [e[i] - e[i + 1] for i in range(1, 6)] + [e[0] - e[1] - e[2] - e[3]]
    out = []
    for r in roots:
        # s(v) = v + <v, r> r since <r, r> = -2
        out.append(np.eye(7, dtype=np.int64) + np.outer(r, r @ PICARD_FORM))
    return out


@pytest.fixture(scope="module")
def reflection_group():
    gens = _simple_reflections()
    ident = np.eye(7, dtype=np.int64)
    seen = {ident.tobytes()}
    mats = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for s in gens:
                y = s @ m
                k = y.tobytes()
                if k not in seen:
                    seen.add(k)
                    mats.append(y)
                    nxt.append(y)
        frontier = nxt
    return np.array(mats)


def _power_sum_signature(mats):
    """Traces of M^k on V6 for k = 1..6; these determine the V6 characteristic polynomial."""
    out = []
    P = mats.copy()
    for _ in range(6):
        out.append(np.einsum("nii->n", P) - 1)
        P = P @ mats
    return list(zip(*out))


def test_reflection_oracle_order_and_class_sizes(G, reflection_group):
    assert len(reflection_group) == WEYL_ORDER
    sig = Counter(_power_sum_signature(reflection_group))
    assert len(sig) == 25
    ours = Counter()
    for c in G.classes:
        M = element_matrix_on_picard(c.representative)
        ours[_power_sum_signature(M[None])[0]] = c.size
    assert ours == sig


# ---------------------------------------------------------------------------


def test_order(G):
    assert G.order == 51840
    assert len({e.tobytes() for e in G.elements}) == 51840
    g = build_incidence()
    rng = np.random.default_rng(1)
    for i in rng.integers(0, G.order, 200):
        assert preserves(g.adjacency, G.elements[i])


def test_relabeling_and_swap_are_members(G):
    g = build_incidence()
    s = relabeling([1, 0, 2, 3, 4, 5])
    assert preserves(g.adjacency, s) and G.contains(s)
    sw = ec_swap()
    assert preserves(g.adjacency, sw) and G.contains(sw)
    assert (sw[: 6] == np.arange(21, 27)).all() and (sw[6:21] == np.arange(6, 21)).all()
    bad = np.arange(27)
    bad[[0, 6]] = bad[[6, 0]]
    assert not preserves(g.adjacency, bad) and not G.contains(bad)


def test_classes_match_reference_rows(G):
    assert len(G.classes) == 25
    assert sum(c.size for c in G.classes) == 51840
    rows = {r.name: r for r in data.CLASS_TABLE}
    for c in G.classes:
        r = rows[c.name]
        assert (c.size, c.order, c.even) == (r.size, r.order, r.even)
    assert G.class_by_name("(2,4)").size == 3240
    assert G.class_by_name("1^6").size == 1


def test_lattice_model():
    K = CANONICAL
    assert pairing(K, K) == 3
    assert list(line_to_picard(E(1))) == [0, 1, 0, 0, 0, 0, 0]
    assert list(line_to_picard(L(1, 2))) == [1, -1, -1, 0, 0, 0, 0]
    for v in LINE_VECTORS:
        assert pairing(v, v) == -1 and pairing(v, K) == -1


def test_element_matrices(G):
    assert (element_matrix_on_picard(np.arange(27)) == np.eye(7)).all()
    assert trace_V6(np.arange(27)) == 6
    rng = np.random.default_rng(2)
    for i in rng.integers(0, G.order, 100):
        g = G.elements[i]
        M = element_matrix_on_picard(g)
        assert (M.T @ PICARD_FORM @ M == PICARD_FORM).all()
        assert (M @ CANONICAL == CANONICAL).all()
        assert (M @ LINE_VECTORS.T == LINE_VECTORS[g].T).all()
    bad = np.arange(27)
    bad[[0, 6]] = bad[[6, 0]]
    with pytest.raises(ValueError):
        element_matrix_on_picard(bad)


def test_v6_traces(G):
    assert G.class_by_name("1^2,2^2").trace_V6 == 2
    assert G.class_by_name("1^-3,3^3").trace_V6 == -3


def test_charpolys(G):
    assert G.identity_class.char_poly_V6 == (x - 1) ** 6
    assert len({c.char_poly_V6 for c in G.classes}) == 25
    assert G.class_by_name("1^-3,3^3").char_poly_V6 == (x**2 + x + 1) ** 3
    for c in G.classes:
        assert c.char_poly_V6 == char_poly_V6(c.representative)
        assert c.char_poly_V6.is_integral() and c.char_poly_V6.is_monic()


def test_virtual_cycle_types(G):
    assert G.identity_class.name == "1^6"
    # eigenvalues (z, z, z^2, z^4, z^5, z^5), z a primitive 6th root of unity
    p = cyclotomic(6) ** 2 * cyclotomic(3)
    assert virtual_cycle_type_from_charpoly(p) == ((1, 1), (2, -2), (3, -1), (6, 2))
    for c in G.classes:
        assert sum(d * i for d, i in c.cycle_type) == 6
        # the name reproduces the polynomial: prod (x^d - 1)^{i_d}
        num = den = QPoly([1])
        for d, i in c.cycle_type:
            if i > 0:
                num = num * (x**d - 1) ** i
            else:
                den = den * (x**d - 1) ** (-i)
        assert num / den == c.char_poly_V6


def test_fixed_points(G):
    I = G.identity_class
    assert G.fixed_points(I, "tritangents") == 45
    assert G.fixed_points(I, "lines") == 27
    assert G.fixed_points(I, "double_sixes") == 36
    assert G.fixed_points(G.class_by_name("1^-2,2^4"), "tritangents") == 13
    for c in G.classes:
        for a in ("lines", "tritangents", "double_sixes"):
            assert G.fixed_points_of(c.representative, a) == G.fixed_points(c, a)


def test_burnside(G):
    from fractions import Fraction

    for a in ("lines", "tritangents", "double_sixes"):
        assert sum(Fraction(c.size, 51840) * G.fixed_points(c, a) for c in G.classes) == 1


def test_parity(G):
    assert G.class_by_name("1^4,2").parity == "odd"
    assert G.identity_class.parity == "even"
    assert sum(c.even for c in G.classes) == 15
    for c in G.classes:
        det = round(np.linalg.det(element_matrix_on_picard(c.representative)))
        assert (det == 1) == c.even


def test_power_maps(G):
    for c in G.classes:
        assert c.power(c.order) == G.identity_class.index
        assert c.power(1) == c.index
        g = c.representative
        p = g
        for k in range(2, c.order + 1):
            p = compose(g, p)
            assert G.identify_class(p).index == c.power(k)


@settings(max_examples=60, deadline=None)
@given(elements, elements)
def test_identify_class_is_conjugation_invariant(G, i, j):
    g, h = G.elements[i], G.elements[j]
    conj = compose(compose(h, g), inverse(h))
    assert G.identify_class(conj) == G.identify_class(g)
    assert G.identify_class(g).index == G.class_of[i]


@settings(max_examples=60, deadline=None)
@given(elements, elements)
def test_parity_is_a_homomorphism(G, i, j):
    g, h = G.elements[i], G.elements[j]
    eg, eh = G.identify_class(g).even, G.identify_class(h).even
    assert G.identify_class(compose(g, h)).even == (eg == eh)


def test_class_representatives(G):
    for c in G.classes:
        assert G.identify_class(c.representative) is c


def test_coset_fixed_points(G):
    seeds = [relabeling([1, 0, 2, 3, 4, 5]), relabeling([1, 2, 3, 4, 5, 0]), ec_swap()]
    whole = [G.elements[i] for i in np.random.default_rng(0).integers(0, G.order, 4)]
    assert len(G.subgroup(whole)) == G.order
    for c in G.classes:
        assert G.coset_fixed_points(c, whole) == 1
        assert G.coset_fixed_points(c, []) == (51840 if c.index == G.identity_class.index else 0)
    stab = G.stabilizer(lines=[INDEX[E(1)]])
    assert len(stab) == 51840 // 27
    rng = np.random.default_rng(3)
    gens = [stab[i] for i in rng.integers(0, len(stab), 4)]
    assert len(G.subgroup(gens)) == len(stab)
    for c in G.classes:
        assert G.coset_fixed_points(c, gens) == G.fixed_points(c, "lines")
    with pytest.raises(ValueError):
        bad = np.arange(27)
        bad[[0, 6]] = bad[[6, 0]]
        G.subgroup([bad])
    # the seed generators give S6 x Z/2 only
    assert len(G.subgroup(seeds)) == 2 * 720
