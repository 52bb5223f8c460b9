from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cubicsurf.qpoly import QPoly, factor_rational_roots, format_factored, format_poly

q = QPoly.gen()
ints = st.integers(min_value=-50, max_value=50)
polys = st.lists(ints, max_size=6).map(QPoly)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a - a == QPoly()


@given(polys, polys)
def test_degree_bookkeeping(a, b):
    if a and b:
        assert (a * b).degree == a.degree + b.degree
    assert (a + b).degree <= max(a.degree, b.degree)


@given(polys, polys.filter(bool))
def test_divmod_reconstructs(a, b):
    quo, rem = a.divmod(b)
    assert quo * b + rem == a
    assert rem.is_zero() or rem.degree < b.degree


@given(polys, st.integers(min_value=-20, max_value=20))
def test_evaluation_is_a_ring_map(a, x):
    assert (a * a + a)(x) == a(x) ** 2 + a(x)


def test_exact_division():
    p = (q - 2) * (q - 3) * (q - 5) ** 2
    assert p / (q - 5) == (q - 2) * (q - 3) * (q - 5)
    with pytest.raises(ArithmeticError):
        p / (q - 7)
    assert (p / 2).coefficient(4) == Fraction(1, 2)


def test_expanded_form():
    p = (q - 2) * (q - 3) * (q - 5) ** 2
    assert p.int_coeffs() == [150, -185, 81, -15, 1]
    assert format_poly(p) == "q^4 - 15q^3 + 81q^2 - 185q + 150"
    assert format_poly(QPoly()) == "0"


def test_factored_form():
    assert format_factored(80 * (q**2 + q - 3) * (q + 1) ** 2) == "80(q^2 + q - 3)(q + 1)^2"
    content, factors, rest = factor_rational_roots(q**2 * (q**2 + 1))
    assert content == 1 and factors == [(q, 2)] and rest == q**2 + 1


def test_composition():
    assert (q**2 + 1)(q + 1) == q**2 + 2 * q + 2


def test_ordering_and_hash():
    assert len({q + 1, QPoly([1, 1]), q}) == 2
    assert sorted([q**2, q, QPoly([3])]) == [QPoly([3]), q, q**2]
