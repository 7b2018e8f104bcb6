import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from kronmult.cyclotomic import Cyclotomic, cyclotomic_poly, phi
from kronmult.errors import ParseError


def close(a, b):
    return abs(complex(a) - complex(b)) < 1e-9


@st.composite
def cyclos(draw, conductors=(1, 3, 4, 5, 8, 12, 15, 20, 24)):
    n = draw(st.sampled_from(conductors))
    terms = draw(st.dictionaries(st.integers(0, n - 1), st.integers(-4, 4), max_size=4))
    return Cyclotomic.from_terms(terms, n)


def test_cyclotomic_polys():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    assert [phi(n) for n in (1, 2, 12, 15)] == [1, 1, 4, 8]


def test_roots_of_unity():
    z = Cyclotomic.root(3)
    assert z * z * z == 1
    assert 1 + z + z * z == 0
    i = Cyclotomic.root(4)
    assert i * i == -1
    assert Cyclotomic.root(6) == -(z * z)


def test_minimal_conductor():
    z5 = Cyclotomic.root(5)
    golden = z5 + z5.conjugate()
    assert golden.conductor == 5
    sqrt5 = golden * 2 + 1
    assert (sqrt5 * sqrt5) == 5
    assert (Cyclotomic.root(8) + Cyclotomic.root(8, 7)) * (Cyclotomic.root(8) + Cyclotomic.root(8, 7)) == 2
    assert (Cyclotomic.root(12, 1) + Cyclotomic.root(12, 11)).conductor == 12
    assert Cyclotomic.root(10).conductor == 5
    assert Cyclotomic.root(2) == -1 and Cyclotomic.root(2).conductor == 1


def test_rational_and_parse():
    assert Cyclotomic.rational(Fraction(3, 2)).to_rational() == Fraction(3, 2)
    for text in ["0", "-7", "1*z(3,1)", "2*z(5,1)+2*z(5,4)", "1*z(4,1)"]:
        c = Cyclotomic.parse(text)
        assert Cyclotomic.parse(c.to_string()) == c
    assert Cyclotomic.parse("z(3,2)") == Cyclotomic.root(3, 2)


@pytest.mark.parametrize("text,col", [("1*z(3,", 7), ("abc", 1), ("2*z(0,1)", 3)])
def test_parse_errors_carry_column(text, col):
    with pytest.raises(ParseError) as info:
        Cyclotomic.parse(text)
    assert info.value.column is not None and info.value.column >= 1


@settings(max_examples=60, deadline=None)
@given(cyclos(), cyclos(), cyclos())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert a - a == 0
    assert close(a * b, complex(a) * complex(b))


@settings(max_examples=60, deadline=None)
@given(cyclos())
def test_canonical_form_is_unique(a):
    for m in (2, 3):
        n = a.conductor * m
        lifted = Cyclotomic.from_terms(dict(enumerate(a.lift(n))), n)
        assert lifted == a and lifted.conductor == a.conductor and hash(lifted) == hash(a)
    assert a.conductor % 4 != 2


@settings(max_examples=60, deadline=None)
@given(cyclos())
def test_conjugate_and_galois(a):
    assert close(a.conjugate(), complex(a).conjugate())
    assert a.galois(-1) == a.conjugate()
    assert (a * a.conjugate()).is_real()
    assert a.galois(1) == a


def test_complex_value():
    assert close(Cyclotomic.root(7, 2), cmath.exp(2j * cmath.pi * 2 / 7))


def test_sort_key_puts_one_first():
    values = [Cyclotomic.rational(-1), Cyclotomic.root(3), Cyclotomic.rational(1)]
    assert min(values, key=lambda v: v.sort_key()) == 1
