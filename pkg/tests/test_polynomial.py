import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tuttepoly.polynomial import BiPoly, UniPoly, format_rational, parse_rational

X, Y = BiPoly.x(), BiPoly.y()
K4E = X**3 + 2 * X**2 + X + 2 * X * Y + Y + Y**2

bipolys = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(-50, 50), max_size=6
).map(BiPoly)
rationals = st.fractions(max_denominator=20).filter(lambda q: abs(q) < 50)


def test_basic_arithmetic():
    assert X + Y == BiPoly({(1, 0): 1, (0, 1): 1})
    assert (X + 1) * (Y + 1) == X * Y + X + Y + 1
    assert (X - X).is_zero()
    assert BiPoly({(1, 1): 0}) == BiPoly.zero()


def test_eval_examples():
    assert K4E.eval(1, 1) == 8
    assert K4E.eval(0, 0) == K4E.coefficient(0, 0) == 0
    assert (K4E + 5).eval(0, 0) == 5


def test_canonical_text():
    assert K4E.to_string() == "x^3 + 2*x^2 + x + 2*x*y + y + y^2"
    assert BiPoly.one().to_string() == "1"
    assert BiPoly.zero().to_string() == "0"
    assert (X - 2 * Y).to_string() == "x - 2*y"
    assert (-X).to_string() == "-x"


def test_partial_derivative_examples():
    assert (X**2).partial_derivative(1, 0) == 2 * X
    assert K4E.partial_derivative(0, 0) == K4E
    assert (X**3 + 2 * X * Y).partial_derivative(1, 1) == BiPoly.constant(2)


@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 3), st.integers(0, 3))
def test_partial_derivative_of_monomial(i, j, p, q):
    def falling(n, k):
        out = 1
        for t in range(k):
            out *= n - t
        return out

    got = BiPoly.monomial(i, j).partial_derivative(p, q)
    coeff = falling(i, p) * falling(j, q)
    assert got == (BiPoly.monomial(i - p, j - q, coeff) if coeff else BiPoly.zero())


def test_coefficient_and_restrictions():
    assert (X**3 + 2 * X**2).coefficient(2, 0) == 2
    assert K4E.substitute_line("x", 1) == UniPoly([4, 3, 1])
    assert K4E.substitute_line("y", 0) == UniPoly([0, 1, 2, 1])
    assert K4E.substitute_line("diagonal") == UniPoly([0, 2, 5, 1])


@given(bipolys, bipolys, bipolys)
@settings(max_examples=100)
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == BiPoly.zero()


@given(bipolys, bipolys, rationals, rationals)
@settings(max_examples=100)
def test_eval_is_a_ring_map(a, b, x, y):
    assert (a + b).eval(x, y) == a.eval(x, y) + b.eval(x, y)
    assert (a * b).eval(x, y) == a.eval(x, y) * b.eval(x, y)


def test_big_coefficients_stay_exact():
    p = (X + Y + 1) ** 40
    assert p.eval(1, 1) == 3**40
    assert p.coefficient(20, 20) == 137846528820 * 1  # C(40,20)


def test_json_round_trip():
    obj = K4E.to_json_obj()
    assert obj[0] == [3, 0, "1"]
    assert all(isinstance(c, str) for _, _, c in obj)
    assert BiPoly.from_json(K4E.to_json()) == K4E
    assert json.loads(K4E.to_json()) == obj


def test_unipoly_basics():
    lam = UniPoly.var()
    p = lam * (lam - 1) * (lam - 2)
    assert p.to_string("l") == "l^3 - 3*l^2 + 2*l"
    assert p(3) == 6
    assert p.derivative() == UniPoly([2, -6, 3])
    assert UniPoly([1, 2, 0, 0]).degree == 1
    assert UniPoly().to_string() == "0"
    assert p.compose(lam + 1)(0) == p(1)


@pytest.mark.parametrize("text, value", [("3", 3), ("-2", -2), ("1/2", Fraction(1, 2)), ("-6/4", Fraction(-3, 2))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["0.5", "1e3", "1/0", "", "a/b", "1/2/3"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_format_rational():
    assert format_rational(Fraction(8)) == "8"
    assert format_rational(Fraction(-3, 6)) == "-1/2"
