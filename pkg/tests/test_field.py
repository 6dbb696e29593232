from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings

from thetainv.field import Scalar, ZERO, ONE, I, SQRT5, sc_arith, sc_conj, format_scalar
from conftest import scalars, nonzero_scalars, LAW
import oracles

ALPHA = (ONE + SQRT5) / 4
BETA = (-ONE + SQRT5) / 4


def test_defining_relations():
    assert sc_arith("mul", I, I) == -1
    assert sc_arith("mul", SQRT5, SQRT5) == 5


def test_det_of_x2_block():
    quarter = Scalar(Fraction(1, 4))
    assert sc_arith("add", sc_arith("add", ALPHA * ALPHA, BETA * BETA), quarter) == ONE


def test_conj_examples():
    assert sc_conj(I) == -I
    assert sc_conj(SQRT5) == SQRT5
    assert sc_conj(Scalar(2, 0, 0, 3)) == Scalar(2, 0, 0, -3)


def test_division_by_zero_is_distinct_error():
    with pytest.raises(ZeroDivisionError):
        sc_arith("div", ONE, ZERO)
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_unknown_op():
    with pytest.raises(ValueError):
        sc_arith("pow", ONE, ONE)


def test_canonical_coordinates():
    x = Scalar(Fraction(2, 4), Fraction(-3, 6), 0, 1)
    assert x.coords == (Fraction(1, 2), Fraction(-1, 2), 0, 1)
    assert x.denominator == 2 and x.numerators == (1, -1, 0, 2)


def test_equality_with_rationals():
    assert Scalar(3) == 3
    assert Scalar(Fraction(1, 2)) == Fraction(1, 2)
    assert hash(Scalar(3)) == hash(3)
    assert Scalar(0, 1) != 0


@pytest.mark.parametrize("text, value", [
    ("(1+s5)/4", ALPHA),
    ("(-1+√5)/4", BETA),
    ("3i", Scalar(0, 3)),
    ("2 - 3 i s5", Scalar(2, 0, 0, -3)),
    ("-3+sqrt5", Scalar(-3, 0, 1)),
    ("1/(1+i)", Scalar(Fraction(1, 2), Fraction(-1, 2))),
])
def test_parse(text, value):
    assert Scalar.parse(text) == value


@pytest.mark.parametrize("bad", ["", "1+", "x", "(1", "1/0"])
def test_parse_errors(bad):
    with pytest.raises((ValueError, ZeroDivisionError)):
        Scalar.parse(bad)


@pytest.mark.parametrize("x, text", [
    (ALPHA, "(1+√5)/4"),
    (Scalar(-3, 0, 1), "-3+√5"),
    (Scalar(0, -1), "-i"),
    (Scalar(0, 0, 0, Fraction(1, 2)), "i√5/2"),
    (ZERO, "0"),
])
def test_format(x, text):
    assert format_scalar(x) == text


def test_format_parse_roundtrip_examples():
    for x in (ALPHA, BETA, Scalar(1, -2, 3, -4) / 7, -I * SQRT5):
        assert Scalar.parse(format_scalar(x)) == x


@settings(max_examples=100)
@given(scalars, scalars)
def test_arithmetic_matches_sympy(x, y):
    X, Y = oracles.to_sym(x), oracles.to_sym(y)
    assert x + y == oracles.from_sym(X + Y)
    assert x * y == oracles.from_sym(X * Y)
    assert x.conj() == oracles.from_sym(sp.conjugate(X))


# -- laws -----------------------------------------------------------------

@pytest.mark.law
@settings(max_examples=LAW)
@given(scalars, scalars, scalars)
def test_field_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    assert x - x == ZERO and x * ONE == x


@pytest.mark.law
@settings(max_examples=LAW)
@given(nonzero_scalars)
def test_field_inverses(x):
    assert x * x.inverse() == ONE
    assert ONE / x == x.inverse()


@pytest.mark.law
@settings(max_examples=LAW)
@given(scalars, scalars)
def test_conj_is_ring_automorphism(x, y):
    assert (x * y).conj() == x.conj() * y.conj()
    assert (x + y).conj() == x.conj() + y.conj()
    assert x.conj().conj() == x


@pytest.mark.law
@settings(max_examples=LAW)
@given(scalars)
def test_format_parse_roundtrip(x):
    assert Scalar.parse(format_scalar(x)) == x
