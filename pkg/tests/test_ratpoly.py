from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bokit.ratpoly import RatPoly, _schoolbook, evaluate, horner_int, mul_int

ints = st.lists(st.integers(-10**6, 10**6), min_size=1, max_size=200)
fracs = st.lists(st.fractions(-50, 50, max_denominator=30), max_size=12)


@given(ints, ints)
def test_karatsuba_matches_schoolbook(a, b):
    assert mul_int(a, b) == _schoolbook(a, b)


def test_karatsuba_large():
    a = list(range(1, 301))
    b = [(-1) ** i * i for i in range(257)]
    assert mul_int(a, b) == _schoolbook(a, b)


@given(st.lists(st.integers(-100, 100), min_size=1, max_size=10), st.integers(-20, 20), st.integers(1, 20))
def test_horner_int(c, u, v):
    d = len(c) - 1
    assert horner_int(c, u, v) == sum(ci * u**i * v ** (d - i) for i, ci in enumerate(c))


@given(fracs, fracs, st.fractions(-5, 5, max_denominator=7))
def test_ring_homomorphism(a, b, x):
    p, q = RatPoly(a), RatPoly(b)
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)
    assert (p - q)(x) == p(x) - q(x)


@given(fracs)
def test_normal_form(c):
    p = RatPoly(c)
    assert RatPoly(p.coeffs) == p
    assert hash(RatPoly(p.coeffs)) == hash(p)
    if not p.is_zero():
        assert p.leading != 0
        assert p.degree == len(p.coeffs) - 1
        assert all(Fraction(n, p.denominator) == c for n, c in zip(p.numerators, p.coeffs))


def test_zero_and_degree():
    z = RatPoly([0, 0])
    assert z.is_zero() and z.degree == -1
    assert RatPoly.constant(3).degree == 0
    assert RatPoly.x().degree == 1


def test_str():
    p = RatPoly([0, Fraction(3, 2), Fraction(1, 2)])
    assert str(p) == "1/2*x^2 + 3/2*x"
    assert str(RatPoly([1])) == "1"


def test_derivative_and_scalar_ops():
    x = RatPoly.x()
    p = x * x * x - 2 * x + 1
    assert p.derivative() == 3 * x * x - 2
    assert (p / 2)(2) == Fraction(5, 2)
    assert evaluate(p, Fraction(1, 2)) == Fraction(1, 8)
    assert p[3] == 1 and p[10] == 0


def test_primitive_keeps_sign():
    p = RatPoly([Fraction(-2, 3), 0, Fraction(-4, 9)])
    assert p.primitive() == (-3, 0, -2)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        RatPoly([1]) / 0
