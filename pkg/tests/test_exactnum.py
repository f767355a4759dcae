from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromaq.exactnum import (
    LaurentPoly,
    NonDivisibleError,
    PoleError,
    RationalFunc,
    laurent_eval,
    parse_laurent,
    parse_ratfunc,
    ratfunc_to_laurent,
)

T = LaurentPoly.t()


def L(terms):
    return LaurentPoly.from_terms(terms)


# -- laurent_eval ------------------------------------------------------------

def test_eval_quadratic():
    f = T * T + 4 * T + 1
    assert laurent_eval(f, 2) == 13


def test_eval_constant():
    assert laurent_eval(LaurentPoly.const(1), 7) == 1


def test_eval_pole_at_zero():
    with pytest.raises(PoleError):
        laurent_eval(LaurentPoly.t(-1), 0)


def test_eval_negative_exponents():
    f = L({-2: 3, 1: 1})  # 3t^-2 + t
    assert laurent_eval(f, Fraction(1, 2)) == 12 + Fraction(1, 2)


# -- ratfunc_to_laurent ------------------------------------------------------

def test_exact_division():
    r = RationalFunc(T * T - 1, T - 1)
    assert ratfunc_to_laurent(r) == T + 1


def test_monomial_division():
    r = RationalFunc(T ** 3 - T, T)
    assert ratfunc_to_laurent(r) == T * T - 1


def test_non_divisible_names_remainder():
    r = RationalFunc(T + 1, T - 1)
    with pytest.raises(NonDivisibleError) as e:
        ratfunc_to_laurent(r)
    assert "remainder" in str(e.value)


# -- canonical forms ---------------------------------------------------------

def test_zero_is_empty():
    z = T - T
    assert z.is_zero and z.low == 0 and z.coeffs == ()


def test_ratfunc_reduction_is_canonical():
    a = RationalFunc((T - 1) * (T + 2), (T - 1) * (T + 3))
    b = RationalFunc(T + 2, T + 3)
    assert a == b
    assert (a.num, a.den) == (b.num, b.den)
    assert hash(a) == hash(b)


def test_ratfunc_pulls_out_powers_of_t():
    r = RationalFunc(T ** 2, T ** 5 + T ** 3)
    # t^2/(t^5+t^3) = t^-1/(t^2+1)
    assert r.num == LaurentPoly.t(-1)
    assert r.den == T * T + 1


def test_ratfunc_monic_denominator():
    r = RationalFunc(LaurentPoly.const(1), 2 * T + 2)
    assert r.den == T + 1
    assert r.num == LaurentPoly.const(Fraction(1, 2))


def test_ratfunc_pole():
    r = RationalFunc(LaurentPoly.const(1), T - 2)
    assert r.evaluate(3) == 1
    with pytest.raises(PoleError):
        r.evaluate(2)


def test_subs_inv():
    f = L({2: 1, 0: 5, -1: 3})
    assert f.subs_inv() == L({-2: 1, 0: 5, 1: 3})
    r = RationalFunc(T - 1, T + 1)
    # (1/t - 1)/(1/t + 1) = (1-t)/(1+t)
    assert r.subs_inv() == RationalFunc(1 - T, 1 + T)


# -- printing and parsing ----------------------------------------------------

@pytest.mark.parametrize("f,s", [
    (T * T + 4 * T + 1, "t^2+4*t+1"),
    (LaurentPoly(), "0"),
    (LaurentPoly.t(-1), "t^-1"),
    (-T + 1, "-t+1"),
    (L({3: Fraction(1, 2), 0: -2}), "1/2*t^3-2"),
    (LaurentPoly.const(Fraction(-3, 7)), "-3/7"),
])
def test_str_format(f, s):
    assert str(f) == s


@pytest.mark.parametrize("f", [
    T * T + 4 * T + 1,
    LaurentPoly(),
    LaurentPoly.t(-5),
    -T + 1,
    L({3: Fraction(1, 2), 0: -2, -2: Fraction(-5, 3)}),
])
def test_parse_print_roundtrip(f):
    assert parse_laurent(str(f)) == f


def test_parse_ratfunc_roundtrip():
    r = RationalFunc(T ** 2 - 1, T ** 2 + T + 1)
    assert parse_ratfunc(str(r)) == r
    assert parse_ratfunc("t+1") == RationalFunc(T + 1)


# -- ring axioms on random inputs ---------------------------------------------

fracs = st.fractions(min_value=-30, max_value=30, max_denominator=7)


@st.composite
def laurents(draw):
    lo = draw(st.integers(min_value=-3, max_value=3))
    cs = draw(st.lists(fracs, min_size=0, max_size=5))
    return LaurentPoly(cs, low=lo)


@st.composite
def ratfuncs(draw):
    num = draw(laurents())
    den = draw(laurents().filter(lambda f: not f.is_zero))
    return RationalFunc(num, den)


@settings(max_examples=60, deadline=None)
@given(laurents(), laurents(), laurents())
def test_laurent_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@settings(max_examples=40, deadline=None)
@given(ratfuncs(), ratfuncs(), ratfuncs())
def test_ratfunc_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(laurents(), laurents(), st.sampled_from([2, 3, Fraction(1, 2), -1, 5]))
def test_eval_is_ring_hom(a, b, q):
    assert laurent_eval(a * b, q) == laurent_eval(a, q) * laurent_eval(b, q)
    assert laurent_eval(a + b, q) == laurent_eval(a, q) + laurent_eval(b, q)


@settings(max_examples=40, deadline=None)
@given(ratfuncs())
def test_ratfunc_eq_by_cross_multiplication(r):
    s = RationalFunc(r.num * (T ** 2 + 1), r.den * (T ** 2 + 1))
    assert r == s
