#!/usr/bin/env python3
"""
Tests for exact scalar arithmetic: RatPolynomial, DynamicalScalar, DynPolynomial.
"""

import os
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

# Add the parent directory to sys.path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from scalar_ring import (
    H,
    DynamicalScalar,
    DynPolynomial,
    InexactDivision,
    NotAUnit,
    PoleAtPoint,
    RatPolynomial,
    ScalarZeroDivision,
    dynpoly_substitute,
    scalar_add,
    scalar_eval,
    scalar_invert,
    scalar_mul,
    scalar_shift,
)

inv = DynamicalScalar.reciprocal_of_linear
lin = DynamicalScalar.linear

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
polynomials = st.lists(rationals, max_size=4).map(RatPolynomial)
denominators = st.dictionaries(st.integers(min_value=-3, max_value=3), st.integers(min_value=1, max_value=2), max_size=2)
scalars = st.builds(DynamicalScalar, polynomials, denominators)
units = st.builds(
    lambda c, factors: DynamicalScalar.constant(c) * _product(factors),
    rationals.filter(lambda c: c != 0),
    st.lists(st.tuples(st.integers(min_value=-3, max_value=3), st.integers(min_value=-2, max_value=2)), max_size=3),
)
# Non-integer evaluation points never hit a pole.
points = st.sampled_from([Fraction(1, 3), Fraction(-7, 5), Fraction(11, 2)])


def _product(factors):
    result = DynamicalScalar.one()
    for root, power in factors:
        result = result * lin(root) ** power
    return result


# RatPolynomial

def test_polynomial_trims_trailing_zeros():
    assert RatPolynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert RatPolynomial([0, 0]).is_zero()


def test_polynomial_divmod():
    quotient, remainder = RatPolynomial([2, -3, 1]).divmod(RatPolynomial([-1, 1]))
    assert quotient == RatPolynomial([-2, 1])
    assert remainder.is_zero()
    with pytest.raises(InexactDivision):
        RatPolynomial([1, 0, 1]).exact_div(RatPolynomial([-1, 1]))


def test_integer_roots_with_multiplicity():
    poly = RatPolynomial([-1, 1]) ** 2 * RatPolynomial([3, 1]) * RatPolynomial([1, 0, 1])
    assert poly.integer_roots() == {1: 2, -3: 1}


def test_integer_roots_with_fractional_coefficients():
    poly = (
        RatPolynomial([-2, 1])
        * RatPolynomial([Fraction(3, 4), Fraction(1, 4)])
        * RatPolynomial([Fraction(1, 6), Fraction(1, 3)])
    )
    assert poly.integer_roots() == {2: 1, -3: 1}


def test_polynomial_shift():
    assert RatPolynomial([0, 0, 1]).shift(1) == RatPolynomial([1, 2, 1])


# scalar_add

def test_add_like_terms():
    assert scalar_add(inv(1), inv(1)) == 2 * inv(1)


def test_add_identity():
    assert scalar_add(H, 0) == H


def test_add_merges_denominators():
    expected = DynamicalScalar(RatPolynomial([-3, 2]), {1: 1, 2: 1})
    assert scalar_add(inv(1), inv(2)) == expected
    assert expected.to_text() == "(2*H - 3)/((H-1)*(H-2))"


# scalar_mul

def test_mul_cancels_factor():
    assert scalar_mul(lin(1), inv(1)) == 1


def test_mul_expands_to_polynomial():
    assert scalar_mul(1 - 2 * inv(-1), lin(-1)) == lin(1)


def test_mul_by_zero():
    assert scalar_mul(0, H * inv(3)).is_zero()
    assert scalar_mul(0, H * inv(3)).den == ()


# scalar_shift

def test_shift_examples():
    assert scalar_shift(H, 2) == H + 2
    assert scalar_shift(inv(1), 1) == inv(0)
    f = H * H * inv(4)
    assert scalar_shift(f, 0) == f


# scalar_invert

@pytest.mark.parametrize("value, expected", [
    (lin(3), inv(3)),
    (DynamicalScalar.constant(2), DynamicalScalar.constant(Fraction(1, 2))),
    (H * H - 3 * H + 2, inv(1) * inv(2)),
])
def test_invert(value, expected):
    assert scalar_invert(value) == expected


def test_invert_rejects_non_units():
    with pytest.raises(NotAUnit):
        scalar_invert(H * H + 1)
    with pytest.raises(NotAUnit):
        scalar_invert(2 * H - 1)
    with pytest.raises(ScalarZeroDivision):
        scalar_invert(0)


# scalar_eval

def test_eval_examples():
    assert scalar_eval(2 * lin(1), Fraction(-1, 2)) == -3
    assert scalar_eval(inv(1), 0) == -1
    with pytest.raises(PoleAtPoint):
        scalar_eval(inv(1), 1)


# DynPolynomial

def test_substitute_examples():
    hhat_squared = DynPolynomial([0, 0, 1])
    assert dynpoly_substitute(hhat_squared, lin(1) * Fraction(3, 2)) == Fraction(9, 4) * lin(1) ** 2
    assert DynPolynomial([H * inv(2)]).substitute(H * H) == H * inv(2)
    f1 = DynPolynomial([H, 0, -(inv(0) * inv(1, 2))])
    assert f1.substitute(0) == H


def test_tag_conversion():
    poly = DynPolynomial([1, H, inv(3)], tag="h")
    hat = poly.to_tag("hhat")
    assert hat.coefficient(1) == H * inv(1)
    assert hat.to_tag("h") == poly


def test_divide_by_indeterminate():
    assert DynPolynomial([0, 0, H, 1]).divide_by_indeterminate(2) == DynPolynomial([H, 1])
    with pytest.raises(InexactDivision):
        DynPolynomial([1, 0, H]).divide_by_indeterminate(1)


def test_json_round_trip():
    value = (H * H - 2) * inv(-1, 2) * inv(4)
    assert DynamicalScalar.from_json(value.to_json()) == value
    assert value.to_json()["den"] == [[-1, 2], [4, 1]]


# Properties

@settings(max_examples=60, deadline=None)
@given(scalars, scalars, scalars)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + b == b + a


@settings(max_examples=60, deadline=None)
@given(scalars, scalars, st.integers(min_value=-4, max_value=4))
def test_shift_is_a_ring_homomorphism(a, b, k):
    assert scalar_shift(a * b, k) == scalar_shift(a, k) * scalar_shift(b, k)
    assert scalar_shift(scalar_shift(a, k), -k) == a


@settings(max_examples=60, deadline=None)
@given(units)
def test_invert_units(u):
    assert scalar_invert(u) * u == 1


@settings(max_examples=60, deadline=None)
@given(scalars, scalars, points)
def test_evaluation_agrees_with_arithmetic(a, b, c):
    assert scalar_eval(a + b, c) == scalar_eval(a, c) + scalar_eval(b, c)
    assert scalar_eval(a * b, c) == scalar_eval(a, c) * scalar_eval(b, c)
    if (a - b).is_zero():
        assert scalar_eval(a, c) == scalar_eval(b, c)
