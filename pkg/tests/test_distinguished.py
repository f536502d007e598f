#!/usr/bin/env python3
"""
Tests for C1, C2, Q2 and the three computations of F_n.
"""

import os
import sys
from fractions import Fraction

import pytest

# Add the parent directory to sys.path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from algebra_core import AlgebraElement, is_anticentral, is_central
from distinguished import (
    NAMED_ELEMENTS,
    c0_closed,
    c2_closed,
    element_c1,
    element_c2,
    element_hhat,
    element_q2,
    f_n_closed,
    f_n_hat_closed,
    f_n_oracle,
    f_n_recursive,
    hat_xm2_congruence,
    radical_scalar,
    reduce_mod_left_ideal,
)
from scalar_ring import H, DynamicalScalar, DynPolynomial

inv = DynamicalScalar.reciprocal_of_linear
lin = DynamicalScalar.linear


def test_c1_and_c2_are_central():
    assert is_central(element_c1())
    assert is_central(element_c2())
    assert is_central(element_hhat())


def test_q2_is_anticentral_not_central():
    assert is_anticentral(element_q2())
    assert not is_central(element_q2())


@pytest.mark.parametrize("h", [3, -1, Fraction(1, 2), Fraction(5, 3)])
def test_q2_shares_the_xm2_xp2_coefficient_of_c2(h):
    h = Fraction(h)
    coeff = element_q2().coefficient((1, 0, 0, 0, 1))
    assert coeff == element_c2().coefficient((1, 0, 0, 0, 1))
    assert coeff.evaluate(h) == 4 * (h - 1) / (h - 2)


def test_q2_squares_to_c2_squared_minus_c1_squared():
    c1, c2, q2 = element_c1(), element_c2(), element_q2()
    assert q2 * q2 == c2 * c2 - c1 * c1


def test_named_elements():
    assert set(NAMED_ELEMENTS) >= {"c1", "c2", "q2", "hhat"}
    assert NAMED_ELEMENTS["c1"]() == element_c1()


def test_f1_closed_form():
    f1 = f_n_closed(1)
    assert f1.value == DynPolynomial([H, 0, -(inv(0) * inv(1, 2))])
    assert f1.c0 == H
    assert f1.hat() == DynPolynomial([H * H * lin(1) ** 2, 0, -1])


def test_even_closed_form_has_no_constant_term():
    assert f_n_closed(2).c0.is_zero()
    assert f_n_hat_closed(2) == DynPolynomial([0, 0, H * H * inv(2, 2) - 1])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_three_computations_agree(n):
    closed = f_n_closed(n).value
    assert f_n_recursive(n).value == closed
    assert f_n_oracle(n).value == closed


@pytest.mark.parametrize("n", range(1, 7))
def test_recursive_coefficients(n):
    family = f_n_recursive(n)
    assert family.c1.is_zero()
    assert family.c0 == c0_closed(n)
    assert family.c2 == c2_closed(n)


@pytest.mark.parametrize("n", range(0, 4))
def test_hat_xm2_congruence(n):
    left, right = hat_xm2_congruence(n)
    assert left == right


def test_negative_indices_are_rejected():
    with pytest.raises(ValueError):
        f_n_closed(-1)
    with pytest.raises(ValueError):
        f_n_oracle(0)


def test_reduce_mod_left_ideal():
    a = AlgebraElement({(0, 1, 0, 1, 0): 1, (0, 1, 1, 0, 0): H, (1, 0, 0, 0, 0): 2})
    assert reduce_mod_left_ideal(a, False) == AlgebraElement({(0, 1, 1, 0, 0): H, (1, 0, 0, 0, 0): 2})
    assert reduce_mod_left_ideal(a, True) == AlgebraElement({(1, 0, 0, 0, 0): 2})


@pytest.mark.parametrize("n", [1, 3, 5])
@pytest.mark.parametrize("eps", [1, -1])
def test_radical_scalar_vanishes_on_its_line(n, eps):
    lambda_hat = eps * lin(1 - n) * lin(1)
    assert radical_scalar(n, lambda_hat).is_zero()


def test_radical_scalar_is_nonzero_off_the_line():
    lambda_hat = DynamicalScalar.constant(Fraction(3, 2)) * lin(1)
    assert not radical_scalar(1, lambda_hat).is_zero()
