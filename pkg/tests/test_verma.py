#!/usr/bin/env python3
"""
Tests for Verma modules, the Shapovalov form and the finite-dimensional irreducibles.
"""

import os
import sys
from fractions import Fraction

import pytest
import sympy

# Add the parent directory to sys.path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from algebra_core import GENERATORS, AlgebraElement, theta
from distinguished import radical_scalar
from scalar_ring import DynamicalScalar, H
from verma import (
    BoundExceeded,
    DegenerateAt,
    HighestWeight,
    IntegerMu,
    IrrepData,
    Nondegenerate,
    NotFiniteDimensional,
    RelationViolation,
    VermaElement,
    WeightMismatch,
    build_irrep,
    from_power_basis,
    ghost_matrices,
    ghost_scalars,
    gram_matrix,
    in_maximal_submodule,
    irrep_dimension,
    power_vector,
    radical_order,
    same_ghost_scalars,
    shapovalov,
    to_power_basis,
    validate_irrep,
    verma_act,
)

lin = DynamicalScalar.linear
CONST = HighestWeight(DynamicalScalar.constant(Fraction(3, 2)))
DYN = HighestWeight(lin(-2))


def test_highest_vector_is_killed_by_raising_generators():
    v = VermaElement.highest(CONST)
    assert verma_act(AlgebraElement.generator("Xp1"), v).is_zero()
    assert verma_act(AlgebraElement.generator("Xp2"), v).is_zero()
    assert verma_act(AlgebraElement.generator("h"), v) == v.right_scale(Fraction(3, 2))


def test_lowering_moves_scalars():
    v = VermaElement.highest(CONST)
    assert verma_act(AlgebraElement.scalar(H) * AlgebraElement.generator("Xm1"), v) == VermaElement(
        CONST, {(0, 1): H + 1}
    )


@pytest.mark.parametrize("weight", [CONST, DYN], ids=["const", "dyn"])
def test_shapovalov_normalization_and_symmetry(weight):
    top = VermaElement.highest(weight)
    u = VermaElement(weight, {(1, 0): H, (0, 1): 2})
    w = VermaElement(weight, {(1, 0): 1, (1, 1): H - 3})
    assert shapovalov(top, top) == 1
    assert shapovalov(u, w) == shapovalov(w, u)
    assert shapovalov(u.right_scale(H), w) == shapovalov(u, w) * H


@pytest.mark.parametrize("name", GENERATORS)
def test_shapovalov_contravariance(name):
    u = VermaElement(DYN, {(1, 0): 1, (0, 1): H})
    w = VermaElement(DYN, {(1, 1): 1, (2, 0): 2})
    x = AlgebraElement.generator(name)
    assert shapovalov(verma_act(x, u), w) == shapovalov(u, verma_act(theta(x), w))


def test_basis_is_orthogonal():
    keys = [(p, q) for p in range(2) for q in (0, 1)]
    for first in keys:
        for second in keys:
            if first != second:
                value = shapovalov(VermaElement.basis(CONST, *first), VermaElement.basis(CONST, *second))
                assert value.is_zero()


def test_weight_mismatch():
    with pytest.raises(WeightMismatch):
        shapovalov(VermaElement.highest(CONST), VermaElement.highest(DYN))
    with pytest.raises(WeightMismatch):
        VermaElement.highest(CONST) + VermaElement.highest(DYN)


def test_gram_matrix_product_formula():
    gram = gram_matrix(CONST, 4, "power")
    running = DynamicalScalar.one()
    for m in range(4):
        if m:
            running = running * radical_scalar(m, CONST.lambda_hat)
        for n in range(4):
            assert gram[m][n] == (running if m == n else 0)


def test_power_basis_round_trip():
    v = VermaElement(CONST, {(1, 0): H, (0, 1): 3, (1, 1): 1})
    assert from_power_basis(CONST, to_power_basis(v)) == v
    assert power_vector(CONST, 0) == VermaElement.highest(CONST)


@pytest.mark.parametrize("n", [1, 3, 5])
@pytest.mark.parametrize("eps", [1, -1])
def test_radical_order_on_degenerate_lines(n, eps):
    weight = HighestWeight(eps * lin(1 - n))
    assert radical_order(weight) == DegenerateAt(n)


def test_radical_order_of_zero_weight():
    assert radical_order(HighestWeight(0)) == Nondegenerate()


def test_radical_order_bound():
    with pytest.raises(BoundExceeded) as excinfo:
        radical_order(CONST, bound=3)
    assert excinfo.value.bound == 3


def test_in_maximal_submodule():
    weight = HighestWeight(Fraction(3, 2))
    mu = Fraction(-3, 2)
    assert not in_maximal_submodule(power_vector(weight, 2), mu)
    assert in_maximal_submodule(power_vector(weight, 3), mu)
    with pytest.raises(IntegerMu):
        in_maximal_submodule(power_vector(weight, 1), 2)


@pytest.mark.parametrize("lambda_, mu, n", [
    (Fraction(1, 2), Fraction(-1, 2), 1),
    (Fraction(3, 2), Fraction(-3, 2), 3),
    (Fraction(-9, 2), Fraction(-1, 2), 5),
    (Fraction(-10, 3), Fraction(1, 3), 3),
])
def test_irrep_dimension(lambda_, mu, n):
    assert irrep_dimension(lambda_, mu) == n


def test_irrep_dimension_errors():
    with pytest.raises(NotFiniteDimensional):
        irrep_dimension(1, Fraction(1, 2))
    with pytest.raises(IntegerMu):
        irrep_dimension(Fraction(3, 2), 2)


def test_one_dimensional_irrep():
    irrep = build_irrep(Fraction(1, 2), Fraction(-1, 2))
    assert irrep.n == 1
    assert irrep.rows("H") == [[Fraction(1, 2)]]
    assert irrep.rows("Xp1") == [[0]]
    assert irrep.to_json()["matrices"]["H"] == [["1/2"]]


@pytest.mark.slow
def test_three_dimensional_irrep():
    irrep = build_irrep(Fraction(3, 2), Fraction(-3, 2))
    assert irrep.n == 3
    assert irrep.eigenvalues == [Fraction(-1, 2), Fraction(1, 2), Fraction(3, 2)]
    assert (irrep.matrix("Xp1") ** 3).is_zero_matrix
    matrices = ghost_matrices(irrep)
    assert matrices["c1"] == sympy.Rational(-9, 2) * sympy.eye(3)
    assert matrices["c2"] == sympy.Rational(9, 2) * sympy.eye(3)
    assert matrices["q2"] == sympy.zeros(3, 3)
    assert irrep.to_latex().count(r"\begin{pmatrix}") == len(GENERATORS) + 1


def test_ghost_scalars():
    assert ghost_scalars(Fraction(3, 2), Fraction(-3, 2)) == (Fraction(-9, 2), Fraction(9, 2), 0)
    assert same_ghost_scalars((Fraction(3, 2), Fraction(-3, 2)), (Fraction(-3, 2), Fraction(3, 2)))
    assert not same_ghost_scalars((Fraction(3, 2), Fraction(-3, 2)), (Fraction(3, 2), Fraction(3, 2)))


def _corrupted(irrep, name, factor):
    matrices = dict(irrep.matrices)
    matrices[name] = matrices[name] * factor
    return IrrepData(irrep.lambda_, irrep.mu, irrep.n, matrices)


def test_validate_irrep_rejects_a_rescaled_h():
    irrep = build_irrep(Fraction(1, 2), Fraction(-1, 2))
    validate_irrep(irrep)
    with pytest.raises(RelationViolation):
        validate_irrep(_corrupted(irrep, "h", 2))


def test_validate_irrep_rejects_wrong_eigenvalues():
    irrep = build_irrep(Fraction(1, 2), Fraction(-1, 2))
    with pytest.raises(RelationViolation):
        validate_irrep(_corrupted(irrep, "H", 3))


@pytest.mark.slow
@pytest.mark.parametrize("name, factor", [("Xp2", 7), ("Xm1", 3), ("h", 0), ("Xp1", -1)])
def test_validate_irrep_rejects_corrupted_matrices(name, factor):
    irrep = build_irrep(Fraction(3, 2), Fraction(-3, 2))
    with pytest.raises(RelationViolation):
        validate_irrep(_corrupted(irrep, name, factor))


def _admissible_pairs(n):
    mus = [Fraction(m) for m in ("-7/2", "-3/2", "-1/2", "1/2", "5/2", "1/3", "-5/3", "2/5")]
    pairs = {(mu + n, mu) for mu in mus} | {(-mu - n, mu) for mu in mus}
    return sorted(pairs)


@pytest.mark.parametrize("n", [1, 3, 5])
def test_ghost_scalars_separate_irreps_of_equal_dimension(n):
    pairs = _admissible_pairs(n)
    for pair in pairs:
        assert irrep_dimension(*pair) == n
    for first in pairs:
        for second in pairs:
            assert same_ghost_scalars(first, second) == (first == second)


def test_swapped_pair_is_told_apart_by_q2_only():
    first, second = (Fraction(-7, 2), Fraction(1, 2)), (Fraction(1, 2), Fraction(-7, 2))
    assert irrep_dimension(*first) == irrep_dimension(*second) == 3
    assert ghost_scalars(*first)[:2] == ghost_scalars(*second)[:2]
    assert ghost_scalars(*first)[2] == -ghost_scalars(*second)[2] != 0
    assert not same_ghost_scalars(first, second)
