#!/usr/bin/env python3
"""
Tests for PBW normal forms, the diamond product, Theta and centrality.
"""

import os
import sys
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

# Add the parent directory to sys.path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from algebra_core import (
    GENERATOR_SHIFTS,
    GENERATORS,
    ODD_GENERATORS,
    RELATIONS,
    AlgebraElement,
    MixedParity,
    PBWMonomial,
    anticommutator,
    defining_relations,
    diamond,
    from_hat,
    hat_generator,
    hat_relations,
    is_anticentral,
    is_central,
    normalize_word,
    presentation,
    supercommutator,
    theta,
    to_hat,
)
from distinguished import element_c2
from pbw_rewriting import PBWRewriter, RewritingFuelExhausted
from scalar_ring import H, ONE, DynamicalScalar, scalar_shift

inv = DynamicalScalar.reciprocal_of_linear
lin = DynamicalScalar.linear
X = {name: AlgebraElement.generator(name) for name in GENERATORS}

coefficients = st.sampled_from([1, -1, 2, H, H - 3, inv(-1), inv(4) * H])
monomials = st.tuples(
    st.integers(0, 2), st.integers(0, 1), st.integers(0, 2), st.integers(0, 1), st.integers(0, 2)
)
elements = st.dictionaries(monomials, coefficients, min_size=1, max_size=2).map(AlgebraElement)


def test_monomial_weight_and_parity():
    mono = PBWMonomial(1, 1, 2, 0, 1)
    assert mono.weight == -1
    assert mono.parity == 1
    assert mono.word() == (0, 1, 2, 2, 4)


@pytest.mark.parametrize("left, right, expected", [
    ("Xp2", "Xp1", AlgebraElement.monomial((0, 0, 0, 1, 1), 1 - 2 * inv(-1))),
    ("Xp1", "Xp1", AlgebraElement.monomial((0, 0, 1, 0, 1), 2 * inv(0))),
    ("h", "Xm2", AlgebraElement.monomial((1, 0, 1, 0, 0), 1 - 2 * inv(1))),
    ("Xm1", "Xm1", AlgebraElement.monomial((1, 0, 1, 0, 0), -2 * inv(2))),
    ("Xm2", "Xp2", AlgebraElement.monomial((1, 0, 0, 0, 1))),
])
def test_diamond_examples(left, right, expected):
    assert X[left] * X[right] == expected


def test_unit_and_scalars():
    a = X["Xp1"] * X["Xm1"]
    assert AlgebraElement.scalar(1) * a == a
    assert X["Xp1"] * AlgebraElement.scalar(H) == AlgebraElement.monomial((0, 0, 0, 1, 0), H + 1)
    assert AlgebraElement.scalar(H) * X["Xp1"] == AlgebraElement.monomial((0, 0, 0, 1, 0), H)
    assert normalize_word(["Xm2", H]) == AlgebraElement.monomial((1, 0, 0, 0, 0), H - 2)


def test_small_associativity_example():
    assert (X["Xp1"] * X["Xm1"]) * X["Xm1"] == X["Xp1"] * (X["Xm1"] * X["Xm1"])


def test_supercommutator_with_h_scalar():
    assert supercommutator(AlgebraElement.scalar(H), X["Xp1"]) == -X["Xp1"]
    a = X["h"] * X["Xp2"] + X["Xm2"]
    assert supercommutator(a, a).is_zero()


def test_anticommutator_of_odd_pair():
    assert anticommutator(X["Xp1"], X["Xm1"]) == X["Xp1"] * X["Xm1"] + X["Xm1"] * X["Xp1"]


@pytest.mark.parametrize("left, right", [("h", "Xp2"), ("Xp1", "h"), ("Xm2", "Xp2")])
def test_anticommutator_is_the_plain_sum(left, right):
    assert anticommutator(X[left], X[right]) == X[left] * X[right] + X[right] * X[left]


def test_mixed_parity_is_rejected():
    mixed = X["Xp1"] + X["h"]
    with pytest.raises(MixedParity):
        supercommutator(mixed, X["h"])
    with pytest.raises(MixedParity):
        is_central(mixed)


def test_theta_on_generators():
    assert theta(X["Xp1"]) == X["Xm1"]
    assert theta(X["Xp2"]) == -X["Xm2"]
    assert theta(X["h"]) == X["h"]
    assert theta(AlgebraElement.scalar(H)) == AlgebraElement.scalar(H)
    assert theta(X["Xp2"] * X["Xm1"]) == X["Xp1"] * (-X["Xm2"])
    for name in GENERATORS:
        assert theta(theta(X[name])) == X[name]


@pytest.mark.parametrize("left, right", list(product(GENERATORS, repeat=2)))
def test_theta_is_an_anti_automorphism(left, right):
    assert theta(X[left] * X[right]) == theta(X[right]) * theta(X[left])


def test_centrality_examples():
    assert is_central(hat_generator("h"))
    assert not is_central(AlgebraElement.scalar(H))
    assert not is_anticentral(X["h"])


def test_hat_generators():
    assert hat_generator("Xp1") == AlgebraElement.monomial((0, 0, 0, 1, 0), lin(1))
    assert hat_generator("Xm2") == AlgebraElement.monomial((1, 0, 0, 0, 0), lin(1) * lin(2))
    assert hat_generator("Xp1") * hat_generator("Xp1") == 2 * (hat_generator("h") * hat_generator("Xp2"))


def test_hat_round_trip():
    a = X["Xm2"] * X["Xm1"] * X["h"] * X["Xp1"] + H * X["Xp2"]
    assert from_hat(to_hat(a)) == a
    assert to_hat(hat_generator("Xm1")).terms == {PBWMonomial(0, 1, 0, 0, 0): 1}


@pytest.mark.parametrize("relation", defining_relations(), ids=lambda r: r[0])
def test_defining_relations(relation):
    _, left, right = relation
    assert left == right


def test_defining_relation_count():
    assert len(defining_relations()) == 14


# Ordering relations written out coefficient by coefficient.
PINNED_RELATIONS = [
    ("Xp2", "Xp1", {(0, 0, 0, 1, 1): 1 - 2 * inv(-1)}),
    ("Xp1", "Xp1", {(0, 0, 1, 0, 1): 2 * inv(0)}),
    ("Xm1", "Xm1", {(1, 0, 1, 0, 0): -2 * inv(2)}),
    ("Xp2", "h", {(0, 0, 1, 0, 1): 1 - 2 * inv(-1)}),
    ("Xp2", "Xm1", {(0, 1, 0, 0, 1): 1 - 2 * inv(0) * inv(1), (0, 0, 1, 1, 0): 2 * inv(-1)}),
    ("Xp2", "Xm2", {
        (1, 0, 0, 0, 1): H * lin(1) * inv(2) * inv(-1),
        (0, 1, 0, 1, 0): -(H * H - H - 1) * inv(1) * inv(0) * inv(-1),
        (0, 0, 2, 0, 0): inv(-1),
        (0, 0, 0, 0, 0): -H * H * inv(-1),
    }),
    ("Xp1", "h", {(0, 0, 1, 1, 0): 1 - inv(0)}),
    ("Xp1", "Xm1", {
        (0, 1, 0, 1, 0): -1 - inv(1),
        (1, 0, 0, 0, 1): 4 * H * inv(1) * inv(2),
        (0, 0, 2, 0, 0): -inv(0),
        (0, 0, 0, 0, 0): H,
    }),
    ("Xp1", "Xm2", {(1, 0, 0, 1, 0): 1 - 2 * inv(1) * inv(2), (0, 1, 1, 0, 0): -2 * inv(0)}),
    ("h", "Xm1", {(0, 1, 1, 0, 0): 1 - inv(1)}),
    ("h", "Xm2", {(1, 0, 1, 0, 0): 1 - 2 * inv(1)}),
    ("Xm1", "Xm2", {(1, 1, 0, 0, 0): 1 - 2 * inv(2)}),
]


@pytest.mark.parametrize("left, right, terms", PINNED_RELATIONS, ids=[f"{y}*{g}" for y, g, _ in PINNED_RELATIONS])
def test_ordering_relations_match_pinned_coefficients(left, right, terms):
    expected = AlgebraElement(terms)
    assert X[left] * X[right] == expected
    written = {(y, g): rhs for y, g, rhs in presentation()}
    assert written[(left, right)] == expected


def test_every_ordering_relation_is_pinned():
    assert {(y, g) for y, g, _ in presentation()} == {(y, g) for y, g, _ in PINNED_RELATIONS}
    assert len(RELATIONS) == len(PINNED_RELATIONS)


@pytest.mark.parametrize("h", [3, 5, -3, Fraction(1, 2), Fraction(7, 3)])
def test_xp2_xm2_leading_coefficient(h):
    h = Fraction(h)
    coeff = (X["Xp2"] * X["Xm2"]).coefficient((1, 0, 0, 0, 1))
    assert coeff.evaluate(h) == h * (h - 1) / ((h - 2) * (h + 1))
    assert coeff.evaluate(h) == 1 + 2 / ((h - 2) * (h + 1))


@pytest.mark.parametrize("a, b, c", list(product(GENERATORS, repeat=3)))
def test_generator_triples_associate(a, b, c):
    assert (X[a] * X[b]) * X[c] == X[a] * (X[b] * X[c])


@pytest.mark.parametrize("name", GENERATORS)
def test_c2_commutes_with_generators(name):
    assert supercommutator(element_c2(), X[name]).is_zero()


@pytest.mark.parametrize("relation", hat_relations(), ids=lambda r: r[0])
def test_hat_relations(relation):
    _, left, right = relation
    assert left == right


def test_json_round_trip():
    a = X["Xm1"] * X["Xp2"] + inv(3) * X["h"]
    assert AlgebraElement.from_json(a.to_json()) == a
    with pytest.raises(ValueError):
        AlgebraElement.from_json({"terms": [{"q": 2, "coeff": {"num": [[1, 1]], "den": []}}]})


def test_non_decreasing_rule_is_rejected():
    with pytest.raises(ValueError):
        PBWRewriter(
            names=("a", "b"),
            odd=frozenset(),
            shifts=(0, 0),
            rules={(1, 0): [(1, (1, 0))]},
            one=1,
            shift=lambda c, k: c,
        )


def test_fuel_exhaustion_is_reported():
    engine = PBWRewriter(
        names=GENERATORS,
        odd=ODD_GENERATORS,
        shifts=GENERATOR_SHIFTS,
        rules=RELATIONS,
        one=ONE,
        shift=scalar_shift,
        monomial=PBWMonomial._make,
        fuel=1,
    )
    # Xp2 * Xm2 * Xm1 needs a second rule application.
    with pytest.raises(RewritingFuelExhausted):
        engine.multiply({PBWMonomial(0, 0, 0, 0, 1): ONE}, {PBWMonomial(1, 1, 0, 0, 0): ONE})


@settings(max_examples=25, deadline=None)
@given(elements, elements, elements)
def test_associativity(a, b, c):
    assert diamond(diamond(a, b), c) == diamond(a, diamond(b, c))


@settings(max_examples=40, deadline=None)
@given(monomials, monomials)
def test_weight_and_parity_are_additive(m1, m2):
    a, b = AlgebraElement.monomial(m1), AlgebraElement.monomial(m2)
    product_terms = diamond(a, b).terms
    for mono in product_terms:
        assert mono.weight == a.weight() + b.weight()
        assert mono.parity == (a.parity() + b.parity()) % 2
