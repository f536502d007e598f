#!/usr/bin/env python3
"""
PBW normal forms and the diamond product of the diagonal reduction algebra A
of osp(1|2).

Elements are left R-combinations of ordered monomials

    Xm2^p * Xm1^q * h^r * Xp1^s * Xp2^t      (q, s in {0, 1})

and products are computed by the shared rewriting engine with the fourteen
defining relations: the commutation of generators past scalars, the
centrality of scalars against h, and the twelve rewrite rules below.
"""

import logging
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Set, Tuple, Union

from pbw_rewriting import DEFAULT_FUEL, PBWRewriter
from utils.config import get_setting
from utils.formatting import format_element
from scalar_ring import (
    DraError,
    DynamicalScalar,
    H,
    ONE,
    RatPolynomial,
    ScalarLike,
    ZERO,
    scalar_invert,
    scalar_shift,
)

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger("dra_algebra_core")

GENERATORS = ("Xm2", "Xm1", "h", "Xp1", "Xp2")
GENERATOR_SHIFTS = (-2, -1, 0, 1, 2)
ODD_GENERATORS = frozenset({1, 3})
XM2, XM1, HBAR, XP1, XP2 = range(5)


class MixedParity(DraError, ValueError):
    """An operation that needs a parity-homogeneous element got a mixed one."""


class PBWMonomial(NamedTuple):
    p: int = 0
    q: int = 0
    r: int = 0
    s: int = 0
    t: int = 0

    @property
    def weight(self) -> int:
        return -2 * self.p - self.q + self.s + 2 * self.t

    @property
    def parity(self) -> int:
        return (self.q + self.s) % 2

    @property
    def degree(self) -> int:
        return sum(self)

    def word(self) -> Tuple[int, ...]:
        return tuple(i for i, e in enumerate(self) for _ in range(e))

    def is_unit(self) -> bool:
        return not any(self)


def _c(text_num: Sequence, den: Optional[Dict[int, int]] = None) -> DynamicalScalar:
    return DynamicalScalar(RatPolynomial(text_num), den)


def _relation_table() -> Dict[Tuple[int, int], List[Tuple[DynamicalScalar, Tuple[int, ...]]]]:
    """Oriented relations: (left, right) generator pair -> left-coefficient words."""
    inv = DynamicalScalar.reciprocal_of_linear
    return {
        (XP2, XP1): [(ONE - 2 * inv(-1), (XP1, XP2))],
        (XP1, XP1): [(2 * inv(0), (HBAR, XP2))],
        (XM1, XM1): [(-2 * inv(2), (XM2, HBAR))],
        (XP2, HBAR): [(ONE - 2 * inv(-1), (HBAR, XP2))],
        (XP2, XM1): [
            (ONE - 2 * inv(0) * inv(1), (XM1, XP2)),
            (2 * inv(-1), (HBAR, XP1)),
        ],
        (XP2, XM2): [
            (ONE + 2 * inv(2) * inv(-1), (XM2, XP2)),
            (-_c([-1, -1, 1], {1: 1, 0: 1, -1: 1}), (XM1, XP1)),
            (inv(-1), (HBAR, HBAR)),
            (-_c([0, 0, 1], {-1: 1}), ()),
        ],
        (XP1, HBAR): [(ONE - inv(0), (HBAR, XP1))],
        (XP1, XM1): [
            (-ONE - inv(1), (XM1, XP1)),
            (_c([0, 4], {1: 1, 2: 1}), (XM2, XP2)),
            (-inv(0), (HBAR, HBAR)),
            (H, ()),
        ],
        (XP1, XM2): [
            (ONE - 2 * inv(1) * inv(2), (XM2, XP1)),
            (-2 * inv(0), (XM1, HBAR)),
        ],
        (HBAR, XM1): [(ONE - inv(1), (XM1, HBAR))],
        (HBAR, XM2): [(ONE - 2 * inv(1), (XM2, HBAR))],
        (XM1, XM2): [(ONE - 2 * inv(2), (XM2, XM1))],
    }


RELATIONS = _relation_table()


def _read_fuel() -> int:
    fuel = get_setting("fuel")
    return fuel if isinstance(fuel, int) and fuel > 0 else DEFAULT_FUEL


ENGINE = PBWRewriter(
    names=GENERATORS,
    odd=ODD_GENERATORS,
    shifts=GENERATOR_SHIFTS,
    rules=RELATIONS,
    one=ONE,
    shift=scalar_shift,
    monomial=PBWMonomial._make,
    fuel=_read_fuel(),
)


def set_fuel(fuel: int) -> None:
    """Override the per-product rule-application bound."""
    if fuel <= 0:
        raise ValueError("fuel must be positive")
    ENGINE.fuel = fuel


class AlgebraElement:
    """Finite left R-combination of PBW monomials; immutable."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Optional[Dict[Tuple[int, ...], ScalarLike]] = None):
        clean: Dict[PBWMonomial, DynamicalScalar] = {}
        for mono, coeff in (terms or {}).items():
            coeff = DynamicalScalar.coerce(coeff)
            if coeff:
                clean[PBWMonomial._make(mono)] = coeff
        self.terms: Dict[PBWMonomial, DynamicalScalar] = clean
        self._hash: Optional[int] = None

    # Constructors

    @classmethod
    def zero(cls) -> "AlgebraElement":
        return cls()

    @classmethod
    def scalar(cls, value: ScalarLike) -> "AlgebraElement":
        return cls({PBWMonomial(): value})

    @classmethod
    def monomial(cls, mono: Tuple[int, ...], coeff: ScalarLike = 1) -> "AlgebraElement":
        return cls({PBWMonomial._make(mono): coeff})

    @classmethod
    def generator(cls, name: str) -> "AlgebraElement":
        index = GENERATORS.index(name)
        exps = [0] * 5
        exps[index] = 1
        return cls.monomial(tuple(exps))

    @classmethod
    def coerce(cls, value) -> "AlgebraElement":
        if isinstance(value, AlgebraElement):
            return value
        return cls.scalar(value)

    # Queries

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_scalar(self) -> bool:
        return all(m.is_unit() for m in self.terms)

    def scalar_part(self) -> DynamicalScalar:
        return self.terms.get(PBWMonomial(), ZERO)

    def coefficient(self, mono: Tuple[int, ...]) -> DynamicalScalar:
        return self.terms.get(PBWMonomial._make(mono), ZERO)

    def sorted_terms(self) -> List[Tuple[PBWMonomial, DynamicalScalar]]:
        return sorted(self.terms.items())

    def parities(self) -> Set[int]:
        return {m.parity for m in self.terms}

    def weights(self) -> Set[int]:
        return {m.weight for m in self.terms}

    def parity(self) -> int:
        parities = self.parities()
        if len(parities) > 1:
            raise MixedParity(f"element has terms of both parities: {self}")
        return parities.pop() if parities else 0

    def weight(self) -> int:
        weights = self.weights()
        if len(weights) > 1:
            raise ValueError(f"element is not weight-homogeneous: {sorted(weights)}")
        return weights.pop() if weights else 0

    def is_homogeneous(self) -> bool:
        return len(self.parities()) <= 1

    # Arithmetic

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, DynamicalScalar)):
            other = AlgebraElement.scalar(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other) -> "AlgebraElement":
        other = AlgebraElement.coerce(other)
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            terms[mono] = terms.get(mono, ZERO) + coeff
        return AlgebraElement(terms)

    __radd__ = __add__

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "AlgebraElement":
        return self + (-AlgebraElement.coerce(other))

    def __rsub__(self, other) -> "AlgebraElement":
        return AlgebraElement.coerce(other) - self

    def __mul__(self, other) -> "AlgebraElement":
        return diamond(self, AlgebraElement.coerce(other))

    def __rmul__(self, other) -> "AlgebraElement":
        return left_scale(other, self)

    def __pow__(self, exponent: int) -> "AlgebraElement":
        if exponent < 0:
            raise ValueError("negative powers are not defined in A")
        result = AlgebraElement.scalar(1)
        for _ in range(exponent):
            result = diamond(result, self)
        return result

    def __repr__(self) -> str:
        return f"AlgebraElement({self.to_text()!r})"

    def to_text(self, unicode: bool = False) -> str:
        return format_element(self, unicode=unicode)

    def __str__(self) -> str:
        return format_element(self)

    def to_json(self) -> Dict[str, List[Dict[str, object]]]:
        return {
            "terms": [
                {**mono._asdict(), "coeff": coeff.to_json()}
                for mono, coeff in self.sorted_terms()
            ]
        }

    @classmethod
    def from_json(cls, data: Dict[str, Sequence[Dict[str, object]]]) -> "AlgebraElement":
        terms = {}
        for entry in data.get("terms", []):
            mono = PBWMonomial(*(int(entry.get(key, 0)) for key in PBWMonomial._fields))
            if mono.q > 1 or mono.s > 1:
                raise ValueError(f"odd exponents must be 0 or 1, got {tuple(mono)}")
            terms[mono] = DynamicalScalar.from_json(entry["coeff"])
        return cls(terms)


def left_scale(factor: ScalarLike, a: AlgebraElement) -> AlgebraElement:
    """f(H) ◇ a: coefficients are on the left, so no shift is needed."""
    factor = DynamicalScalar.coerce(factor)
    return AlgebraElement({m: factor * c for m, c in a.terms.items()})


def diamond(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Normal form of a ◇ b."""
    if a.is_zero() or b.is_zero():
        return AlgebraElement.zero()
    return AlgebraElement(ENGINE.multiply(a.terms, b.terms))


def normalize_word(word: Sequence[Union[str, ScalarLike]]) -> AlgebraElement:
    """Normal form of a product of generator names and scalars, left to right."""
    result = AlgebraElement.scalar(1)
    for letter in word:
        if isinstance(letter, str):
            result = diamond(result, AlgebraElement.generator(letter))
        else:
            result = diamond(result, AlgebraElement.scalar(letter))
    return result


def generator_elements() -> Dict[str, AlgebraElement]:
    return {name: AlgebraElement.generator(name) for name in GENERATORS}


def supercommutator(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    sign = -1 if a.parity() * b.parity() else 1
    return diamond(a, b) - left_scale(sign, diamond(b, a))


def anticommutator(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """a ◇ b + b ◇ a, whatever the parities."""
    a.parity()
    b.parity()
    return diamond(a, b) + diamond(b, a)


def commutator(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Plain (non-super) commutator a ◇ b - b ◇ a."""
    return diamond(a, b) - diamond(b, a)


# Theta: the non-super anti-automorphism

_THETA_GENERATOR = {
    XM2: (XP2, -1),
    XM1: (XP1, 1),
    HBAR: (HBAR, 1),
    XP1: (XM1, 1),
    XP2: (XM2, -1),
}
_theta_cache: Dict[PBWMonomial, AlgebraElement] = {}


def _theta_monomial(mono: PBWMonomial) -> AlgebraElement:
    cached = _theta_cache.get(mono)
    if cached is not None:
        return cached
    result = AlgebraElement.scalar(1)
    for letter in reversed(mono.word()):
        image, sign = _THETA_GENERATOR[letter]
        result = diamond(result, AlgebraElement.monomial(_unit_exponents(image), sign))
    _theta_cache[mono] = result
    return result


def _unit_exponents(index: int) -> Tuple[int, ...]:
    exps = [0] * 5
    exps[index] = 1
    return tuple(exps)


def theta(a: AlgebraElement) -> AlgebraElement:
    """Θ(f * m) = Θ(m) ◇ f, with Θ reversing words and fixing R."""
    result = AlgebraElement.zero()
    for mono, coeff in a.terms.items():
        result = result + diamond(_theta_monomial(mono), AlgebraElement.scalar(coeff))
    return result


# Centrality

def _test_elements() -> List[AlgebraElement]:
    return [AlgebraElement.scalar(H)] + [AlgebraElement.generator(name) for name in GENERATORS]


def _label(x: AlgebraElement) -> str:
    if x.is_scalar():
        return "H"
    (mono,) = x.terms
    return GENERATORS[mono.word()[0]]


def is_central(a: AlgebraElement) -> bool:
    a.parity()
    return all(supercommutator(a, x).is_zero() for x in _test_elements())


def is_anticentral(a: AlgebraElement) -> bool:
    """Even case: anticommutes with Xm1, Xp1 and commutes with the rest."""
    if a.parity() == 1:
        return all(commutator(a, x).is_zero() for x in _test_elements())
    for x in _test_elements():
        if x.parities() == {1}:
            if not anticommutator(a, x).is_zero():
                return False
        elif not commutator(a, x).is_zero():
            return False
    return True


# Hat generators

HAT_FACTORS: Dict[int, DynamicalScalar] = {
    XP2: ONE,
    XP1: DynamicalScalar.linear(1),
    HBAR: DynamicalScalar.linear(1),
    XM1: DynamicalScalar.linear(1) * DynamicalScalar.linear(2),
    XM2: DynamicalScalar.linear(1) * DynamicalScalar.linear(2),
}


def hat_generator(name: str) -> AlgebraElement:
    """x̂ = factor(H) ◇ x̄ for the normalized generator of the given name."""
    index = GENERATORS.index(name)
    return AlgebraElement.monomial(_unit_exponents(index), HAT_FACTORS[index])


class HatElement:
    """Left R-combination of ordered monomials in the hat generators."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Tuple[int, ...], ScalarLike]] = None):
        self.terms: Dict[PBWMonomial, DynamicalScalar] = {
            PBWMonomial._make(m): DynamicalScalar.coerce(c)
            for m, c in (terms or {}).items()
            if DynamicalScalar.coerce(c)
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HatElement):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self) -> str:
        inner = ", ".join(f"{tuple(m)}: {c}" for m, c in sorted(self.terms.items()))
        return f"HatElement({{{inner}}})"


_hat_scale_cache: Dict[PBWMonomial, DynamicalScalar] = {}


def _hat_monomial_scale(mono: PBWMonomial) -> DynamicalScalar:
    """The unit u with (hat monomial) = u ◇ (bar monomial of the same exponents)."""
    cached = _hat_scale_cache.get(mono)
    if cached is not None:
        return cached
    product = AlgebraElement.scalar(1)
    for letter in mono.word():
        product = diamond(product, hat_generator(GENERATORS[letter]))
    if set(product.terms) != {mono}:
        raise AssertionError(f"hat monomial {tuple(mono)} did not expand to a single term")
    scale = product.terms[mono]
    _hat_scale_cache[mono] = scale
    return scale


def from_hat(hat: HatElement) -> AlgebraElement:
    return AlgebraElement({m: c * _hat_monomial_scale(m) for m, c in hat.terms.items()})


def to_hat(a: AlgebraElement) -> HatElement:
    return HatElement({m: c * scalar_invert(_hat_monomial_scale(m)) for m, c in a.terms.items()})


# Relations as data, for re-verification

# Right sides of y ◇ g, written out independently of the rewriting table.
PRESENTATION: Dict[Tuple[str, str], str] = {
    ("Xp2", "Xp1"): "(1 - 2/(H+1))*Xp1*Xp2",
    ("Xp1", "Xp1"): "(2/H)*h*Xp2",
    ("Xm1", "Xm1"): "-(2/(H-2))*Xm2*h",
    ("Xp2", "h"): "(1 - 2/(H+1))*h*Xp2",
    ("Xp2", "Xm1"): "(1 - 2/(H*(H-1)))*Xm1*Xp2 + (2/(H+1))*h*Xp1",
    ("Xp2", "Xm2"): (
        "(H*(H-1)/((H-2)*(H+1)))*Xm2*Xp2 - ((H^2-H-1)/((H-1)*H*(H+1)))*Xm1*Xp1"
        " + (1/(H+1))*h*h - H^2/(H+1)"
    ),
    ("Xp1", "h"): "(1 - 1/H)*h*Xp1",
    ("Xp1", "Xm1"): "(-1 - 1/(H-1))*Xm1*Xp1 + (4*H/((H-1)*(H-2)))*Xm2*Xp2 - (1/H)*h*h + H",
    ("Xp1", "Xm2"): "(1 - 2/((H-1)*(H-2)))*Xm2*Xp1 - (2/H)*Xm1*h",
    ("h", "Xm1"): "(1 - 1/(H-1))*Xm1*h",
    ("h", "Xm2"): "(1 - 2/(H-1))*Xm2*h",
    ("Xm1", "Xm2"): "(1 - 2/(H-2))*Xm2*Xm1",
}


def presentation() -> List[Tuple[str, str, AlgebraElement]]:
    """The twelve ordering relations as (y, g, parsed right side), in generator order."""
    from utils.expression_parser import parse_expression

    rows = sorted(PRESENTATION.items(), key=lambda item: tuple(GENERATORS.index(n) for n in item[0]))
    return [(y, g, parse_expression(text)) for (y, g), text in rows]


def defining_relations() -> List[Tuple[str, AlgebraElement, AlgebraElement]]:
    """The fourteen defining relations as (id, left side, right side)."""
    gens = generator_elements()
    sample = H * H + DynamicalScalar.reciprocal_of_linear(5) - 3
    relations: List[Tuple[str, AlgebraElement, AlgebraElement]] = []
    xf_left = AlgebraElement.zero()
    xf_right = AlgebraElement.zero()
    for name, k in (("Xm2", -2), ("Xm1", -1), ("Xp1", 1), ("Xp2", 2)):
        xf_left = xf_left + diamond(gens[name], AlgebraElement.scalar(sample))
        xf_right = xf_right + left_scale(scalar_shift(sample, k), gens[name])
    relations.append(("xf", xf_left, xf_right))
    relations.append(("hf", diamond(gens["h"], AlgebraElement.scalar(sample)), left_scale(sample, gens["h"])))
    for y, g, right in presentation():
        relations.append((f"{y}*{g}", diamond(gens[y], gens[g]), right))
    return relations


def hat_relations() -> List[Tuple[str, AlgebraElement, AlgebraElement]]:
    """The relations obeyed by the normalized generators, expanded to bar form."""
    x = {name: hat_generator(name) for name in GENERATORS}
    hh = x["h"]
    Hs = AlgebraElement.scalar(H)

    def s(value: ScalarLike) -> AlgebraElement:
        return AlgebraElement.scalar(value)

    relations: List[Tuple[str, AlgebraElement, AlgebraElement]] = []
    for name, k in (("Xm2", -2), ("Xm1", -1), ("Xp1", 1), ("Xp2", 2)):
        relations.append((f"hat-{name}*H", x[name] * Hs, s(H + k) * x[name]))
    for g in _test_elements():
        relations.append((f"hat-h-central-{_label(g)}", supercommutator(hh, g), AlgebraElement.zero()))
    relations.append(("hat-Xp1*Xp1", x["Xp1"] * x["Xp1"], 2 * (hh * x["Xp2"])))
    relations.append(("hat-Xm1*Xm1", x["Xm1"] * x["Xm1"], -2 * (hh * x["Xm2"])))
    relations.append(("hat-Xp1*Xp2", x["Xp1"] * x["Xp2"], x["Xp2"] * x["Xp1"]))
    relations.append(("hat-Xm1*Xm2", x["Xm1"] * x["Xm2"], x["Xm2"] * x["Xm1"]))
    relations.append((
        "hat-Xp2*Xm1",
        (H - 1) ** 2 * (x["Xp2"] * x["Xm1"]),
        (H + 1) ** 2 * (x["Xm1"] * x["Xp2"]) + (2 * H) * (hh * x["Xp1"]),
    ))
    relations.append((
        "hat-Xp1*Xm1",
        (H - 2) ** 2 * (x["Xp1"] * x["Xm1"]),
        -(H * H) * (x["Xm1"] * x["Xp1"])
        + (4 * H * H) * (x["Xm2"] * x["Xp2"])
        - (H - 2) ** 2 * (hh * hh)
        + s(H * H * (H - 1) ** 2 * (H - 2) ** 2),
    ))
    relations.append((
        "hat-Xp1*Xm2",
        (H - 2) ** 2 * (x["Xp1"] * x["Xm2"]),
        (H * H) * (x["Xm2"] * x["Xp1"]) - (2 * (H - 1)) * (x["Xm1"] * hh),
    ))
    relations.append((
        "hat-Xp2*Xm2",
        ((H - 1) * (H - 2)) ** 2 * (x["Xp2"] * x["Xm2"]),
        (H * H * (H - 1) ** 2) * (x["Xm2"] * x["Xp2"])
        + (-(H * H) + H + 1) * (x["Xm1"] * x["Xp1"])
        + (H * (H - 2) ** 2) * (hh * hh)
        - s(H ** 3 * (H - 1) ** 2 * (H - 2) ** 2),
    ))
    return relations


if __name__ == "__main__":
    gens = generator_elements()
    print("Xp1 * Xp1 =", gens["Xp1"] * gens["Xp1"])
    print("Xp2 * Xp1 =", gens["Xp2"] * gens["Xp1"])
    print("theta(Xp2 * Xm1) =", theta(gens["Xp2"] * gens["Xm1"]))
