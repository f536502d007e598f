#!/usr/bin/env python3
"""
Harish-Chandra projection of the H-centralizer of A onto R[h], the
functional equation obeyed by images of ghost-central elements, and exact
membership tests in the ring generated by 2xy, x^2 + y^2 and x^2 - y^2
(x = H - 1, y = h).
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Tuple

import sympy

from algebra_core import AlgebraElement, diamond, is_anticentral, is_central
from distinguished import element_c1, element_c2, element_q2
from scalar_ring import (
    DraError,
    DynamicalScalar,
    DynPolynomial,
)

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger("dra_harish_chandra")


class NotInCentralizer(DraError, ValueError):
    """The element has a term of nonzero weight, so it does not commute with H."""


class NotPolynomial(DraError, ValueError):
    """A Harish-Chandra image has a coefficient with a denominator."""


class GhostParityMismatch(DraError, ValueError):
    """The element is not central (ghost parity 0) or anti-central (ghost parity 1)."""


@dataclass(frozen=True)
class HCImage:
    """phi(a) as a polynomial in h over R."""

    value: DynPolynomial

    def in_hhat(self) -> DynPolynomial:
        return self.value.to_tag("hhat")

    def ghost(self) -> "GhostPolynomial":
        return GhostPolynomial.from_hc(self)

    def __str__(self) -> str:
        return self.value.to_text()


def hc_project(a: AlgebraElement) -> HCImage:
    """Keep the pure h^r terms of a weight-zero element."""
    stray = sorted({mono.weight for mono in a.terms if mono.weight != 0})
    if stray:
        raise NotInCentralizer(f"element has terms of weight {stray}")
    coeffs: Dict[int, DynamicalScalar] = {}
    for mono, coeff in a.terms.items():
        if mono.p == mono.q == mono.s == mono.t == 0:
            coeffs[mono.r] = coeff
    top = max(coeffs, default=-1)
    return HCImage(DynPolynomial([coeffs.get(r, 0) for r in range(top + 1)], tag="h"))


def functional_equation_check(z: AlgebraElement, ghost_parity: int, n: int, eps: int) -> bool:
    """
    Check z0(H + n, lam) == (-1)^ghost_parity * z0(H, lam) with
    lam = eps (H + n - 1)(H - 1), z0 the image of z written in hhat.

    Raises:
        GhostParityMismatch: z is not central (parity 0) or anti-central (parity 1).
    """
    if ghost_parity not in (0, 1):
        raise ValueError("ghost parity must be 0 or 1")
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be an odd positive integer")
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    holds = is_central(z) if ghost_parity == 0 else is_anticentral(z)
    if not holds:
        kind = "central" if ghost_parity == 0 else "anti-central"
        raise GhostParityMismatch(f"element is not {kind}")
    z0 = hc_project(z).in_hhat()
    lam = eps * DynamicalScalar.linear(1 - n) * DynamicalScalar.linear(1)
    left = z0.shift_coefficients(n).substitute(lam)
    right = z0.substitute(lam)
    if ghost_parity:
        right = -right
    return left == right


# Ghost polynomials in x = H - 1, y = h

Monomial = Tuple[int, int]


class GhostPolynomial:
    """Polynomial in commuting x, y with exact rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Monomial, Fraction]] = None):
        self.terms: Dict[Monomial, Fraction] = {
            (int(i), int(j)): Fraction(c) for (i, j), c in (terms or {}).items() if c != 0
        }

    @classmethod
    def x(cls) -> "GhostPolynomial":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "GhostPolynomial":
        return cls({(0, 1): 1})

    @classmethod
    def constant(cls, value) -> "GhostPolynomial":
        return cls({(0, 0): value})

    @classmethod
    def from_hc(cls, image: HCImage) -> "GhostPolynomial":
        """Rewrite coefficients of h through H = x + 1; each must be a polynomial."""
        terms: Dict[Monomial, Fraction] = {}
        for j, coeff in enumerate(image.value.to_tag("h").coeffs):
            if not coeff.is_polynomial():
                raise NotPolynomial(f"coefficient {coeff} of h^{j} has a denominator")
            for i, c in enumerate(coeff.num.shift(1).coeffs):
                if c:
                    terms[(i, j)] = c
        return cls(terms)

    def to_hc(self) -> HCImage:
        top = max((j for _, j in self.terms), default=-1)
        coeffs = [DynamicalScalar.zero() for _ in range(top + 1)]
        for (i, j), c in self.terms.items():
            coeffs[j] = coeffs[j] + c * DynamicalScalar.linear(1) ** i
        return HCImage(DynPolynomial(coeffs, tag="h"))

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def homogeneous_component(self, d: int) -> "GhostPolynomial":
        return GhostPolynomial({m: c for m, c in self.terms.items() if sum(m) == d})

    def degrees(self) -> List[int]:
        return sorted({i + j for i, j in self.terms})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = GhostPolynomial.constant(other)
        if not isinstance(other, GhostPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "GhostPolynomial":
        other = _ghost_operand(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return GhostPolynomial(terms)

    __radd__ = __add__

    def __neg__(self) -> "GhostPolynomial":
        return GhostPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "GhostPolynomial":
        return self + (-_ghost_operand(other))

    def __rsub__(self, other) -> "GhostPolynomial":
        return _ghost_operand(other) - self

    def __mul__(self, other) -> "GhostPolynomial":
        other = _ghost_operand(other)
        terms: Dict[Monomial, Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return GhostPolynomial(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "GhostPolynomial":
        result = GhostPolynomial.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def sigma(self, eps: int) -> "GhostPolynomial":
        """sigma_eps: x -> eps*y, y -> eps*x."""
        if eps not in (1, -1):
            raise ValueError("eps must be +1 or -1")
        return GhostPolynomial({(j, i): c * eps ** (i + j) for (i, j), c in self.terms.items()})

    def to_sympy(self) -> sympy.Expr:
        x, y = sympy.symbols("x y")
        return sum(
            (sympy.Rational(c.numerator, c.denominator) * x ** i * y ** j for (i, j), c in self.terms.items()),
            sympy.Integer(0),
        )

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        return str(sympy.expand(self.to_sympy()))

    def __repr__(self) -> str:
        return f"GhostPolynomial({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()


def _ghost_operand(value) -> GhostPolynomial:
    if isinstance(value, GhostPolynomial):
        return value
    return GhostPolynomial.constant(value)


def ghost_c1() -> GhostPolynomial:
    return 2 * GhostPolynomial.x() * GhostPolynomial.y()


def ghost_c2() -> GhostPolynomial:
    return GhostPolynomial.x() ** 2 + GhostPolynomial.y() ** 2


def ghost_q() -> GhostPolynomial:
    return GhostPolynomial.x() ** 2 - GhostPolynomial.y() ** 2


# Membership in C[c2, c1] + C[c2, c1] q

CENTRAL = "Central"
ANTI_CENTRAL = "AntiCentral"
MIXED = "Mixed"
NOT_IN_GHOST_IMAGE = "NotInGhostImage"


@dataclass(frozen=True)
class GhostMembership:
    """
    Outcome of ghost_membership. The coordinate maps key (a, b, e) to the
    coefficient of c2^a c1^b q^e with e in {0, 1}.
    """

    kind: str
    central_part: GhostPolynomial = field(default_factory=GhostPolynomial)
    anticentral_part: GhostPolynomial = field(default_factory=GhostPolynomial)
    coordinates: Dict[Tuple[int, int, int], Fraction] = field(default_factory=dict)

    def expression(self) -> str:
        if self.kind == NOT_IN_GHOST_IMAGE:
            return "not in the ghost image"
        if not self.coordinates:
            return "0"
        pieces = []
        for (a, b, e), c in sorted(self.coordinates.items()):
            factors = []
            for name, power in (("c2", a), ("c1", b), ("q", e)):
                if power == 1:
                    factors.append(name)
                elif power > 1:
                    factors.append(f"{name}^{power}")
            pieces.append(f"({c})*" + "*".join(factors) if factors else f"({c})")
        return " + ".join(pieces)


def _degree_basis(d: int) -> List[Tuple[Tuple[int, int, int], GhostPolynomial]]:
    """c2^a c1^b (a + b = d/2) and c2^a c1^b q (a + b = d/2 - 1)."""
    half = d // 2
    basis = []
    c1, c2, q = ghost_c1(), ghost_c2(), ghost_q()
    for a in range(half, -1, -1):
        basis.append(((a, half - a, 0), c2 ** a * c1 ** (half - a)))
    for a in range(half - 1, -1, -1):
        basis.append(((a, half - 1 - a, 1), c2 ** a * c1 ** (half - 1 - a) * q))
    return basis


def _solve_component(component: GhostPolynomial, d: int) -> Dict[Tuple[int, int, int], Fraction]:
    basis = _degree_basis(d)
    columns = [[poly.terms.get((i, d - i), Fraction(0)) for i in range(d + 1)] for _, poly in basis]
    matrix = sympy.Matrix(d + 1, len(basis), lambda r, c: sympy.Rational(columns[c][r].numerator, columns[c][r].denominator))
    target = sympy.Matrix(
        d + 1, 1, lambda r, _: sympy.Rational(*_ratio(component.terms.get((r, d - r), Fraction(0))))
    )
    solution = matrix.LUsolve(target)
    coords = {}
    for (key, _), value in zip(basis, solution):
        value = sympy.Rational(value)
        if value != 0:
            coords[key] = Fraction(int(value.p), int(value.q))
    return coords


def _ratio(value: Fraction) -> Tuple[int, int]:
    return value.numerator, value.denominator


def ghost_membership(g: GhostPolynomial) -> GhostMembership:
    """Classify g against C[x^2+y^2, 2xy] and C[x^2+y^2, 2xy](x^2-y^2)."""
    coordinates: Dict[Tuple[int, int, int], Fraction] = {}
    for d in g.degrees():
        component = g.homogeneous_component(d)
        if d % 2:
            logger.debug(f"degree {d} component {component} is not sigma-stable")
            return GhostMembership(NOT_IN_GHOST_IMAGE)
        coordinates.update(_solve_component(component, d))
    c1, c2, q = ghost_c1(), ghost_c2(), ghost_q()
    central = GhostPolynomial()
    anticentral = GhostPolynomial()
    for (a, b, e), c in coordinates.items():
        piece = c * c2 ** a * c1 ** b
        if e:
            anticentral = anticentral + piece * q
        else:
            central = central + piece
    if anticentral.is_zero():
        kind = CENTRAL
    elif central.is_zero():
        kind = ANTI_CENTRAL
    else:
        kind = MIXED
    return GhostMembership(kind, central, anticentral, coordinates)


# Injectivity witness

GENERATOR_LABELS = ("c1", "c2", "q")


def _generator_monomials(max_degree: int) -> List[Tuple[int, int, int]]:
    exps = [e for e in product(range(max_degree + 1), repeat=3) if sum(e) <= max_degree]
    return sorted(exps, key=lambda e: (sum(e), tuple(-x for x in e)))


def monomial_label(exps: Tuple[int, int, int]) -> str:
    parts = [name if e == 1 else f"{name}^{e}" for name, e in zip(GENERATOR_LABELS, exps) if e]
    return "*".join(parts) or "1"


def _monomial_elements(max_degree: int) -> Dict[Tuple[int, int, int], AlgebraElement]:
    gens = (element_c1(), element_c2(), element_q2())
    elements: Dict[Tuple[int, int, int], AlgebraElement] = {(0, 0, 0): AlgebraElement.scalar(1)}
    for exps in _generator_monomials(max_degree):
        if exps in elements:
            continue
        index = next(i for i in range(2, -1, -1) if exps[i])
        smaller = list(exps)
        smaller[index] -= 1
        elements[exps] = diamond(elements[tuple(smaller)], gens[index])
    return elements


def hc_kernel(max_degree: int) -> List[Dict[str, Fraction]]:
    """Rational relations among the images of c1^a c2^b q^e of total degree <= max_degree."""
    elements = _monomial_elements(max_degree)
    keys = _generator_monomials(max_degree)
    images = [hc_project(elements[k]).ghost() for k in keys]
    support = sorted({m for image in images for m in image.terms})
    if not support:
        return []
    matrix = sympy.Matrix(
        len(support),
        len(keys),
        lambda r, c: sympy.Rational(*_ratio(images[c].terms.get(support[r], Fraction(0)))),
    )
    relations = []
    for vector in matrix.nullspace():
        relation = {}
        for key, value in zip(keys, vector):
            value = sympy.Rational(value)
            if value != 0:
                relation[monomial_label(key)] = Fraction(int(value.p), int(value.q))
        relations.append(relation)
    logger.info(f"hc kernel up to degree {max_degree}: {len(keys)} monomials, {len(relations)} relations")
    return relations


def hc_injectivity_witness(max_degree: int) -> bool:
    """Every rational relation among the images also holds in A."""
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    elements = _monomial_elements(max_degree)
    by_label = {monomial_label(k): v for k, v in elements.items()}
    for relation in hc_kernel(max_degree):
        combination = AlgebraElement.zero()
        for label, coeff in relation.items():
            combination = combination + coeff * by_label[label]
        if not combination.is_zero():
            logger.warning(f"relation {relation} does not vanish in A")
            return False
    return True


if __name__ == "__main__":
    for name, element in (("C1", element_c1()), ("C2", element_c2()), ("Q2", element_q2())):
        image = hc_project(element)
        print(f"hc({name}) = {image} -> {ghost_membership(image.ghost()).kind}")
