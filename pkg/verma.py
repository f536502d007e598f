#!/usr/bin/env python3
"""
Verma modules M(lambda) over the reduction algebra, the Shapovalov form, and
explicit matrices for the finite-dimensional irreducibles L(lambda, mu).

A vector is a finite sum of v_{p,q} . g with v_{p,q} = Xm2^p Xm1^q . v_lambda and
right coefficients g in R. The raising generators kill v_lambda, h acts on it by
lambda, and a left scalar f(H) in front of Xm2^p Xm1^q moves to the right as
f(H + 2p + q).
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple, Union

import sympy

from algebra_core import (
    AlgebraElement,
    GENERATOR_SHIFTS,
    GENERATORS,
    PBWMonomial,
    diamond,
    presentation,
    theta,
)
from distinguished import ShapeMismatch, element_c1, element_c2, element_q2, radical_scalar, xm1_power
from scalar_ring import (
    DraError,
    DynamicalScalar,
    ScalarLike,
    ZERO,
    scalar_invert,
    scalar_shift,
)
from utils.config import get_setting
from utils.formatting import latex_matrix, latex_rational, matrix_to_json, rational_to_str

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger("dra_verma")

Rational = Union[int, Fraction]
BasisKey = Tuple[int, int]


class WeightMismatch(DraError, ValueError):
    """The two vectors belong to Verma modules of different highest weight."""


class BoundExceeded(DraError, RuntimeError):
    """No radical was found within the scan bound."""

    def __init__(self, bound: int):
        super().__init__(f"no n <= {bound} with F_n(H+n-1, lambda_hat) = 0")
        self.bound = bound


class NotFiniteDimensional(DraError, ValueError):
    """No odd positive n with lambda^2 = (mu + n)^2."""


class IntegerMu(DraError, ValueError):
    """mu must not be an integer."""


class RelationViolation(DraError, AssertionError):
    """A constructed representation failed one of its defining identities."""


@dataclass(frozen=True)
class HighestWeight:
    lambda_: DynamicalScalar

    def __post_init__(self):
        object.__setattr__(self, "lambda_", DynamicalScalar.coerce(self.lambda_))

    @property
    def lambda_hat(self) -> DynamicalScalar:
        return DynamicalScalar.linear(1) * self.lambda_

    def is_zero(self) -> bool:
        return self.lambda_.is_zero()

    def __str__(self) -> str:
        return f"lambda = {self.lambda_}"


class VermaElement:
    """Finite sum of basis vectors v_{p,q} with right coefficients in R."""

    __slots__ = ("weight", "terms")

    def __init__(self, weight: HighestWeight, terms: Optional[Dict[BasisKey, ScalarLike]] = None):
        self.weight = weight
        clean: Dict[BasisKey, DynamicalScalar] = {}
        for (p, q), coeff in (terms or {}).items():
            if p < 0 or q not in (0, 1):
                raise ValueError(f"invalid basis index ({p}, {q})")
            coeff = DynamicalScalar.coerce(coeff)
            if coeff:
                clean[(int(p), int(q))] = coeff
        self.terms: Dict[BasisKey, DynamicalScalar] = clean

    @classmethod
    def highest(cls, weight: HighestWeight) -> "VermaElement":
        return cls(weight, {(0, 0): 1})

    @classmethod
    def basis(cls, weight: HighestWeight, p: int, q: int) -> "VermaElement":
        return cls(weight, {(p, q): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, p: int, q: int) -> DynamicalScalar:
        return self.terms.get((p, q), ZERO)

    def degrees(self) -> List[int]:
        """Power-basis indices 2p + q carried by the vector."""
        return sorted({2 * p + q for p, q in self.terms})

    def right_scale(self, factor: ScalarLike) -> "VermaElement":
        factor = DynamicalScalar.coerce(factor)
        return VermaElement(self.weight, {k: c * factor for k, c in self.terms.items()})

    def _check(self, other: "VermaElement") -> None:
        if other.weight != self.weight:
            raise WeightMismatch(f"{self.weight} vs {other.weight}")

    def __add__(self, other: "VermaElement") -> "VermaElement":
        self._check(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, ZERO) + c
        return VermaElement(self.weight, terms)

    def __neg__(self) -> "VermaElement":
        return self.right_scale(-1)

    def __sub__(self, other: "VermaElement") -> "VermaElement":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VermaElement):
            return NotImplemented
        return self.weight == other.weight and self.terms == other.terms

    def __repr__(self) -> str:
        return f"VermaElement({self.to_text()!r})"

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"v[{p},{q}].({c})" for (p, q), c in sorted(self.terms.items()))


def _basis_image(a: AlgebraElement, p: int, q: int, weight: HighestWeight) -> Dict[BasisKey, DynamicalScalar]:
    terms: Dict[BasisKey, DynamicalScalar] = {}
    product = diamond(a, AlgebraElement.monomial((p, q, 0, 0, 0)))
    for mono, coeff in product.terms.items():
        if mono.s or mono.t:
            continue
        key = (mono.p, mono.q)
        value = scalar_shift(coeff, 2 * mono.p + mono.q) * weight.lambda_ ** mono.r
        terms[key] = terms.get(key, ZERO) + value
    return terms


def verma_act(a: AlgebraElement, v: VermaElement) -> VermaElement:
    """a . v expanded on the basis v_{p,q}."""
    terms: Dict[BasisKey, DynamicalScalar] = {}
    for (p, q), g in v.terms.items():
        for key, value in _basis_image(a, p, q, v.weight).items():
            terms[key] = terms.get(key, ZERO) + value * g
    return VermaElement(v.weight, terms)


def lift(v: VermaElement) -> AlgebraElement:
    """The element a = sum Xm2^p Xm1^q * g with a . v_lambda = v."""
    result = AlgebraElement.zero()
    for (p, q), g in v.terms.items():
        result = result + diamond(AlgebraElement.monomial((p, q, 0, 0, 0)), AlgebraElement.scalar(g))
    return result


def shapovalov(u1: VermaElement, u2: VermaElement) -> DynamicalScalar:
    """<u1, u2>: the v_lambda coefficient of theta(lift(u1)) * lift(u2) . v_lambda."""
    if u1.weight != u2.weight:
        raise WeightMismatch(f"cannot pair {u1.weight} with {u2.weight}")
    if u1.is_zero() or u2.is_zero():
        return ZERO
    pairing = verma_act(diamond(theta(lift(u1)), lift(u2)), VermaElement.highest(u1.weight))
    return pairing.coefficient(0, 0)


# Power basis Xm1^k . v_lambda

@lru_cache(maxsize=None)
def power_vector(weight: HighestWeight, k: int) -> VermaElement:
    """Xm1^k . v_lambda, a right multiple of v_{k//2, k%2}."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return verma_act(xm1_power(k), VermaElement.highest(weight))


def power_scale(weight: HighestWeight, k: int) -> DynamicalScalar:
    """d_k with Xm1^k . v_lambda = v_{k//2, k%2} . d_k."""
    return power_vector(weight, k).coefficient(k // 2, k % 2)


def to_power_basis(v: VermaElement) -> Dict[int, DynamicalScalar]:
    """Coordinates c_k with v = sum (Xm1^k . v_lambda) . c_k; lambda must be a unit."""
    coords: Dict[int, DynamicalScalar] = {}
    for (p, q), g in v.terms.items():
        k = 2 * p + q
        coords[k] = g * scalar_invert(power_scale(v.weight, k))
    return coords


def from_power_basis(weight: HighestWeight, coords: Dict[int, ScalarLike]) -> VermaElement:
    result = VermaElement(weight)
    for k, c in coords.items():
        result = result + power_vector(weight, k).right_scale(c)
    return result


def gram_matrix(weight: HighestWeight, size: int, basis: Optional[str] = None) -> List[List[DynamicalScalar]]:
    """
    Gram matrix of the first `size` basis vectors.

    Args:
        basis: "power" (Xm1^k), "pq" (v_{k//2, k%2}) or "xm2" (Xm2^k). The default
            is "power" unless lambda is zero, where powers of Xm1 beyond the first vanish.
    """
    if size < 1:
        raise ValueError("size must be at least 1")
    if basis is None:
        basis = "pq" if weight.is_zero() else "power"
    if basis == "power":
        vectors = [power_vector(weight, k) for k in range(size)]
    elif basis == "pq":
        vectors = [VermaElement.basis(weight, k // 2, k % 2) for k in range(size)]
    elif basis == "xm2":
        vectors = [VermaElement.basis(weight, k, 0) for k in range(size)]
    else:
        raise ValueError(f"unknown basis {basis!r}")
    return [[shapovalov(u, w) for w in vectors] for u in vectors]


@dataclass(frozen=True)
class Nondegenerate:
    pass


@dataclass(frozen=True)
class DegenerateAt:
    n: int


def radical_order(weight: HighestWeight, bound: Optional[int] = None) -> Union[Nondegenerate, DegenerateAt]:
    """Smallest n with F_n(H + n - 1, lambda_hat) = 0."""
    if weight.is_zero():
        return Nondegenerate()
    bound = bound if bound is not None else get_setting("radical_bound")
    lam = weight.lambda_hat
    for n in range(1, bound + 1):
        if radical_scalar(n, lam).is_zero():
            if n % 2 == 0:
                raise ShapeMismatch(f"radical detected at even n = {n}")
            logger.debug(f"radical of {weight} starts at degree {n}")
            return DegenerateAt(n)
    raise BoundExceeded(bound)


def in_maximal_submodule(v: VermaElement, mu: Rational) -> bool:
    """Membership in N(lambda, mu) = M.(H - 1 - mu) + rad, by pairing at H = mu + 1."""
    mu = Fraction(mu)
    if mu.denominator == 1:
        raise IntegerMu(f"mu = {mu} is an integer")
    point = mu + 1
    for k in v.degrees():
        if shapovalov(v, power_vector(v.weight, k)).evaluate(point) != 0:
            return False
    return True


# Finite-dimensional irreducibles

MATRIX_NAMES = GENERATORS + ("H",)


def _to_fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _rational(value: Rational) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


@dataclass
class IrrepData:
    """Matrices of L(lambda, mu) on the basis Xm1^k . v, k = 0..n-1."""

    lambda_: Fraction
    mu: Fraction
    n: int
    matrices: Dict[str, sympy.Matrix] = field(default_factory=dict)

    @property
    def eigenvalues(self) -> List[Fraction]:
        return [self.mu + 1 + k for k in range(self.n)]

    def matrix(self, name: str) -> sympy.Matrix:
        return self.matrices[name]

    def rows(self, name: str) -> List[List[Fraction]]:
        m = self.matrices[name]
        return [[_to_fraction(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]

    def to_json(self) -> Dict[str, object]:
        return {
            "lambda": rational_to_str(self.lambda_),
            "mu": rational_to_str(self.mu),
            "n": self.n,
            "matrices": {name: matrix_to_json(self.rows(name)) for name in MATRIX_NAMES},
        }

    def to_latex(self) -> str:
        lines = [rf"% L(\lambda, \mu) with \lambda = {latex_rational(self.lambda_)}, \mu = {latex_rational(self.mu)}"]
        for name in MATRIX_NAMES:
            lines.append(f"{name} = {latex_matrix(self.rows(name))}")
        return "\n".join(lines)


def irrep_dimension(lambda_: Rational, mu: Rational) -> int:
    """The odd n with lambda^2 = (mu + n)^2."""
    lambda_, mu = Fraction(lambda_), Fraction(mu)
    if mu.denominator == 1:
        raise IntegerMu(f"mu = {mu} is an integer")
    for candidate in (lambda_ - mu, -lambda_ - mu):
        if candidate.denominator == 1 and candidate > 0 and candidate.numerator % 2 == 1:
            return int(candidate)
    raise NotFiniteDimensional(f"no odd positive n with lambda^2 = (mu + n)^2 for lambda={lambda_}, mu={mu}")


def _word_matrix(mono: PBWMonomial, gens: Dict[str, sympy.Matrix], size: int) -> sympy.Matrix:
    result = sympy.eye(size)
    for letter in mono.word():
        result = result * gens[GENERATORS[letter]]
    return result


def evaluate_element(a: AlgebraElement, irrep: IrrepData) -> sympy.Matrix:
    """Matrix of a on the irrep: left scalars act through the H eigenvalue of the target."""
    result = sympy.zeros(irrep.n, irrep.n)
    eigs = irrep.eigenvalues
    for mono, coeff in a.terms.items():
        diagonal = sympy.diag(*[_rational(coeff.evaluate(e)) for e in eigs])
        result = result + diagonal * _word_matrix(mono, irrep.matrices, irrep.n)
    return result


def build_irrep(lambda_: Rational, mu: Rational, validate: bool = True) -> IrrepData:
    """Construct L(lambda, mu) and check every defining relation as a matrix identity."""
    lambda_, mu = Fraction(lambda_), Fraction(mu)
    n = irrep_dimension(lambda_, mu)
    weight = HighestWeight(DynamicalScalar.constant(lambda_))
    point = mu + 1
    matrices: Dict[str, sympy.Matrix] = {}
    for name in GENERATORS:
        generator = AlgebraElement.generator(name)
        m = sympy.zeros(n, n)
        for k in range(n):
            image = verma_act(generator, power_vector(weight, k))
            for j, c in to_power_basis(image).items():
                if j < n:
                    m[j, k] = _rational(c.evaluate(point))
        matrices[name] = m
    matrices["H"] = sympy.diag(*[_rational(point + k) for k in range(n)])
    irrep = IrrepData(lambda_, mu, n, matrices)
    if validate:
        validate_irrep(irrep, weight)
    logger.info(f"built L({lambda_}, {mu}) of dimension {n}")
    return irrep


def validate_irrep(irrep: IrrepData, weight: Optional[HighestWeight] = None) -> None:
    """
    Raise RelationViolation unless the matrices satisfy every defining relation.

    Left sides are products of the stored matrices; only the right sides go
    through evaluate_element.
    """
    weight = weight or HighestWeight(DynamicalScalar.constant(irrep.lambda_))
    label = f"L({irrep.lambda_}, {irrep.mu})"
    gens = irrep.matrices
    h_matrix = gens["H"]
    if h_matrix != sympy.diag(*[_rational(e) for e in irrep.eigenvalues]):
        raise RelationViolation(f"H is not diagonal with the expected eigenvalues on {label}")
    for name, k in zip(GENERATORS, GENERATOR_SHIFTS):
        if gens[name] * h_matrix != (h_matrix + k * sympy.eye(irrep.n)) * gens[name]:
            raise RelationViolation(f"{name} does not shift H by {k} on {label}")
    for y, g, right in presentation():
        if gens[y] * gens[g] != evaluate_element(right, irrep):
            raise RelationViolation(f"relation {y}*{g} fails on {label}")
    for k in range(irrep.n):
        if in_maximal_submodule(power_vector(weight, k), irrep.mu):
            raise RelationViolation(f"Xm1^{k} . v lies in the maximal submodule")
    for k in (irrep.n, irrep.n + 1):
        if not in_maximal_submodule(power_vector(weight, k), irrep.mu):
            raise RelationViolation(f"Xm1^{k} . v survives in the quotient")


def ghost_scalars(lambda_: Rational, mu: Rational) -> Tuple[Fraction, Fraction, Fraction]:
    """Scalars of C1, C2 and Q2 on v; Q2 picks up (-1)^k on Xm1^k . v."""
    lambda_, mu = Fraction(lambda_), Fraction(mu)
    return 2 * lambda_ * mu, mu * mu + lambda_ * lambda_, mu * mu - lambda_ * lambda_


def same_ghost_scalars(first: Tuple[Rational, Rational], second: Tuple[Rational, Rational]) -> bool:
    return ghost_scalars(*first) == ghost_scalars(*second)


def ghost_matrices(irrep: IrrepData) -> Dict[str, sympy.Matrix]:
    return {
        "c1": evaluate_element(element_c1(), irrep),
        "c2": evaluate_element(element_c2(), irrep),
        "q2": evaluate_element(element_q2(), irrep),
    }


if __name__ == "__main__":
    irrep = build_irrep(Fraction(3, 2), Fraction(-3, 2))
    print(irrep.to_latex())
    print("ghost scalars:", ghost_scalars(irrep.lambda_, irrep.mu))
