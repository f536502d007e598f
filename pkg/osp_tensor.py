#!/usr/bin/env python3
"""
U(osp(1|2)), its highest-weight modules V(xi), and the tensor product
C[x] (x) V(-l) = V(1/2) (x) V(-l) with the extremal lowering operator S whose
powers S^j (1 (x) v) produce every singular vector.

Conventions: generators are ordered Xm2, Xm1, h, Xp1, Xp2; Xm1 raises the
h-eigenvalue by one, so Xm1^k . v has h-eigenvalue xi + k.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import sympy

from algebra_core import AlgebraElement
from distinguished import element_c1, element_c2, element_q2
from pbw_rewriting import PBWRewriter
from scalar_ring import DraError
from utils.formatting import ASCII_NAMES, rational_to_str
from verma import ghost_scalars

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger("dra_osp_tensor")

Rational = Union[int, Fraction]
XM2, XM1, HH, XP1, XP2 = range(5)
ODD = frozenset({XM1, XP1})


class TruncationOverflow(DraError, ValueError):
    """An action left the degree window of a truncated module."""


class PoleOnWeight(DraError, ArithmeticError):
    """A coefficient of S was evaluated at H = 1 or H = 2."""


class WindowTooSmall(DraError, ValueError):
    """The truncation window cuts a weight space the decomposition needs."""


def _osp_rules() -> Dict[Tuple[int, int], List[Tuple[Fraction, Tuple[int, ...]]]]:
    """Supercommutator relations oriented towards the order Xm2 < Xm1 < h < Xp1 < Xp2."""
    one = Fraction(1)
    return {
        (XM1, XM2): [(one, (XM2, XM1))],
        (HH, XM2): [(one, (XM2, HH)), (Fraction(2), (XM2,))],
        (HH, XM1): [(one, (XM1, HH)), (one, (XM1,))],
        (XP1, XM2): [(one, (XM2, XP1)), (one, (XM1,))],
        (XP1, XM1): [(-one, (XM1, XP1)), (one, (HH,))],
        (XP1, HH): [(one, (HH, XP1)), (one, (XP1,))],
        (XP2, XM2): [(one, (XM2, XP2)), (-one, (HH,))],
        (XP2, XM1): [(one, (XM1, XP2)), (-one, (XP1,))],
        (XP2, HH): [(one, (HH, XP2)), (Fraction(2), (XP2,))],
        (XP2, XP1): [(one, (XP1, XP2))],
        (XM1, XM1): [(one, (XM2,))],
        (XP1, XP1): [(-one, (XP2,))],
    }


OSP_ENGINE = PBWRewriter(
    names=ASCII_NAMES,
    odd=ODD,
    shifts=(-2, -1, 0, 1, 2),
    rules=_osp_rules(),
    one=Fraction(1),
    shift=lambda coeff, k: coeff,
)


class OspElement:
    """Rational combination of ordered monomials Xm2^a Xm1^b h^c Xp1^d Xp2^e."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Tuple[int, ...], Rational]] = None):
        self.terms: Dict[Tuple[int, ...], Fraction] = {
            tuple(m): Fraction(c) for m, c in (terms or {}).items() if c != 0
        }

    @classmethod
    def generator(cls, name: Union[str, int]) -> "OspElement":
        index = ASCII_NAMES.index(name) if isinstance(name, str) else name
        return cls({OSP_ENGINE.generator(index): 1})

    @classmethod
    def scalar(cls, value: Rational) -> "OspElement":
        return cls({OSP_ENGINE.unit(): value})

    def is_zero(self) -> bool:
        return not self.terms

    def parity(self) -> int:
        parities = {OSP_ENGINE.parity(m) for m in self.terms}
        if len(parities) > 1:
            raise ValueError("element has terms of both parities")
        return parities.pop() if parities else 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = OspElement.scalar(other)
        if not isinstance(other, OspElement):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: "OspElement") -> "OspElement":
        terms = dict(self.terms)
        for m, c in _osp_operand(other).terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return OspElement(terms)

    __radd__ = __add__

    def __neg__(self) -> "OspElement":
        return OspElement({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "OspElement") -> "OspElement":
        return self + (-_osp_operand(other))

    def __mul__(self, other) -> "OspElement":
        if isinstance(other, (int, Fraction)):
            return OspElement({m: c * other for m, c in self.terms.items()})
        return OspElement(OSP_ENGINE.multiply(self.terms, other.terms))

    def __rmul__(self, other) -> "OspElement":
        return OspElement({m: c * other for m, c in self.terms.items()})

    def __repr__(self) -> str:
        return f"OspElement({self.to_text()!r})"

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for mono, c in sorted(self.terms.items()):
            word = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(ASCII_NAMES, mono) if e
            )
            pieces.append(f"({rational_to_str(c)})*{word}" if word else f"({rational_to_str(c)})")
        return " + ".join(pieces)


def _osp_operand(value) -> OspElement:
    return value if isinstance(value, OspElement) else OspElement.scalar(value)


def osp_normalize(word: Sequence[Union[str, int]], coeff: Rational = 1) -> OspElement:
    """PBW normal form of coeff * (product of the named generators)."""
    letters = [ASCII_NAMES.index(w) if isinstance(w, str) else w for w in word]
    return OspElement(OSP_ENGINE.normalize_word(letters, Fraction(coeff)))


def osp_supercommutator(a: OspElement, b: OspElement) -> OspElement:
    sign = -1 if a.parity() * b.parity() else 1
    return a * b - sign * (b * a)


def casimir_element() -> OspElement:
    """C = Xm2 Xp2 - 1/2 Xm1 Xp1 + 1/4 (h^2 - h) + 1/16."""
    return (
        osp_normalize(["Xm2", "Xp2"])
        + osp_normalize(["Xm1", "Xp1"], Fraction(-1, 2))
        + osp_normalize(["h", "h"], Fraction(1, 4))
        + osp_normalize(["h"], Fraction(-1, 4))
        + OspElement.scalar(Fraction(1, 16))
    )


# Highest-weight modules

ModuleVector = Dict[int, Fraction]


class OspModule:
    """
    V(xi) on the basis e_k = Xm1^k . v.

    A FiniteDim module is V(-l) of dimension 2l + 1; a PolynomialTruncated
    module is V(1/2) = C[x] restricted to degrees 0..max_degree, and raises
    TruncationOverflow rather than dropping terms past the window.
    """

    FINITE = "FiniteDim"
    POLYNOMIAL = "PolynomialTruncated"

    def __init__(self, kind: str, xi: Rational, size: int):
        if kind not in (self.FINITE, self.POLYNOMIAL):
            raise ValueError(f"unknown module kind {kind!r}")
        self.kind = kind
        self.xi = Fraction(xi)
        self.size = size

    @classmethod
    def finite(cls, ell: int) -> "OspModule":
        if ell < 0:
            raise ValueError("ell must be non-negative")
        return cls(cls.FINITE, -ell, 2 * ell + 1)

    @classmethod
    def polynomial(cls, max_degree: int) -> "OspModule":
        return cls(cls.POLYNOMIAL, Fraction(1, 2), max_degree + 1)

    @property
    def max_degree(self) -> int:
        return self.size - 1

    def __repr__(self) -> str:
        return f"OspModule({self.kind}, xi={self.xi}, size={self.size})"

    def raising_scalar(self, k: int) -> Fraction:
        """a_k with Xp1 . e_k = a_k e_{k-1}."""
        m, odd = divmod(k, 2)
        return self.xi + m if odd else Fraction(m)

    def _clip(self, index: int, coeff: Fraction) -> Optional[Tuple[int, Fraction]]:
        if coeff == 0:
            return None
        if index < self.size:
            return index, coeff
        if self.kind == self.FINITE:
            return None
        raise TruncationOverflow(f"degree {index} exceeds the window 0..{self.max_degree}")

    def generator_on_basis(self, g: int, k: int) -> ModuleVector:
        if g == XM1:
            target = (k + 1, Fraction(1))
        elif g == XM2:
            target = (k + 2, Fraction(1))
        elif g == HH:
            target = (k, self.xi + k)
        elif g == XP1:
            target = (k - 1, self.raising_scalar(k)) if k >= 1 else None
        else:
            target = (k - 2, -self.raising_scalar(k) * self.raising_scalar(k - 1)) if k >= 2 else None
        if target is None:
            return {}
        clipped = self._clip(*target)
        return dict([clipped]) if clipped else {}

    def apply_generator(self, g: int, v: ModuleVector) -> ModuleVector:
        result: ModuleVector = {}
        for k, c in v.items():
            for j, d in self.generator_on_basis(g, k).items():
                result[j] = result.get(j, Fraction(0)) + c * d
        return {j: c for j, c in result.items() if c != 0}


def module_action(g: OspElement, module: OspModule, v: ModuleVector) -> ModuleVector:
    """g . v, applying each monomial's letters right to left."""
    result: ModuleVector = {}
    for mono, coeff in g.terms.items():
        partial = dict(v)
        for letter in reversed(OSP_ENGINE.word(mono)):
            partial = module.apply_generator(letter, partial)
        for k, c in partial.items():
            result[k] = result.get(k, Fraction(0)) + coeff * c
    return {k: c for k, c in result.items() if c != 0}


def casimir_scalar(module: OspModule) -> Fraction:
    """The scalar by which C acts on V(xi): (xi - 1/2)^2 / 4."""
    image = module_action(casimir_element(), module, {0: Fraction(1)})
    return image.get(0, Fraction(0))


# Tensor products

TensorKey = Tuple[int, int]


class TensorModule:
    """first (x) second; by default C[x] truncated at max_degree tensored with V(-l)."""

    def __init__(self, ell: int, max_degree: int, first: Optional[OspModule] = None):
        self.ell = ell
        self.max_degree = max_degree
        self.first = first or OspModule.polynomial(max_degree)
        self.second = OspModule.finite(ell)

    @property
    def xi_sum(self) -> Fraction:
        return self.first.xi + self.second.xi

    def eigenvalue(self, key: TensorKey) -> Fraction:
        """H-eigenvalue of e_k (x) e_j: xi1 + xi2 + k + j."""
        return self.xi_sum + key[0] + key[1]

    def weight_space(self, degree: int) -> List[TensorKey]:
        return [
            (degree - j, j)
            for j in range(min(degree, self.second.size - 1) + 1)
            if degree - j < self.first.size
        ]

    def highest(self) -> "TensorVector":
        return TensorVector(self, {(0, 0): 1})

    def ghost_pair(self) -> Tuple[Fraction, Fraction]:
        """(lambda, mu) = (xi1 - xi2, xi1 + xi2 - 1)."""
        return self.first.xi - self.second.xi, self.xi_sum - 1


class TensorVector:
    __slots__ = ("module", "terms")

    def __init__(self, module: TensorModule, terms: Optional[Dict[TensorKey, Rational]] = None):
        self.module = module
        self.terms: Dict[TensorKey, Fraction] = {
            (int(k), int(j)): Fraction(c) for (k, j), c in (terms or {}).items() if c != 0
        }

    def is_zero(self) -> bool:
        return not self.terms

    def parities(self) -> set:
        return {(k + j) % 2 for k, j in self.terms}

    def degrees(self) -> List[int]:
        return sorted({k + j for k, j in self.terms})

    def scale(self, factor: Rational) -> "TensorVector":
        return TensorVector(self.module, {key: c * factor for key, c in self.terms.items()})

    def __add__(self, other: "TensorVector") -> "TensorVector":
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, Fraction(0)) + c
        return TensorVector(self.module, terms)

    def __neg__(self) -> "TensorVector":
        return self.scale(-1)

    def __sub__(self, other: "TensorVector") -> "TensorVector":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorVector):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self) -> str:
        return f"TensorVector({self.to_json()})"

    def to_json(self) -> Dict[str, str]:
        return {f"{k},{j}": rational_to_str(c) for (k, j), c in sorted(self.terms.items())}


def _one_side(w: TensorVector, g: int, left: bool, sign: int = 1) -> TensorVector:
    module = w.module
    terms: Dict[TensorKey, Fraction] = {}
    for (k, j), c in w.terms.items():
        if left:
            images = [((i, j), d) for i, d in module.first.generator_on_basis(g, k).items()]
        else:
            koszul = -1 if (g in ODD and k % 2) else 1
            images = [((k, i), koszul * d) for i, d in module.second.generator_on_basis(g, j).items()]
        for key, d in images:
            terms[key] = terms.get(key, Fraction(0)) + sign * c * d
    return TensorVector(module, terms)


def tensor_act(g: Union[str, int], w: TensorVector) -> TensorVector:
    """Delta(g) = g (x) 1 + 1 (x) g, with (1 (x) g)(u (x) v) = (-1)^{|g||u|} u (x) g v."""
    index = ASCII_NAMES.index(g) if isinstance(g, str) else g
    return _one_side(w, index, True) + _one_side(w, index, False)


def tilde_act(g: Union[str, int], w: TensorVector) -> TensorVector:
    """g (x) 1 - 1 (x) g with the same sign rule."""
    index = ASCII_NAMES.index(g) if isinstance(g, str) else g
    return _one_side(w, index, True) + _one_side(w, index, False, sign=-1)


def delta_apply(element: OspElement, w: TensorVector) -> TensorVector:
    result = TensorVector(w.module)
    for mono, coeff in element.terms.items():
        partial = w
        for letter in reversed(OSP_ENGINE.word(mono)):
            partial = tensor_act(letter, partial)
        result = result + partial.scale(coeff)
    return result


def _factor_apply(element: OspElement, w: TensorVector, left: bool) -> TensorVector:
    result = TensorVector(w.module)
    for mono, coeff in element.terms.items():
        partial = w
        for letter in reversed(OSP_ENGINE.word(mono)):
            partial = _one_side(partial, letter, left)
        result = result + partial.scale(coeff)
    return result


def casimir_tensor_apply(w: TensorVector, sign: int) -> TensorVector:
    """(C (x) 1 + sign * 1 (x) C) . w."""
    c = casimir_element()
    return _factor_apply(c, w, True) + _factor_apply(c, w, False).scale(sign)


def _lower_power(w: TensorVector, power: int) -> TensorVector:
    for _ in range(power):
        w = tensor_act(XM1, w)
    return w


def _scale_by_eigenvalue(w: TensorVector, poles: Iterable[int], value) -> TensorVector:
    terms = {}
    for key, c in w.terms.items():
        eig = w.module.eigenvalue(key)
        if eig in poles:
            raise PoleOnWeight(f"H = {eig} on component {key}")
        terms[key] = c * value(eig)
    return TensorVector(w.module, terms)


def lowering_operator_apply(w: TensorVector) -> TensorVector:
    """
    S w with S = x~(Xm1) - 1/(H-1) X(Xm1) h~ - 1/(H-1) X(Xm1)^2 x~(Xp1)
    - 2/((H-2)(H-1)) X(Xm1)^3 x~(Xp2); H acts on the result's weight.
    """
    for key in w.terms:
        eig = w.module.eigenvalue(key) + 1
        if eig in (1, 2):
            raise PoleOnWeight(f"S would evaluate its coefficients at H = {eig}")
    f1 = lambda e: 1 / (e - 1)
    f3 = lambda e: 2 / ((e - 2) * (e - 1))
    result = tilde_act(XM1, w)
    result = result - _scale_by_eigenvalue(_lower_power(tilde_act(HH, w), 1), (1,), f1)
    result = result - _scale_by_eigenvalue(_lower_power(tilde_act(XP1, w), 2), (1,), f1)
    result = result - _scale_by_eigenvalue(_lower_power(tilde_act(XP2, w), 3), (1, 2), f3)
    return result


def singular_vectors(module: TensorModule) -> List[TensorVector]:
    """S^j (1 (x) v) for j = 0..2l."""
    vectors = [module.highest()]
    for _ in range(2 * module.ell):
        vectors.append(lowering_operator_apply(vectors[-1]))
    return vectors


def is_singular(w: TensorVector) -> bool:
    return tensor_act(XP1, w).is_zero() and tensor_act(XP2, w).is_zero()


def _sympy(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def _fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _matrix(vectors: Sequence[TensorVector], keys: Sequence[TensorKey]) -> sympy.Matrix:
    return sympy.Matrix(
        len(keys), len(vectors), lambda r, c: _sympy(vectors[c].terms.get(keys[r], Fraction(0)))
    )


def _primitive_in_degree(module: TensorModule, degree: int) -> List[TensorVector]:
    """Basis of the joint kernel of X(Xp1) and X(Xp2) on one weight space."""
    keys = module.weight_space(degree)
    columns = [TensorVector(module, {key: 1}) for key in keys]
    lower1 = module.weight_space(degree - 1) if degree >= 1 else []
    lower2 = module.weight_space(degree - 2) if degree >= 2 else []
    blocks = []
    if lower1:
        blocks.append(_matrix([tensor_act(XP1, v) for v in columns], lower1))
    if lower2:
        blocks.append(_matrix([tensor_act(XP2, v) for v in columns], lower2))
    if not blocks:
        kernel = [sympy.Matrix([[1]])] if keys else []
    else:
        kernel = sympy.Matrix.vstack(*blocks).nullspace()
    return [TensorVector(module, {key: _fraction(vector[i]) for i, key in enumerate(keys)}) for vector in kernel]


def singular_vector_oracle(ell: int, max_degree: int) -> List[TensorVector]:
    """Basis of the joint kernel of X(Xp1) and X(Xp2), weight space by weight space."""
    module = TensorModule(ell, max_degree)
    found: List[TensorVector] = []
    for degree in range(max_degree + 1):
        found.extend(_primitive_in_degree(module, degree))
    return found


# The reduction algebra on primitive vectors

def extremal_projection(u: TensorVector) -> TensorVector:
    """
    The component of u in V+ along X(Xm1) V.

    Each weight space splits as V+ (+) X(Xm1) V because H - n acts invertibly;
    the projection is read off by an exact solve in that basis.
    """
    module = u.module
    result = TensorVector(module)
    for degree in u.degrees():
        if degree > module.max_degree:
            raise WindowTooSmall(f"degree {degree} is outside the window 0..{module.max_degree}")
        keys = module.weight_space(degree)
        part = TensorVector(module, {key: c for key, c in u.terms.items() if sum(key) == degree})
        primitive = _primitive_in_degree(module, degree)
        lowered = [tensor_act(XM1, TensorVector(module, {key: 1})) for key in module.weight_space(degree - 1)]
        basis = _matrix(primitive + lowered, keys)
        if basis.rows != basis.cols or basis.det() == 0:
            raise ValueError(f"V+ and X(Xm1) V do not split the weight space of degree {degree}")
        coords = basis.LUsolve(_matrix([part], keys))
        for i, p in enumerate(primitive):
            result = result + p.scale(_fraction(coords[i]))
    return result


def reduction_act(g: Union[str, int], w: TensorVector) -> TensorVector:
    """A generator of the reduction algebra on a primitive vector: P(x~_g . w)."""
    return extremal_projection(tilde_act(g, w))


def reduction_element_apply(a: AlgebraElement, w: TensorVector) -> TensorVector:
    """a . w on V+, left scalars evaluated at the H-eigenvalue of each component."""
    result = TensorVector(w.module)
    for mono, coeff in a.terms.items():
        partial = w
        for letter in reversed(mono.word()):
            partial = reduction_act(letter, partial)
        result = result + _scale_by_eigenvalue(partial, (), coeff.evaluate)
    return result


def _scalar_on(image: TensorVector, w: TensorVector, label: str) -> Fraction:
    key = next(iter(w.terms))
    scalar = image.terms.get(key, Fraction(0)) / w.terms[key]
    if image != w.scale(scalar):
        raise ValueError(f"{label} is not scalar on {w!r}")
    return scalar


@dataclass
class DecompositionReport:
    ell: int
    max_degree: int
    singular_vectors: List[TensorVector] = field(default_factory=list)
    killed: List[bool] = field(default_factory=list)
    oracle_count: int = 0
    spans_match: bool = False
    graded: List[Tuple[int, int, int]] = field(default_factory=list)

    @property
    def summands(self) -> int:
        return len(self.singular_vectors)

    @property
    def graded_match(self) -> bool:
        return all(rank == dim for _, rank, dim in self.graded)

    @property
    def ok(self) -> bool:
        return (
            all(self.killed)
            and self.spans_match
            and self.graded_match
            and self.summands == 2 * self.ell + 1
            and self.oracle_count == self.summands
        )

    def to_json(self) -> Dict[str, object]:
        return {
            "ell": self.ell,
            "max_degree": self.max_degree,
            "summands": self.summands,
            "singular_vectors": [v.to_json() for v in self.singular_vectors],
            "killed": self.killed,
            "oracle_count": self.oracle_count,
            "spans_match": self.spans_match,
            "graded_dimensions": [
                {"degree": d, "descendants": rank, "weight_space": dim} for d, rank, dim in self.graded
            ],
            "ok": self.ok,
        }


def decompose(ell: int, max_degree: int) -> DecompositionReport:
    """Verify C[x] (x) V(-l) = sum over j of U(n-) S^j (1 (x) v) inside the degree window."""
    if max_degree < 2 * ell + 1:
        raise WindowTooSmall(f"max_degree {max_degree} is below 2l + 1 = {2 * ell + 1}")
    module = TensorModule(ell, max_degree)
    report = DecompositionReport(ell, max_degree)
    report.singular_vectors = singular_vectors(module)
    report.killed = [is_singular(s) and not s.is_zero() for s in report.singular_vectors]

    oracle = singular_vector_oracle(ell, max_degree)
    report.oracle_count = len(oracle)
    match = True
    for degree in range(max_degree + 1):
        keys = module.weight_space(degree)
        ours = [s for s in report.singular_vectors if s.degrees() == [degree]]
        theirs = [o for o in oracle if o.degrees() == [degree]]
        if not ours and not theirs:
            continue
        if not ours or not theirs:
            match = False
            continue
        a = _matrix(ours, keys)
        b = _matrix(theirs, keys)
        if not (a.rank() == b.rank() == sympy.Matrix.hstack(a, b).rank()):
            match = False
    report.spans_match = match

    for degree in range(max_degree + 1):
        keys = module.weight_space(degree)
        descendants = [
            _lower_power(s, degree - j)
            for j, s in enumerate(report.singular_vectors)
            if j <= degree
        ]
        rank = _matrix(descendants, keys).rank() if descendants else 0
        report.graded.append((degree, rank, len(keys)))
    logger.info(f"decomposed C[x] (x) V(-{ell}) up to degree {max_degree}: ok={report.ok}")
    return report


def bridge_check(
    ell: int,
    max_degree: Optional[int] = None,
    first: Optional[OspModule] = None,
) -> Dict[str, Tuple[Fraction, Fraction]]:
    """
    Act with C1, C2 and Q2 on V+ = span of S^j (1 (x) v), each generator of the
    reduction algebra acting through the extremal projection, and compare with
    the ghost scalars of (lambda, mu). Also compare 8(c(xi1) -/+ c(xi2)), read
    off C (x) 1 -/+ 1 (x) C, with the C1 and C2 scalars.

    Q2 acts by (-1)^j q on S^j (1 (x) v); the reported value is q.

    Returns:
        {"c1", "c2", "q2", "casimir-", "casimir+"} -> (computed, expected)
    """
    module = TensorModule(ell, max_degree or 2 * ell + 2, first=first)
    lam, mu = module.ghost_pair()
    expected = ghost_scalars(lam, mu)
    basis = singular_vectors(module)
    for j, s in enumerate(basis[:-1]):
        if reduction_act(XM1, s) != basis[j + 1]:
            raise ValueError(f"S and the projected Xm1 disagree on S^{j} (1 (x) v)")

    elements = (("c1", element_c1(), expected[0]), ("c2", element_c2(), expected[1]), ("q2", element_q2(), expected[2]))
    values: Dict[str, Tuple[Fraction, Fraction]] = {}
    for label, element, target in elements:
        scalars = set()
        for j, s in enumerate(basis):
            scalar = _scalar_on(reduction_element_apply(element, s), s, label)
            scalars.add(scalar * (-1) ** j if label == "q2" else scalar)
        if len(scalars) != 1:
            raise ValueError(f"{label} takes several values on V+: {sorted(scalars)}")
        values[label] = (scalars.pop(), target)

    for label, sign, target in (("casimir-", -1, expected[0]), ("casimir+", 1, expected[1])):
        scalars = {_scalar_on(casimir_tensor_apply(s, sign), s, label) for s in basis}
        if len(scalars) != 1:
            raise ValueError(f"the tensor Casimir {label} takes several values on V+")
        values[label] = (8 * scalars.pop(), target)
    return values


if __name__ == "__main__":
    report = decompose(1, 14)
    print(f"l=1: {report.summands} summands, ok={report.ok}")
    print("bridge:", bridge_check(1))
