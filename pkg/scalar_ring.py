#!/usr/bin/env python3
"""
Exact scalar arithmetic for the diagonal reduction algebra.

Three layers live here:

- RatPolynomial: polynomials in H over the rationals.
- DynamicalScalar: elements of R, the polynomial ring in H localized at every
  integer shift (H - n). Denominators are kept as factored multisets so that
  membership in R is structural.
- DynPolynomial: polynomials over R in one central indeterminate, either h or
  hhat = (H - 1) h.

Every value is immutable and every operation returns a reduced representative,
so structural equality is mathematical equality.
"""

import logging
import math
from fractions import Fraction
from functools import reduce
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import sympy

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger("dra_scalar_ring")

Rational = Union[int, Fraction]


class DraError(Exception):
    """Base class for every error raised by the dra library."""


class NotAUnit(DraError, ArithmeticError):
    """The scalar has a numerator root away from the integers."""


class ScalarZeroDivision(DraError, ZeroDivisionError):
    """Inversion or division by the zero scalar."""


class PoleAtPoint(DraError, ArithmeticError):
    """Evaluation at an integer where the scalar has a pole."""

    def __init__(self, point: Rational):
        super().__init__(f"scalar has a pole at H = {point}")
        self.point = point


class InexactDivision(DraError, ArithmeticError):
    """A division that must be exact left a remainder."""


def _as_fraction(value: Rational) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class RatPolynomial:
    """Polynomial in H with exact rational coefficients, ascending order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational] = ()):
        values = [_as_fraction(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(values)

    @classmethod
    def constant(cls, value: Rational) -> "RatPolynomial":
        return cls([value])

    @classmethod
    def linear_factor(cls, root: int) -> "RatPolynomial":
        """The factor H - root."""
        return cls([-root, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RatPolynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RatPolynomial({[str(c) for c in self.coeffs]})"

    def __add__(self, other: "RatPolynomial") -> "RatPolynomial":
        other = _coerce_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return RatPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "RatPolynomial":
        return RatPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "RatPolynomial") -> "RatPolynomial":
        return self + (-_coerce_poly(other))

    def __rsub__(self, other: "RatPolynomial") -> "RatPolynomial":
        return _coerce_poly(other) - self

    def __mul__(self, other: "RatPolynomial") -> "RatPolynomial":
        other = _coerce_poly(other)
        if self.is_zero() or other.is_zero():
            return RatPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "RatPolynomial":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = RatPolynomial.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def divmod(self, divisor: "RatPolynomial") -> Tuple["RatPolynomial", "RatPolynomial"]:
        """Euclidean division; returns (quotient, remainder)."""
        if divisor.is_zero():
            raise ScalarZeroDivision("polynomial division by zero")
        remainder = list(self.coeffs)
        quotient = [Fraction(0)] * max(len(remainder) - divisor.degree, 1)
        lead = divisor.leading()
        while len(remainder) - 1 >= divisor.degree and any(remainder):
            shift = len(remainder) - 1 - divisor.degree
            factor = remainder[-1] / lead
            quotient[shift] = factor
            for i, c in enumerate(divisor.coeffs):
                remainder[shift + i] -= factor * c
            remainder.pop()
            while remainder and remainder[-1] == 0:
                remainder.pop()
        return RatPolynomial(quotient), RatPolynomial(remainder)

    def exact_div(self, divisor: "RatPolynomial") -> "RatPolynomial":
        quotient, remainder = self.divmod(divisor)
        if remainder:
            raise InexactDivision(f"{self} is not divisible by {divisor}")
        return quotient

    def divide_root(self, root: int) -> "RatPolynomial":
        """Synthetic division by (H - root); the root must be exact."""
        carry = Fraction(0)
        out: List[Fraction] = []
        for c in reversed(self.coeffs):
            carry = carry * root + c
            out.append(carry)
        if out and out[-1] != 0:
            raise InexactDivision(f"H = {root} is not a root of {self}")
        out.pop()
        return RatPolynomial(reversed(out))

    def evaluate(self, point: Rational) -> Fraction:
        point = _as_fraction(point)
        value = Fraction(0)
        for c in reversed(self.coeffs):
            value = value * point + c
        return value

    def shift(self, k: int) -> "RatPolynomial":
        """The polynomial p(H + k)."""
        if k == 0 or self.degree < 1:
            return self
        step = RatPolynomial([k, 1])
        result = RatPolynomial()
        for c in reversed(self.coeffs):
            result = result * step + RatPolynomial.constant(c)
        return result

    def integer_roots(self) -> Dict[int, int]:
        """Integer roots with multiplicity, by the rational root test."""
        roots: Dict[int, int] = {}
        poly = self
        if poly.is_zero():
            raise ValueError("the zero polynomial has every root")
        while poly.degree >= 1 and poly.coeffs[0] == 0:
            roots[0] = roots.get(0, 0) + 1
            poly = poly.divide_root(0)
        if poly.degree < 1:
            return roots
        scale = reduce(lambda acc, c: acc * c.denominator // math.gcd(acc, c.denominator), poly.coeffs, 1)
        constant = abs(int(poly.coeffs[0] * scale))
        for divisor in sympy.divisors(constant):
            for candidate in (divisor, -divisor):
                while poly.degree >= 1 and poly.evaluate(candidate) == 0:
                    roots[candidate] = roots.get(candidate, 0) + 1
                    poly = poly.divide_root(candidate)
        return roots

    def to_text(self, variable: str = "H") -> str:
        if self.is_zero():
            return "0"
        parts: List[str] = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                monomial = variable if power == 1 else f"{variable}^{power}"
                body = monomial if magnitude == 1 else f"{magnitude}*{monomial}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def term_count(self) -> int:
        return sum(1 for c in self.coeffs if c != 0)

    def to_json(self) -> List[List[int]]:
        return [[c.numerator, c.denominator] for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[int]]) -> "RatPolynomial":
        return cls(Fraction(int(a), int(b)) for a, b in data)

    def __str__(self) -> str:
        return self.to_text()


def _coerce_poly(value) -> RatPolynomial:
    if isinstance(value, RatPolynomial):
        return value
    return RatPolynomial.constant(value)


def _factor_text(root: int, multiplicity: int) -> str:
    if root == 0:
        base = "H"
    elif root > 0:
        base = f"(H-{root})"
    else:
        base = f"(H+{-root})"
    return base if multiplicity == 1 else f"{base}^{multiplicity}"


class DynamicalScalar:
    """
    Element of R = Q[H][(H - n)^-1 | n integer].

    Stored as num / prod (H - n)^mult with num coprime to every listed factor.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: RatPolynomial, den: Optional[Dict[int, int]] = None):
        num = _coerce_poly(num)
        factors: Dict[int, int] = {}
        if not num.is_zero():
            for root, mult in (den or {}).items():
                if mult < 0:
                    raise ValueError("denominator multiplicities must be positive")
                while mult > 0 and num.evaluate(root) == 0:
                    num = num.divide_root(root)
                    mult -= 1
                if mult:
                    factors[int(root)] = mult
        self.num: RatPolynomial = num
        self.den: Tuple[Tuple[int, int], ...] = tuple(sorted(factors.items()))
        self._hash = hash((self.num.coeffs, self.den))

    # Constructors

    @classmethod
    def constant(cls, value: Rational) -> "DynamicalScalar":
        return cls(RatPolynomial.constant(value))

    @classmethod
    def zero(cls) -> "DynamicalScalar":
        return cls(RatPolynomial())

    @classmethod
    def one(cls) -> "DynamicalScalar":
        return cls.constant(1)

    @classmethod
    def H(cls) -> "DynamicalScalar":
        return cls(RatPolynomial([0, 1]))

    @classmethod
    def linear(cls, root: int) -> "DynamicalScalar":
        """The unit H - root."""
        return cls(RatPolynomial.linear_factor(root))

    @classmethod
    def reciprocal_of_linear(cls, root: int, multiplicity: int = 1) -> "DynamicalScalar":
        return cls(RatPolynomial.constant(1), {root: multiplicity})

    @classmethod
    def coerce(cls, value) -> "DynamicalScalar":
        if isinstance(value, DynamicalScalar):
            return value
        if isinstance(value, RatPolynomial):
            return cls(value)
        return cls.constant(value)

    # Queries

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_polynomial(self) -> bool:
        return not self.den

    def is_constant(self) -> bool:
        return not self.den and self.num.degree < 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.num.coeffs[0] if self.num.coeffs else Fraction(0)

    def denominator_polynomial(self) -> RatPolynomial:
        result = RatPolynomial.constant(1)
        for root, mult in self.den:
            result = result * RatPolynomial.linear_factor(root) ** mult
        return result

    def poles(self) -> List[int]:
        return [root for root, _ in self.den]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, RatPolynomial)):
            other = DynamicalScalar.coerce(other)
        if not isinstance(other, DynamicalScalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"DynamicalScalar({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    # Arithmetic

    def __add__(self, other) -> "DynamicalScalar":
        other = _scalar_operand(other)
        if other is None:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        mine = dict(self.den)
        theirs = dict(other.den)
        common = {root: max(mine.get(root, 0), theirs.get(root, 0)) for root in set(mine) | set(theirs)}
        left = self.num
        right = other.num
        for root, mult in common.items():
            factor = RatPolynomial.linear_factor(root)
            if mult > mine.get(root, 0):
                left = left * factor ** (mult - mine.get(root, 0))
            if mult > theirs.get(root, 0):
                right = right * factor ** (mult - theirs.get(root, 0))
        return DynamicalScalar(left + right, common)

    __radd__ = __add__

    def __neg__(self) -> "DynamicalScalar":
        return DynamicalScalar(-self.num, dict(self.den))

    def __sub__(self, other) -> "DynamicalScalar":
        other = _scalar_operand(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "DynamicalScalar":
        other = _scalar_operand(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "DynamicalScalar":
        other = _scalar_operand(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return DynamicalScalar.zero()
        den = dict(self.den)
        for root, mult in other.den:
            den[root] = den.get(root, 0) + mult
        return DynamicalScalar(self.num * other.num, den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "DynamicalScalar":
        other = _scalar_operand(other)
        if other is None:
            return NotImplemented
        return self * scalar_invert(other)

    def __rtruediv__(self, other) -> "DynamicalScalar":
        other = _scalar_operand(other)
        if other is None:
            return NotImplemented
        return other * scalar_invert(self)

    def __pow__(self, exponent: int) -> "DynamicalScalar":
        if exponent < 0:
            return scalar_invert(self) ** (-exponent)
        result = DynamicalScalar.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, k: int) -> "DynamicalScalar":
        return scalar_shift(self, k)

    def evaluate(self, point: Rational) -> Fraction:
        return scalar_eval(self, point)

    # Rendering

    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        numerator = self.num.to_text()
        if not self.den:
            return numerator
        if self.num.term_count() > 1:
            numerator = f"({numerator})"
        factors = [_factor_text(root, mult) for root, mult in self.den]
        denominator = factors[0] if len(factors) == 1 else "(" + "*".join(factors) + ")"
        return f"{numerator}/{denominator}"

    def to_json(self) -> Dict[str, List[List[int]]]:
        return {"num": self.num.to_json(), "den": [[root, mult] for root, mult in self.den]}

    @classmethod
    def from_json(cls, data: Dict[str, Sequence]) -> "DynamicalScalar":
        num = RatPolynomial.from_json(data.get("num", []))
        den = {int(root): int(mult) for root, mult in data.get("den", [])}
        return cls(num, den)


ScalarLike = Union[DynamicalScalar, RatPolynomial, int, Fraction]


def _scalar_operand(value) -> Optional[DynamicalScalar]:
    if isinstance(value, (DynamicalScalar, RatPolynomial, int, Fraction)):
        return DynamicalScalar.coerce(value)
    return None


def scalar_add(a: ScalarLike, b: ScalarLike) -> DynamicalScalar:
    return DynamicalScalar.coerce(a) + DynamicalScalar.coerce(b)


def scalar_mul(a: ScalarLike, b: ScalarLike) -> DynamicalScalar:
    return DynamicalScalar.coerce(a) * DynamicalScalar.coerce(b)


def scalar_shift(f: ScalarLike, k: int) -> DynamicalScalar:
    """Return f(H + k). A factor (H - n) becomes (H - (n - k))."""
    f = DynamicalScalar.coerce(f)
    if k == 0 or f.is_zero():
        return f
    return DynamicalScalar(f.num.shift(k), {root - k: mult for root, mult in f.den})


def scalar_invert(f: ScalarLike) -> DynamicalScalar:
    """Inverse in R; only constants times products of (H - n) are units."""
    f = DynamicalScalar.coerce(f)
    if f.is_zero():
        raise ScalarZeroDivision("the zero scalar has no inverse")
    roots = f.num.integer_roots() if f.num.degree >= 1 else {}
    remaining = f.num
    for root, mult in roots.items():
        for _ in range(mult):
            remaining = remaining.divide_root(root)
    if remaining.degree >= 1:
        raise NotAUnit(f"{f} is not invertible in R: numerator factor {remaining} has no integer roots")
    return DynamicalScalar(f.denominator_polynomial() * RatPolynomial.constant(1 / remaining.leading()), roots)


def scalar_eval(f: ScalarLike, point: Rational) -> Fraction:
    f = DynamicalScalar.coerce(f)
    point = _as_fraction(point)
    value = f.num.evaluate(point)
    for root, mult in f.den:
        if point == root:
            raise PoleAtPoint(point)
        value /= (point - root) ** mult
    return value


class DynPolynomial:
    """
    Polynomial over R in a central indeterminate.

    The tag is "h" or "hhat"; the two are related by hhat = (H - 1) h.
    """

    TAGS = ("h", "hhat")

    __slots__ = ("tag", "coeffs")

    def __init__(self, coeffs: Iterable[ScalarLike] = (), tag: str = "hhat"):
        if tag not in self.TAGS:
            raise ValueError(f"unknown indeterminate tag {tag!r}")
        values = [DynamicalScalar.coerce(c) for c in coeffs]
        while values and values[-1].is_zero():
            values.pop()
        self.tag = tag
        self.coeffs: Tuple[DynamicalScalar, ...] = tuple(values)

    @classmethod
    def indeterminate(cls, tag: str = "hhat") -> "DynPolynomial":
        return cls([0, 1], tag)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, power: int) -> DynamicalScalar:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return DynamicalScalar.zero()

    def _check_tag(self, other: "DynPolynomial") -> None:
        if other.tag != self.tag:
            raise ValueError(f"indeterminate mismatch: {self.tag} vs {other.tag}")

    def _coerce(self, other) -> "DynPolynomial":
        if isinstance(other, DynPolynomial):
            self._check_tag(other)
            return other
        return DynPolynomial([DynamicalScalar.coerce(other)], self.tag)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DynPolynomial):
            return NotImplemented
        return self.tag == other.tag and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.tag, self.coeffs))

    def __add__(self, other) -> "DynPolynomial":
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return DynPolynomial((self.coefficient(i) + other.coefficient(i) for i in range(n)), self.tag)

    __radd__ = __add__

    def __neg__(self) -> "DynPolynomial":
        return DynPolynomial((-c for c in self.coeffs), self.tag)

    def __sub__(self, other) -> "DynPolynomial":
        return self + (-self._coerce(other))

    def __mul__(self, other) -> "DynPolynomial":
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return DynPolynomial([], self.tag)
        out = [DynamicalScalar.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return DynPolynomial(out, self.tag)

    __rmul__ = __mul__

    def scale(self, factor: ScalarLike) -> "DynPolynomial":
        factor = DynamicalScalar.coerce(factor)
        return DynPolynomial((factor * c for c in self.coeffs), self.tag)

    def shift_coefficients(self, k: int) -> "DynPolynomial":
        """Apply H -> H + k to every coefficient; the indeterminate is untouched."""
        return DynPolynomial((scalar_shift(c, k) for c in self.coeffs), self.tag)

    def divide_by_indeterminate(self, power: int) -> "DynPolynomial":
        if any(not c.is_zero() for c in self.coeffs[:power]):
            raise InexactDivision(f"{self} is not divisible by {self.tag}^{power}")
        return DynPolynomial(self.coeffs[power:], self.tag)

    def to_tag(self, tag: str) -> "DynPolynomial":
        """Rewrite through hhat = (H - 1) h."""
        if tag == self.tag:
            return self
        if tag not in self.TAGS:
            raise ValueError(f"unknown indeterminate tag {tag!r}")
        unit = DynamicalScalar.linear(1)
        factor = unit if tag == "h" else scalar_invert(unit)
        return DynPolynomial((c * factor ** i for i, c in enumerate(self.coeffs)), tag)

    def substitute(self, value: ScalarLike) -> DynamicalScalar:
        return dynpoly_substitute(self, value)

    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c.is_zero():
                continue
            if power == 0:
                parts.append(f"({c})")
            else:
                variable = self.tag if power == 1 else f"{self.tag}^{power}"
                parts.append(variable if c == 1 else f"({c})*{variable}")
        return " + ".join(parts)

    def to_json(self) -> Dict[str, object]:
        return {"tag": self.tag, "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: Dict[str, object]) -> "DynPolynomial":
        return cls((DynamicalScalar.from_json(c) for c in data["coeffs"]), data.get("tag", "hhat"))

    def __repr__(self) -> str:
        return f"DynPolynomial({self.to_text()!r}, tag={self.tag!r})"

    def __str__(self) -> str:
        return self.to_text()


def dynpoly_substitute(poly: DynPolynomial, value: ScalarLike) -> DynamicalScalar:
    """Horner evaluation of poly with its indeterminate replaced by value."""
    value = DynamicalScalar.coerce(value)
    result = DynamicalScalar.zero()
    for c in reversed(poly.coeffs):
        result = result * value + c
    return result


H = DynamicalScalar.H()
ONE = DynamicalScalar.one()
ZERO = DynamicalScalar.zero()


if __name__ == "__main__":
    a = DynamicalScalar.reciprocal_of_linear(1)
    b = DynamicalScalar.reciprocal_of_linear(2)
    print(f"1/(H-1) + 1/(H-2) = {a + b}")
    print(f"invert(H^2 - 3H + 2) = {scalar_invert(H * H - 3 * H + 2)}")
    print(f"shift(1/(H-1), 1) = {scalar_shift(a, 1)}")
