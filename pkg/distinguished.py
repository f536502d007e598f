#!/usr/bin/env python3
"""
Distinguished elements of the reduction algebra and the F_n family.

C1 and C2 are central, Q2 is anti-central (its square is C2^2 - C1^2).
F_n(H, hhat) is the scalar with

    Xp1 * Xm1^n = F_n(H, hhat) * Xm1^(n-1)   modulo A*Xp1 + A*Xp2,

available three independent ways: the closed form, the difference
recursion, and a brute-force run of the rewriting engine.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

from algebra_core import AlgebraElement, diamond, hat_generator, left_scale
from scalar_ring import (
    DraError,
    DynamicalScalar,
    DynPolynomial,
    H,
    ONE,
    ZERO,
    scalar_invert,
)

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger("dra_distinguished")

inv = DynamicalScalar.reciprocal_of_linear


class ShapeMismatch(DraError, AssertionError):
    """A residue did not have the expected PBW shape."""


@lru_cache(maxsize=None)
def element_c1() -> AlgebraElement:
    """C1 = 2(H - 1) h."""
    return AlgebraElement.monomial((0, 0, 1, 0, 0), 2 * DynamicalScalar.linear(1))


@lru_cache(maxsize=None)
def element_c2() -> AlgebraElement:
    return AlgebraElement({
        (1, 0, 0, 0, 1): 4 + 4 * inv(2),
        (0, 1, 0, 1, 0): -(2 - inv(1)),
        (0, 0, 2, 0, 0): ONE,
        (0, 0, 0, 0, 0): DynamicalScalar.linear(1) ** 2,
    })


@lru_cache(maxsize=None)
def element_q2() -> AlgebraElement:
    """The anti-central Scasimir analogue."""
    return AlgebraElement({
        (1, 0, 0, 0, 1): 4 * DynamicalScalar.linear(1) * inv(2),
        (0, 1, 0, 1, 0): -(2 * DynamicalScalar.linear(2) + inv(1)),
        (0, 0, 2, 0, 0): -ONE,
        (0, 0, 0, 0, 0): DynamicalScalar.linear(1) ** 2,
    })


def element_hhat() -> AlgebraElement:
    return hat_generator("h")


NAMED_ELEMENTS = {
    "c1": element_c1,
    "c2": element_c2,
    "q2": element_q2,
    "hhat": element_hhat,
    "hat-Xm2": lambda: hat_generator("Xm2"),
    "hat-Xm1": lambda: hat_generator("Xm1"),
    "hat-Xp1": lambda: hat_generator("Xp1"),
    "hat-Xp2": lambda: hat_generator("Xp2"),
}


@dataclass(frozen=True)
class FnFamily:
    """F_n as a polynomial in hhat over R (bar normalization)."""

    n: int
    value: DynPolynomial

    @property
    def c0(self) -> DynamicalScalar:
        return self.value.coefficient(0)

    @property
    def c1(self) -> DynamicalScalar:
        return self.value.coefficient(1)

    @property
    def c2(self) -> DynamicalScalar:
        return self.value.coefficient(2)

    def hat(self) -> DynPolynomial:
        """The hat normalization H (H - 1)^2 F_n."""
        return self.value.scale(H * DynamicalScalar.linear(1) ** 2)

    def at_shift(self, k: int) -> DynPolynomial:
        """F_n(H + k, hhat)."""
        return self.value.shift_coefficients(k)


def _bar_factor() -> DynamicalScalar:
    """1 / (H (H - 1)^2)."""
    return inv(0) * inv(1, 2)


def c2_closed(n: int) -> DynamicalScalar:
    if n % 2 == 0:
        return _bar_factor() * (H * H * inv(n, 2) - 1)
    return -_bar_factor()


def c0_closed(n: int) -> DynamicalScalar:
    if n % 2 == 0:
        return ZERO
    return H * DynamicalScalar.linear(n) ** 2 * inv(1, 2)


def f_n_hat_closed(n: int) -> DynPolynomial:
    """Hat-normalized closed form."""
    if n % 2 == 0:
        return DynPolynomial([0, 0, H * H * inv(n, 2) - 1])
    return DynPolynomial([H * H * DynamicalScalar.linear(n) ** 2, 0, -1])


def f_n_closed(n: int) -> FnFamily:
    if n < 0:
        raise ValueError("n must be non-negative")
    return FnFamily(n, f_n_hat_closed(n).scale(_bar_factor()))


@lru_cache(maxsize=None)
def _recursive_table(n: int) -> Tuple[DynPolynomial, ...]:
    first = DynPolynomial([H, 0, -_bar_factor()])
    table: List[DynPolynomial] = [DynPolynomial([]), first]
    ratio = -(H * inv(1))
    coupling = -(H * DynamicalScalar.linear(2) * DynamicalScalar.linear(3) ** 2 * inv(1))
    tail = DynPolynomial([H, 0, -_bar_factor()])
    for m in range(1, n):
        previous = table[m].shift_coefficients(-1)
        older = table[m - 1].shift_coefficients(-2)
        product = (previous * older).divide_by_indeterminate(2)
        table.append(previous.scale(ratio) + product.scale(coupling) + tail)
    return tuple(table[: n + 1])


def f_n_recursive(n: int) -> FnFamily:
    """F_n by the difference recursion in H; division by hhat^2 must be exact."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return FnFamily(0, DynPolynomial([]))
    return FnFamily(n, _recursive_table(n)[n])


def reduce_mod_left_ideal(a: AlgebraElement, include_hhat: bool) -> AlgebraElement:
    """Drop terms ending in Xp1 or Xp2; with include_hhat also those containing h."""
    return AlgebraElement({
        mono: coeff
        for mono, coeff in a.terms.items()
        if mono.s == 0 and mono.t == 0 and not (include_hhat and mono.r > 0)
    })


@lru_cache(maxsize=None)
def xm1_power(n: int) -> AlgebraElement:
    if n == 0:
        return AlgebraElement.scalar(1)
    return diamond(xm1_power(n - 1), AlgebraElement.generator("Xm1"))


@lru_cache(maxsize=None)
def f_n_oracle(n: int) -> FnFamily:
    """Recover F_n from the engine: normalize Xp1 * Xm1^n and peel off Xm1^(n-1)."""
    if n < 1:
        raise ValueError("the oracle needs n >= 1")
    residue = reduce_mod_left_ideal(diamond(AlgebraElement.generator("Xp1"), xm1_power(n)), False)
    base = xm1_power(n - 1)
    if len(base.terms) != 1:
        raise ShapeMismatch(f"Xm1^{n - 1} is not a single PBW term")
    ((base_mono, _),) = base.terms.items()
    top = max((mono.r for mono in residue.terms), default=base_mono.r)
    coefficients: List[DynamicalScalar] = []
    matched = set()
    hhat = element_hhat()
    for i in range(top - base_mono.r + 1):
        probe = diamond(hhat ** i, base)
        if len(probe.terms) != 1:
            raise ShapeMismatch(f"hhat^{i} * Xm1^{n - 1} is not a single PBW term")
        ((mono, scale),) = probe.terms.items()
        matched.add(mono)
        coefficients.append(residue.coefficient(mono) * scalar_invert(scale))
    leftover = set(residue.terms) - matched
    if leftover:
        raise ShapeMismatch(
            f"Xp1 * Xm1^{n} leaves terms {sorted(tuple(m) for m in leftover)} outside R[hhat] * Xm1^{n - 1}"
        )
    logger.debug(f"oracle F_{n}: {len(residue.terms)} residue terms")
    return FnFamily(n, DynPolynomial(coefficients))


def hat_xm2_congruence(n: int) -> Tuple[AlgebraElement, AlgebraElement]:
    """
    Both sides of hat(Xp2) * hat(Xm2)^n = -n H^2 (H - n + 1) hat(Xm2)^(n-1)
    modulo A*hat(Xp1) + A*hat(Xp2) + A*hhat.

    Returns:
        (reduced left side, right side)
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    xm2 = hat_generator("Xm2")
    left = reduce_mod_left_ideal(diamond(hat_generator("Xp2"), xm2 ** n), True)
    if n == 0:
        return left, AlgebraElement.zero()
    factor = -n * H * H * DynamicalScalar.linear(n - 1)
    return left, left_scale(factor, xm2 ** (n - 1))


def radical_scalar(n: int, lambda_hat: DynamicalScalar) -> DynamicalScalar:
    """F_n(H + n - 1, lambda_hat), whose vanishing marks the Shapovalov radical."""
    return f_n_closed(n).at_shift(n - 1).substitute(lambda_hat)


if __name__ == "__main__":
    for n in range(1, 5):
        print(f"F_{n} = {f_n_closed(n).value}")
