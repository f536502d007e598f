#!/usr/bin/env python3
"""
Memoized PBW rewriting engine for algebras with five ordered generators.

A monomial is an exponent tuple (one entry per generator, in normal order).
A rule table maps each out-of-order pair (y, g) with y > g, and each odd
square (g, g), to a list of (coefficient, word) pairs. Every word on a right
hand side has length at most two, and its last letter ranks strictly above g.
Multiplying a normal monomial by one generator therefore recurses on strictly
smaller data, which is what the memo table relies on.

Coefficients sit on the left. A generator of shift k moves a coefficient
f(H) from its right to its left as f(H + k); the engine receives that rule as
the `shift` callable so the same code serves the reduction algebra (scalars
in R) and U(osp(1|2)) (rational scalars, trivial shift).
"""

import logging
from typing import Any, Callable, Dict, Hashable, Iterable, List, Sequence, Tuple

from scalar_ring import DraError

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger("dra_rewriting")

Exponents = Tuple[int, ...]
Word = Tuple[int, ...]
Rule = List[Tuple[Any, Word]]
Terms = Dict[Exponents, Any]

DEFAULT_FUEL = 1_000_000


class RewritingFuelExhausted(DraError, RuntimeError):
    """A single product needed more rule applications than the fuel allows."""

    def __init__(self, fuel: int, left: Exponents, right: Exponents):
        super().__init__(f"rewriting {left} * {right} exceeded {fuel} rule applications")
        self.fuel = fuel
        self.left = left
        self.right = right


class PBWRewriter:
    """Normal-form multiplication driven by an oriented rule table."""

    def __init__(
        self,
        names: Sequence[str],
        odd: Iterable[int],
        shifts: Sequence[int],
        rules: Dict[Tuple[int, int], Rule],
        one: Any,
        shift: Callable[[Any, int], Any],
        monomial: Callable[[Iterable[int]], Exponents] = tuple,
        fuel: int = DEFAULT_FUEL,
    ):
        self.names = tuple(names)
        self.odd = frozenset(odd)
        self.shifts = tuple(shifts)
        self.rules = rules
        self.one = one
        self.shift = shift
        self.monomial = monomial
        self.fuel = fuel
        self._generator_memo: Dict[Tuple[Exponents, int], Terms] = {}
        self._product_memo: Dict[Tuple[Exponents, Exponents], Terms] = {}
        self._spent = 0
        self._validate_rules()

    def _validate_rules(self) -> None:
        size = len(self.names)
        for y in range(size):
            for g in range(y + 1):
                needed = y > g or (y == g and g in self.odd)
                if needed and (y, g) not in self.rules:
                    raise ValueError(f"missing rewrite rule for {self.names[y]}*{self.names[g]}")
        for (y, g), rule in self.rules.items():
            for _, word in rule:
                if len(word) > 2 or (word and word[-1] <= g and len(word) == 2):
                    raise ValueError(f"rule for {self.names[y]}*{self.names[g]} does not decrease")

    # Monomial helpers

    def unit(self) -> Exponents:
        return self.monomial([0] * len(self.names))

    def weight(self, exponents: Exponents) -> int:
        return sum(e * k for e, k in zip(exponents, self.shifts))

    def parity(self, exponents: Exponents) -> int:
        return sum(exponents[i] for i in self.odd) % 2

    def word(self, exponents: Exponents) -> Word:
        return tuple(i for i, e in enumerate(exponents) for _ in range(e))

    def generator(self, index: int) -> Exponents:
        exps = [0] * len(self.names)
        exps[index] = 1
        return self.monomial(exps)

    # Rewriting

    def _spend(self, left: Exponents, right: Exponents) -> None:
        self._spent += 1
        if self._spent > self.fuel:
            raise RewritingFuelExhausted(self.fuel, left, right)

    def times_generator(self, exponents: Exponents, g: int) -> Terms:
        """Normal form of (normal monomial) * (generator g)."""
        key = (exponents, g)
        cached = self._generator_memo.get(key)
        if cached is not None:
            return cached
        last = max((i for i, e in enumerate(exponents) if e), default=-1)
        if last < g or (last == g and g not in self.odd):
            grown = list(exponents)
            grown[g] += 1
            result: Terms = {self.monomial(grown): self.one}
        else:
            self._spend(exponents, self.generator(g))
            prefix = list(exponents)
            prefix[last] -= 1
            prefix_key = self.monomial(prefix)
            offset = self.weight(prefix_key)
            result = {}
            for coeff, word in self.rules[(last, g)]:
                moved = self.shift(coeff, offset)
                partial: Terms = {prefix_key: self.one}
                for letter in word:
                    partial = self.times_generator_terms(partial, letter)
                for mono, c in partial.items():
                    _accumulate(result, mono, moved * c)
        self._generator_memo[key] = result
        return result

    def times_generator_terms(self, terms: Terms, g: int) -> Terms:
        result: Terms = {}
        for mono, c in terms.items():
            for product, d in self.times_generator(mono, g).items():
                _accumulate(result, product, c * d)
        return result

    def multiply_monomials(self, left: Exponents, right: Exponents) -> Terms:
        key = (left, right)
        cached = self._product_memo.get(key)
        if cached is not None:
            return cached
        partial: Terms = {left: self.one}
        for letter in self.word(right):
            partial = self.times_generator_terms(partial, letter)
        self._product_memo[key] = partial
        return partial

    def multiply(self, left: Terms, right: Terms) -> Terms:
        """Product of two left-coefficient combinations of normal monomials."""
        self._spent = 0
        result: Terms = {}
        for m1, c1 in left.items():
            offset = self.weight(m1)
            for m2, c2 in right.items():
                moved = c1 * self.shift(c2, offset)
                if not moved:
                    continue
                for mono, c in self.multiply_monomials(m1, m2).items():
                    _accumulate(result, mono, moved * c)
        logger.debug(f"multiplied {len(left)} x {len(right)} terms, {self._spent} rule applications")
        return result

    def normalize_word(self, word: Sequence[int], coeff: Any) -> Terms:
        """Normal form of coeff * (generator word)."""
        self._spent = 0
        partial: Terms = {self.unit(): coeff}
        for letter in word:
            partial = self.times_generator_terms(partial, letter)
        return partial

    def cache_size(self) -> int:
        return len(self._generator_memo) + len(self._product_memo)

    def clear_cache(self) -> None:
        self._generator_memo.clear()
        self._product_memo.clear()


def _accumulate(terms: Terms, mono: Hashable, value: Any) -> None:
    if not value:
        return
    total = terms.get(mono)
    total = value if total is None else total + value
    if total:
        terms[mono] = total
    else:
        terms.pop(mono, None)
