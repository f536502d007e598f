#!/usr/bin/env python3
"""
Parser for reduction-algebra elements written as text.

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | power
    power  := atom ('^' nat)?
    atom   := number | 'H' | 'Xm2' | 'Xm1' | 'h' | 'Xp1' | 'Xp2' | '(' expr ')'

'*' is the diamond product. '/' needs a scalar divisor that is a unit of R.
"""

import logging
import re
from dataclasses import dataclass
from typing import List, Optional, Tuple

from algebra_core import GENERATORS, AlgebraElement, diamond
from scalar_ring import DraError, H, scalar_invert

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger("dra_expression_parser")

OPERATORS = "+-*/^()"


class ExpressionSyntaxError(DraError, ValueError):
    """Malformed expression text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownSymbol(ExpressionSyntaxError):
    def __init__(self, symbol: str, position: int):
        super().__init__(f"unknown symbol {symbol!r}", position)
        self.symbol = symbol


@dataclass(frozen=True)
class Token:
    type: str
    value: Optional[str]
    position: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch in OPERATORS:
            tokens.append(Token(ch, None, pos))
            pos += 1
            continue
        match = re.match(r"[0-9]+", text[pos:])
        if match:
            tokens.append(Token("number", match.group(), pos))
            pos += match.end()
            continue
        match = re.match(r"[_a-zA-Z][_a-zA-Z0-9]*", text[pos:])
        if match:
            tokens.append(Token("identifier", match.group(), pos))
            pos += match.end()
            continue
        raise ExpressionSyntaxError(f"unexpected character {ch!r}", pos)
    tokens.append(Token("end", None, len(text)))
    return tokens


def _peek(tokens: List[Token]) -> Token:
    return tokens[0]


def _parse_atom(tokens: List[Token]) -> Tuple[AlgebraElement, List[Token]]:
    t = tokens.pop(0)
    if t.type == "number":
        return AlgebraElement.scalar(int(t.value)), tokens
    if t.type == "identifier":
        if t.value == "H":
            return AlgebraElement.scalar(H), tokens
        if t.value in GENERATORS:
            return AlgebraElement.generator(t.value), tokens
        raise UnknownSymbol(t.value, t.position)
    if t.type == "(":
        inner, tokens = _parse_expr(tokens)
        closing = tokens.pop(0)
        if closing.type != ")":
            raise ExpressionSyntaxError("expected closing )", closing.position)
        return inner, tokens
    if t.type == "end":
        raise ExpressionSyntaxError("unexpected end of input", t.position)
    raise ExpressionSyntaxError(f"unexpected token {t.type!r}", t.position)


def _parse_power(tokens: List[Token]) -> Tuple[AlgebraElement, List[Token]]:
    base, tokens = _parse_atom(tokens)
    if _peek(tokens).type == "^":
        tokens.pop(0)
        exponent = tokens.pop(0)
        if exponent.type != "number":
            raise ExpressionSyntaxError("exponent must be a natural number", exponent.position)
        base = base ** int(exponent.value)
    return base, tokens


def _parse_factor(tokens: List[Token]) -> Tuple[AlgebraElement, List[Token]]:
    if _peek(tokens).type == "-":
        tokens.pop(0)
        inner, tokens = _parse_factor(tokens)
        return -inner, tokens
    return _parse_power(tokens)


def _parse_term(tokens: List[Token]) -> Tuple[AlgebraElement, List[Token]]:
    left, tokens = _parse_factor(tokens)
    while _peek(tokens).type in ("*", "/"):
        op = tokens.pop(0)
        right, tokens = _parse_factor(tokens)
        if op.type == "*":
            left = diamond(left, right)
        else:
            if not right.is_scalar() or right.is_zero():
                raise ExpressionSyntaxError("divisor must be a nonzero scalar", op.position)
            left = diamond(left, AlgebraElement.scalar(scalar_invert(right.scalar_part())))
    return left, tokens


def _parse_expr(tokens: List[Token]) -> Tuple[AlgebraElement, List[Token]]:
    left, tokens = _parse_term(tokens)
    while _peek(tokens).type in ("+", "-"):
        op = tokens.pop(0)
        right, tokens = _parse_term(tokens)
        left = left + right if op.type == "+" else left - right
    return left, tokens


def parse_expression(text: str) -> AlgebraElement:
    """Parse and normalize an element of A."""
    tokens = tokenize(text)
    element, tokens = _parse_expr(tokens)
    leftover = _peek(tokens)
    if leftover.type != "end":
        raise ExpressionSyntaxError(f"unexpected token {leftover.type!r}", leftover.position)
    logger.debug(f"parsed {text!r} into {len(element.terms)} terms")
    return element
