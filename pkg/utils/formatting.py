#!/usr/bin/env python3
"""
Renderers for dra values: plain text that the expression parser reads back,
a unicode variant for terminals, LaTeX for matrices, and the exact-rational
string form used in JSON output.
"""

import logging
import re
from fractions import Fraction
from typing import Any, List, Sequence

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger("dra_formatting")

ASCII_NAMES = ("Xm2", "Xm1", "h", "Xp1", "Xp2")
UNICODE_NAMES = ("x₋₂α", "x₋α", "h", "xα", "x₂α")
LATEX_NAMES = (r"\bar x_{-2\alpha}", r"\bar x_{-\alpha}", r"\bar h", r"\bar x_{\alpha}", r"\bar x_{2\alpha}")
SUPERSCRIPTS = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


def rational_to_str(value: Fraction) -> str:
    """Exact rational as "a/b" (or "a" when integral)."""
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def rational_from_str(text: str) -> Fraction:
    return Fraction(text.strip())


def _monomial_text(exponents: Sequence[int], names: Sequence[str], joiner: str, unicode: bool) -> str:
    parts = []
    for name, e in zip(names, exponents):
        if e == 0:
            continue
        if e == 1:
            parts.append(name)
        elif unicode:
            parts.append(f"{name}{str(e).translate(SUPERSCRIPTS)}")
        else:
            parts.append(f"{name}^{e}")
    return joiner.join(parts)


def _is_negative(coeff: Any) -> bool:
    return coeff.num.leading() < 0


def _wrap(text: str) -> str:
    return text if re.fullmatch(r"-?[\w/]+(\^\d+)?", text) and "/" not in text else f"({text})"


def format_element(element: Any, unicode: bool = False) -> str:
    """Render an AlgebraElement; the ASCII form parses back to the same element."""
    if not element.terms:
        return "0"
    names = UNICODE_NAMES if unicode else ASCII_NAMES
    joiner = "·" if unicode else "*"
    pieces: List[str] = []
    for mono, coeff in sorted(element.terms.items()):
        negative = _is_negative(coeff)
        magnitude = -coeff if negative else coeff
        gens = _monomial_text(mono, names, joiner, unicode)
        if not gens:
            body = magnitude.to_text()
            if len(pieces) > 0 or negative:
                body = _wrap(body)
        elif magnitude == 1:
            body = gens
        else:
            body = f"{_wrap(magnitude.to_text())}{joiner}{gens}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(pieces)


def format_dynpoly(poly: Any, unicode: bool = False) -> str:
    if poly.is_zero():
        return "0"
    variable = {"h": "h", "hhat": "ĥ" if unicode else "hhat"}[poly.tag]
    pieces: List[str] = []
    for power in range(poly.degree, -1, -1):
        coeff = poly.coefficient(power)
        if coeff.is_zero():
            continue
        negative = _is_negative(coeff)
        magnitude = -coeff if negative else coeff
        if power == 0:
            body = _wrap(magnitude.to_text()) if pieces or negative else magnitude.to_text()
        else:
            base = variable if power == 1 else f"{variable}^{power}"
            body = base if magnitude == 1 else f"{_wrap(magnitude.to_text())}*{base}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(pieces)


def latex_polynomial(poly: Any, variable: str = "H") -> str:
    text = poly.to_text(variable)
    text = re.sub(r"\^(\d+)", r"^{\1}", text)
    text = re.sub(r"(\d+)/(\d+)\*", r"\\tfrac{\1}{\2}", text)
    text = re.sub(r"(\d+)/(\d+)", r"\\tfrac{\1}{\2}", text)
    return text.replace("*", " ")


def latex_scalar(scalar: Any) -> str:
    numerator = latex_polynomial(scalar.num)
    if not scalar.den:
        return numerator
    factors = []
    for root, mult in scalar.den:
        base = "H" if root == 0 else (f"(H-{root})" if root > 0 else f"(H+{-root})")
        factors.append(base if mult == 1 else f"{base}^{{{mult}}}")
    return rf"\frac{{{numerator}}}{{{''.join(factors)}}}"


def latex_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    sign = "-" if value < 0 else ""
    return rf"{sign}\frac{{{abs(value.numerator)}}}{{{value.denominator}}}"


def latex_matrix(rows: Sequence[Sequence[Fraction]]) -> str:
    body = r" \\ ".join(" & ".join(latex_rational(v) for v in row) for row in rows)
    return r"\begin{pmatrix} " + body + r" \end{pmatrix}"


def text_matrix(rows: Sequence[Sequence[Any]]) -> str:
    cells = [[rational_to_str(v) if isinstance(v, (int, Fraction)) else str(v) for v in row] for row in rows]
    if not cells:
        return "[]"
    width = max(len(c) for row in cells for c in row)
    return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)


def matrix_to_json(rows: Sequence[Sequence[Fraction]]) -> List[List[str]]:
    return [[rational_to_str(v) for v in row] for row in rows]


def matrix_from_json(rows: Sequence[Sequence[str]]) -> List[List[Fraction]]:
    return [[rational_from_str(v) for v in row] for row in rows]
