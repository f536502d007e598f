#!/usr/bin/env python3
"""
dra - command-line front end for the diagonal reduction algebra of osp(1|2).

Exit codes: 0 success (every check passed), 1 a check failed or a library
error occurred, 2 usage or parse error.
"""

import os
import sys
import json
import argparse
import logging
from fractions import Fraction
from typing import Any, List, Optional

from algebra_core import AlgebraElement, diamond, is_anticentral, is_central, set_fuel, theta
from distinguished import NAMED_ELEMENTS, f_n_closed, f_n_oracle, f_n_recursive
from harish_chandra import functional_equation_check, ghost_membership, hc_project
from osp_tensor import decompose
from scalar_ring import DraError
from utils.config import get_setting, load_configuration, load_environment, validate_configuration
from utils.expression_parser import ExpressionSyntaxError, parse_expression
from utils.formatting import format_dynpoly, latex_scalar, text_matrix
from verification_suites import SUITE_NAMES, run_suite
from verma import HighestWeight, build_irrep, ghost_scalars, gram_matrix, radical_order

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger("dra_cli")

EMIT_CHOICES = ("text", "json", "latex")


def parse_arguments(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse command line arguments."""
    parser = argparse.ArgumentParser(description="Exact computations in the diagonal reduction algebra of osp(1|2)")
    parser.add_argument("--unicode", action="store_true", help="Print generators as x₋₂α, x₋α, h, xα, x₂α")
    parser.add_argument("--fuel", type=int, help="Rule applications allowed per product (default: DRA_FUEL)")
    parser.add_argument("--config", help="Path to the YAML settings file (default: DRA_CONFIG or config/dra.yaml)")

    subparsers = parser.add_subparsers(dest="command", help="Command to execute")

    normalize_parser = subparsers.add_parser("normalize", help="Print the PBW normal form of an expression")
    normalize_parser.add_argument("expr", help="Element, e.g. 'Xp1*Xp1' or '(1 - 2/(H+1))*Xp1*Xp2'")
    normalize_parser.add_argument("--emit", choices=("text", "json"), default="text", help="Output format")

    multiply_parser = subparsers.add_parser("multiply", help="Diamond product of two or more expressions")
    multiply_parser.add_argument("exprs", nargs="+", help="Factors, left to right")
    multiply_parser.add_argument("--emit", choices=("text", "json"), default="text", help="Output format")

    theta_parser = subparsers.add_parser("theta", help="Apply the anti-automorphism Theta")
    theta_parser.add_argument("expr", help="Element")

    hc_parser = subparsers.add_parser("hc", help="Harish-Chandra image of a weight-zero element")
    hc_parser.add_argument("expr", help="Element commuting with H")
    hc_parser.add_argument("--emit", choices=("text", "json"), default="text", help="Output format")

    ghost_parser = subparsers.add_parser("ghost-check", help="Check the functional equation of a ghost-central element")
    ghost_parser.add_argument("expr", help="Central or anti-central element")
    ghost_parser.add_argument("--n", type=int, required=True, help="Odd positive integer")
    ghost_parser.add_argument("--eps", type=int, choices=(1, -1), required=True, help="Sign +1 or -1")
    ghost_parser.add_argument("--parity", type=int, choices=(0, 1), help="Ghost parity (default: detected)")

    element_parser = subparsers.add_parser("element", help="Print a distinguished element")
    element_parser.add_argument("name", choices=sorted(NAMED_ELEMENTS), help="Element name")
    element_parser.add_argument("--emit", choices=("text", "json"), default="text", help="Output format")

    fn_parser = subparsers.add_parser("fn", help="Print F_n as a polynomial in hhat")
    fn_parser.add_argument("n", type=int, help="Index n >= 1")
    method = fn_parser.add_mutually_exclusive_group()
    method.add_argument("--closed", action="store_const", dest="method", const="closed", help="Closed form (default)")
    method.add_argument("--recursive", action="store_const", dest="method", const="recursive", help="Difference recursion")
    method.add_argument("--oracle", action="store_const", dest="method", const="oracle", help="Rewriting engine")
    fn_parser.add_argument("--hat", action="store_true", help="Print the hat normalization H (H-1)^2 F_n")
    fn_parser.add_argument("--emit", choices=("text", "json"), default="text", help="Output format")

    shapovalov_parser = subparsers.add_parser("shapovalov", help="Gram matrix of the Shapovalov form")
    shapovalov_parser.add_argument("--lambda", dest="lambda_", required=True, help="Highest weight, a scalar in H")
    shapovalov_parser.add_argument("--size", type=int, required=True, help="Number of basis vectors")
    shapovalov_parser.add_argument("--basis", choices=("power", "pq", "xm2"), help="Basis (default depends on lambda)")
    shapovalov_parser.add_argument("--radical", action="store_true", help="Also report the radical order")
    shapovalov_parser.add_argument("--emit", choices=EMIT_CHOICES, default="text", help="Output format")

    irrep_parser = subparsers.add_parser("irrep", help="Matrices of the irreducible L(lambda, mu)")
    irrep_parser.add_argument("--lambda", dest="lambda_", type=Fraction, required=True, help="Rational lambda")
    irrep_parser.add_argument("--mu", type=Fraction, required=True, help="Rational, non-integer mu")
    irrep_parser.add_argument("--emit", choices=EMIT_CHOICES, default="text", help="Output format")

    tensor_parser = subparsers.add_parser("tensor-decompose", help="Decompose C[x] (x) V(-l) inside a degree window")
    tensor_parser.add_argument("--ell", type=int, required=True, help="Non-negative integer l")
    tensor_parser.add_argument("--max-degree", type=int, required=True, help="Top degree of the C[x] window")
    tensor_parser.add_argument("--emit", choices=("text", "json"), default="text", help="Output format")

    suite_parser = subparsers.add_parser("suite", help="Run a verification suite")
    suite_parser.add_argument("name", choices=SUITE_NAMES + ("all",), help="Suite to run")
    suite_parser.add_argument("--emit", choices=("text", "json"), default="text", help="Output format")

    return parser.parse_args(argv)


def _print_json(data: Any) -> None:
    print(json.dumps(data, indent=2))


def _scalar_argument(text: str):
    value = parse_expression(text)
    if not value.is_scalar():
        raise ExpressionSyntaxError("expected a scalar in H", 0)
    return value.scalar_part()


def _emit_element(element: AlgebraElement, args: argparse.Namespace) -> None:
    if getattr(args, "emit", "text") == "json":
        _print_json(element.to_json())
    else:
        print(element.to_text(unicode=args.unicode))


def cmd_normalize(args: argparse.Namespace) -> int:
    _emit_element(parse_expression(args.expr), args)
    return 0


def cmd_multiply(args: argparse.Namespace) -> int:
    result = AlgebraElement.scalar(1)
    for text in args.exprs:
        result = diamond(result, parse_expression(text))
    _emit_element(result, args)
    return 0


def cmd_theta(args: argparse.Namespace) -> int:
    _emit_element(theta(parse_expression(args.expr)), args)
    return 0


def cmd_hc(args: argparse.Namespace) -> int:
    image = hc_project(parse_expression(args.expr))
    membership = ghost_membership(image.ghost())
    if args.emit == "json":
        _print_json({
            "h": image.value.to_json(),
            "hhat": image.in_hhat().to_json(),
            "ghost": image.ghost().to_text(),
            "membership": membership.kind,
            "expression": membership.expression(),
        })
        return 0
    print(f"phi = {format_dynpoly(image.value, args.unicode)}")
    print(f"    = {format_dynpoly(image.in_hhat(), args.unicode)}")
    print(f"ghost polynomial: {image.ghost().to_text()}")
    print(f"membership: {membership.kind}: {membership.expression()}")
    return 0


def cmd_ghost_check(args: argparse.Namespace) -> int:
    element = parse_expression(args.expr)
    parity = args.parity
    if parity is None:
        parity = 1 if not is_central(element) and is_anticentral(element) else 0
    holds = functional_equation_check(element, parity, args.n, args.eps)
    print(f"functional equation (n={args.n}, eps={args.eps:+d}, parity={parity}): {'holds' if holds else 'FAILS'}")
    return 0 if holds else 1


def cmd_element(args: argparse.Namespace) -> int:
    _emit_element(NAMED_ELEMENTS[args.name](), args)
    return 0


def cmd_fn(args: argparse.Namespace) -> int:
    method = args.method or "closed"
    if args.n < 1:
        raise ExpressionSyntaxError("n must be at least 1", 0)
    family = {"closed": f_n_closed, "recursive": f_n_recursive, "oracle": f_n_oracle}[method](args.n)
    value = family.hat() if args.hat else family.value
    if args.emit == "json":
        _print_json({"n": args.n, "method": method, "hat": args.hat, "value": value.to_json()})
    else:
        print(f"F_{args.n} = {format_dynpoly(value, args.unicode)}")
    return 0


def cmd_shapovalov(args: argparse.Namespace) -> int:
    if args.size < 1:
        raise ExpressionSyntaxError("size must be at least 1", 0)
    weight = HighestWeight(_scalar_argument(args.lambda_))
    gram = gram_matrix(weight, args.size, args.basis)
    radical = radical_order(weight) if args.radical else None
    if args.emit == "json":
        data = {"lambda": weight.lambda_.to_json(), "gram": [[c.to_json() for c in row] for row in gram]}
        if radical is not None:
            data["radical"] = getattr(radical, "n", None)
        _print_json(data)
    elif args.emit == "latex":
        body = r" \\ ".join(" & ".join(latex_scalar(c) for c in row) for row in gram)
        print(r"\begin{pmatrix} " + body + r" \end{pmatrix}")
    else:
        print(text_matrix([[c.to_text() for c in row] for row in gram]))
        if radical is not None:
            print(f"radical: {radical}")
    return 0


def cmd_irrep(args: argparse.Namespace) -> int:
    irrep = build_irrep(args.lambda_, args.mu)
    c1, c2, q = ghost_scalars(args.lambda_, args.mu)
    if args.emit == "json":
        _print_json(irrep.to_json())
    elif args.emit == "latex":
        print(irrep.to_latex())
    else:
        print(f"L({args.lambda_}, {args.mu}), dimension {irrep.n}")
        for name in irrep.matrices:
            print(f"{name} =")
            print(text_matrix(irrep.rows(name)))
        print(f"ghost scalars: C1 = {c1}, C2 = {c2}, Q2 = {q} (-1)^k")
    return 0


def cmd_tensor_decompose(args: argparse.Namespace) -> int:
    report = decompose(args.ell, args.max_degree)
    if args.emit == "json":
        _print_json(report.to_json())
    else:
        print(f"C[x] (x) V(-{args.ell}) up to degree {args.max_degree}: {report.summands} summands")
        print(f"singular vectors killed: {all(report.killed)}; oracle count: {report.oracle_count}")
        print(f"spans match: {report.spans_match}; graded dimensions match: {report.graded_match}")
    return 0 if report.ok else 1


def cmd_suite(args: argparse.Namespace) -> int:
    config = load_configuration(args.config)
    if not validate_configuration(config):
        logger.error("Invalid configuration")
        return 2
    names = SUITE_NAMES if args.name == "all" else (args.name,)
    reports = [run_suite(name, config) for name in names]
    if args.emit == "json":
        _print_json([r.to_json() for r in reports])
    else:
        for report in reports:
            print(report.summary())
            for check in report.failures:
                print(f"  FAIL {check.check_id}: {check.detail}")
    return 0 if all(r.passed for r in reports) else 1


COMMANDS = {
    "normalize": cmd_normalize,
    "multiply": cmd_multiply,
    "theta": cmd_theta,
    "hc": cmd_hc,
    "ghost-check": cmd_ghost_check,
    "element": cmd_element,
    "fn": cmd_fn,
    "shapovalov": cmd_shapovalov,
    "irrep": cmd_irrep,
    "tensor-decompose": cmd_tensor_decompose,
    "suite": cmd_suite,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Main function."""
    load_environment()
    args = parse_arguments(argv)
    if args.command is None:
        logger.error("No command specified. Use --help for usage information.")
        return 2
    if args.config:
        os.environ["DRA_CONFIG"] = args.config

    try:
        set_fuel(args.fuel if args.fuel is not None else get_setting("fuel"))
        return COMMANDS[args.command](args)
    except ExpressionSyntaxError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except DraError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
