#!/usr/bin/env python3
"""
Verification suites for the reduction algebra library.

Each suite is a list of named checks. A check returns (passed, detail); a check
that raises becomes a failed entry carrying the error message. Reports are
ordered by check id and every run is recorded through utils.logging_system.
"""

import random
import time
import logging
import traceback
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Any, Callable, Dict, List, Optional, Tuple

import sympy

from algebra_core import (
    GENERATORS,
    AlgebraElement,
    anticommutator,
    defining_relations,
    diamond,
    hat_relations,
    is_anticentral,
    is_central,
    supercommutator,
    theta,
)
from distinguished import (
    c0_closed,
    c2_closed,
    element_c1,
    element_c2,
    element_hhat,
    element_q2,
    f_n_closed,
    f_n_hat_closed,
    f_n_oracle,
    f_n_recursive,
    hat_xm2_congruence,
    radical_scalar,
)
from harish_chandra import (
    ANTI_CENTRAL,
    CENTRAL,
    NOT_IN_GHOST_IMAGE,
    GhostPolynomial,
    functional_equation_check,
    ghost_c1,
    ghost_c2,
    ghost_membership,
    ghost_q,
    hc_injectivity_witness,
    hc_kernel,
    hc_project,
)
from osp_tensor import (
    OspModule,
    TensorModule,
    bridge_check,
    casimir_scalar,
    casimir_tensor_apply,
    decompose,
    singular_vectors,
)
from scalar_ring import DynamicalScalar, H, NotAUnit, ScalarLike, scalar_invert
from utils.config import DEFAULT_SUITES, get_setting, suite_parameters
from utils.logging_system import SuiteLogger
from verma import (
    DegenerateAt,
    HighestWeight,
    NotFiniteDimensional,
    Nondegenerate,
    VermaElement,
    build_irrep,
    gram_matrix,
    ghost_matrices,
    ghost_scalars,
    radical_order,
    shapovalov,
    verma_act,
)

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger("dra_verification_suites")

SUITE_NAMES = tuple(DEFAULT_SUITES)

Outcome = Tuple[bool, str]
Check = Tuple[str, Callable[[], Outcome]]

SAMPLE_SCALARS: Tuple[ScalarLike, ...] = (
    1,
    -1,
    2,
    Fraction(1, 2),
    H,
    H - 3,
    DynamicalScalar.reciprocal_of_linear(-1),
)

# Twenty (lambda, mu) pairs, admissible and not, for the classification grid.
IRREP_GRID: Tuple[Tuple[Fraction, Fraction], ...] = tuple(
    (Fraction(a), Fraction(b))
    for a, b in (
        ("1/2", "-1/2"),
        ("-1/2", "-1/2"),
        ("3/2", "-3/2"),
        ("5/2", "-1/2"),
        ("9/2", "-1/2"),
        ("-9/2", "-1/2"),
        ("13/2", "-1/2"),
        ("4/3", "1/3"),
        ("-10/3", "1/3"),
        ("1/4", "-5/4"),
        ("1", "1/2"),
        ("2", "-1/2"),
        ("0", "1/2"),
        ("7/2", "-1/2"),
        ("1/3", "1/3"),
        ("5", "2/3"),
        ("-3/2", "1/2"),
        ("11/4", "1/4"),
        ("3", "-1/3"),
        ("1/5", "4/5"),
    )
)


@dataclass
class CheckResult:
    check_id: str
    passed: bool
    detail: str = ""
    elapsed: float = 0.0

    def to_json(self) -> Dict[str, Any]:
        return {
            "check_id": self.check_id,
            "passed": self.passed,
            "detail": self.detail,
            "elapsed_ms": int(self.elapsed * 1000),
        }


@dataclass
class SuiteReport:
    suite: str
    run_id: str = ""
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        return f"{self.suite}: {len(self.checks) - len(self.failures)}/{len(self.checks)} checks passed"

    def to_json(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "run_id": self.run_id,
            "passed": self.passed,
            "check_count": len(self.checks),
            "failures": len(self.failures),
            "checks": [c.to_json() for c in self.checks],
        }


def _equal(left: Any, right: Any) -> Outcome:
    if left == right:
        return True, ""
    return False, f"{left} != {right}"


def _flag(value: bool, detail: str = "") -> Outcome:
    return bool(value), "" if value else detail


# relations

def _random_element(rng: random.Random, max_exponent: int) -> AlgebraElement:
    terms: Dict[Tuple[int, ...], ScalarLike] = {}
    for _ in range(rng.randint(1, 2)):
        mono = (
            rng.randint(0, max_exponent),
            rng.randint(0, 1),
            rng.randint(0, max_exponent),
            rng.randint(0, 1),
            rng.randint(0, max_exponent),
        )
        terms[mono] = rng.choice(SAMPLE_SCALARS)
    return AlgebraElement(terms)


def _associativity(a: AlgebraElement, b: AlgebraElement, c: AlgebraElement) -> Outcome:
    return _equal(diamond(diamond(a, b), c), diamond(a, diamond(b, c)))


def relations_checks(params: Dict[str, Any]) -> List[Check]:
    checks: List[Check] = []
    for relation_id, left, right in defining_relations():
        checks.append((f"relations.defining.{relation_id}", lambda l=left, r=right: _equal(l, r)))
    for relation_id, left, right in hat_relations():
        checks.append((f"relations.hat.{relation_id}", lambda l=left, r=right: _equal(l, r)))
    gens = [AlgebraElement.generator(name) for name in GENERATORS]
    for i, j, k in product(range(len(GENERATORS)), repeat=3):
        checks.append((
            f"relations.assoc.{GENERATORS[i]}.{GENERATORS[j]}.{GENERATORS[k]}",
            lambda t=(gens[i], gens[j], gens[k]): _associativity(*t),
        ))
    rng = random.Random(get_setting("random_seed"))
    for trial in range(params["associativity_trials"]):
        triple = tuple(_random_element(rng, params["max_exponent"]) for _ in range(3))
        checks.append((f"relations.associativity.{trial:04d}", lambda t=triple: _associativity(*t)))
    return checks


# centrality

def _bracket(a: AlgebraElement, name: str, anti: bool) -> Outcome:
    """Supercommutator with H or a generator; anti uses the anticommutator on odd generators."""
    x = AlgebraElement.scalar(H) if name == "H" else AlgebraElement.generator(name)
    if anti and x.parities() == {1}:
        value = anticommutator(a, x)
    else:
        value = supercommutator(a, x)
    return _flag(value.is_zero(), f"bracket with {name} is {value}")


def centrality_checks(params: Dict[str, Any]) -> List[Check]:
    checks: List[Check] = []
    for label, factory in (("c1", element_c1), ("c2", element_c2), ("hhat", element_hhat)):
        checks.append((f"centrality.{label}.central", lambda f=factory: _flag(is_central(f()), "not central")))
        for name in ("H",) + GENERATORS:
            checks.append((
                f"centrality.{label}.{name}",
                lambda f=factory, n=name: _bracket(f(), n, False),
            ))
    checks.append(("centrality.q2.anticentral", lambda: _flag(is_anticentral(element_q2()), "not anti-central")))
    for name in ("H",) + GENERATORS:
        checks.append((f"centrality.q2.{name}", lambda n=name: _bracket(element_q2(), n, True)))

    def scasimir_square() -> Outcome:
        c1, c2, q2 = element_c1(), element_c2(), element_q2()
        return _equal(q2 * q2, c2 * c2 - c1 * c1)

    checks.append(("centrality.q2.square", scasimir_square))
    return checks


# fn

def _fn_agreement(n: int) -> Outcome:
    closed = f_n_closed(n).value
    recursive = f_n_recursive(n).value
    oracle = f_n_oracle(n).value
    if closed != recursive:
        return False, f"closed {closed} != recursive {recursive}"
    if closed != oracle:
        return False, f"closed {closed} != oracle {oracle}"
    return True, str(closed)


def _fn_coefficients(n: int) -> Outcome:
    family = f_n_recursive(n)
    if not family.c1.is_zero():
        return False, f"linear coefficient {family.c1} is not zero"
    if family.c0 != c0_closed(n):
        return False, f"c0 = {family.c0}, expected {c0_closed(n)}"
    if family.c2 != c2_closed(n):
        return False, f"c2 = {family.c2}, expected {c2_closed(n)}"
    return True, ""


def fn_checks(params: Dict[str, Any]) -> List[Check]:
    checks: List[Check] = []
    for n in range(1, params["max_n"] + 1):
        checks.append((f"fn.agreement.{n:02d}", lambda n=n: _fn_agreement(n)))
        checks.append((f"fn.hat.{n:02d}", lambda n=n: _equal(f_n_closed(n).hat(), f_n_hat_closed(n))))
    for n in range(1, params["coefficient_max_n"] + 1):
        checks.append((f"fn.coefficients.{n:02d}", lambda n=n: _fn_coefficients(n)))
    for n in range(0, params["congruence_max_n"] + 1):
        checks.append((f"fn.congruence.{n:02d}", lambda n=n: _equal(*hat_xm2_congruence(n))))
    return checks


# shapovalov

SHAPOVALOV_WEIGHTS = (
    ("const", HighestWeight(DynamicalScalar.constant(Fraction(3, 2)))),
    ("dyn", HighestWeight(DynamicalScalar.linear(-2))),
)


def _random_vector(rng: random.Random, weight: HighestWeight, max_p: int) -> VermaElement:
    terms = {}
    for _ in range(rng.randint(1, 3)):
        terms[(rng.randint(0, max_p), rng.randint(0, 1))] = rng.choice(SAMPLE_SCALARS)
    return VermaElement(weight, terms)


def _shapovalov_properties(u: VermaElement, w: VermaElement, f: ScalarLike, g: ScalarLike) -> Outcome:
    weight = u.weight
    top = VermaElement.highest(weight)
    if shapovalov(top, top) != 1:
        return False, "<v, v> != 1"
    if shapovalov(u, w) != shapovalov(w, u):
        return False, "not symmetric"
    if shapovalov(u + w, w) != shapovalov(u, w) + shapovalov(w, w):
        return False, "not additive"
    scaled = shapovalov(u.right_scale(f), w.right_scale(g))
    if scaled != shapovalov(u, w) * f * g:
        return False, f"not right-linear in ({f}, {g})"
    for name in GENERATORS:
        x = AlgebraElement.generator(name)
        if shapovalov(verma_act(x, u), w) != shapovalov(u, verma_act(theta(x), w)):
            return False, f"contravariance fails for {name}"
    return True, ""


def _orthogonality(weight: HighestWeight, max_p: int) -> Outcome:
    keys = [(p, q) for p in range(max_p + 1) for q in (0, 1)]
    for first in keys:
        for second in keys:
            if first == second:
                continue
            value = shapovalov(VermaElement.basis(weight, *first), VermaElement.basis(weight, *second))
            if not value.is_zero():
                return False, f"<v{first}, v{second}> = {value}"
    return True, ""


def _product_formula(lambda_: Fraction, size: int) -> Outcome:
    weight = HighestWeight(DynamicalScalar.constant(lambda_))
    gram = gram_matrix(weight, size, "power")
    running = DynamicalScalar.one()
    for m in range(size):
        if m:
            running = running * radical_scalar(m, weight.lambda_hat)
        for n in range(size):
            expected = running if m == n else DynamicalScalar.zero()
            if gram[m][n] != expected:
                return False, f"entry ({m}, {n}) is {gram[m][n]}, expected {expected}"
    return True, ""


def _zero_weight_diagonal(size: int) -> Outcome:
    gram = gram_matrix(HighestWeight(0), size, "xm2")
    for m in range(size):
        for n in range(size):
            if m != n and not gram[m][n].is_zero():
                return False, f"off-diagonal entry ({m}, {n}) is {gram[m][n]}"
        try:
            scalar_invert(gram[m][m])
        except (NotAUnit, ZeroDivisionError):
            return False, f"diagonal entry {m} is {gram[m][m]}, not a unit"
    return True, ""


def shapovalov_checks(params: Dict[str, Any]) -> List[Check]:
    checks: List[Check] = []
    rng = random.Random(get_setting("random_seed"))
    for label, weight in SHAPOVALOV_WEIGHTS:
        for trial in range(params["trials"]):
            u = _random_vector(rng, weight, params["max_p"])
            w = _random_vector(rng, weight, params["max_p"])
            f, g = rng.choice(SAMPLE_SCALARS), rng.choice(SAMPLE_SCALARS)
            checks.append((
                f"shapovalov.properties.{label}.{trial:03d}",
                lambda u=u, w=w, f=f, g=g: _shapovalov_properties(u, w, f, g),
            ))
        checks.append((f"shapovalov.orthogonal.{label}", lambda w=weight: _orthogonality(w, params["max_p"])))
    for lambda_ in (Fraction(3, 2), Fraction(1, 3)):
        checks.append((
            f"shapovalov.product.{lambda_}",
            lambda l=lambda_: _product_formula(l, params["max_power"] + 1),
        ))
    checks.append(("shapovalov.zero_weight", lambda: _zero_weight_diagonal(params["zero_weight_size"])))
    for n in params["radical_orders"]:
        for eps in (1, -1):
            weight = HighestWeight(eps * DynamicalScalar.linear(1 - n))
            checks.append((
                f"shapovalov.radical.{n}.{'+' if eps > 0 else '-'}",
                lambda w=weight, n=n: _equal(radical_order(w), DegenerateAt(n)),
            ))
    checks.append(("shapovalov.radical.zero", lambda: _equal(radical_order(HighestWeight(0)), Nondegenerate())))
    return checks


# irreps

def _admissible(lambda_: Fraction, mu: Fraction) -> bool:
    for n in range(1, 64, 2):
        if lambda_ * lambda_ == (mu + n) ** 2:
            return True
    return False


def _classification(lambda_: Fraction, mu: Fraction) -> Outcome:
    expected = _admissible(lambda_, mu)
    try:
        irrep = build_irrep(lambda_, mu)
    except NotFiniteDimensional:
        return _flag(not expected, "admissible pair was rejected")
    if not expected:
        return False, f"built a {irrep.n}-dimensional irrep for an inadmissible pair"
    return _flag(irrep.n % 2 == 1, f"even dimension {irrep.n}")


def _irrep_structure(n: int) -> Outcome:
    mu = Fraction(-1, 2)
    lambda_ = mu + n
    irrep = build_irrep(lambda_, mu)
    if irrep.n != n:
        return False, f"dimension {irrep.n}"
    for name in ("Xp1", "Xp2"):
        if not (irrep.matrix(name) ** n).is_zero_matrix:
            return False, f"{name} is not nilpotent"
    eigs = irrep.eigenvalues
    if len(set(eigs)) != n or any(e.denominator == 1 for e in eigs):
        return False, f"H eigenvalues {eigs}"
    c1, c2, q = (sympy.Rational(v.numerator, v.denominator) for v in ghost_scalars(lambda_, mu))
    matrices = ghost_matrices(irrep)
    if matrices["c1"] != c1 * sympy.eye(n):
        return False, "C1 is not 2 lambda mu"
    if matrices["c2"] != c2 * sympy.eye(n):
        return False, "C2 is not mu^2 + lambda^2"
    if matrices["q2"] != sympy.diag(*[q * (-1) ** k for k in range(n)]):
        return False, f"Q2 acts by {matrices['q2'].tolist()}"
    return True, ""


def irreps_checks(params: Dict[str, Any]) -> List[Check]:
    checks: List[Check] = []
    for n in params["dimensions"]:
        checks.append((f"irreps.build.{n}", lambda n=n: _irrep_structure(n)))
    for index, (lambda_, mu) in enumerate(IRREP_GRID[: params["grid_size"]]):
        checks.append((f"irreps.grid.{index:02d}", lambda l=lambda_, m=mu: _classification(l, m)))
    checks.append((
        "irreps.ghost.example",
        lambda: _equal(ghost_scalars(Fraction(3, 2), Fraction(-3, 2)), (Fraction(-9, 2), Fraction(9, 2), Fraction(0))),
    ))
    return checks


# tensor

def _tensor_casimir(ell: int, max_degree: int) -> Outcome:
    module = TensorModule(ell, max_degree)
    c_first = casimir_scalar(module.first)
    c_second = casimir_scalar(OspModule.finite(ell))
    for s in singular_vectors(module):
        if casimir_tensor_apply(s, -1) != s.scale(c_first - c_second):
            return False, "C (x) 1 - 1 (x) C is not scalar on V+"
        if casimir_tensor_apply(s, 1) != s.scale(c_first + c_second):
            return False, "C (x) 1 + 1 (x) C is not scalar on V+"
    return True, f"{c_first - c_second}, {c_first + c_second}"


def tensor_checks(params: Dict[str, Any]) -> List[Check]:
    checks: List[Check] = []
    for ell, max_degree in params["windows"]:
        def decomposition(ell=ell, max_degree=max_degree) -> Outcome:
            report = decompose(ell, max_degree)
            return _flag(report.ok, f"report: {report.to_json()}")

        checks.append((f"tensor.decompose.{ell}.{max_degree}", decomposition))
        checks.append((f"tensor.casimir.{ell}", lambda e=ell, d=max_degree: _tensor_casimir(e, d)))

        def bridge(ell=ell) -> Outcome:
            values = bridge_check(ell)
            return _flag(all(a == b for a, b in values.values()), f"bridge values {values}")

        checks.append((f"tensor.bridge.{ell}", bridge))

    def casimir_values() -> Outcome:
        first = casimir_scalar(OspModule.polynomial(4))
        second = casimir_scalar(OspModule.finite(1))
        return _equal((first - second, first + second), (Fraction(-9, 16), Fraction(9, 16)))

    checks.append(("tensor.casimir.values", casimir_values))
    return checks


# ghost

def ghost_checks(params: Dict[str, Any]) -> List[Check]:
    checks: List[Check] = []
    expected_images = (("c1", element_c1, ghost_c1), ("c2", element_c2, ghost_c2), ("q2", element_q2, ghost_q))
    for label, element, image in expected_images:
        checks.append((f"ghost.hc.{label}", lambda e=element, i=image: _equal(hc_project(e()).ghost(), i())))
    for label, element, parity in (("c1", element_c1, 0), ("c2", element_c2, 0), ("q2", element_q2, 1)):
        for n in params["odd_n"]:
            for eps in (1, -1):
                checks.append((
                    f"ghost.functional.{label}.{n}.{'+' if eps > 0 else '-'}",
                    lambda e=element, p=parity, n=n, eps=eps: _flag(functional_equation_check(e(), p, n, eps)),
                ))

    generators = (element_c1, element_c2, element_q2)
    for exps in product(range(params["max_degree"] + 1), repeat=3):
        if sum(exps) > params["max_degree"]:
            continue

        def membership(exps=exps) -> Outcome:
            element = AlgebraElement.scalar(1)
            for factory, power in zip(generators, exps):
                element = diamond(element, factory() ** power)
            result = ghost_membership(hc_project(element).ghost())
            expected = ANTI_CENTRAL if exps[2] % 2 else CENTRAL
            return _equal(result.kind, expected)

        checks.append((f"ghost.membership.{'.'.join(map(str, exps))}", membership))

    def kernel() -> Outcome:
        relations = hc_kernel(2)
        if len(relations) != 1:
            return False, f"{len(relations)} relations"
        (relation,) = relations
        scale = relation.get("q^2")
        if not scale:
            return False, f"relation {relation} has no q^2 term"
        normalized = {k: v / scale for k, v in relation.items()}
        return _equal(normalized, {"q^2": 1, "c2^2": -1, "c1^2": 1})

    checks.append(("ghost.kernel", kernel))
    checks.append(("ghost.injectivity", lambda: _flag(hc_injectivity_witness(params["max_degree"]), "relation fails in A")))
    checks.append((
        "ghost.odd_degree",
        lambda: _equal(ghost_membership(GhostPolynomial.x()).kind, NOT_IN_GHOST_IMAGE),
    ))
    return checks


SUITES: Dict[str, Callable[[Dict[str, Any]], List[Check]]] = {
    "relations": relations_checks,
    "centrality": centrality_checks,
    "fn": fn_checks,
    "shapovalov": shapovalov_checks,
    "irreps": irreps_checks,
    "tensor": tensor_checks,
    "ghost": ghost_checks,
}


def run_check(check_id: str, check: Callable[[], Outcome], run: Optional[SuiteLogger] = None) -> CheckResult:
    start = time.time()
    try:
        passed, detail = check()
    except Exception as e:
        logger.error(f"check {check_id} raised {type(e).__name__}: {e}")
        if run is not None:
            run.log_error(type(e).__name__, f"{check_id}: {e}", traceback.format_exc())
        return CheckResult(check_id, False, f"{type(e).__name__}: {e}", time.time() - start)
    return CheckResult(check_id, bool(passed), detail, time.time() - start)


def run_suite(
    name: str,
    config: Optional[Dict[str, Any]] = None,
    log_directory: Optional[str] = None
) -> SuiteReport:
    """
    Run one suite and return its report, sorted by check id.

    Args:
        name: One of SUITE_NAMES
        config: Loaded configuration whose "suites" section overrides the defaults
        log_directory: Where the JSONL run logs go (default: the log_dir setting)
    """
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    params = suite_parameters(name, config)
    run = SuiteLogger(name, log_directory)
    report = SuiteReport(name, run.run_id)
    try:
        checks = SUITES[name](params)
    except Exception as e:
        run.log_error(type(e).__name__, str(e), traceback.format_exc())
        report.checks.append(CheckResult(f"{name}.setup", False, f"{type(e).__name__}: {e}"))
        checks = []
    for check_id, check in checks:
        report.checks.append(run_check(check_id, check, run))
    report.checks.sort(key=lambda c: c.check_id)
    for result in report.checks:
        run.record(result.check_id, result.passed, result.detail, result.elapsed)
    run.finish()
    return report


if __name__ == "__main__":
    print(run_suite("centrality").summary())
