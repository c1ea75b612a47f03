"""
Worked examples with known values, re-computed from the built-in towers.

Each check returns a list of :class:`ReproCheck`; a run passes when every
observed value equals the expected one.
"""

import logging
from typing import Dict, List, Tuple

from .automorphism import Automorphism
from .constants import CYCLOTOMIC_PRIMES
from .fields import FieldTower
from .formats import build_field, read_spec
from .linalg import relative_rank
from .models import ReproCheck
from .polynomials import Polynomial
from .rank import weights
from .registry import repro_registry
from .skew import SkewPolynomial, root_space

logger = logging.getLogger(__name__)


def load_preset(name: str) -> Tuple[FieldTower, Automorphism]:
    return build_field(read_spec(f"preset:{name}"))


def expected_charpoly(theta: Automorphism, coefficients: List[int]) -> str:
    return Polynomial(theta.base, coefficients).to_string("Y")


@repro_registry.register("roots8")
def check_roots8() -> List[ReproCheck]:
    """Y^8 + 1 with a -> a^3: χ = (Y^4 - 1)^2 and X^θ - 1 has a 2-dim root space."""
    tower, theta = load_preset("roots8")
    L = tower.top
    a = L.gen
    report = theta.is_admissible()
    roots = root_space(SkewPolynomial(theta, [-1, 1]))
    span_ok = all(relative_rank(L, roots + [v]) == len(roots) for v in (L.one, a**2 + a**6))
    return [
        ReproCheck("characteristic polynomial", expected_charpoly(theta, [1, 0, 0, 0, -2, 0, 0, 0, 1]), report.char_poly),
        ReproCheck("square-free", False, report.square_free),
        ReproCheck("order", 4, theta.order),
        ReproCheck("root space dimension of X^θ - 1", 2, len(roots)),
        ReproCheck("root space contains 1 and a^2 + a^6", True, span_ok),
    ]


@repro_registry.register("ranks8")
def check_ranks8() -> List[ReproCheck]:
    """x = (1, a, a^2, a^4, a^5, 3a^4 + 2) has weights 4 4 5 5 under a -> a^3."""
    tower, theta = load_preset("roots8")
    a = tower.top.gen
    report = weights(theta, [1, a, a**2, a**4, a**5, 3 * a**4 + 2])
    return [
        ReproCheck("w0", 4, report.w0),
        ReproCheck("w1", 4, report.w1),
        ReproCheck("w2", 5, report.w2),
        ReproCheck("w3", 5, report.w3),
    ]


@repro_registry.register("kummer")
def check_kummer() -> List[ReproCheck]:
    """K = Q[h]/(h^4 + 1), L = K[a]/(a^8 - 3), a -> h*a: χ = Y^8 - 1, admissible."""
    _, theta = load_preset("kummer")
    report = theta.is_admissible()
    return [
        ReproCheck("characteristic polynomial", expected_charpoly(theta, [-1, 0, 0, 0, 0, 0, 0, 0, 1]), report.char_poly),
        ReproCheck("square-free", True, report.square_free),
        ReproCheck("order", 8, theta.order),
        ReproCheck("fixed field is K", True, report.fixed_field_is_k),
        ReproCheck("admissible", True, report.admissible),
    ]


def check_cyclotomic(p: int) -> List[ReproCheck]:
    """z -> z^u with u a primitive root: order p - 1 and χ = Y^(p-1) - 1."""
    _, theta = load_preset(f"cyclotomic-{p}")
    report = theta.is_admissible()
    return [
        ReproCheck("characteristic polynomial", expected_charpoly(theta, [-1] + [0] * (p - 2) + [1]), report.char_poly),
        ReproCheck("order", p - 1, theta.order),
        ReproCheck("admissible", True, report.admissible),
    ]


for _p in CYCLOTOMIC_PRIMES:
    repro_registry.register(f"cyclotomic-{_p}", lambda p=_p: check_cyclotomic(p))


def run_repro(name: str) -> List[ReproCheck]:
    checks = repro_registry.build(name)
    for check in checks:
        if not check.ok:
            logger.error(f"{name}: {check.quantity} expected {check.expected}, got {check.observed}")
    return checks


def run_all() -> Dict[str, List[ReproCheck]]:
    return {name: run_repro(name) for name in repro_registry.names()}
