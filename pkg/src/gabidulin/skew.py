"""
θ-polynomials: the skew polynomial ring L[X; θ] with trivial derivation.

``SkewPolynomial(theta, [p0, p1, ...])`` stands for ``sum(p_i X^{θ^i})``.
Products follow the composition law, ``(P * Q)(v) == P(Q(v))``.
"""

import logging
from typing import Any, Dict, Iterable, List, Sequence, Tuple

from .automorphism import Automorphism
from .errors import DivisionByZeroPolynomial, InadmissibleAutomorphism
from .fields import FieldElement
from .linalg import Matrix, independent_subset
from .polynomials import NEG_INF

logger = logging.getLogger(__name__)


class SkewPolynomial:
    __slots__ = ("theta", "coeffs")

    def __init__(self, theta: Automorphism, coeffs: Iterable[Any] = ()):
        field = theta.field
        values = [field(c) for c in coeffs]
        while values and not values[-1]:
            values.pop()
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "coeffs", tuple(values))

    def __setattr__(self, name, value):
        raise AttributeError("SkewPolynomial is immutable")

    @classmethod
    def zero(cls, theta: Automorphism) -> "SkewPolynomial":
        return cls(theta)

    @classmethod
    def one(cls, theta: Automorphism) -> "SkewPolynomial":
        return cls(theta, [theta.field.one])

    @classmethod
    def x_power(cls, theta: Automorphism, i: int, coefficient: Any = 1) -> "SkewPolynomial":
        """The monomial ``coefficient * X^{θ^i}``."""
        field = theta.field
        return cls(theta, [field.zero] * i + [field(coefficient)])

    @classmethod
    def from_coefficients(cls, theta: Automorphism, terms: Dict[int, Any]) -> "SkewPolynomial":
        """Build from a sparse ``{i: p_i}`` mapping."""
        if any(i < 0 for i in terms):
            raise ValueError("θ-powers must be non-negative")
        size = max(terms, default=-1) + 1
        field = theta.field
        return cls(theta, [field(terms[i]) if i in terms else field.zero for i in range(size)])

    @property
    def field(self):
        return self.theta.field

    @property
    def degree(self):
        """θ-degree; the zero polynomial has degree ``NEG_INF``."""
        if not self.coeffs:
            return NEG_INF
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> FieldElement:
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def monic(self) -> "SkewPolynomial":
        if not self.coeffs:
            return self
        return self.field.one / self.coeffs[-1] * self

    def __getitem__(self, i: int) -> FieldElement:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _same_ring(self, other: "SkewPolynomial") -> None:
        if other.theta is not self.theta:
            raise ValueError("skew polynomials over different automorphisms")

    def __add__(self, other: "SkewPolynomial") -> "SkewPolynomial":
        if not isinstance(other, SkewPolynomial):
            return NotImplemented
        self._same_ring(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return SkewPolynomial(self.theta, [self[i] + other[i] for i in range(size)])

    def __neg__(self) -> "SkewPolynomial":
        return SkewPolynomial(self.theta, [-c for c in self.coeffs])

    def __sub__(self, other: "SkewPolynomial") -> "SkewPolynomial":
        if not isinstance(other, SkewPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Any) -> "SkewPolynomial":
        """Skew product ``sum p_i θ^i(q_j) X^{θ^(i+j)}``; a scalar c acts as c X^{θ^0}."""
        if not isinstance(other, SkewPolynomial):
            other = SkewPolynomial(self.theta, [self.field(other)])
        self._same_ring(other)
        if not self.coeffs or not other.coeffs:
            return SkewPolynomial(self.theta)
        field = self.field
        product = [field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, p in enumerate(self.coeffs):
            if not p:
                continue
            for j, q in enumerate(other.coeffs):
                if q:
                    product[i + j] = product[i + j] + p * self.theta.apply(q, i)
        return SkewPolynomial(self.theta, product)

    def __rmul__(self, scalar: Any) -> "SkewPolynomial":
        """Left scalar multiplication ``c * P``."""
        c = self.field(scalar)
        return SkewPolynomial(self.theta, [c * p for p in self.coeffs])

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewPolynomial):
            return NotImplemented
        return self.theta is other.theta and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def evaluate(self, v: Any) -> FieldElement:
        """``P(v) = sum p_i θ^i(v)``."""
        field = self.field
        v = field(v)
        acc = field.zero
        for i, p in enumerate(self.coeffs):
            if p:
                acc = acc + p * self.theta.apply(v, i)
        return acc

    __call__ = evaluate

    def left_div(self, divisor: "SkewPolynomial") -> Tuple["SkewPolynomial", "SkewPolynomial"]:
        """``(Q, R)`` with ``self = Q * divisor + R`` and ``deg R < deg divisor``."""
        self._same_ring(divisor)
        if not divisor:
            raise DivisionByZeroPolynomial("left division by the zero θ-polynomial")
        theta, field = self.theta, self.field
        e = divisor.degree
        lead = divisor.leading_coefficient
        quotient = [field.zero] * max(len(self.coeffs) - e, 0)
        remainder = self
        while remainder and remainder.degree >= e:
            d = remainder.degree - e
            q = remainder.leading_coefficient / theta.apply(lead, d)
            quotient[d] = quotient[d] + q
            remainder = remainder - SkewPolynomial.x_power(theta, d, q) * divisor
        return SkewPolynomial(theta, quotient), remainder

    def right_div(self, divisor: "SkewPolynomial") -> Tuple["SkewPolynomial", "SkewPolynomial"]:
        """``(Q, R)`` with ``self = divisor * Q + R`` and ``deg R < deg divisor``."""
        self._same_ring(divisor)
        if not divisor:
            raise DivisionByZeroPolynomial("right division by the zero θ-polynomial")
        theta, field = self.theta, self.field
        e = divisor.degree
        lead = divisor.leading_coefficient
        quotient = [field.zero] * max(len(self.coeffs) - e, 0)
        remainder = self
        while remainder and remainder.degree >= e:
            d = remainder.degree - e
            # divisor * (q X^d) has leading coefficient lead * θ^e(q)
            q = theta.apply_inverse(remainder.leading_coefficient / lead, e)
            quotient[d] = quotient[d] + q
            remainder = remainder - divisor * SkewPolynomial.x_power(theta, d, q)
        return SkewPolynomial(theta, quotient), remainder

    def to_string(self, variable: str = "X") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            monomial = f"{variable}^θ^{i}"
            if c == self.field.one:
                terms.append(monomial)
            elif c == -self.field.one:
                terms.append(f"-{monomial}")
            else:
                terms.append(f"({c})*{monomial}")
        return " + ".join(terms).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"SkewPolynomial({self.to_string()})"


def root_space(poly: SkewPolynomial) -> List[FieldElement]:
    """K-basis of ``{v in L : P(v) = 0}``.

    The K-linear map ``v -> P(v)`` is assembled column by column from its
    values on the basis B; its kernel is the root space.
    """
    if not poly:
        raise ValueError("the zero θ-polynomial vanishes everywhere")
    field = poly.field
    columns = [poly(b).coords for b in field.basis()]
    kernel = Matrix.from_columns(field.base, columns).kernel()
    logger.debug(f"root space of {poly}: dimension {len(kernel)}")
    return [field.from_coords(vector) for vector in kernel]


def annihilator(theta: Automorphism, vectors: Sequence[Any]) -> SkewPolynomial:
    """The monic θ-polynomial of degree dim span_K(vectors) vanishing on the span.

    Built inductively: ``P <- (X^θ - θ(P(v))/P(v)) * P`` over a K-basis.
    """
    basis = independent_subset(theta.field, list(vectors))
    poly = SkewPolynomial.one(theta)
    x = SkewPolynomial.x_power(theta, 1)
    for step, v in enumerate(basis):
        value = poly(v)
        if not value:
            logger.error(f"annihilator induction hit P(v) = 0 at step {step}")
            raise InadmissibleAutomorphism(
                f"{v} is outside the span but is a root of {poly}; "
                "the characteristic polynomial of θ is not square-free"
            )
        ratio = theta.apply(value, 1) / value
        poly = (x - SkewPolynomial(theta, [ratio])) * poly
    return poly


def min_ideal_poly(theta: Automorphism, points: Sequence[Any]) -> SkewPolynomial:
    """Monic generator of ``{P : P(x) = 0 for every x in points}``.

    Solves for the smallest s with a monic degree-s solution of
    ``sum_{i<s} a_i θ^i(x_j) = -θ^s(x_j)``. The all-zero input yields the
    unity polynomial.
    """
    field = theta.field
    points = [field(x) for x in points]
    if not any(points):
        return SkewPolynomial.one(theta)
    images: List[List[FieldElement]] = [points]
    for s in range(1, theta.order + 1):
        images.append([theta.apply(x, 1) for x in images[-1]])
        system = Matrix.from_columns(field, images[:s])
        solution = system.solve([-y for y in images[s]])
        if solution is not None:
            logger.debug(f"min(I_X) found at degree {s}")
            return SkewPolynomial(theta, list(solution) + [field.one])
    # θ^n = id makes s = n always solvable
    raise AssertionError("minimal polynomial search exceeded the order of θ")
