"""
Dense univariate polynomials over any exact field of a tower.

Coefficients are stored lowest degree first with no trailing zeros. The field
object only has to provide ``zero``, ``one`` and a coercing ``__call__``.
"""

import logging
from typing import Any, Iterable, Sequence, Tuple

from .errors import DivisionByZero

logger = logging.getLogger(__name__)


class _NegativeInfinity:
    """Degree of the zero polynomial.

    Compares below every integer but refuses arithmetic, so a degree
    computation on the zero polynomial fails loudly.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("-oo")

    def __repr__(self):
        return "-oo"

    def __reduce__(self):
        return (_NegativeInfinity, ())


NEG_INF = _NegativeInfinity()


class Polynomial:
    """Immutable polynomial ``sum(coeffs[i] * Y**i)`` over ``field``."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Any, coeffs: Iterable[Any] = ()):
        values = [field(c) for c in coeffs]
        while values and not values[-1]:
            values.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(values))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def monomial(cls, field: Any, degree: int, coefficient: Any = 1) -> "Polynomial":
        return cls(field, [field.zero] * degree + [coefficient])

    @classmethod
    def zero(cls, field: Any) -> "Polynomial":
        return cls(field)

    @classmethod
    def one(cls, field: Any) -> "Polynomial":
        return cls(field, [field.one])

    @property
    def degree(self):
        if not self.coeffs:
            return NEG_INF
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self):
        if not self.coeffs:
            return self.field.zero
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial(self.field, [other])

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.field, [self[i] + other[i] for i in range(size)])

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.field, [-c for c in self.coeffs])

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return Polynomial(self.field, [c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return Polynomial(self.field)
        product = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                product[i + j] = product[i + j] + a * b
        return Polynomial(self.field, product)

    def __rmul__(self, other) -> "Polynomial":
        return Polynomial(self.field, [other * c for c in self.coeffs])

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result, base = Polynomial.one(self.field), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, other: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        other = self._coerce(other)
        if not other.coeffs:
            raise DivisionByZero("polynomial division by zero")
        remainder = list(self.coeffs)
        shift_count = len(remainder) - len(other.coeffs) + 1
        if shift_count <= 0:
            return Polynomial(self.field), self
        quotient = [self.field.zero] * shift_count
        lead_inverse = self.field.one / other.coeffs[-1]
        for shift in range(shift_count - 1, -1, -1):
            c = remainder[shift + len(other.coeffs) - 1]
            if not c:
                continue
            q = c * lead_inverse
            quotient[shift] = q
            for j, b in enumerate(other.coeffs):
                remainder[shift + j] = remainder[shift + j] - q * b
        return Polynomial(self.field, quotient), Polynomial(self.field, remainder)

    def __floordiv__(self, other) -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Polynomial":
        return divmod(self, other)[1]

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return self.coeffs == Polynomial(self.field, [other]).coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        return self * (self.field.one / self.coeffs[-1])

    def derivative(self) -> "Polynomial":
        return Polynomial(self.field, [c * i for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        """Horner evaluation; ``x`` may live in any extension of ``field``."""
        result = self.field.zero
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def to_string(self, variable: str = "Y") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            monomial = "" if i == 0 else variable if i == 1 else f"{variable}^{i}"
            text = str(c)
            if " " in text:
                text = f"({text})"
            if not monomial:
                terms.append(text)
            elif c == self.field.one:
                terms.append(monomial)
            elif c == -self.field.one:
                terms.append(f"-{monomial}")
            else:
                terms.append(f"{text}*{monomial}")
        return " + ".join(terms).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_string()})"


def poly_xgcd(a: Polynomial, b: Polynomial) -> Tuple[Polynomial, Polynomial, Polynomial]:
    """Return ``(g, s, t)`` with ``g = s*a + t*b`` and ``g`` monic (or zero)."""
    field = a.field
    r0, r1 = a, b
    s0, s1 = Polynomial.one(field), Polynomial.zero(field)
    t0, t1 = Polynomial.zero(field), Polynomial.one(field)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    scale = field.one / r0.leading_coefficient
    return r0 * scale, s0 * scale, t0 * scale


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor of ``a`` and ``b`` (not both zero)."""
    if not a and not b:
        raise ValueError("gcd of two zero polynomials is undefined")
    return poly_xgcd(a, b)[0]


def is_square_free(p: Polynomial) -> bool:
    """True when ``gcd(p, p')`` is constant (characteristic zero)."""
    g = poly_gcd(p, p.derivative())
    logger.debug(f"gcd({p}, p') = {g}")
    return g.degree == 0


def from_integers(field: Any, coefficients: Sequence[int]) -> Polynomial:
    return Polynomial(field, [field(c) for c in coefficients])
