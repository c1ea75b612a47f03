"""
Exact number-field towers Q = F0 ⊆ F1 ⊆ ... ⊆ Fd built as quotient rings.

Level 0 is the rational field, backed by sympy's ``QQ`` domain (gmpy2 ``mpq``
when available). Level i is ``F(i-1)[gen_i] / (modulus_i)``; its elements are
coordinate tuples over the level below in the power basis ``1, gen, gen^2, ...``.
"""

import logging
import operator
from fractions import Fraction
from numbers import Rational as _AbstractRational
from typing import Any, Iterable, List, Optional, Sequence, Tuple, Union

from sympy.polys.domains import QQ

from .errors import DivisionByZero, InvalidTower, NonInvertible, TowerMismatch
from .polynomials import Polynomial, poly_xgcd

logger = logging.getLogger(__name__)

Rational = QQ.dtype


def parse_rational(text: str) -> Rational:
    """Parse ``"p"`` or ``"p/q"`` into an exact rational."""
    value = Fraction(text.strip())
    return QQ(value.numerator, value.denominator)


class RationalField:
    """The prime field Q, shared by every tower."""

    level = 0
    degree = 1
    generator = "1"

    def __init__(self):
        self.zero = QQ(0)
        self.one = QQ(1)
        self.base = None

    def __call__(self, value: Any) -> Rational:
        if isinstance(value, Rational):
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not field elements")
        if isinstance(value, float):
            raise TypeError(f"inexact value {value!r} cannot enter an exact field")
        if isinstance(value, int):
            return QQ(value)
        if isinstance(value, str):
            return parse_rational(value)
        if isinstance(value, _AbstractRational):
            return QQ(int(value.numerator), int(value.denominator))
        if isinstance(value, FieldElement):
            raise TowerMismatch(f"cannot coerce {value} from {value.field} into Q")
        try:
            # numpy integers and other integral types
            return QQ(operator.index(value))
        except (TypeError, ValueError):
            raise TypeError(f"cannot coerce {value!r} into Q")

    def contains(self, value: Any) -> bool:
        return isinstance(value, (Rational, int))

    def ancestors(self) -> Tuple["RationalField", ...]:
        return (self,)

    def __repr__(self) -> str:
        return "Q"


QQ_FIELD = RationalField()


class ExtensionField:
    """``base[gen] / (modulus)`` for a monic ``modulus`` over ``base``."""

    def __init__(self, base: Any, modulus: Polynomial, generator: str):
        if modulus.field is not base:
            raise InvalidTower(f"modulus for {generator} is not defined over {base}")
        if modulus.degree == 0 or not modulus:
            raise InvalidTower(f"defining polynomial for {generator} must have degree >= 1")
        if not modulus.is_monic():
            raise InvalidTower(f"defining polynomial {modulus} for {generator} is not monic")
        self.base = base
        self.modulus = modulus
        self.generator = generator
        self.level = base.level + 1
        self.degree = modulus.degree
        self.zero = FieldElement(self, (base.zero,) * self.degree)
        self.one = FieldElement(self, (base.one,) + (base.zero,) * (self.degree - 1))
        self._modulus_tail = tuple(-c for c in modulus.coeffs[:-1])

    def ancestors(self) -> Tuple[Any, ...]:
        """This field followed by every field below it down to Q."""
        return (self,) + self.base.ancestors()

    @property
    def gen(self) -> "FieldElement":
        if self.degree == 1:
            return self.from_coords([-self.modulus.coeffs[0]])
        return self.from_coords([self.base.zero, self.base.one])

    def from_coords(self, coords: Sequence[Any]) -> "FieldElement":
        if len(coords) > self.degree:
            raise ValueError(
                f"{len(coords)} coordinates given for a degree-{self.degree} extension"
            )
        values = [self.base(c) for c in coords]
        values.extend([self.base.zero] * (self.degree - len(values)))
        return FieldElement(self, tuple(values))

    def __call__(self, value: Any) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field is self:
                return value
            if value.field in self.base.ancestors():
                return self._embed(self.base(value))
            raise TowerMismatch(f"cannot coerce {value} from {value.field} into {self}")
        if isinstance(value, (list, tuple)):
            return self.from_coords(value)
        return self._embed(self.base(value))

    def _embed(self, constant: Any) -> "FieldElement":
        return FieldElement(self, (constant,) + (self.base.zero,) * (self.degree - 1))

    def contains(self, value: Any) -> bool:
        if isinstance(value, FieldElement):
            return value.field in self.ancestors()
        return isinstance(value, (Rational, int))

    def basis(self) -> Tuple["FieldElement", ...]:
        """The power basis ``1, gen, ..., gen^(degree-1)`` over ``base``."""
        return tuple(
            FieldElement(
                self,
                tuple(self.base.one if i == j else self.base.zero for i in range(self.degree)),
            )
            for j in range(self.degree)
        )

    def reduce(self, coefficients: List[Any]) -> "FieldElement":
        """Reduce a coefficient list of any length modulo the defining polynomial."""
        d = self.degree
        values = list(coefficients)
        for i in range(len(values) - 1, d - 1, -1):
            c = values[i]
            if not c:
                continue
            for j, t in enumerate(self._modulus_tail):
                if t:
                    values[i - d + j] = values[i - d + j] + c * t
        values = values[:d] + [self.base.zero] * (d - len(values))
        return FieldElement(self, tuple(values))

    def modulus_string(self) -> str:
        return self.modulus.to_string(self.generator)

    def __repr__(self) -> str:
        return f"{self.base!r}[{self.generator}]/({self.modulus_string()})"


Field = Union[RationalField, ExtensionField]


class FieldElement:
    """Immutable element of an :class:`ExtensionField`."""

    __slots__ = ("field", "coords")

    def __init__(self, field: ExtensionField, coords: Tuple[Any, ...]):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def __reduce__(self):
        return (FieldElement, (self.field, self.coords))

    def _lift(self, other: Any) -> Optional["FieldElement"]:
        """Coerce ``other`` into this element's field, or None to defer."""
        if isinstance(other, FieldElement):
            if other.field is self.field:
                return other
            if other.field in self.field.ancestors():
                return self.field(other)
            if self.field in other.field.ancestors():
                return None
            raise TowerMismatch(
                f"elements of {self.field} and {other.field} cannot be combined"
            )
        try:
            return self.field(other)
        except (TypeError, ValueError):
            return None

    def _promoted(self, other: Any) -> Optional["FieldElement"]:
        """This element embedded in ``other``'s field when that field lies above."""
        if (
            isinstance(other, FieldElement)
            and other.field is not self.field
            and self.field in other.field.ancestors()
        ):
            return other.field(self)
        return None

    def __bool__(self) -> bool:
        return any(self.coords)

    def __add__(self, other):
        promoted = self._promoted(other)
        if promoted is not None:
            return promoted + other
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        promoted = self._promoted(other)
        if promoted is not None:
            return promoted - other
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, FieldElement) and other.field is self.field:
            return self._multiply(other)
        promoted = self._promoted(other)
        if promoted is not None:
            return promoted._multiply(other)
        if not isinstance(other, FieldElement) or other.field in self.field.ancestors():
            try:
                scalar = self.field.base(other)
            except TypeError:
                return NotImplemented
            return FieldElement(self.field, tuple(a * scalar for a in self.coords))
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return self._multiply(lifted)

    __rmul__ = __mul__

    def _multiply(self, other: "FieldElement") -> "FieldElement":
        base = self.field.base
        d = self.field.degree
        product = [base.zero] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if not a:
                continue
            for j, b in enumerate(other.coords):
                if b:
                    product[i + j] = product[i + j] + a * b
        return self.field.reduce(product)

    def inverse(self) -> "FieldElement":
        """Inverse by the extended Euclidean algorithm on the defining polynomial."""
        if not self:
            raise DivisionByZero(f"division by zero in {self.field}")
        field = self.field
        g, s, _ = poly_xgcd(Polynomial(field.base, self.coords), field.modulus)
        if g.degree != 0:
            logger.error(f"non-invertible element {self} at level {field.level}")
            raise NonInvertible(field.level, field.generator, field.modulus_string())
        return field.reduce(list(s.coeffs))

    def __truediv__(self, other):
        if isinstance(other, FieldElement) and other.field is self.field:
            return self._multiply(other.inverse())
        promoted = self._promoted(other)
        if promoted is not None:
            return promoted._multiply(other.inverse())
        if not isinstance(other, FieldElement) or other.field in self.field.ancestors():
            try:
                scalar = self.field.base(other)
            except TypeError:
                return NotImplemented
            if not scalar:
                raise DivisionByZero(f"division by zero in {self.field}")
            inverse = self.field.base.one / scalar
            return FieldElement(self.field, tuple(a * inverse for a in self.coords))
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return self._multiply(lifted.inverse())

    def __rtruediv__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return lifted._multiply(self.inverse())

    def __pow__(self, exponent: int) -> "FieldElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = self.field.one, self
        while exponent:
            if exponent & 1:
                result = result._multiply(base)
            base = base._multiply(base)
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement) and other.field is self.field:
            return self.coords == other.coords
        try:
            lifted = self._lift(other)
        except TowerMismatch:
            return False
        if lifted is None:
            return NotImplemented
        return self.coords == lifted.coords

    def __ne__(self, other) -> bool:
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self) -> int:
        # constants hash like the element they embed
        if not any(self.coords[1:]):
            return hash(self.coords[0])
        return hash((self.field.level, self.coords))

    def flat_coords(self) -> Tuple[Rational, ...]:
        """Absolute rational coordinates in the product monomial basis."""
        out: List[Rational] = []
        for c in self.coords:
            if isinstance(c, FieldElement):
                out.extend(c.flat_coords())
            else:
                out.append(c)
        return tuple(out)

    def __str__(self) -> str:
        return Polynomial(self.field.base, self.coords).to_string(self.field.generator)

    def __repr__(self) -> str:
        return f"<{self} in {self.field!r}>"


class FieldTower:
    """A chain ``Q ⊆ F1 ⊆ ... ⊆ Fd`` of quotient fields.

    ``top`` is L and ``base`` is K, the level just below L. The relative degree
    ``m = [L:K]`` sizes the automorphism matrix; ``degree`` is ``[L:Q]``.
    """

    def __init__(self, levels: Sequence[Tuple[str, Sequence[Any]]]):
        if not levels:
            raise InvalidTower("a tower needs at least one extension level")
        fields: List[Any] = [QQ_FIELD]
        for generator, coefficients in levels:
            below = fields[-1]
            modulus = Polynomial(below, [below(c) for c in coefficients])
            fields.append(ExtensionField(below, modulus, generator))
        self.fields: Tuple[Any, ...] = tuple(fields)
        logger.debug(f"Built tower {self!r} of degree {self.degree}")

    @property
    def depth(self) -> int:
        return len(self.fields) - 1

    @property
    def top(self) -> ExtensionField:
        return self.fields[-1]

    @property
    def base(self) -> Field:
        return self.fields[-2]

    @property
    def relative_degree(self) -> int:
        return self.top.degree

    @property
    def degree(self) -> int:
        result = 1
        for field in self.fields[1:]:
            result *= field.degree
        return result

    def field(self, level: int) -> Field:
        return self.fields[level]

    def generator(self, level: Optional[int] = None) -> FieldElement:
        return self.fields[self.depth if level is None else level].gen

    def __call__(self, value: Any) -> FieldElement:
        return self.top(value)

    def basis(self) -> Tuple[FieldElement, ...]:
        """The K-basis B of L."""
        return self.top.basis()

    def coordinates(self, value: Any) -> Tuple[Any, ...]:
        """Coordinates of ``value`` over K in the basis B."""
        return self.top(value).coords

    def from_coordinates(self, coords: Sequence[Any]) -> FieldElement:
        return self.top.from_coords(coords)

    def owns(self, value: Any) -> bool:
        return self.top.contains(value)

    def __repr__(self) -> str:
        return repr(self.top)


def build_tower(levels: Iterable[Tuple[str, Sequence[Any]]]) -> FieldTower:
    return FieldTower(list(levels))
