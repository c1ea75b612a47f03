"""
Exception hierarchy for the gabidulin package.

Every error derives from :class:`GabidulinError` and from the closest builtin,
so callers may catch either.
"""

from typing import Optional


class GabidulinError(Exception):
    """Base class for all package errors."""


class DivisionByZero(GabidulinError, ZeroDivisionError):
    """Division by the zero element of a field."""


class NonInvertible(GabidulinError, ArithmeticError):
    """A nonzero element has no inverse: the level's modulus is reducible."""

    def __init__(self, level: int, generator: str, modulus: str):
        self.level = level
        self.generator = generator
        self.modulus = modulus
        super().__init__(
            f"element not invertible at level {level} ({generator}): "
            f"defining polynomial {modulus} is not irreducible"
        )


class InvalidTower(GabidulinError, ValueError):
    """A defining polynomial is not monic or has degree < 1."""


class TowerMismatch(GabidulinError, TypeError):
    """Arithmetic between elements of unrelated fields."""


class InvalidAutomorphism(GabidulinError, ValueError):
    """The generator image does not define an automorphism."""


class InadmissibleAutomorphism(GabidulinError, ValueError):
    """The automorphism violates a hypothesis the operation relies on."""


class DivisionByZeroPolynomial(GabidulinError, ZeroDivisionError):
    """Euclidean division by the zero skew polynomial."""


class LengthMismatch(GabidulinError, ValueError):
    """Two words or a word and a code have different lengths."""


class InvalidRank(GabidulinError, ValueError):
    """A requested error rank cannot be realised."""


class InvalidCodeParameters(GabidulinError, ValueError):
    """Code length, dimension or support are out of range."""


class InconsistentWeights(GabidulinError, AssertionError):
    """Two rank weights that must agree came out different."""


class InconsistentAdmissibility(GabidulinError, AssertionError):
    """Square-free characteristic polynomial with a fixed field larger than K."""

    def __init__(self, fixed_dimension: int):
        self.fixed_dimension = fixed_dimension
        super().__init__(f"square-free χ but fixed field of dimension {fixed_dimension}")


class ParseError(GabidulinError, ValueError):
    """Syntax error in a spec or word file."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class InvalidSpec(GabidulinError, ValueError):
    """Well-formed file whose content does not describe a valid object."""

    def __init__(self, message: str, path: Optional[str] = None):
        self.path = path or "$"
        super().__init__(f"{self.path}: {message}")
