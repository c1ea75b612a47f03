"""
Data models for reports, file specs and decoder outcomes.
"""

from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import TYPE_CHECKING, Any, Dict, List, Optional

if TYPE_CHECKING:
    from .rank import Word
    from .skew import SkewPolynomial


@dataclass(frozen=True)
class AdmissibilityReport:
    square_free: bool
    fixed_field_is_k: bool
    full_order: bool
    order: int
    degree: int  # m = [L:K]
    char_poly: str

    @property
    def admissible(self) -> bool:
        return self.square_free and self.fixed_field_is_k and self.full_order

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "AdmissibilityReport":
        return cls(
            square_free=bool(data["square_free"]),
            fixed_field_is_k=bool(data["fixed_field_is_k"]),
            full_order=bool(data["full_order"]),
            order=int(data["order"]),
            degree=int(data["degree"]),
            char_poly=str(data["char_poly"]),
        )

    def __str__(self) -> str:
        def yes_no(flag: bool) -> str:
            return "yes" if flag else "no"

        return (
            f"characteristic polynomial: {self.char_poly}\n"
            f"├─ square-free: {yes_no(self.square_free)}\n"
            f"├─ order: {self.order} (m = {self.degree}, full: {yes_no(self.full_order)})\n"
            f"├─ fixed field is K: {yes_no(self.fixed_field_is_k)}\n"
            f"└─ admissible: {yes_no(self.admissible)}"
        )


@dataclass(frozen=True)
class WeightReport:
    w0: int
    w1: int
    w2: int
    w3: int

    @property
    def metrics_agree(self) -> bool:
        return self.w1 == self.w2

    @property
    def unified(self) -> Optional[int]:
        """The rank weight when all four definitions coincide."""
        return self.w1 if self.metrics_agree else None

    def as_tuple(self):
        return (self.w0, self.w1, self.w2, self.w3)

    def __str__(self) -> str:
        return " ".join(str(w) for w in self.as_tuple())


@dataclass(frozen=True)
class SplitDistance:
    """Distance under an automorphism whose fixed field is larger than K."""

    w1: int
    w2: int

    def __str__(self) -> str:
        return f"w1={self.w1} w2={self.w2} (distinct metrics)"


class DecodeStatus(Enum):
    SUCCESS = "success"
    TOO_MANY_ERRORS = "too-many-errors"
    NO_SOLUTION = "no-solution"


@dataclass(frozen=True)
class DecodeOutcome:
    status: DecodeStatus
    message_poly: Optional["SkewPolynomial"] = None
    error: Optional["Word"] = None
    dimension: int = 0

    @property
    def ok(self) -> bool:
        return self.status is DecodeStatus.SUCCESS

    @property
    def message(self) -> Optional[List[Any]]:
        """The ``k`` recovered message symbols, lowest θ-power first."""
        if self.message_poly is None:
            return None
        return [self.message_poly[i] for i in range(self.dimension)]


@dataclass(frozen=True)
class SingletonReport:
    trials: int
    bound: int  # N - k + 1
    length: int
    min_rank: int
    max_rank: int
    violations: List[int] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        status = "consistent" if self.holds else f"{len(self.violations)} violations"
        return (
            f"{self.trials} codewords: rank in [{self.min_rank}, {self.max_rank}], "
            f"bound N-k+1 = {self.bound}, {status}"
        )


@dataclass(frozen=True)
class LevelSpec:
    generator: str
    min_poly: List[Any]


@dataclass(frozen=True)
class FieldSpec:
    levels: List[LevelSpec]
    theta_image: Any
    version: int = 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "version": self.version,
            "levels": [
                {"generator": lv.generator, "min_poly": lv.min_poly} for lv in self.levels
            ],
            "theta_image": self.theta_image,
        }


@dataclass(frozen=True)
class ReproCheck:
    quantity: str
    expected: Any
    observed: Any

    @property
    def ok(self) -> bool:
        return self.expected == self.observed
