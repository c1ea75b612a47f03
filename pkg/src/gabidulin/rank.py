"""
Rank weights of words over L and rank-bounded error sampling.

For ``X = (x_1, ..., x_N)`` and θ of order n:

- w0: θ-degree of the minimal vanishing θ-polynomial of X
- w1: rank over L of the n x N Moore matrix ``(θ^i(x_j))``
- w2: rank over K of the Moore matrix with each entry expanded over B
- w3: rank over K of the m x N coordinate matrix ``X_B``

w0 = w1 and w2 = w3 always; w1 <= w2 with equality when K is the fixed field.
"""

import logging
from typing import Any, Iterable, Iterator, List, Optional, Sequence, Union

from .automorphism import Automorphism
from .constants import DEFAULT_BOX, DEFAULT_SEED
from .errors import InconsistentWeights, InvalidRank, LengthMismatch, TowerMismatch
from .fields import ExtensionField, FieldElement
from .linalg import Matrix, relative_rank
from .models import SplitDistance, WeightReport
from .sampling import Seed, make_rng, random_full_rank_matrix, random_independent
from .skew import min_ideal_poly

logger = logging.getLogger(__name__)

METRICS = ("w0", "w1", "w2", "w3")


class Word:
    """An immutable vector of N elements of one field L."""

    __slots__ = ("field", "entries")

    def __init__(self, field: ExtensionField, entries: Iterable[Any]):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "entries", tuple(field(x) for x in entries))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def zero(cls, field: ExtensionField, length: int) -> "Word":
        return cls(field, [field.zero] * length)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[FieldElement]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> FieldElement:
        return self.entries[i]

    def _check(self, other: "Word") -> None:
        if other.field is not self.field:
            raise TowerMismatch("words over different fields")
        if len(other) != len(self):
            raise LengthMismatch(f"word lengths differ: {len(self)} vs {len(other)}")

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        self._check(other)
        return Word(self.field, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        self._check(other)
        return Word(self.field, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "Word":
        return Word(self.field, [-a for a in self.entries])

    def scale(self, scalar: Any) -> "Word":
        c = self.field(scalar)
        return Word(self.field, [c * a for a in self.entries])

    __rmul__ = scale

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.field is other.field and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __str__(self) -> str:
        return "(" + ", ".join(str(x) for x in self.entries) + ")"

    def __repr__(self) -> str:
        return f"Word{self}"


def _as_word(theta: Automorphism, X: Union[Word, Sequence[Any]]) -> Word:
    if isinstance(X, Word):
        if X.field is not theta.field:
            raise TowerMismatch("word and automorphism live over different fields")
        return X
    return Word(theta.field, X)


def moore_matrix(theta: Automorphism, X: Union[Word, Sequence[Any]], rows: int) -> Matrix:
    """The ``rows x N`` matrix with entry (i, j) = θ^i(x_j)."""
    if rows < 1:
        raise ValueError("a Moore matrix needs at least one row")
    X = _as_word(theta, X)
    table = [list(X.entries)]
    for _ in range(1, rows):
        table.append([theta.apply(x, 1) for x in table[-1]])
    return Matrix(theta.field, table, len(X))


def k_rank(field: ExtensionField, elements: Sequence[Any]) -> int:
    """Dimension over K of the span of ``elements`` (the weight w3 of a list)."""
    return relative_rank(field, list(elements))


def _expanded_rank(theta: Automorphism, moore: Matrix) -> int:
    if moore.cols == 0:
        return 0
    columns = []
    for j in range(moore.cols):
        column: List[Any] = []
        for x in moore.column(j):
            column.extend(x.coords)
        columns.append(column)
    return Matrix.from_columns(theta.base, columns).rank()


def weights(theta: Automorphism, X: Union[Word, Sequence[Any]]) -> WeightReport:
    """All four rank weights of X, with the unconditional equalities asserted."""
    X = _as_word(theta, X)
    if not len(X):
        return WeightReport(0, 0, 0, 0)
    w0 = min_ideal_poly(theta, X.entries).degree
    moore = moore_matrix(theta, X, theta.order)
    w1 = moore.rank()
    w2 = _expanded_rank(theta, moore)
    w3 = k_rank(theta.field, X.entries)
    report = WeightReport(w0, w1, w2, w3)
    if w0 != w1 or w2 != w3 or w1 > w2:
        logger.error(f"weights of {X} violate w0 = w1 <= w2 = w3: {report}")
        raise InconsistentWeights(f"inconsistent weights {report} for {X}")
    logger.debug(f"weights of {X}: {report}")
    return report


def _fixes_exactly_base(theta: Automorphism) -> bool:
    return theta.fixed_field_dimension() == 1


def rank_distance(
    theta: Automorphism,
    X: Union[Word, Sequence[Any]],
    Y: Union[Word, Sequence[Any]],
    metric: Optional[str] = None,
) -> Union[int, SplitDistance]:
    """``w(X - Y)``.

    When θ fixes exactly K the four weights agree and an int is returned.
    Otherwise pass ``metric`` to pick one of ``w0``..``w3``; without it a
    :class:`SplitDistance` carrying both candidate values is returned.
    """
    X, Y = _as_word(theta, X), _as_word(theta, Y)
    if len(X) != len(Y):
        raise LengthMismatch(f"word lengths differ: {len(X)} vs {len(Y)}")
    if metric is not None and metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}; expected one of {', '.join(METRICS)}")
    report = weights(theta, X - Y)
    if metric is not None:
        return getattr(report, metric)
    if _fixes_exactly_base(theta):
        return report.w1
    return SplitDistance(report.w1, report.w2)


def random_rank_error(
    field: ExtensionField,
    length: int,
    t: int,
    seed: Seed = DEFAULT_SEED,
    box: int = DEFAULT_BOX,
) -> Word:
    """A word of K-rank exactly ``t``: ``e_j = sum_i eps_i c_ij``.

    The eps_i are K-independent random elements of L and C is a random
    integer ``t x length`` matrix of rank t.
    """
    if t < 0 or t > min(length, field.degree):
        raise InvalidRank(
            f"rank {t} impossible for length {length} over a degree-{field.degree} extension"
        )
    if t == 0:
        return Word.zero(field, length)
    rng = make_rng(seed)
    eps = random_independent(field, t, rng, box)
    C = random_full_rank_matrix(t, length, rng, box)
    entries = []
    for j in range(length):
        acc = field.zero
        for i in range(t):
            c = C[i, j]
            if c:
                acc = acc + eps[i] * c
        entries.append(acc)
    error = Word(field, entries)
    logger.debug(f"rank-{t} error of length {length}: {error}")
    return error
