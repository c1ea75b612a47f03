"""
Seeded random sampling of field elements, words and matrices.

All randomness flows through a numpy ``Generator`` (PCG64 bit generator), so a
seed fixes every draw. Coefficients are small integers from ``[-box, box]``.
"""

import logging
from typing import Any, List, Optional, Union

import numpy as np

from .constants import DEFAULT_BOX, DEFAULT_SEED
from .fields import QQ_FIELD, ExtensionField, FieldElement
from .linalg import Matrix, relative_rank

logger = logging.getLogger(__name__)

Seed = Union[int, np.random.Generator, None]

# Redraw limit for rejection loops; hitting it means the box is too small.
MAX_ATTEMPTS = 1000


def make_rng(seed: Seed = DEFAULT_SEED) -> np.random.Generator:
    """A PCG64 generator; an existing generator is passed through."""
    return np.random.default_rng(seed)


def random_integer(rng: np.random.Generator, box: int = DEFAULT_BOX) -> int:
    return int(rng.integers(-box, box + 1))


def random_element(field: Any, rng: np.random.Generator, box: int = DEFAULT_BOX) -> Any:
    """Uniform draw with every rational coordinate in ``[-box, box]``."""
    if not isinstance(field, ExtensionField):
        return field(random_integer(rng, box))
    return FieldElement(
        field, tuple(random_element(field.base, rng, box) for _ in range(field.degree))
    )


def random_nonzero_element(field: Any, rng: np.random.Generator, box: int = DEFAULT_BOX) -> Any:
    for _ in range(MAX_ATTEMPTS):
        value = random_element(field, rng, box)
        if value:
            return value
    raise RuntimeError(f"no nonzero element drawn from {field!r} with box {box}")


def random_elements(
    field: Any, count: int, rng: np.random.Generator, box: int = DEFAULT_BOX
) -> List[Any]:
    return [random_element(field, rng, box) for _ in range(count)]


def random_independent(
    field: ExtensionField, count: int, rng: np.random.Generator, box: int = DEFAULT_BOX
) -> List[FieldElement]:
    """``count`` elements of ``field`` that are linearly independent over its base."""
    if count > field.degree:
        raise ValueError(f"at most {field.degree} independent elements exist, asked for {count}")
    chosen: List[FieldElement] = []
    attempts = 0
    while len(chosen) < count:
        attempts += 1
        if attempts > MAX_ATTEMPTS:
            raise RuntimeError(f"could not draw {count} independent elements")
        candidate = random_element(field, rng, box)
        if relative_rank(field, chosen + [candidate]) == len(chosen) + 1:
            chosen.append(candidate)
        else:
            logger.debug(f"rejected dependent candidate {candidate}")
    return chosen


def random_full_rank_matrix(
    rows: int, cols: int, rng: np.random.Generator, box: int = DEFAULT_BOX, field: Optional[Any] = None
) -> Matrix:
    """A ``rows x cols`` integer matrix of rank ``rows`` (requires ``rows <= cols``)."""
    field = QQ_FIELD if field is None else field
    if rows > cols:
        raise ValueError(f"a {rows}x{cols} matrix cannot have rank {rows}")
    for _ in range(MAX_ATTEMPTS):
        matrix = Matrix(
            field,
            [[random_integer(rng, box) for _ in range(cols)] for _ in range(rows)],
            cols,
        )
        if matrix.rank() == rows:
            return matrix
    raise RuntimeError(f"no rank-{rows} {rows}x{cols} matrix drawn with box {box}")
