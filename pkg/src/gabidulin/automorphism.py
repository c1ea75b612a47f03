"""
The automorphism θ of L fixing K, given by the image of L's generator.

Construction validates the image, then eagerly computes the matrix M of θ over
K in the power basis, its powers up to the order of θ, and the characteristic
polynomial.
"""

import logging
from typing import Any, List, Tuple

from .errors import InconsistentAdmissibility, InvalidAutomorphism
from .fields import FieldElement, FieldTower
from .linalg import Matrix, polynomial_at_matrix
from .models import AdmissibilityReport
from .polynomials import Polynomial, is_square_free

logger = logging.getLogger(__name__)


class Automorphism:
    """θ: L -> L over K, determined by ``θ(gen) = generator_image``."""

    def __init__(self, tower: FieldTower, generator_image: Any):
        self.tower = tower
        self.field = tower.top
        self.base = tower.base
        self.generator_image = self.field(generator_image)
        self.degree = tower.relative_degree

        if self.field.modulus(self.generator_image):
            raise InvalidAutomorphism(
                f"{self.generator_image} is not a root of {self.field.modulus_string()}"
            )

        # columns of M are the images of the basis vectors gen^j
        images: List[FieldElement] = [self.field.one]
        for _ in range(1, self.degree):
            images.append(images[-1] * self.generator_image)
        self._basis_images = tuple(images)
        self.matrix = Matrix.from_columns(self.base, [v.coords for v in images])

        self._powers = self._compute_powers()
        self.order = len(self._powers)
        self.char_poly = self.matrix.charpoly()
        logger.debug(
            f"θ: {self.field.generator} -> {self.generator_image}, order {self.order}, "
            f"χ = {self.char_poly}"
        )

    def _compute_powers(self) -> Tuple[Matrix, ...]:
        identity = Matrix.identity(self.base, self.degree)
        powers = [identity]
        current = self.matrix
        for _ in range(self.degree):
            if current == identity:
                return tuple(powers)
            powers.append(current)
            current = current * self.matrix
        logger.error(f"no power of M up to {self.degree} is the identity")
        raise InvalidAutomorphism(
            f"θ: {self.field.generator} -> {self.generator_image} has no finite order <= m"
        )

    @classmethod
    def identity(cls, tower: FieldTower) -> "Automorphism":
        return cls(tower, tower.top.gen)

    @classmethod
    def from_exponent(cls, tower: FieldTower, exponent: int) -> "Automorphism":
        """θ: gen -> gen^exponent."""
        return cls(tower, tower.top.gen ** exponent)

    def power_matrix(self, i: int) -> Matrix:
        return self._powers[i % self.order]

    def apply(self, v: Any, i: int = 1) -> FieldElement:
        """θ^i(v) for i >= 0, by a product with M^i on the K-coordinates."""
        v = self.field(v)
        i %= self.order
        if i == 0:
            return v
        return FieldElement(self.field, self.power_matrix(i).apply(v.coords))

    def apply_by_substitution(self, v: Any, i: int = 1) -> FieldElement:
        """θ^i(v) by substituting the generator image ``i`` times."""
        v = self.field(v)
        for _ in range(i % self.order):
            acc = self.field.zero
            for c, image in zip(v.coords, self._basis_images):
                if c:
                    acc = acc + image * c
            v = acc
        return v

    def apply_inverse(self, v: Any, i: int = 1) -> FieldElement:
        """θ^(-i)(v)."""
        return self.apply(v, (-i) % self.order)

    def __call__(self, v: Any) -> FieldElement:
        return self.apply(v, 1)

    def charpoly_annihilates(self) -> bool:
        """Cayley-Hamilton: χ(M) = 0."""
        return polynomial_at_matrix(self.char_poly, self.matrix).is_zero()

    def fixed_field_dimension(self) -> int:
        """K-dimension of the fixed field L^θ, as dim ker(M - I)."""
        identity = Matrix.identity(self.base, self.degree)
        return len((self.matrix - identity).kernel())

    def is_admissible(self) -> AdmissibilityReport:
        square_free = is_square_free(self.char_poly)
        fixed_dimension = self.fixed_field_dimension()
        report = AdmissibilityReport(
            square_free=square_free,
            fixed_field_is_k=fixed_dimension == 1,
            full_order=self.order == self.degree,
            order=self.order,
            degree=self.degree,
            char_poly=self.char_poly.to_string("Y"),
        )
        if square_free and fixed_dimension != 1:
            logger.error(f"square-free χ but fixed field of dimension {fixed_dimension}")
            raise InconsistentAdmissibility(fixed_dimension)
        logger.info(f"admissibility of θ: {self.field.generator} -> {self.generator_image}: "
                    f"{report.admissible}")
        return report

    def __repr__(self) -> str:
        return f"Automorphism({self.field.generator} -> {self.generator_image})"
