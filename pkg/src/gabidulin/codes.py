"""
Generalized Gabidulin codes over a number-field extension L/K.

A code is fixed by an admissible θ, a support ``g`` of N K-independent
elements of L and a dimension k. Codewords are the evaluations ``f(g)`` of
θ-polynomials of θ-degree < k; the minimum rank distance is N - k + 1 and up
to ``t = (N - k) // 2`` rank errors are corrected.
"""

import logging
from functools import cached_property
from typing import Any, List, Sequence, Tuple, Union

from .automorphism import Automorphism
from .constants import DEFAULT_BOX, DEFAULT_SEED
from .errors import InadmissibleAutomorphism, InvalidCodeParameters, LengthMismatch
from .fields import FieldElement
from .linalg import Matrix
from .models import DecodeOutcome, DecodeStatus, SingletonReport
from .rank import Word, k_rank, moore_matrix
from .sampling import Seed, make_rng, random_element, random_independent
from .skew import SkewPolynomial

logger = logging.getLogger(__name__)


class GabidulinCode:
    """``Gab_{θ,k}(g)``: evaluation code of θ-polynomials of degree < k."""

    def __init__(self, theta: Automorphism, support: Union[Word, Sequence[Any]], k: int):
        report = theta.is_admissible()
        if not report.admissible:
            logger.error(f"refusing code over inadmissible θ:\n{report}")
            raise InadmissibleAutomorphism(
                f"{theta!r} is not admissible (square-free: {report.square_free}, "
                f"fixed field is K: {report.fixed_field_is_k}, full order: {report.full_order})"
            )
        self.theta = theta
        self.field = theta.field
        self.support = support if isinstance(support, Word) else Word(self.field, support)
        self.length = len(self.support)
        self.dimension = k

        m = theta.degree
        if not 1 <= self.length <= m:
            raise InvalidCodeParameters(f"length N = {self.length} must satisfy 1 <= N <= m = {m}")
        if not 1 <= k <= self.length:
            raise InvalidCodeParameters(f"dimension k = {k} must satisfy 1 <= k <= N = {self.length}")
        support_rank = k_rank(self.field, self.support.entries)
        if support_rank != self.length:
            raise InvalidCodeParameters(
                f"support entries are not K-independent (rank {support_rank} < {self.length})"
            )
        logger.info(f"Constructed Gabidulin code N={self.length}, k={k}, t={self.radius}")

    @classmethod
    def default_support(cls, theta: Automorphism, n: int) -> Word:
        """The power-basis support ``(1, gen, ..., gen^(n-1))``."""
        basis = theta.field.basis()
        if not 1 <= n <= len(basis):
            raise InvalidCodeParameters(f"length {n} outside 1..{len(basis)}")
        return Word(theta.field, basis[:n])

    @classmethod
    def random_support(
        cls, theta: Automorphism, n: int, seed: Seed = DEFAULT_SEED, box: int = DEFAULT_BOX
    ) -> Word:
        if not 1 <= n <= theta.degree:
            raise InvalidCodeParameters(f"length {n} outside 1..{theta.degree}")
        return Word(theta.field, random_independent(theta.field, n, make_rng(seed), box))

    @property
    def radius(self) -> int:
        return (self.length - self.dimension) // 2

    @property
    def min_distance_bound(self) -> int:
        """Singleton bound N - k + 1, attained by these codes."""
        return self.length - self.dimension + 1

    @cached_property
    def generator_matrix(self) -> Matrix:
        return moore_matrix(self.theta, self.support, self.dimension)

    @cached_property
    def parity_check_matrix(self) -> Matrix:
        """Rows span the right kernel of G, so ``G * H^T = 0``."""
        kernel = self.generator_matrix.kernel()
        return Matrix(self.field, kernel, self.length)

    def parity_check(self) -> Matrix:
        return self.parity_check_matrix

    def message_polynomial(self, message: Sequence[Any]) -> SkewPolynomial:
        if len(message) != self.dimension:
            raise LengthMismatch(f"message of length {len(message)} for k = {self.dimension}")
        return SkewPolynomial(self.theta, message)

    def encode(self, message: Sequence[Any]) -> Word:
        """``c_i = f(g_i)`` with ``f = sum message_j X^{θ^j}``."""
        f = self.message_polynomial(message)
        return Word(self.field, [f(g) for g in self.support])

    def _check_word(self, word: Union[Word, Sequence[Any]]) -> Word:
        word = word if isinstance(word, Word) else Word(self.field, word)
        if len(word) != self.length:
            raise LengthMismatch(f"word of length {len(word)} for a code of length {self.length}")
        return word

    def syndrome(self, word: Union[Word, Sequence[Any]]) -> Tuple[FieldElement, ...]:
        word = self._check_word(word)
        return self.parity_check_matrix.apply(word.entries)

    def is_codeword(self, word: Union[Word, Sequence[Any]]) -> bool:
        return not any(self.syndrome(word))

    def random_message(self, rng, box: int = DEFAULT_BOX) -> List[FieldElement]:
        return [random_element(self.field, rng, box) for _ in range(self.dimension)]

    def singleton_check(
        self, trials: int, seed: Seed = DEFAULT_SEED, box: int = DEFAULT_BOX
    ) -> SingletonReport:
        """Sample nonzero codewords and compare their ranks with N - k + 1."""
        if trials < 1:
            raise ValueError("trials must be at least 1")
        rng = make_rng(seed)
        ranks: List[int] = []
        violations: List[int] = []
        while len(ranks) < trials:
            message = self.random_message(rng, box)
            if not any(message):
                continue
            rank = k_rank(self.field, self.encode(message).entries)
            if not self.min_distance_bound <= rank <= self.length:
                logger.error(f"codeword of rank {rank} breaks the bound {self.min_distance_bound}")
                violations.append(rank)
            ranks.append(rank)
        return SingletonReport(
            trials=trials,
            bound=self.min_distance_bound,
            length=self.length,
            min_rank=min(ranks),
            max_rank=max(ranks),
            violations=violations,
        )

    def reconstruction_matrix(self, word: Word) -> Matrix:
        """``S = [θ^i(g) for i < k+t | θ^i(y) for i <= t]`` of size N x (k+2t+1)."""
        t = self.radius
        g_part = moore_matrix(self.theta, self.support, self.dimension + t)
        y_part = moore_matrix(self.theta, word, t + 1)
        columns = [g_part.row(i) for i in range(g_part.rows)]
        columns += [y_part.row(i) for i in range(y_part.rows)]
        return Matrix.from_columns(self.field, columns)

    def decode(self, word: Union[Word, Sequence[Any]]) -> DecodeOutcome:
        """Unique decoding up to rank t by linearized reconstruction.

        A kernel vector (N; U) of S gives N(g_i) = W(y_i) with W = -U; the
        message polynomial is the right quotient of N by W.
        """
        word = self._check_word(word)
        k, t = self.dimension, self.radius
        kernel = self.reconstruction_matrix(word).kernel()
        if not kernel:
            logger.info("decode: reconstruction system has only the trivial solution")
            return DecodeOutcome(DecodeStatus.NO_SOLUTION, dimension=k)

        for index, vector in enumerate(kernel):
            numerator = SkewPolynomial(self.theta, vector[: k + t])
            denominator = SkewPolynomial(self.theta, [-u for u in vector[k + t :]])
            if not denominator:
                logger.warning(f"decode: kernel vector {index} has W = 0, trying the next one")
                continue
            quotient, remainder = numerator.right_div(denominator)
            if remainder or quotient.degree >= k:
                logger.info(
                    f"decode: N is not a right multiple of W (deg Q = {quotient.degree})"
                )
                return DecodeOutcome(DecodeStatus.TOO_MANY_ERRORS, dimension=k)
            error = word - Word(self.field, [quotient(g) for g in self.support])
            error_rank = k_rank(self.field, error.entries)
            if error_rank > t:
                logger.info(f"decode: residual error of rank {error_rank} exceeds t = {t}")
                return DecodeOutcome(DecodeStatus.TOO_MANY_ERRORS, dimension=k)
            logger.info(f"decode: success, error rank {error_rank}")
            return DecodeOutcome(DecodeStatus.SUCCESS, quotient, error, dimension=k)

        return DecodeOutcome(DecodeStatus.TOO_MANY_ERRORS, dimension=k)

    def __repr__(self) -> str:
        return f"GabidulinCode(N={self.length}, k={self.dimension}, θ={self.theta!r})"
