import pytest
import sympy

from gabidulin.fields import QQ, QQ_FIELD
from gabidulin.linalg import (
    Matrix,
    coordinate_matrix,
    independent_subset,
    polynomial_at_matrix,
    rank_kernel_solve,
    relative_rank,
)
from gabidulin.sampling import make_rng, random_element


def qmatrix(rows):
    return Matrix(QQ_FIELD, rows)


def test_rank_and_kernel():
    m = qmatrix([[1, 2], [2, 4]])
    assert m.rank() == 1
    assert m.kernel() == [(QQ(-2), QQ(1))]
    rank, kernel = rank_kernel_solve(m)
    assert rank == 1 and len(kernel) == 1


def test_rref_pivots():
    reduced, pivots = qmatrix([[0, 2, 4], [1, 1, 1], [1, 3, 5]]).rref()
    assert pivots == (0, 1)
    assert reduced.row(0) == (1, 0, -1)
    assert reduced.row(1) == (0, 1, 2)
    assert reduced.row(2) == (0, 0, 0)


def test_solve():
    assert qmatrix([[1, 1], [1, -1]]).solve([3, 1]) == (QQ(2), QQ(1))
    assert qmatrix([[1, 1], [1, 1]]).solve([1, 2]) is None


def test_products_and_powers():
    m = qmatrix([[1, 1], [0, 1]])
    assert m**3 == qmatrix([[1, 3], [0, 1]])
    assert m * Matrix.identity(QQ_FIELD, 2) == m
    assert m.transpose() == qmatrix([[1, 0], [1, 1]])
    assert m.apply([1, 2]) == (QQ(3), QQ(2))
    assert (m - m).is_zero()
    with pytest.raises(ValueError):
        m * qmatrix([[1, 2, 3]])


def test_empty_matrix_has_rank_zero():
    empty = Matrix.from_columns(QQ_FIELD, [], rows=3)
    assert empty.shape == (3, 0)
    assert empty.rank() == 0


def test_charpoly_matches_sympy():
    rng = make_rng(7)
    for _ in range(20):
        n = int(rng.integers(1, 6))
        rows = [[int(x) for x in rng.integers(-4, 5, size=n)] for _ in range(n)]
        ours = qmatrix(rows).charpoly()
        expected = sympy.Matrix(rows).charpoly().all_coeffs()
        assert list(ours.coeffs) == [QQ(int(c)) for c in reversed(expected)]


def test_cayley_hamilton():
    m = qmatrix([[2, 1, 0], [1, 3, 1], [0, 1, 4]])
    assert polynomial_at_matrix(m.charpoly(), m).is_zero()


def test_relative_linear_algebra(kummer):
    tower, _ = kummer
    L = tower.top
    h, a = tower.generator(1), tower.generator()
    elements = [L(1), L(h), a, a + 1, a**2]
    assert coordinate_matrix(L, elements).shape == (8, 5)
    assert relative_rank(L, elements) == 3
    assert independent_subset(L, elements) == [1, a, a**2]
    assert relative_rank(L, []) == 0


def test_matrix_over_an_extension(cyclo5):
    tower, _ = cyclo5
    z = tower.top.gen
    m = Matrix(tower.top, [[1, z], [z, z**2]])
    assert m.rank() == 1
    (vector,) = m.kernel()
    assert m.apply(vector) == (0, 0)


@pytest.mark.parametrize("seed", range(5))
def test_rank_nullity_on_random_matrices(seed):
    rng = make_rng(seed)
    for _ in range(200):
        rows, cols = (int(n) for n in rng.integers(1, 7, size=2))
        # repeated row forces a nontrivial kernel
        entries = [[int(x) for x in rng.integers(-2, 3, size=cols)] for _ in range(rows)]
        if rows > 1:
            entries[-1] = list(entries[0])
        m = qmatrix(entries)
        kernel = m.kernel()
        assert m.rank() + len(kernel) == cols
        assert m.rank() == sympy.Matrix(entries).rank()
        for vector in kernel:
            assert all(not x for x in m.apply(vector))


def test_rank_nullity_over_an_extension(kummer, rng):
    tower, _ = kummer
    K = tower.base
    for _ in range(20):
        rows, cols = (int(n) for n in rng.integers(1, 5, size=2))
        m = Matrix(K, [[random_element(K, rng, box=1) for _ in range(cols)] for _ in range(rows)], cols)
        kernel = m.kernel()
        assert m.rank() + len(kernel) == cols
        for vector in kernel:
            assert all(not x for x in m.apply(vector))
