import random

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from freediv import GradedMatrix, Ring, determinant
from freediv.matrix import bareiss_rank, numeric_rank, polynomial_rank, scalar_rank

from conftest import to_sympy

R = Ring(["x", "y", "z"])


def random_linear_matrix(rng, k, rank=None):
    """k x k matrix of linear forms, optionally forced to a lower rank."""
    gens = R.gens()

    def form():
        acc = R.zero()
        for v in gens:
            acc = acc + v.scale(rng.randint(-3, 3))
        return acc
    rows = [[form() for _ in range(k)] for _ in range(k)]
    if rank is not None:
        for i in range(rank, k):
            rows[i] = [sum((rows[j][c] * R.one().scale(rng.randint(-2, 2)) for j in range(rank)),
                           R.zero()) for c in range(k)]
    return rows


@settings(max_examples=25)
@given(st.integers(0, 10 ** 6), st.integers(1, 4))
def test_determinant_matches_sympy(seed, k):
    rows = random_linear_matrix(random.Random(seed), k)
    M = GradedMatrix(R, rows, [0] * k, [1] * k, check=False)
    want = sp.Matrix([[to_sympy(e) for e in r] for r in rows]).det(method="berkowitz")
    assert to_sympy(determinant(M)) == sp.expand(want)


@settings(max_examples=25)
@given(st.integers(0, 10 ** 6), st.integers(2, 4), st.integers(1, 3))
def test_rank_matches_sympy(seed, k, r):
    r = min(r, k)
    rows = random_linear_matrix(random.Random(seed), k, rank=r)
    want = sp.Matrix([[to_sympy(e) for e in row] for row in rows]).rank()
    assert bareiss_rank(rows) == want
    assert polynomial_rank(GradedMatrix(R, rows, check=False)) == want
    assert numeric_rank(rows) <= want


@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=1, max_size=4))
def test_scalar_rank(rows):
    assert scalar_rank(rows) == sp.Matrix(rows).rank()


def test_twist_checks():
    x, y, _ = R.gens()
    M = GradedMatrix(R, [[x, y ** 2]], [0], [1, 2])
    assert M.is_homogeneous()
    with pytest.raises(ValueError):
        GradedMatrix(R, [[x, y ** 2]], [0], [1, 1])
    T = M.transpose()
    assert T.row_twists == [-1, -2] and T.col_twists == [0]


def test_minors():
    x, y, z = R.gens()
    M = GradedMatrix(R, [[x, y, z], [y, z, x]])
    m = M.minors(2)
    assert len(m) == 3
    assert x * z - y * y in m
