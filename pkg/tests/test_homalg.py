import random
from math import comb

from hypothesis import given, settings, strategies as st

from freediv import GradedMatrix, Polynomial, Ring
from freediv.groebner.ideal import Ideal, dimension
from freediv.homalg.presentation import (GradedModulePresentation, ext1_against_ring,
                                         is_cohen_macaulay, projective_dimension,
                                         syzygies, twist_betti)

from conftest import depth_by_regular_sequence

R3 = Ring(["x", "y", "z"])
R4 = Ring(["x", "y", "z", "w"])


def quotient(I):
    return GradedModulePresentation.quotient_ring(I)


def test_koszul_betti_numbers():
    for n in (2, 3, 4):
        ring = Ring(["x%d" % i for i in range(n)])
        res = quotient(Ideal(ring, ring.gens())).resolution()
        assert res.betti == {(i, i): comb(n, i) for i in range(n + 1)}
        assert res.regularity() == 0


def test_twisted_cubic():
    x, y, z, w = R4.gens()
    I = Ideal(R4, [x * z - y * y, x * w - y * z, y * w - z * z])
    res = quotient(I).resolution()
    assert res.betti == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
    assert is_cohen_macaulay(I)
    assert res.regularity() == 1


def test_complete_intersection():
    x, y, z = R3.gens()
    res = quotient(Ideal(R3, [x ** 2, y ** 3])).resolution()
    assert res.betti == {(0, 0): 1, (1, 2): 1, (1, 3): 1, (2, 5): 1}


def test_non_cm():
    # two skew lines in P^3
    x, y, z, w = R4.gens()
    I = Ideal(R4, [x * z, x * w, y * z, y * w])
    assert projective_dimension(quotient(I)) == 3
    assert dimension(I).height == 2
    assert not is_cohen_macaulay(I)


def random_homogeneous_ideal(rng, ring, k, deg):
    gens = []
    for _ in range(k):
        d = rng.choice(deg)
        terms = {}
        for _ in range(rng.randint(1, 3)):
            cuts = sorted(rng.randint(0, d) for _ in range(ring.n - 1))
            e, prev = [], 0
            for c in cuts:
                e.append(c - prev)
                prev = c
            e.append(d - prev)
            terms[tuple(e)] = rng.randint(-5, 5) or 1
        gens.append(Polynomial.from_dict(ring, terms))
    return Ideal(ring, gens)


@settings(max_examples=30)
@given(st.integers(0, 10 ** 6), st.integers(1, 4))
def test_hilbert_series_two_ways(seed, k):
    rng = random.Random(seed)
    I = random_homogeneous_ideal(rng, R3, k, (1, 2, 3))
    P = quotient(I)
    assert P.resolution().hilbert_series() == P.hilbert_series()


@settings(max_examples=20)
@given(st.integers(0, 10 ** 6), st.integers(1, 4))
def test_depth_plus_pd_equals_arity(seed, k):
    rng = random.Random(seed)
    I = random_homogeneous_ideal(rng, R3, k, (1, 2))
    P = quotient(I)
    pd = P.resolution().projective_dimension()
    assert depth_by_regular_sequence(I, seed) + pd == R3.n


@settings(max_examples=20)
@given(st.integers(0, 10 ** 6))
def test_dimension_from_hilbert_series(seed):
    rng = random.Random(seed)
    I = random_homogeneous_ideal(rng, R3, rng.randint(1, 3), (1, 2))
    P = quotient(I)
    assert P.hilbert_series().dimension() == dimension(I).krull_dimension == P.dimension()


def test_syzygies_compose_to_zero():
    x, y, z = R3.gens()
    M = GradedMatrix(R3, [[x * y, y * z, x * z]], [0], [2, 2, 2])
    S = syzygies(M)
    assert S.row_twists == [2, 2, 2] and sorted(S.col_twists) == [3, 3]
    for col in S.columns():
        assert sum((a * b for a, b in zip(M.rows[0], col)), R3.zero()).is_zero()


def test_resolution_maps_compose_to_zero():
    x, y, z, w = R4.gens()
    I = Ideal(R4, [x * z - y * y, x * w - y * z, y * w - z * z, x ** 3])
    maps = quotient(I).resolution().maps
    for A, B in zip(maps, maps[1:]):
        for i in range(A.nrows):
            for j in range(B.ncols):
                s = sum((A.rows[i][k] * B.rows[k][j] for k in range(A.ncols)), R4.zero())
                assert s.is_zero()


def test_ext_of_cm_quotient_is_shifted_self_dual():
    # Ext^1(R/(f), R) = R/(f)(deg f)
    x, y, z = R3.gens()
    P = quotient(Ideal(R3, [x ** 2 + y * z]))
    E = ext1_against_ring(P)
    rp = P.resolution()
    assert E.resolution().betti == twist_betti(rp.betti, 2)
    assert E.hilbert_series() == P.hilbert_series().shift(2)
