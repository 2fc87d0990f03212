import random

import pytest
import sympy as sp
from hypothesis import assume, given, settings, strategies as st

from freediv import Polynomial, Ring, families
from freediv import maxspread as ms
from freediv.divisor import DivisorError, is_cone, jacobian_ideal
from freediv.groebner.ideal import ideal_power

from conftest import depth_by_regular_sequence, to_sympy

R = Ring(["x", "y", "z"])
R4 = Ring(["x", "y", "z", "w"])


def random_cubic(rng, ring=R, terms=4):
    d = {}
    n = ring.n
    for _ in range(terms):
        e = [0] * n
        for _ in range(3):
            e[rng.randrange(n)] += 1
        d[tuple(e)] = rng.randint(-4, 4) or 1
    return Polynomial.from_dict(ring, d)


@settings(max_examples=20)
@given(st.integers(0, 10 ** 6))
def test_hessian_matches_sympy(seed):
    f = random_cubic(random.Random(seed))
    syms = sp.symbols("x y z")
    H = sp.hessian(to_sympy(f), syms)
    assert to_sympy(ms.hessian_determinant(f)) == sp.expand(H.det())


@settings(max_examples=20)
@given(st.integers(0, 10 ** 6))
def test_max_spread_verdicts_agree(seed):
    f = random_cubic(random.Random(seed), R4, terms=5)
    assume(not is_cone(f))
    rep = ms.max_spread_check(f)
    h = ms.hessian_determinant(f)
    assert rep.max_spread == (not h.is_zero())
    assert rep.dim_Cf == (R4.n - 1 if rep.max_spread else R4.n)


def test_zero_hessian_not_max_spread():
    f = families.build("example:gordan_noether").polynomial
    assert ms.hessian_determinant(f).is_zero()
    rep = ms.max_spread_check(f)
    assert rep.max_spread is False
    assert rep.dim_Cf == f.ring.n and rep.analytic_spread < f.ring.n


def test_fermat_is_max_spread_and_ext_consistent():
    f = R("x^3 + y^3 + z^3")
    rep = ms.max_spread_check(f)
    assert rep.max_spread and rep.analytic_spread == 3 and rep.dim_Cf == 2
    assert ms.ext_consistency_check(f)


def test_preconditions():
    with pytest.raises(DivisorError):
        ms.max_spread_check(R("x^3 + y^3"))
    with pytest.raises(DivisorError):
        ms.max_spread_check(R("x*y + z^2"))


def test_depth_table_normal_crossing():
    f = R("x*y*z")
    tab = ms.depth_power_table(f, 3)
    assert tab.values == {1: 1, 2: 0, 3: 0}
    assert tab.zero_witness() == 2


@settings(max_examples=10)
@given(st.integers(0, 10 ** 6), st.integers(1, 2))
def test_depth_power_matches_regular_sequence(seed, m):
    f = random_cubic(random.Random(seed))
    assume(not is_cone(f))
    J = jacobian_ideal(f)
    assert ms.depth_power(J, m) == depth_by_regular_sequence(ideal_power(J, m), seed)


def test_homaloidal_normal_crossing():
    verdict, ev = ms.homaloidal_sufficient(R("x*y*z"))
    assert verdict is True
    assert ev["depth_zero_at"] == 2


def test_homaloidal_fermat_fails_linear_condition():
    verdict, ev = ms.homaloidal_sufficient(R("x^3 + y^3 + z^3"))
    assert verdict is False
    assert ev["linear_syzygies"] == 0


def test_hessian_experiment_power_of_f():
    f = R("x*y*z")
    out = ms.hessian_experiment(f)
    # h(xyz) = 2 x y z
    assert out["f_power"] == 1 and out["cofactor"] == "2"
    assert out["reduced"]


def test_report_as_dict():
    rep = ms.maxspread_report(R("x*y*z"), 3).as_dict()
    assert rep["max_spread"] is True
    assert rep["depth_table"]["values"] == {"1": 1, "2": 0, "3": 0}
    assert rep["homaloidal_sufficient"] is True
