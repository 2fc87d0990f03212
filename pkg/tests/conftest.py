import random

import pytest
import sympy as sp
from hypothesis import settings, strategies as st

from freediv.groebner.ideal import Ideal, colon, ideal_equal
from freediv.poly import Polynomial, Q
from freediv.ring import Ring

settings.register_profile("freediv", deadline=None, max_examples=60)
settings.load_profile("freediv")


def to_sympy(p, syms=None):
    syms = syms or sp.symbols(p.ring.names)
    expr = sp.Integer(0)
    for e, c in p.to_dict().items():
        c = Q(c)
        term = sp.Rational(int(c.numerator), int(c.denominator))
        for s, k in zip(syms, e):
            term *= s ** k
        expr += term
    return sp.expand(expr)


def from_sympy(expr, ring):
    syms = sp.symbols(ring.names)
    P = sp.Poly(sp.expand(expr), *syms)
    return Polynomial.from_dict(ring, {m: Q("%s/%s" % (c.p, c.q)) for m, c in P.terms()})


@pytest.fixture
def R3():
    return Ring(["x", "y", "z"])


@pytest.fixture
def R4():
    return Ring(["x", "y", "z", "w"])


def terms_strategy(n, max_deg=3, max_terms=4, coeff=5):
    exps = st.tuples(*[st.integers(0, max_deg) for _ in range(n)])
    coeffs = st.integers(-coeff, coeff).filter(lambda c: c != 0)
    return st.dictionaries(exps, coeffs, max_size=max_terms)


def poly_strategy(ring, **kw):
    return terms_strategy(ring.n, **kw).map(lambda d: Polynomial.from_dict(ring, d))


def homogeneous_strategy(ring, deg, max_terms=4, coeff=5):
    """Random homogeneous polynomials of a fixed degree."""
    n = ring.n

    @st.composite
    def draw(draw):
        k = draw(st.integers(1, max_terms))
        d = {}
        for _ in range(k):
            cuts = sorted(draw(st.integers(0, deg)) for _ in range(n - 1))
            e = []
            prev = 0
            for c in cuts:
                e.append(c - prev)
                prev = c
            e.append(deg - prev)
            d[tuple(e)] = draw(st.integers(-coeff, coeff).filter(lambda c: c != 0))
        return Polynomial.from_dict(ring, d)
    return draw()


def depth_by_regular_sequence(I, seed=0, tries=3):
    """depth of R/I for a homogeneous ideal, counted by adjoining random
    linear forms while each is a nonzerodivisor.  Independent of resolutions."""
    ring = I.ring
    rng = random.Random(seed)
    cur = I
    depth = 0
    while depth < ring.n:
        if cur.is_unit():
            break
        found = False
        for _ in range(tries):
            coeffs = [rng.randint(-9, 9) or 1 for _ in range(ring.n)]
            ell = Polynomial(ring, {})
            for c, v in zip(coeffs, ring.gens()):
                ell = ell + v.scale(c)
            if ideal_equal(colon(cur, Ideal(ring, [ell])), cur):
                cur = cur + Ideal(ring, [ell])
                depth += 1
                found = True
                break
        if not found:
            break
    return depth
