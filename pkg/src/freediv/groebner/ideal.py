"""Ideals with cached reduced Groebner bases and the usual toolbox."""

import itertools
import threading

from ..poly import Polynomial
from ..ring import Ring
from .kernel import Buchberger, ModuleOrder, Reducer, Elt, make_monic, to_items, spair_closure_ok
from .module import minimal_subset, syzygy_vectors


class DimensionReport:
    __slots__ = ("krull_dimension", "height", "arity")

    def __init__(self, dim, arity):
        self.krull_dimension = dim
        self.arity = arity
        self.height = arity - dim

    def __repr__(self):
        return "DimensionReport(dim=%d, height=%d)" % (self.krull_dimension, self.height)

    def __eq__(self, other):
        return (isinstance(other, DimensionReport) and self.krull_dimension == other.krull_dimension
                and self.arity == other.arity)


class Ideal:
    def __init__(self, ring, gens):
        gens = list(gens)
        for g in gens:
            if not isinstance(g, Polynomial):
                raise TypeError("ideal generators must be polynomials")
            if g.ring != ring:
                raise ValueError("generator ring mismatch")
        self.ring = ring
        self.gens = [g for g in gens if g]
        self._gb = None
        self._red = None
        self._lock = threading.Lock()

    def __repr__(self):
        return "Ideal(%s)" % ", ".join(str(g) for g in self.gens)

    def __len__(self):
        return len(self.gens)

    # -- Groebner basis --------------------------------------------------
    def gb(self):
        if self._gb is None:
            with self._lock:
                if self._gb is None:
                    order = ModuleOrder(self.ring)
                    bb = Buchberger(order)
                    for g in self.gens:
                        bb.add_generator(dict(g._t))
                    bb.run()
                    self._gb = tuple(Polynomial(self.ring, v) for v in bb.reduced_basis())
        return list(self._gb)

    def reducer(self):
        if self._red is None:
            gb = self.gb()
            order = ModuleOrder(self.ring)
            rd = Reducer(order)
            for i, g in enumerate(gb):
                rd.add(Elt(g.items(), order, 0, i))
            self._red = rd
        return self._red

    def reduce(self, f):
        if f.ring != self.ring:
            raise ValueError("ring mismatch")
        return Polynomial(self.ring, self.reducer().reduce(dict(f._t)))

    def contains(self, f):
        return not self.reduce(f)

    def __contains__(self, f):
        return self.contains(f)

    def contains_ideal(self, other):
        return all(self.contains(g) for g in other.gens)

    def is_unit(self):
        return any(g.is_constant() for g in self.gb())

    def is_zero(self):
        return not self.gens

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.gens)

    def lead_monomials(self):
        return [g.lead_exps() for g in self.gb()]

    def minimalized(self):
        """Same ideal with a graded minimal generating set (homogeneous input)."""
        if not self.is_homogeneous():
            return self
        order = ModuleOrder(self.ring)
        idx = minimal_subset([dict(g._t) for g in self.gens], order)
        J = Ideal(self.ring, [self.gens[i] for i in idx])
        J._gb = self._gb
        return J

    def __add__(self, other):
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other):
        return Ideal(self.ring, [a * b for a in self.gens for b in other.gens]).minimalized()

    def to_ring(self, ring):
        return Ideal(ring, [g.to_ring(ring) for g in self.gens])

    def subs(self, assignment, target=None):
        target = target or self.ring
        return Ideal(target, [g.subs(assignment, target) for g in self.gens])


# -- module-level operations (the documented API) ---------------------------

def normal_form(f, basis):
    ring = f.ring
    order = ModuleOrder(ring)
    rd = Reducer(order)
    for i, b in enumerate(basis):
        if b.ring != ring:
            raise ValueError("ring mismatch")
        if b:
            rd.add(Elt(to_items(make_monic(dict(b._t))), order, 0, i))
    return Polynomial(ring, rd.reduce(dict(f._t)))


def buchberger(I):
    I.gb()
    return I


def is_groebner_basis(basis):
    if not basis:
        return True
    order = ModuleOrder(basis[0].ring)
    return spair_closure_ok([dict(b._t) for b in basis if b], order)


def ideal_membership(f, I):
    return I.contains(f)


def ideal_equal(I, J):
    if I.ring != J.ring:
        raise ValueError("ring mismatch")
    return I.gb() == J.gb()


def _elim_ring(ring, elim):
    elim = [ring.names[ring.var_index(v)] for v in elim]
    keep = [v for v in ring.names if v not in elim]
    names = elim + keep
    w = [ring.weights[ring.index[v]] for v in names]
    return Ring(names, w, "block", len(elim)), keep


def eliminate(I, keep):
    """I ∩ k[keep] (returned in the subring on `keep`, same weights)."""
    ring = I.ring
    keep = [ring.names[ring.var_index(v)] for v in keep]
    elim = [v for v in ring.names if v not in keep]
    sub = ring.subring(keep)
    if not elim:
        return Ideal(sub, [g.to_ring(sub) for g in I.gens])
    br, _ = _elim_ring(ring, elim)
    J = Ideal(br, [g.to_ring(br) for g in I.gens])
    k = len(elim)
    out = []
    for g in J.gb():
        e = g.lead_exps()
        if not any(e[:k]):
            out.append(g.to_ring(sub))
    return Ideal(sub, out)


def _sat_principal(I, g):
    ring = I.ring
    if g.is_constant():
        return I
    if I.is_homogeneous() and g.is_homogeneous():
        y = "_y"
        while y in ring.index:
            y += "_"
        R2 = Ring(ring.names + (y,), ring.weights + (g.degree(),))
        Y = Polynomial.variable(R2, y)
        J = Ideal(R2, [f.to_ring(R2) for f in I.gens] + [Y - g.to_ring(R2)])
        out = []
        for h in J.gb():
            m = min(e[-1] for e in h.to_dict())
            if m:
                h = Polynomial.from_dict(R2, {e[:-1] + (e[-1] - m,): c for e, c in h.to_dict().items()})
            out.append(h.subs({y: g}, ring))
        return Ideal(ring, out).minimalized()
    # Rabinowitsch
    y = "_y"
    while y in ring.index:
        y += "_"
    R2 = Ring((y,) + ring.names, (1,) + ring.weights, "block", 1)
    Y = Polynomial.variable(R2, y)
    J = Ideal(R2, [f.to_ring(R2) for f in I.gens] + [Y * g.to_ring(R2) - 1])
    out = [h.to_ring(ring) for h in J.gb() if not h.lead_exps()[0]]
    return Ideal(ring, out)


def saturate(I, J):
    """I : J^∞ as the intersection of the saturations by each generator of J."""
    if I.ring != J.ring:
        raise ValueError("ring mismatch")
    if J.is_zero():
        raise ValueError("saturation by the zero ideal")
    parts = [_sat_principal(I, g) for g in J.gens]
    acc = parts[0]
    for p in parts[1:]:
        acc = intersect(acc, p)
    return acc


def saturate_iterated(I, J, max_rounds=50):
    """I : J^∞ by repeated colons until the ideal stabilizes."""
    cur = I
    for _ in range(max_rounds):
        nxt = colon(cur, J)
        if ideal_equal(nxt, cur):
            return cur
        cur = nxt
    raise RuntimeError("saturation did not stabilize")


def colon(I, J):
    if I.ring != J.ring:
        raise ValueError("ring mismatch")
    ring = I.ring
    if J.is_zero():
        return Ideal(ring, [Polynomial.constant(ring, 1)])
    acc = None
    for g in J.gens:
        q = _colon_principal(I, g)
        acc = q if acc is None else intersect(acc, q)
    return acc


def _vec(f):
    return dict(f._t)


def _colon_principal(I, g):
    ring = I.ring
    if I.is_zero():
        return Ideal(ring, [])
    order = ModuleOrder(ring)
    polys = [g] + I.gb()
    degs = [p.degree() for p in polys] if all(p.is_homogeneous() for p in polys) else [0] * len(polys)
    syz, so = syzygy_vectors([_vec(p) for p in polys], order, degs, minimal=False)
    out = []
    for v in syz:
        t = {}
        for k, c in v.items():
            comp, e, _, _ = so.decode(k)
            if comp == 0:
                t[ring.encode(e)] = c
        if t:
            out.append(Polynomial(ring, t))
    J = Ideal(ring, out)
    return J.minimalized() if J.is_homogeneous() else J


def intersect(I, J):
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    order = ModuleOrder(ring)
    a = I.gens
    b = J.gens
    polys = a + b
    homog = all(p.is_homogeneous() for p in polys)
    degs = [p.degree() for p in polys] if homog else [0] * len(polys)
    syz, so = syzygy_vectors([_vec(p) for p in polys], order, degs, minimal=False)
    out = []
    for v in syz:
        acc = Polynomial(ring, {})
        for k, c in v.items():
            comp, e, _, _ = so.decode(k)
            if comp < len(a):
                acc = acc + Polynomial.monomial(ring, e, c) * a[comp]
        if acc:
            out.append(acc)
    K = Ideal(ring, out)
    return K.minimalized() if homog else K


def ideal_power(I, m):
    if not isinstance(m, int) or m < 1:
        raise ValueError("power must be a positive integer")
    if m == 1:
        return I
    gens = I.gens
    cur = {(): Polynomial.constant(I.ring, 1)}
    prods = None
    # all multisets of size m, products built incrementally
    for combo in itertools.combinations_with_replacement(range(len(gens)), m):
        p = cur.get(combo[:-1])
        if p is None:
            p = Polynomial.constant(I.ring, 1)
            for i in combo[:-1]:
                p = p * gens[i]
            cur[combo[:-1]] = p
        q = p * gens[combo[-1]]
        if prods is None:
            prods = []
        prods.append(q)
    return Ideal(I.ring, prods).minimalized()


def max_independent_set_size(monos, n):
    """Size of a largest variable subset containing the support of no
    monomial in `monos` (brute force, descending sizes)."""
    supports = set()
    for e in monos:
        s = 0
        for i, x in enumerate(e):
            if x:
                s |= 1 << i
        supports.add(s)
    if 0 in supports:
        return -1
    # keep only minimal supports
    sup = sorted(supports, key=lambda s: bin(s).count("1"))
    mins = []
    for s in sup:
        if not any(t & s == t for t in mins):
            mins.append(s)
    for size in range(n, -1, -1):
        for comb in itertools.combinations(range(n), size):
            mask = 0
            for i in comb:
                mask |= 1 << i
            if all(t & mask != t for t in mins):
                return size
    return 0


def dimension(I):
    n = I.ring.n
    if I.is_zero():
        return DimensionReport(n, n)
    d = max_independent_set_size(I.lead_monomials(), n)
    return DimensionReport(d, n)


def height(I):
    return dimension(I).height


def minors_ideal(M, r):
    from ..matrix import GradedMatrix
    ring = M.ring
    if r <= 0:
        return Ideal(ring, [Polynomial.constant(ring, 1)])
    if r > min(M.nrows, M.ncols):
        return Ideal(ring, [])
    return Ideal(ring, M.minors(r))
