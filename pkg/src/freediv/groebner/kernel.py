"""Buchberger kernel on packed keys, for ideals and submodules of free modules.

A vector of a free module F = sum R e_i is a dict {key: mpq} where

    key(m * e_i) = ring_key(m) * S + base[i]

with C = number of tie-break slots, S a multiple of C and the component
index recoverable as C - 1 - (key % C).  Because ring keys are linear in
the exponents, shifting a vector by a monomial is adding a constant to all
its keys.  Choosing `base` gives position-over-term style, degree-first
(TOP with twists) or Schreyer orders with the same code.
"""

import heapq

from gmpy2 import mpq

from .. import budget
from ..ring import divides, FIELD_BITS

_ZERO = mpq(0)
_ONE = mpq(1)


class ModuleOrder:
    """Order on a free module of rank `rank` over `ring`.

    degs[i] is the degree of generator e_i.  Explicit `base` (with S, C)
    is used for Schreyer orders; otherwise a degree-first order is built in
    which `rank_of[i]` (default 0) breaks ties before the monomial, and the
    lower component index wins last.
    """

    def __init__(self, ring, rank=1, degs=None, rank_of=None, S=None, C=None, base=None):
        self.ring = ring
        self.rank = rank
        self.degs = list(degs) if degs is not None else [0] * rank
        if base is not None:
            self.S, self.C, self.base = S, C, list(base)
        elif rank == 1 and not self.degs[0] and not (rank_of and rank_of[0]):
            self.S, self.C, self.base = 1, 1, [0]
        else:
            if not ring.graded and (any(self.degs) or rank_of):
                raise ValueError("module orders with twists need a graded ring order")
            C = rank
            lo = min(self.degs) if self.degs else 0
            base = []
            for i in range(rank):
                b = (self.degs[i] - lo) << ring.top_shift
                if rank_of:
                    b += rank_of[i] << ring.spare_shift
                base.append(b * C + (C - 1 - i))
            self.S, self.C, self.base = C, C, base
        self.guard = ring.guard()
        self._dec = {}
        self._wts = ring.weights

    def key(self, exps, comp=0):
        return self.ring.encode(exps) * self.S + self.base[comp]

    def comp_of(self, key):
        return self.C - 1 - key % self.C

    def decode(self, key):
        """(comp, exps, packed exps, mask) for a term key."""
        r = self._dec.get(key)
        if r is None:
            comp = self.C - 1 - key % self.C
            mk = (key - self.base[comp]) // self.S
            e = self.ring.decode(mk)
            mask = 0
            for i, x in enumerate(e):
                if x:
                    mask |= 1 << i
            r = (comp, e, self.ring.pack(e), mask)
            self._dec[key] = r
        return r

    def term_degree(self, key):
        comp, e, _, _ = self.decode(key)
        return sum(a * b for a, b in zip(e, self._wts)) + self.degs[comp]

    def vec_degree(self, vec):
        """Maximal term degree (the sugar of a vector)."""
        return max(self.term_degree(k) for k in vec)


class Elt:
    __slots__ = ("items", "lead", "comp", "exps", "pe", "mask", "sugar", "idx", "alive")

    def __init__(self, items, order, sugar, idx):
        self.items = items
        self.lead = items[0][0]
        self.comp, self.exps, self.pe, self.mask = order.decode(self.lead)
        self.sugar = sugar
        self.idx = idx
        self.alive = True


def to_items(vec):
    return [(k, vec[k]) for k in sorted(vec, reverse=True)]


def make_monic(vec):
    lk = max(vec)
    c = vec[lk]
    if c != 1:
        inv = 1 / c
        for k in vec:
            vec[k] *= inv
    return vec


def sub_shifted(f, items, delta, c, skip_first=True):
    """f -= c * (items shifted by delta), in place."""
    get = f.get
    it = iter(items)
    if skip_first:
        k0, _ = next(it)
        f.pop(k0 + delta, None)
    for k, a in it:
        kk = k + delta
        v = get(kk)
        if v is None:
            f[kk] = -c * a
        else:
            v = v - c * a
            if v:
                f[kk] = v
            else:
                del f[kk]


class Reducer:
    """Set of monic reducers with a lookup cache keyed by term key."""

    def __init__(self, order):
        self.order = order
        self.by_comp = {}
        self.cache = {}  # key -> Elt or number of reducers already scanned (int)
        self.elts = []
        self._ops = 0

    def add(self, elt):
        self.elts.append(elt)
        self.by_comp.setdefault(elt.comp, []).append(elt)

    def find(self, key):
        hit = self.cache.get(key)
        if hit is not None and not isinstance(hit, int):
            return hit
        comp, _, pe, mask = self.order.decode(key)
        lst = self.by_comp.get(comp)
        if not lst:
            self.cache[key] = 0
            return None
        start = hit or 0
        guard = self.order.guard
        for idx in range(start, len(lst)):
            g = lst[idx]
            if g.mask & ~mask == 0 and divides(g.pe, pe, guard):
                self.cache[key] = g
                return g
        self.cache[key] = len(lst)
        return None

    def reduce(self, f, full=True, record=None):
        """Reduce the dict f in place and return the remainder dict.

        record(elt, delta, c) is called for every reduction step (used for
        quotient tracking by the resolution code).
        """
        r = {}
        find = self.find
        n = 0
        while f:
            lk = max(f)
            g = find(lk)
            if g is None:
                if not full:
                    r.update(f)
                    f.clear()
                    break
                r[lk] = f.pop(lk)
                continue
            c = f[lk]
            delta = lk - g.lead
            if record is not None:
                record(g, delta, c)
            sub_shifted(f, g.items, delta, c)
            n += 1
            if n & 15 == 0:
                budget.check()
        return r


class Buchberger:
    """Incremental Buchberger completion with Gebauer-Moeller pair criteria
    and normal selection by sugar degree."""

    def __init__(self, order):
        self.order = order
        self.red = Reducer(order)
        self.basis = []   # alive elements (candidate GB)
        self.all = []
        self.heap = []
        self.live = set()  # (i, j) pairs not yet discarded
        self.pair_lcm = {}
        self.ideal_case = order.rank == 1
        self._gid = 0
        self.gens = {}
        self.done_degree = None

    # -- input -------------------------------------------------------
    def add_generator(self, vec):
        vec = {k: v for k, v in vec.items() if v}
        if not vec:
            return
        s = self.order.vec_degree(vec)
        gid = self._gid
        self._gid += 1
        self.gens[gid] = vec
        heapq.heappush(self.heap, (s, max(vec), -1, gid))

    # -- pairs -------------------------------------------------------
    def _lcm(self, a, b):
        return tuple(x if x > y else y for x, y in zip(a.exps, b.exps))

    def _update(self, h):
        order = self.order
        ring = order.ring
        guard = order.guard
        pack = ring.pack
        cands = []
        for g in self.basis:
            if g.comp != h.comp:
                continue
            l = self._lcm(g, h)
            disjoint = self.ideal_case and all(not (x and y) for x, y in zip(g.exps, h.exps))
            cands.append((g, l, pack(l), disjoint))
        # chain criterion among the new pairs
        kept = []
        for a, cand in enumerate(cands):
            if cand[3]:
                kept.append(cand)
                continue
            pl = cand[2]
            if any(divides(c2[2], pl, guard) for c2 in cands[a + 1:]):
                continue
            if any(divides(d[2], pl, guard) for d in kept):
                continue
            kept.append(cand)
        # old pairs killed by h
        hp = h.pe
        dead = []
        for (i, j) in self.live:
            gi, gj = self.all[i], self.all[j]
            if gi.comp != h.comp:
                continue
            pl = self.pair_lcm[(i, j)]
            if divides(hp, pl, guard):
                if pack(self._lcm(gi, h)) != pl and pack(self._lcm(gj, h)) != pl:
                    dead.append((i, j))
        for p in dead:
            self.live.discard(p)
        # new pairs
        for g, l, pl, disj in kept:
            if disj:
                continue
            i, j = g.idx, h.idx
            lk = order.key(l, h.comp)
            s = max(g.sugar - order.term_degree(g.lead), h.sugar - order.term_degree(h.lead)) + order.term_degree(lk)
            self.live.add((i, j))
            self.pair_lcm[(i, j)] = pl
            heapq.heappush(self.heap, (s, lk, i, j))
        # retire basis elements whose leading term h divides
        nb = []
        for g in self.basis:
            if g.comp == h.comp and divides(hp, g.pe, guard):
                g.alive = False
            else:
                nb.append(g)
        nb.append(h)
        self.basis = nb

    # -- main loop ---------------------------------------------------
    def _insert(self, vec, sugar):
        make_monic(vec)
        h = Elt(to_items(vec), self.order, sugar, len(self.all))
        self.all.append(h)
        self._update(h)
        self.red.add(h)
        return h

    def spoly(self, i, j, lk):
        gi, gj = self.all[i], self.all[j]
        f = {}
        di = lk - gi.lead
        for k, a in gi.items:
            f[k + di] = a
        sub_shifted(f, gj.items, lk - gj.lead, _ONE)
        return f

    def run(self, max_degree=None):
        heap = self.heap
        steps = 0
        while heap:
            s = heap[0][0]
            if max_degree is not None and s > max_degree:
                break
            s, lk, i, j = heapq.heappop(heap)
            if i == -1:
                f = dict(self.gens.pop(j))
            else:
                if (i, j) not in self.live:
                    continue
                self.live.discard((i, j))
                f = self.spoly(i, j, lk)
            r = self.red.reduce(f)
            steps += 1
            if steps & 15 == 0:
                budget.check()
            if r:
                self._insert(r, s)
        self.done_degree = max_degree
        return self

    def reduced_basis(self):
        """Monic auto-reduced basis sorted by (degree, leading key)."""
        elts = [g for g in self.basis if g.alive]
        # minimal: leading terms pairwise non-divisible (guaranteed by _update)
        rd = Reducer(self.order)
        for g in elts:
            rd.add(g)
        out = []
        for g in elts:
            tail = {k: c for k, c in g.items[1:]}
            # reducers never divide the lead of g except g itself, and tail terms are smaller
            rem = rd.reduce(tail)
            rem[g.lead] = _ONE
            out.append(rem)
        order = self.order
        out.sort(key=lambda v: (order.term_degree(max(v)), max(v)))
        return out


def groebner_basis(vectors, order, max_degree=None):
    bb = Buchberger(order)
    for v in vectors:
        bb.add_generator(v)
    bb.run(max_degree)
    return bb.reduced_basis()


def normal_form(vec, basis, order):
    rd = Reducer(order)
    for i, b in enumerate(basis):
        b = dict(b)
        if not b:
            continue
        make_monic(b)
        rd.add(Elt(to_items(b), order, 0, i))
    return rd.reduce(dict(vec))


def spair_closure_ok(basis, order):
    """Buchberger criterion: every S-polynomial of the basis reduces to 0."""
    elts = []
    rd = Reducer(order)
    for i, b in enumerate(basis):
        b = make_monic(dict(b))
        e = Elt(to_items(b), order, 0, i)
        elts.append(e)
        rd.add(e)
    for a in range(len(elts)):
        for b in range(a + 1, len(elts)):
            ga, gb = elts[a], elts[b]
            if ga.comp != gb.comp:
                continue
            l = tuple(max(x, y) for x, y in zip(ga.exps, gb.exps))
            lk = order.key(l, ga.comp)
            f = {}
            for k, c in ga.items:
                f[k + lk - ga.lead] = c
            sub_shifted(f, gb.items, lk - gb.lead, _ONE)
            if rd.reduce(f):
                return False
    return True
