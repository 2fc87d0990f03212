"""Submodule computations on packed vectors: Groebner bases, syzygies,
minimal generators.  Vectors are dicts keyed by ModuleOrder keys."""

from .kernel import Buchberger, ModuleOrder, Reducer, Elt, make_monic, to_items
from ..matrix import row_echelon_pivots


def rekey(vec, src, dst, offset=0):
    out = {}
    for k, c in vec.items():
        comp, e, _, _ = src.decode(k)
        out[dst.key(e, comp + offset)] = c
    return out


def gb_of(vectors, order, max_degree=None):
    bb = Buchberger(order)
    for v in vectors:
        bb.add_generator(v)
    bb.run(max_degree)
    return bb.reduced_basis()


def is_homogeneous_vec(vec, order):
    ds = {order.term_degree(k) for k in vec}
    return len(ds) <= 1


def minimal_subset(vectors, order):
    """Indices of a minimal generating subset of homogeneous vectors,
    chosen greedily by increasing degree (ties: input order)."""
    items = [(order.vec_degree(v), i) for i, v in enumerate(vectors) if v]
    items.sort()
    bb = Buchberger(order)
    keep = []
    pos = 0
    while pos < len(items):
        d = items[pos][0]
        batch = []
        while pos < len(items) and items[pos][0] == d:
            batch.append(items[pos][1])
            pos += 1
        bb.run(max_degree=d)
        nfs = [bb.red.reduce(dict(vectors[i])) for i in batch]
        for p in row_echelon_pivots(nfs):
            if nfs[p]:
                keep.append(batch[p])
                bb.add_generator(vectors[batch[p]])
    return sorted(keep)


def syzygy_vectors(cols, src_order, degs, minimal=True):
    """Kernel of  R^k -> F,  e_j -> cols[j].

    cols are vectors under src_order (module F); degs are the degrees of
    the source generators e_j.  Returns (syzygies keyed by the degree-first
    order on R^k, that order).
    """
    ring = src_order.ring
    b = src_order.rank
    k = len(cols)
    out_order = ModuleOrder(ring, k, degs)
    if k == 0:
        return [], out_order
    if not all(_homogeneous_of(c, src_order, d) for c, d in zip(cols, degs)):
        return _dehomogenized_syzygies(cols, src_order, out_order), out_order
    aug = ModuleOrder(ring, b + k, list(src_order.degs) + list(degs),
                      rank_of=[1] * b + [0] * k)
    gens = []
    for j, c in enumerate(cols):
        v = rekey(c, src_order, aug)
        v[aug.key((0,) * ring.n, b + j)] = v.get(aug.key((0,) * ring.n, b + j), 0) + 1
        gens.append(v)
    gb = gb_of(gens, aug)
    syz = []
    for v in gb:
        lk = max(v)
        if aug.comp_of(lk) >= b:
            assert all(aug.comp_of(t) >= b for t in v), "elimination order violated"
            syz.append(rekey(v, aug, out_order, -b))
    if minimal and syz and all(is_homogeneous_vec(v, out_order) for v in syz):
        idx = minimal_subset(syz, out_order)
        syz = [syz[i] for i in idx]
    return syz, out_order


def _homogeneous_of(vec, order, d):
    return all(order.term_degree(t) == d for t in vec)


def _dehomogenized_syzygies(cols, src_order, out_order):
    """Syzygies of inhomogeneous columns: homogenize with a fresh variable h,
    take syzygies there and set h = 1.  Any syzygy s of the columns lifts
    (multiply each s_j by a suitable power of h), so the images generate."""
    from ..ring import Ring
    ring = src_order.ring
    h = "_h"
    while h in ring.index:
        h += "_"
    ring2 = Ring(ring.names + (h,), ring.weights + (1,))
    src2 = ModuleOrder(ring2, src_order.rank, src_order.degs)
    cols2, degs2 = [], []
    for c in cols:
        D = max((src_order.term_degree(t) for t in c), default=0)
        v = {}
        for t, x in c.items():
            comp, e, _, _ = src_order.decode(t)
            v[src2.key(e + (D - src_order.term_degree(t),), comp)] = x
        cols2.append(v)
        degs2.append(D)
    syz2, so2 = syzygy_vectors(cols2, src2, degs2, minimal=False)
    out = []
    for v in syz2:
        w = {}
        for t, x in v.items():
            comp, e, _, _ = so2.decode(t)
            key = out_order.key(e[:-1], comp)
            y = w.get(key, 0) + x
            if y:
                w[key] = y
            else:
                w.pop(key, None)
        if w:
            out.append(w)
    return out


def module_membership(vec, basis_reducer):
    return not basis_reducer.reduce(dict(vec))


def reducer_for(basis, order):
    rd = Reducer(order)
    for i, b in enumerate(basis):
        b = make_monic(dict(b))
        rd.add(Elt(to_items(b), order, 0, i))
    return rd
