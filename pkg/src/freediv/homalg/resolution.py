"""Graded free resolutions through Schreyer frames.

The resolution is built non-minimally: level 1 is a reduced Groebner basis
of the image, and each further level holds the syzygies coming from the
minimal S-pair frame, lifted by reducing the S-vectors with quotient
tracking.  Graded Betti numbers are read from the scalar (degree 0) parts
of the differentials:

    beta_{i,j} = dim F_{i,j} - rank A_{i,j} - rank A_{i+1,j}

where A_{i,j} is the scalar block of d_i between generators of degree j.
Minimal differentials are obtained by pruning unit entries on request.
"""

from collections import defaultdict

from gmpy2 import mpq

from .. import budget
from ..groebner.kernel import Buchberger, ModuleOrder, Reducer, Elt, sub_shifted
from ..matrix import GradedMatrix, scalar_rank
from ..poly import Polynomial
from .hilbert import HilbertSeries

_ONE = mpq(1)


class Level:
    __slots__ = ("order", "vectors", "degs")

    def __init__(self, order, vectors, degs):
        self.order = order        # order on F_k
        self.vectors = vectors    # columns of d_k, keyed by the order on F_{k-1}
        self.degs = degs          # degrees of the generators of F_k


def _lex_desc(e):
    return tuple(-x for x in e)


class SchreyerResolver:
    def __init__(self, ring, f0_degs, columns, max_length=None):
        """columns: vectors in F_0 keyed by the degree-first order on F_0."""
        self.ring = ring
        self.n = ring.n
        self.max_length = max_length
        order0 = ModuleOrder(ring, len(f0_degs), f0_degs)
        self.levels = [Level(order0, [], list(f0_degs))]
        bb = Buchberger(order0)
        for c in columns:
            bb.add_generator(c)
        bb.run()
        gb = bb.reduced_basis()
        self._push(gb)
        while self.levels[-1].vectors:
            if max_length is not None and len(self.levels) - 1 >= max_length:
                break
            if len(self.levels) > self.n + 2:
                raise AssertionError("resolution longer than the syzygy bound")
            self._push(self._next_syzygies())

    def _push(self, vectors):
        prev = self.levels[-1].order
        # sort for the Schreyer length bound: by component, then lex-descending lead
        dec = []
        for v in vectors:
            lk = max(v)
            comp, e, _, _ = prev.decode(lk)
            dec.append((comp, _lex_desc(e), lk, v))
        dec.sort(key=lambda t: (t[0], t[1]))
        vectors = [t[3] for t in dec]
        C = max(1, len(vectors))
        base = [t[2] * C + (C - 1 - l) for l, t in enumerate(dec)]
        degs = [prev.term_degree(t[2]) for t in dec]
        order = ModuleOrder(self.ring, len(vectors), degs, S=prev.S * C, C=C, base=base)
        self.levels.append(Level(order, vectors, degs))

    def _next_syzygies(self):
        cur = self.levels[-1]
        prev = self.levels[-2].order
        order = cur.order
        vecs = cur.vectors
        C = order.C
        base = order.base
        red = Reducer(prev)
        elts = []
        for l, v in enumerate(vecs):
            items = [(k, v[k]) for k in sorted(v, reverse=True)]
            e = Elt(items, prev, 0, l)
            elts.append(e)
            red.add(e)
        guard = prev.guard
        pack = self.ring.pack
        out = []
        by_comp = defaultdict(list)
        for e in elts:
            by_comp[e.comp].append(e)
        steps = 0
        for comp, group in by_comp.items():
            for a, gi in enumerate(group):
                cands = []
                for gj in group[a + 1:]:
                    l = tuple(x if x > y else y for x, y in zip(gi.exps, gj.exps))
                    m = tuple(x - y for x, y in zip(l, gi.exps))
                    cands.append((m, pack(m), gj, l))
                # minimal monomials m (ties: first j)
                keep = []
                for c in cands:
                    pm = c[1]
                    dominated = False
                    for d in cands:
                        if d is c:
                            continue
                        if _divides(d[1], pm, guard) and (d[1] != pm or d[2].idx < c[2].idx):
                            dominated = True
                            break
                    if not dominated:
                        keep.append(c)
                for m, pm, gj, l in keep:
                    lk = prev.key(l, comp)
                    di = lk - gi.lead
                    dj = lk - gj.lead
                    f = {}
                    for k, c in gi.items:
                        f[k + di] = c
                    sub_shifted(f, gj.items, dj, _ONE)
                    tau = {di * C + base[gi.idx]: _ONE, dj * C + base[gj.idx]: -_ONE}

                    def rec(g, delta, c, tau=tau):
                        k = delta * C + base[g.idx]
                        v = tau.get(k, 0) - c
                        if v:
                            tau[k] = v
                        else:
                            tau.pop(k, None)

                    rem = red.reduce(f, record=rec)
                    if rem:
                        raise AssertionError("S-vector did not reduce to zero")
                    if max(tau) != di * C + base[gi.idx]:
                        raise AssertionError("unexpected Schreyer leading term")
                    out.append(tau)
                    steps += 1
                    if steps & 7 == 0:
                        budget.check()
        return out


def _divides(pa, pb, guard):
    return ((pb | guard) - pa) & guard == guard


class Resolution:
    """Graded free resolution of coker(d_1).  `maps` are the minimal
    differentials (computed lazily by pruning the Schreyer resolution)."""

    def __init__(self, ring, resolver):
        self.ring = ring
        self._res = resolver
        self._maps = None
        self.betti = self._betti()

    # -- Betti numbers ---------------------------------------------------
    def _scalar_blocks(self, k):
        """{degree: list of (row, col, value)} for the scalar part of d_k."""
        lv = self._res.levels
        prev = lv[k - 1]
        cur = lv[k]
        bases = {b: r for r, b in enumerate(prev.order.base)}
        blocks = defaultdict(list)
        for col, v in enumerate(cur.vectors):
            for key, c in v.items():
                r = bases.get(key)
                if r is not None:
                    blocks[cur.degs[col]].append((r, col, c))
        return blocks

    def _betti(self):
        lv = self._res.levels
        L = len(lv)
        ranks = [None] + [defaultdict(int) for _ in range(1, L)]
        for k in range(1, L):
            for deg, ents in self._scalar_blocks(k).items():
                rows = sorted({r for r, _, _ in ents})
                cols = sorted({c for _, c, _ in ents})
                ri = {r: i for i, r in enumerate(rows)}
                ci = {c: i for i, c in enumerate(cols)}
                mat = [[0] * len(cols) for _ in rows]
                for r, c, v in ents:
                    mat[ri[r]][ci[c]] = v
                ranks[k][deg] = scalar_rank(mat)
        betti = {}
        for k in range(L):
            cnt = defaultdict(int)
            for d in lv[k].degs:
                cnt[d] += 1
            for d, m in cnt.items():
                b = m
                if k >= 1:
                    b -= ranks[k][d]
                if k + 1 < L:
                    b -= ranks[k + 1][d]
                if b:
                    betti[(k, d)] = b
        return betti

    # -- invariants ------------------------------------------------------
    def length(self):
        if not self.betti:
            return -1
        return max(i for i, _ in self.betti)

    projective_dimension = length

    def regularity(self):
        if not self.betti:
            return None
        return max(j - i for i, j in self.betti)

    def ranks(self):
        out = defaultdict(int)
        for (i, _), b in self.betti.items():
            out[i] += b
        return [out[i] for i in range(self.length() + 1)]

    def twists(self, i):
        """Sorted list of generator degrees of the minimal F_i."""
        out = []
        for (k, j), b in sorted(self.betti.items()):
            if k == i:
                out.extend([j] * b)
        return out

    def hilbert_series(self):
        if any(w != 1 for w in self.ring.weights):
            raise ValueError("Hilbert series implemented for standard gradings only")
        num = defaultdict(int)
        for (i, j), b in self.betti.items():
            num[j] += (-1) ** i * b
        return HilbertSeries(dict(num), self.ring.n)

    def betti_string(self):
        return betti_table_string(self.betti)

    # -- explicit differentials ------------------------------------------
    def nonminimal_maps(self):
        lv = self._res.levels
        out = []
        for k in range(1, len(lv)):
            out.append(_vectors_to_matrix(self.ring, lv[k - 1].order, lv[k - 1].degs,
                                          lv[k].vectors, lv[k].degs))
        return out

    @property
    def maps(self):
        if self._maps is None:
            self._maps = prune(self.nonminimal_maps())
        return self._maps


def _vectors_to_matrix(ring, order, row_degs, vectors, col_degs):
    nr = len(row_degs)
    cols = []
    for v in vectors:
        col = [dict() for _ in range(nr)]
        for k, c in v.items():
            comp, e, _, _ = order.decode(k)
            col[comp][ring.encode(e)] = c
        cols.append([Polynomial(ring, t) for t in col])
    return GradedMatrix.from_columns(ring, cols, row_degs, col_degs, nrows=nr, check=False)


def prune(maps):
    """Remove unit entries from a complex of graded matrices (in place copy)."""
    maps = [[list(map(list, m.rows)), list(m.row_twists), list(m.col_twists), m.ring] for m in maps]
    changed = True
    while changed:
        changed = False
        for k, (rows, rt, ct, ring) in enumerate(maps):
            piv = None
            for i, r in enumerate(rows):
                for j, e in enumerate(r):
                    if e and e.is_constant():
                        piv = (i, j)
                        break
                if piv:
                    break
            if piv is None:
                continue
            i, j = piv
            c = rows[i][j].constant_value()
            ncols = len(ct)
            # column operations clearing row i
            for l in range(ncols):
                if l != j and rows[i][l]:
                    f = rows[i][l].scale(1 / c)
                    for r in rows:
                        if r[j]:
                            r[l] = r[l] - f * r[j]
            for r in rows:
                del r[j]
            del rows[i]
            del rt[i]
            del ct[j]
            if k > 0:
                prow, _, pct, _ = maps[k - 1]
                for r in prow:
                    del r[i]
                del pct[i]
            if k + 1 < len(maps):
                nrows, nrt, _, _ = maps[k + 1]
                del nrows[j]
                del nrt[j]
            changed = True
            budget.check()
            break
    out = []
    for rows, rt, ct, ring in maps:
        m = GradedMatrix(ring, rows, rt, ct, check=False) if rows else GradedMatrix(ring, [], [], [], check=False)
        if not rows:
            m.ncols = len(ct)
            m.col_twists = ct
            m.row_twists = rt
        out.append(m)
    while out and out[-1].ncols == 0:
        out.pop()
    return out


def betti_table_string(betti):
    """Text table: rows are j - i, columns are i (total row first)."""
    if not betti:
        return "total: 0"
    imax = max(i for i, _ in betti)
    rows = sorted({j - i for i, j in betti})
    totals = [sum(b for (i, _), b in betti.items() if i == k) for k in range(imax + 1)]
    w = max(len(str(x)) for x in totals + list(betti.values())) + 1
    lines = ["total:" + "".join(str(t).rjust(w) for t in totals)]
    for r in range(rows[0], rows[-1] + 1):
        cells = []
        for i in range(imax + 1):
            b = betti.get((i, i + r), 0)
            cells.append(("." if not b else str(b)).rjust(w))
        lines.append(("%d:" % r).rjust(6) + "".join(cells))
    return "\n".join(lines)
