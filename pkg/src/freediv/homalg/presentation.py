"""Finitely presented graded modules and the operations built on them."""

from ..groebner.ideal import Ideal, dimension
from ..groebner.kernel import Buchberger, ModuleOrder
from ..groebner.module import syzygy_vectors, minimal_subset
from ..matrix import GradedMatrix
from ..poly import Polynomial
from .hilbert import HilbertSeries, monomial_numerator
from .resolution import SchreyerResolver, Resolution, _vectors_to_matrix


class GradedModulePresentation:
    """coker(matrix : F_1 -> F_0); generator degrees of F_0 are the row twists."""

    def __init__(self, matrix):
        self.matrix = matrix
        self.ring = matrix.ring
        self._gb = None
        self._res = {}

    @classmethod
    def quotient_ring(cls, I):
        """R/I as a module."""
        ring = I.ring
        return cls(GradedMatrix(ring, [list(I.gens)], [0], [g.degree() for g in I.gens]))

    @classmethod
    def free(cls, ring, degs):
        m = GradedMatrix(ring, [[] for _ in degs], list(degs), [], check=False)
        m.ncols = 0
        return cls(m)

    @property
    def ambient_twists(self):
        return list(self.matrix.row_twists)

    def rank_F0(self):
        return self.matrix.nrows

    def order(self):
        return ModuleOrder(self.ring, self.matrix.nrows, self.matrix.row_twists)

    def column_vectors(self, order=None):
        return matrix_columns_as_vectors(self.matrix, order or self.order())

    def gb(self):
        if self._gb is None:
            order = self.order()
            bb = Buchberger(order)
            for v in self.column_vectors(order):
                bb.add_generator(v)
            bb.run()
            self._gb = (order, bb.reduced_basis())
        return self._gb

    def dimension(self):
        """Krull dimension of the module (max over components of the
        dimension of R modulo the leading monomials in that component)."""
        order, gb = self.gb()
        n = self.ring.n
        comps = [[] for _ in range(self.matrix.nrows)]
        for v in gb:
            comp, e, _, _ = order.decode(max(v))
            comps[comp].append(e)
        best = -1
        from ..groebner.ideal import max_independent_set_size
        for ms in comps:
            best = max(best, max_independent_set_size(ms, n) if ms else n)
        return best

    def hilbert_series(self):
        """Hilbert series from leading terms (independent of resolutions)."""
        order, gb = self.gb()
        n = self.ring.n
        comps = [[] for _ in range(self.matrix.nrows)]
        for v in gb:
            comp, e, _, _ = order.decode(max(v))
            comps[comp].append(e)
        num = {}
        for i, ms in enumerate(comps):
            part = monomial_numerator(ms, n)
            for k, c in part.items():
                kk = k + self.matrix.row_twists[i]
                num[kk] = num.get(kk, 0) + c
        return HilbertSeries(num, n)

    def resolution(self, max_length=None):
        if max_length not in self._res:
            order = self.order()
            rs = SchreyerResolver(self.ring, self.matrix.row_twists,
                                  self.column_vectors(order), max_length)
            self._res[max_length] = Resolution(self.ring, rs)
        return self._res[max_length]

    def __repr__(self):
        return "GradedModulePresentation(%dx%d)" % (self.matrix.nrows, self.matrix.ncols)


def matrix_columns_as_vectors(M, order):
    ring = M.ring
    out = []
    for j in range(M.ncols):
        v = {}
        for i in range(M.nrows):
            e = M.rows[i][j]
            if e:
                base = order.base[i]
                S = order.S
                for k, c in e._t.items():
                    v[k * S + base] = c
        out.append(v)
    return out


def vectors_to_columns(ring, vectors, order):
    """Vectors (keyed by `order`) as lists of polynomials."""
    out = []
    for v in vectors:
        col = [dict() for _ in range(order.rank)]
        for k, c in v.items():
            comp, e, _, _ = order.decode(k)
            col[comp][ring.encode(e)] = c
        out.append([Polynomial(ring, t) for t in col])
    return out


# -- documented operations --------------------------------------------------

def syzygies(M, minimal=True):
    """Kernel of the map given by M (as columns of a homogeneous matrix)."""
    ring = M.ring
    order = ModuleOrder(ring, M.nrows, M.row_twists) if M.nrows else None
    if M.ncols == 0:
        m = GradedMatrix(ring, [[] for _ in range(0)], [], [], check=False)
        return m
    cols = matrix_columns_as_vectors(M, order)
    syz, so = syzygy_vectors(cols, order, M.col_twists, minimal=minimal)
    polys = vectors_to_columns(ring, syz, so)
    twists = [so.vec_degree(v) for v in syz]
    # deterministic: by degree, then leading key
    idx = sorted(range(len(syz)), key=lambda i: (twists[i], -max(syz[i])))
    polys = [polys[i] for i in idx]
    twists = [twists[i] for i in idx]
    return GradedMatrix.from_columns(ring, polys, list(M.col_twists), twists,
                                     nrows=M.ncols, check=True)


def minimal_free_resolution(P, max_length=None):
    if isinstance(P, Ideal):
        P = GradedModulePresentation.quotient_ring(P)
    return P.resolution(max_length)


def projective_dimension(P):
    return minimal_free_resolution(P).projective_dimension()


def depth_AB(P):
    if isinstance(P, Ideal):
        ring = P.ring
    else:
        ring = P.ring
    return ring.n - projective_dimension(P)


def regularity(res):
    return res.regularity()


def hilbert_series(res):
    return res.hilbert_series()


def is_cohen_macaulay(I):
    """pd(R/I) == ht(I)."""
    if not I.is_homogeneous():
        raise ValueError("is_cohen_macaulay needs a homogeneous ideal")
    return projective_dimension(I) == dimension(I).height


def ext1_against_ring(P):
    """Ext^1(P, R) as a presentation: H at position 1 of Hom(F_., R)."""
    ring = P.ring
    res = P.resolution(max_length=2)
    maps = res.nonminimal_maps()
    d1 = maps[0] if maps else None
    d2 = maps[1] if len(maps) > 1 else None
    if d1 is None or d1.ncols == 0:
        return GradedModulePresentation.free(ring, [])
    d1t = d1.transpose()   # F0* -> F1*
    # cycles Z = ker(d2^T : F1* -> F2*)
    if d2 is None or d2.ncols == 0:
        Z = _identity(ring, d1t.row_twists)
    else:
        Z = syzygies(d2.transpose())
    if Z.ncols == 0:
        return GradedModulePresentation.free(ring, [])
    return subquotient(Z, d1t)


def subquotient(G, H):
    """Presentation of (im G + im H) / im H, generated by the columns of G.

    The relations are the G-parts of the kernel of [G | H].
    """
    ring = G.ring
    K = syzygies(G.hstack(H))
    rel = GradedMatrix.from_columns(ring, [col[:G.ncols] for col in K.columns()],
                                    G.col_twists, K.col_twists, nrows=G.ncols, check=True)
    return GradedModulePresentation(rel)


def _identity(ring, degs):
    n = len(degs)
    rows = [[Polynomial.constant(ring, 1 if i == j else 0) for j in range(n)] for i in range(n)]
    return GradedMatrix(ring, rows, list(degs), list(degs))


def betti_and_hilbert(P):
    res = P.resolution()
    return res.betti, res.hilbert_series()


def twist_betti(betti, a):
    """Betti table of M(a)."""
    return {(i, j - a): b for (i, j), b in betti.items()}


def minimal_generator_count(I):
    """Number of minimal generators of a homogeneous ideal."""
    order = ModuleOrder(I.ring)
    return len(minimal_subset([dict(g._t) for g in I.gens], order))
