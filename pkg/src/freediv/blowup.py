"""Blowup algebras of a homogeneous ideal: symmetric algebra, Rees algebra,
special fiber, analytic spread, reduction number and Cohen-Macaulayness.

The extended ring is B = R[T1..Tv] with every variable of degree 1; all
blowup ideals are bihomogeneous (x-degree, T-degree), which is checked.
"""

from dataclasses import dataclass, field

from .groebner.ideal import (Ideal, eliminate, ideal_equal, dimension, saturate,
                             _sat_principal, minors_ideal)
from .homalg.presentation import (GradedModulePresentation, syzygies, minimal_generator_count)
from .matrix import GradedMatrix, bareiss_rank, numeric_rank
from .poly import Polynomial
from .ring import Ring


class InconsistencyError(AssertionError):
    """Two independent computations disagree (engine bug signal)."""


UNKNOWN = "unknown"


def _fresh(names, base):
    while base in names:
        base += "_"
    return base


class BlowupContext:
    """Generators g_1..g_v of an ideal I of R together with a minimal
    syzygy matrix; immutable after construction, results are cached."""

    def __init__(self, generators, syzygy_matrix=None, t_names=None):
        gens = [g for g in generators if g]
        if not gens:
            raise ValueError("blowup of the zero ideal")
        ring = gens[0].ring
        for g in gens:
            if g.ring != ring:
                raise ValueError("generator ring mismatch")
            if not g.is_homogeneous():
                raise ValueError("blowup generators must be homogeneous")
        if any(w != 1 for w in ring.weights):
            raise ValueError("blowup needs a standard graded base ring")
        self.base_ring = ring
        self.generators = gens
        self.nu = len(gens)
        self.n = ring.n
        names = list(t_names) if t_names else ["T%d" % (i + 1) for i in range(self.nu)]
        clash = set(names) & set(ring.names)
        if clash:
            raise ValueError("T-variable names clash with the base ring: %s" % sorted(clash))
        self.t_names = names
        self.extended_ring = Ring(list(ring.names) + names)
        self.fiber_ring = Ring(names)
        self._phi = syzygy_matrix
        self._cache = {}

    @classmethod
    def jacobian(cls, f):
        """Context for J_f generated by the partial derivatives."""
        return cls(f.gradient())

    # -- basic data ------------------------------------------------------
    @property
    def ideal(self):
        return Ideal(self.base_ring, self.generators)

    def degrees(self):
        return [g.degree() for g in self.generators]

    def equigenerated(self):
        return len(set(self.degrees())) == 1

    @property
    def syzygy_matrix(self):
        if self._phi is None:
            row = GradedMatrix(self.base_ring, [self.generators], [0], self.degrees())
            self._phi = syzygies(row)
        return self._phi

    def T(self, i):
        return self.extended_ring.gen(self.t_names[i])

    def lift(self, p):
        return p.to_ring(self.extended_ring)

    def _memo(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    # -- bigrading -------------------------------------------------------
    def bidegrees(self, p):
        n = self.n
        return {(sum(e[:n]), sum(e[n:])) for e in p.to_dict()}

    def is_bihomogeneous(self, p):
        return len(self.bidegrees(p)) <= 1


# -- the three ideals ---------------------------------------------------------

def symmetric_ideal(ctx):
    """Entries of (T1..Tv) * phi."""
    def run():
        B = ctx.extended_ring
        phi = ctx.syzygy_matrix
        out = []
        for col in phi.columns():
            s = B.zero()
            for i, e in enumerate(col):
                if e:
                    s = s + ctx.T(i) * ctx.lift(e)
            if s:
                out.append(s)
        return Ideal(B, out)
    return ctx._memo("sym", run)


def rees_ideal(ctx, method="elimination"):
    """Kernel of R[T] -> R[t], T_i -> t g_i."""
    if method == "elimination":
        return ctx._memo("rees", lambda: _rees_elimination(ctx))
    if method == "saturation":
        return ctx._memo("rees_sat", lambda: _rees_saturation(ctx))
    if method == "principal":
        return ctx._memo("rees_principal", lambda: _rees_principal(ctx))
    raise ValueError("unknown Rees method %r" % method)


def _rees_elimination(ctx):
    R = ctx.base_ring
    t = _fresh(set(R.names) | set(ctx.t_names), "_t")
    degs = ctx.degrees()
    # weights making T_i - t g_i homogeneous: x ~ 1, t ~ 1, T_i ~ deg g_i + 1
    names = [t] + list(R.names) + ctx.t_names
    weights = [1] * (1 + R.n) + [d + 1 for d in degs]
    E = Ring(names, weights)
    tv = E.gen(t)
    rel = [E.gen(ctx.t_names[i]) - tv * g.to_ring(E) for i, g in enumerate(ctx.generators)]
    K = eliminate(Ideal(E, rel), list(R.names) + ctx.t_names)
    B = ctx.extended_ring
    out = Ideal(B, [g.to_ring(B) for g in K.gens]).minimalized()
    _check_bihomogeneous(ctx, out)
    return out


def _rees_principal(ctx):
    """Sym : g^inf for a single generator g (valid as R is a domain)."""
    S = symmetric_ideal(ctx)
    g = min(ctx.generators, key=lambda p: (len(p), p.degree()))
    out = _sat_principal(S, ctx.lift(g))
    _check_bihomogeneous(ctx, out)
    return out


def _rees_saturation(ctx):
    """Sym : I_{v-1}(phi)^inf (the non-principal locus)."""
    S = symmetric_ideal(ctx)
    phi = ctx.syzygy_matrix
    r = ctx.nu - 1
    minors = [m for m in minors_ideal(phi, r).gens if m]
    if not minors:
        raise ValueError("I_(v-1)(phi) vanishes; the saturation route does not apply")
    out = saturate(S, Ideal(ctx.extended_ring, [ctx.lift(m) for m in minors]))
    _check_bihomogeneous(ctx, out)
    return out


def _check_bihomogeneous(ctx, I):
    for g in I.gens:
        if not ctx.is_bihomogeneous(g):
            raise InconsistencyError("blowup ideal generator is not bihomogeneous: %s" % g)


def rees_substitution_check(ctx, I=None):
    """Every generator vanishes under T_i -> t g_i."""
    I = I or rees_ideal(ctx)
    R = ctx.base_ring
    t = _fresh(set(R.names), "_t")
    Rt = Ring(list(R.names) + [t])
    tv = Rt.gen(t)
    images = {ctx.t_names[i]: tv * g.to_ring(Rt) for i, g in enumerate(ctx.generators)}
    return all(not h.subs(images, Rt) for h in I.gens)


def fiber_ideal(ctx, method="rees"):
    """Kernel of k[T] -> k[g_1..g_v].

    method "rees" reads it off the bihomogeneous Rees ideal (its x-degree-0
    part), which is much cheaper than eliminating x from T_i - g_i when the
    g_i have high degree; "elimination" does the elimination directly.
    Either way the reduced basis is returned, so reports do not depend on
    the route.
    """
    if not ctx.equigenerated():
        raise ValueError("fiber_ideal needs generators of one common degree")
    F = ctx.fiber_ring
    if method == "rees":
        return ctx._memo("fiber", lambda: Ideal(F, fiber_from_rees(ctx).gb()))
    if method != "elimination":
        raise ValueError("unknown fiber method %r" % method)

    def run():
        R = ctx.base_ring
        d = ctx.degrees()[0]
        names = list(R.names) + ctx.t_names
        E = Ring(names, [1] * R.n + [d] * ctx.nu)
        rel = [E.gen(ctx.t_names[i]) - g.to_ring(E) for i, g in enumerate(ctx.generators)]
        K = eliminate(Ideal(E, rel), ctx.t_names)
        return Ideal(F, Ideal(F, [g.to_ring(F) for g in K.gens]).gb())
    return ctx._memo("fiber_elim", run)


def fiber_from_rees(ctx, rees=None):
    """(Rees + (x)) cap k[T]: the x-degree-0 generators of the Rees ideal."""
    rees = rees or rees_ideal(ctx)
    zero = {v: 0 for v in ctx.base_ring.names}
    F = ctx.fiber_ring
    out = []
    for g in rees.gens:
        h = g.subs(zero, ctx.extended_ring)
        if h:
            out.append(h.to_ring(F))
    return Ideal(F, out)


# -- invariants ---------------------------------------------------------------

def generator_jacobian(ctx):
    R = ctx.base_ring
    return [[g.diff(j) for j in range(R.n)] for g in ctx.generators]


def analytic_spread(ctx, method=None):
    """dim k[T]/fiber (A) and rank of the generator Jacobian (B); they must agree."""
    if not ctx.equigenerated():
        raise ValueError("analytic spread needs equal-degree generators")
    if method == "fiber":
        return _spread_fiber(ctx)
    if method == "rank":
        return _spread_rank(ctx)
    a = _spread_fiber(ctx)
    b = _spread_rank(ctx)
    if a != b:
        raise InconsistencyError("analytic spread: fiber dimension %d != Jacobian rank %d" % (a, b))
    return a


def _spread_fiber(ctx):
    return ctx._memo("spread_A", lambda: dimension(fiber_ideal(ctx)).krull_dimension)


def _spread_rank(ctx):
    def run():
        rows = generator_jacobian(ctx)
        lower = numeric_rank(rows)
        full = min(len(rows), ctx.n)
        if lower == full:
            return lower
        return bareiss_rank(rows)
    return ctx._memo("spread_B", run)


def is_linear_type(ctx):
    return ctx._memo("lt", lambda: ideal_equal(symmetric_ideal(ctx), rees_ideal(ctx)))


def fiber_is_cm(ctx):
    def run():
        F = fiber_ideal(ctx)
        if F.is_zero():
            return True
        P = GradedModulePresentation.quotient_ring(F)
        return P.resolution().projective_dimension() == dimension(F).height
    return ctx._memo("fiber_cm", run)


def fiber_regularity(ctx):
    def run():
        F = fiber_ideal(ctx)
        if F.is_zero():
            return 0
        return GradedModulePresentation.quotient_ring(F).resolution().regularity()
    return ctx._memo("fiber_reg", run)


def reduction_number(ctx):
    """reg of the fiber when the fiber is Cohen-Macaulay, else UNKNOWN."""
    if not fiber_is_cm(ctx):
        return UNKNOWN
    return fiber_regularity(ctx)


def rees_pd(ctx):
    def run():
        P = GradedModulePresentation.quotient_ring(rees_ideal(ctx))
        return P.resolution().projective_dimension()
    return ctx._memo("rees_pd", run)


def rees_height(ctx):
    return ctx._memo("rees_ht", lambda: dimension(rees_ideal(ctx)).height)


def rees_is_cm(ctx):
    return rees_pd(ctx) == rees_height(ctx)


def rees_depth(ctx):
    """depth of B/Rees by Auslander-Buchsbaum over B."""
    return ctx.extended_ring.n - rees_pd(ctx)


def rees_dimension(ctx):
    return ctx.extended_ring.n - rees_height(ctx)


def complete_intersection_check(ctx, I=None):
    """Minimal generator count of the (Rees) ideal equals its height."""
    I = I or rees_ideal(ctx)
    if I.is_zero():
        return True
    return minimal_generator_count(I) == dimension(I).height


def sym_is_complete_intersection(ctx):
    return complete_intersection_check(ctx, symmetric_ideal(ctx))


def fitting_heights(ctx):
    """{j: ht I_{v-j}(phi)} for j = 1..v-1."""
    def run():
        phi = ctx.syzygy_matrix
        out = {}
        for j in range(1, ctx.nu):
            I = minors_ideal(phi, ctx.nu - j)
            if I.is_zero():
                out[j] = 0
            else:
                out[j] = dimension(I).height
        return out
    return ctx._memo("fitting", run)


def g_condition(ctx, s):
    """ht I_{v-j}(phi) >= j+1 for j = 1..s-1."""
    hts = fitting_heights(ctx)
    return all(hts.get(j, 0) >= j + 1 for j in range(1, s))


def g_condition_equality(ctx, s):
    hts = fitting_heights(ctx)
    return all(hts.get(j, 0) == j + 1 for j in range(1, s))


@dataclass
class BlowupReport:
    sym_ideal: list = field(default_factory=list)
    rees_ideal: list = field(default_factory=list)
    fiber_ideal: list = field(default_factory=list)
    analytic_spread: int = None
    linear_type: bool = None
    rees_cm: bool = None
    fiber_cm: bool = None
    reduction_number: object = None
    rees_depth: int = None
    rees_dimension: int = None
    truncated: list = field(default_factory=list)

    def as_dict(self):
        return {
            "sym_ideal": self.sym_ideal,
            "rees_ideal": self.rees_ideal,
            "fiber_ideal": self.fiber_ideal,
            "analytic_spread": self.analytic_spread,
            "linear_type": self.linear_type,
            "rees_cm": self.rees_cm,
            "fiber_cm": self.fiber_cm,
            "reduction_number": self.reduction_number,
            "rees_depth": self.rees_depth,
            "rees_dimension": self.rees_dimension,
            "truncated": list(self.truncated),
        }


def blowup_report(ctx, rees=True, cm=True):
    """Fill a BlowupReport; with rees=False only the cheap parts are computed."""
    rep = BlowupReport()
    rep.sym_ideal = [str(g) for g in symmetric_ideal(ctx).gens]
    if ctx.equigenerated():
        rep.fiber_ideal = [str(g) for g in fiber_ideal(ctx).gens]
        rep.analytic_spread = analytic_spread(ctx)
        rep.fiber_cm = fiber_is_cm(ctx)
        rep.reduction_number = reduction_number(ctx)
    if rees:
        rep.rees_ideal = [str(g) for g in rees_ideal(ctx).gens]
        rep.linear_type = is_linear_type(ctx)
        if cm:
            rep.rees_cm = rees_is_cm(ctx)
            rep.rees_depth = rees_depth(ctx)
            rep.rees_dimension = rees_dimension(ctx)
    return rep
