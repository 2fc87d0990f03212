"""Computed values for fixture expectation keys.

Every key used by the families module maps to one function here taking the
session and the expected value (some checks, e.g. ideal equality against a
quoted list of generators, need it).  Values are returned in a
JSON-friendly normal form so that reports are deterministic.
"""

from .. import blowup as bl
from .. import divisor as dv
from .. import maxspread as ms
from ..families import (family3_rees_P, generic_two_row_gens, hankel_fiber_gens,
                        reference_matrices)
from ..groebner.ideal import Ideal, dimension, ideal_equal, saturate
from ..homalg.presentation import GradedModulePresentation
from ..poly import Q, fmt_q


class Session:
    """Lazily computed shared data for one fixture."""

    def __init__(self, fixture):
        self.fixture = fixture
        self.f = fixture.polynomial
        self.ring = fixture.ring
        self._ctx = None
        self._cache = {}

    @property
    def ctx(self):
        if self._ctx is None:
            self._ctx = bl.BlowupContext.jacobian(self.f)
        return self._ctx

    def memo(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    def cert(self):
        return self.memo("cert", lambda: dv.freeness(self.f, hilbert_burch=False))

    def depths(self, m_max):
        have = self._cache.get("depths", {})
        if not all(m in have for m in range(1, m_max + 1)):
            tab = ms.depth_power_table(self.f, m_max)
            if tab.truncated_at is not None:
                from ..budget import ResourceExhausted
                raise ResourceExhausted("depth table stopped at m = %d" % tab.truncated_at)
            have = dict(tab.values)
            self._cache["depths"] = have
        return {m: have[m] for m in range(1, m_max + 1)}

    def hessian(self):
        return self.memo("hessian", lambda: ms.hessian_experiment(self.f))

    def scaled_ctx(self):
        c = self.fixture.t_scaling
        if not c:
            return self.ctx
        return self.memo("scaled_ctx", lambda: bl.BlowupContext(
            [g.scale(ci) for g, ci in zip(self.f.gradient(), c)]))


def _betti_twists(s, exp):
    res = dv.jacobian_resolution(s.f)
    return [res.twists(1), res.twists(2)]


def _saito(s, exp):
    mats = dict(reference_matrices(s.fixture.spec))
    M = mats.get("saito")
    if M is None:
        lam = dv.saito_check(s.f, dv.log_derivation_module(s.f).generators)
    else:
        lam = dv.saito_check(s.f, M)
    return lam


def _fiber_hankel(s, exp):
    ctx = s.ctx
    F = bl.fiber_ideal(ctx)
    n = s.ring.n
    names = ctx.t_names[:n - 2]
    H = Ideal(ctx.fiber_ring, hankel_fiber_gens(ctx.fiber_ring, names))
    return ideal_equal(F, H)


def _fiber_generic(s, exp):
    ctx = s.ctx
    F = bl.fiber_ideal(ctx)
    m = 2 * (s.ring.n // 2 - 1)
    G = Ideal(ctx.fiber_ring, generic_two_row_gens(ctx.fiber_ring, ctx.t_names[:m]))
    return ideal_equal(F, G)


def _fiber_list(s, exp):
    """True iff the fiber ideal equals the ideal of the quoted generators."""
    ctx = s.ctx
    want = Ideal(ctx.fiber_ring, [ctx.fiber_ring(t) for t in exp])
    return list(exp) if ideal_equal(bl.fiber_ideal(ctx), want) else \
        [str(g) for g in bl.fiber_ideal(ctx).gens]


def _rees_contains(s, exp):
    """The quoted generators that occur (up to scalar) in the reduced
    Groebner basis of the Rees ideal."""
    ctx = s.scaled_ctx()
    gb = [g.monic() for g in bl.rees_ideal(ctx).gb()]
    found = []
    for t in exp:
        p = ctx.extended_ring(t).monic()
        if any(g == p for g in gb):
            found.append(t)
    return found


def _rees_equals_P(s, exp):
    a = s.fixture.spec.params["alpha"]
    B, gens = family3_rees_P(a)
    ctx = s.ctx
    P = Ideal(ctx.extended_ring, [g.to_ring(ctx.extended_ring) for g in gens])
    return ideal_equal(bl.rees_ideal(ctx), P)


def _sym_saturation(s, exp):
    a = s.fixture.spec.params["alpha"]
    ctx = s.ctx
    B = ctx.extended_ring
    x, y = B.gen("x"), B.gen("y")
    K = Ideal(B, [x ** (a - 1), y ** (a - 2)])
    return ideal_equal(saturate(bl.symmetric_ideal(ctx), K), bl.rees_ideal(ctx))


def _rees_ci(s, exp):
    ctx = s.ctx
    return bl.complete_intersection_check(ctx) and bl.rees_height(ctx) == 2


def _pd_power(s, exp):
    m_max = max(int(m) for m in exp)
    n = s.ring.n
    d = s.depths(m_max)
    # projective dimension of the ideal J^m itself
    return {m: n - d[m] - 1 for m in sorted(int(k) for k in exp)}


def _depth_table(s, exp):
    return s.depths(max(int(m) for m in exp))


def _cf_cm(s, exp):
    C = ms.cokernel_Cf(s.f)
    return C.resolution().projective_dimension() == s.ring.n - C.dimension()


def _jacobian_perfect(s, exp):
    J = dv.jacobian_ideal(s.f)
    P = GradedModulePresentation.quotient_ring(J)
    return P.resolution().projective_dimension() == dimension(J).height


def _hessian_factor(s, exp):
    h = s.hessian()
    return [h.get("cofactor"), h.get("f_power")]


def _compare_hessian_factor(s, exp, got):
    cof = s.ring(exp[0])
    return got[1] == exp[1] and s.ring(got[0]) == cof


def _homaloidal(s, exp):
    return ms.homaloidal_sufficient(s.f)[0]


EVALUATORS = {
    "degree": lambda s, e: s.f.degree(),
    "is_reduced": lambda s, e: dv.is_reduced(s.f),
    "is_free": lambda s, e: s.cert().is_free,
    "is_linear_free": lambda s, e: dv.is_linear_free(s.f),
    "jacobian_height": lambda s, e: dv.jacobian_height(s.f),
    "jacobian_perfect": _jacobian_perfect,
    "linearly_presented": lambda s, e: all(t == s.f.degree()
                                           for t in dv.jacobian_syzygies(s.f).col_twists),
    "betti_twists": _betti_twists,
    "der_regularity": lambda s, e: dv.der_regularity(s.f),
    "saito_lambda": _saito,
    "linear_type": lambda s, e: bl.is_linear_type(s.ctx),
    "analytic_spread": lambda s, e: bl.analytic_spread(s.ctx),
    "reduction_number": lambda s, e: bl.reduction_number(s.ctx),
    "rees_cm": lambda s, e: bl.rees_is_cm(s.ctx),
    "fiber_cm": lambda s, e: bl.fiber_is_cm(s.ctx),
    "fiber_ideal_hankel": _fiber_hankel,
    "fiber_ideal_generic": _fiber_generic,
    "fiber_ideal_zero": lambda s, e: bl.fiber_ideal(s.ctx).is_zero(),
    "fiber_ideal": _fiber_list,
    "rees_contains": _rees_contains,
    "rees_equals_P": _rees_equals_P,
    "rees_ci": _rees_ci,
    "rees_depth_defect": lambda s, e: bl.rees_pd(s.ctx) - bl.rees_height(s.ctx),
    "sym_ci": lambda s, e: bl.sym_is_complete_intersection(s.ctx),
    "sym_saturation": _sym_saturation,
    "g_condition_3": lambda s, e: bl.g_condition(s.ctx, 3),
    "g_condition_n": lambda s, e: bl.g_condition_equality(s.ctx, s.ring.n),
    "max_spread": lambda s, e: ms.max_spread_check(s.f).max_spread,
    "ext_consistent": lambda s, e: ms.ext_consistency_check(s.f),
    "depth_table": _depth_table,
    "pd_power": _pd_power,
    "homaloidal_sufficient": _homaloidal,
    "cf_cm": _cf_cm,
    "linear_syzygy_count": lambda s, e: ms.linear_syzygy_part(s.f).ncols,
    "linear_minors_vanish": lambda s, e: not ms.homaloidal_linear_condition(s.f),
    "hessian_factor": _hessian_factor,
    "hessian_is_square_multiple": lambda s, e: s.hessian().get("is_square_multiple"),
    "hessian_red_free": lambda s, e: s.hessian().get("reduced_part_free"),
    "hessian_reduced": lambda s, e: s.hessian().get("reduced"),
    "hessian_linear_free": lambda s, e: s.hessian().get("reduced_part_linear_free"),
}

COMPARATORS = {
    "hessian_factor": _compare_hessian_factor,
}


def normalize(value):
    """JSON-friendly, order-stable form of an expected or computed value."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, dict):
        return {str(k): normalize(value[k]) for k in sorted(value, key=lambda k: (str(type(k)), k))}
    if isinstance(value, (list, tuple)):
        return [normalize(v) for v in value]
    try:
        q = Q(value)
    except (TypeError, ValueError):
        return str(value)
    return int(q) if q.denominator == 1 else fmt_q(q)


def evaluate(session, key, expected):
    """(computed value, matches expected)."""
    fn = EVALUATORS.get(key)
    if fn is None:
        raise KeyError("no evaluator for expectation %r" % key)
    got = fn(session, expected)
    cmp = COMPARATORS.get(key)
    if cmp is not None:
        ok = cmp(session, expected, got)
    else:
        ok = normalize(got) == normalize(expected)
    return normalize(got), ok
