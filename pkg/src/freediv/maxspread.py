"""The cokernel module C_f of the Hessian, maximal analytic spread, depths of
powers of J_f, the sufficient homaloidal criterion and Hessian experiments."""

from dataclasses import dataclass, field
from typing import Optional

from . import budget
from .blowup import BlowupContext, analytic_spread, rees_is_cm
from .divisor import (DivisorError, freeness, is_cone, jacobian_ideal,
                      jacobian_syzygies)
from .gcd import squarefree_part
from .groebner.ideal import Ideal, dimension, ideal_power
from .homalg.presentation import (GradedModulePresentation, ext1_against_ring,
                                  twist_betti)
from .matrix import GradedMatrix, bareiss_rank, determinant, numeric_rank


def hessian_matrix(f):
    """Second partials; columns are the gradients of the f_xi (degree d-2)."""
    ring = f.ring
    grad = f.gradient()
    rows = [[g.diff(j) for j in range(ring.n)] for g in grad]
    return GradedMatrix(ring, rows, [0] * ring.n, [f.degree() - 2] * ring.n, check=False)


def hessian_determinant(f):
    return determinant(hessian_matrix(f))


def cokernel_Cf(f):
    """C_f = R^n / (gradients of the partials)."""
    return GradedModulePresentation(hessian_matrix(f))


def _full_rank(rows, n):
    r = numeric_rank(rows)
    if r < n:
        r = bareiss_rank(rows)
    return r == n


def _rank(rows):
    r = numeric_rank(rows)
    full = min(len(rows), len(rows[0]) if rows else 0)
    return r if r == full else bareiss_rank(rows)


@dataclass
class DepthTable:
    values: dict = field(default_factory=dict)   # m -> depth R/J^m
    m_max: int = 0
    truncated_at: Optional[int] = None           # first m not computed

    def zero_witness(self):
        for m in sorted(self.values):
            if self.values[m] == 0:
                return m
        return None

    def as_dict(self):
        return {"values": {str(m): self.values[m] for m in sorted(self.values)},
                "m_max": self.m_max, "truncated_at": self.truncated_at}


@dataclass
class MaxSpreadReport:
    hessian_det_nonzero: Optional[bool] = None
    dim_Cf: Optional[int] = None
    analytic_spread: Optional[int] = None
    max_spread: Optional[bool] = None
    ext_consistency: Optional[bool] = None
    depth_table: Optional[DepthTable] = None
    depth_zero_witness: Optional[int] = None
    homaloidal_sufficient: object = None
    homaloidal_evidence: dict = field(default_factory=dict)
    hessian: Optional[dict] = None
    truncated: list = field(default_factory=list)

    def as_dict(self):
        return {
            "hessian_det_nonzero": self.hessian_det_nonzero,
            "dim_Cf": self.dim_Cf,
            "analytic_spread": self.analytic_spread,
            "max_spread": self.max_spread,
            "ext_consistency": self.ext_consistency,
            "depth_table": None if self.depth_table is None else self.depth_table.as_dict(),
            "depth_zero_witness": self.depth_zero_witness,
            "homaloidal_sufficient": self.homaloidal_sufficient,
            "homaloidal_evidence": dict(self.homaloidal_evidence),
            "hessian": self.hessian,
            "truncated": list(self.truncated),
        }


def _spread_preconditions(f):
    if is_cone(f):
        raise DivisorError("cone input")
    if f.degree() < 3:
        raise DivisorError("degree at least 3 required")


def max_spread_check(f, report=None):
    """Three independent verdicts on maximal analytic spread; they must agree.

    (iii) Hessian rows independent over the fraction field,
    (ii)  dim C_f = n - 1 (module Groebner basis of C_f, cross-checked
          against dim R/(h)),
    (i)   analytic spread of J_f equals n.
    """
    from .blowup import InconsistencyError
    _spread_preconditions(f)
    n = f.ring.n
    rep = report or MaxSpreadReport()
    H = hessian_matrix(f)
    rep.hessian_det_nonzero = _full_rank(H.rows, n)
    rep.dim_Cf = cokernel_Cf(f).dimension()
    if rep.hessian_det_nonzero:
        h = determinant(H)
        dim_h = dimension(Ideal(f.ring, [h])).krull_dimension
    else:
        dim_h = n
    if dim_h != rep.dim_Cf:
        raise InconsistencyError("dim C_f = %d but dim R/(h) = %d" % (rep.dim_Cf, dim_h))
    rep.analytic_spread = analytic_spread(BlowupContext.jacobian(f))
    verdicts = (rep.hessian_det_nonzero, rep.dim_Cf == n - 1, rep.analytic_spread == n)
    if len(set(verdicts)) != 1:
        raise InconsistencyError("max spread verdicts disagree: det %s, dim %s, spread %s" % verdicts)
    rep.max_spread = verdicts[0]
    return rep


def ext_consistency_check(f):
    """Ext^1(C_f, R) and C_f(d-2) share Betti table and Hilbert series."""
    C = cokernel_Cf(f)
    E = ext1_against_ring(C)
    a = f.degree() - 2
    rc = C.resolution()
    re = E.resolution()
    if re.betti != twist_betti(rc.betti, a):
        return False
    return E.hilbert_series() == C.hilbert_series().shift(a)


def depth_power(J, m):
    P = GradedModulePresentation.quotient_ring(ideal_power(J, m))
    return J.ring.n - P.resolution().projective_dimension()


def depth_power_table(f, m_max, stop_at_zero=False):
    """depth R/J_f^m for m = 1..m_max; stops early past the deadline
    (and at the first depth 0 when asked)."""
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    J = jacobian_ideal(f)
    tab = DepthTable(m_max=m_max)
    for m in range(1, m_max + 1):
        try:
            budget.check()
            tab.values[m] = depth_power(J, m)
            if stop_at_zero and tab.values[m] == 0:
                break
        except budget.ResourceExhausted:
            tab.truncated_at = m
            break
    return tab


def linear_syzygy_part(f):
    """phi_1: the columns of the minimal syzygy matrix with linear entries."""
    phi = jacobian_syzygies(f)
    d = f.degree()
    cols = [j for j, t in enumerate(phi.col_twists) if t == d]
    return phi.submatrix(range(phi.nrows), cols)


def homaloidal_linear_condition(f):
    """True iff the linear syzygies have a nonzero (n-1)-minor."""
    n = f.ring.n
    phi1 = linear_syzygy_part(f)
    return phi1.ncols >= n - 1 and _rank(phi1.rows) >= n - 1


def homaloidal_sufficient(f, m_max=None, depth_table=None):
    """(verdict, evidence); verdict is True, False or "inconclusive".

    Route (a): the linear syzygies phi_1 have a nonzero (n-1)-minor.
    Route (b): the Rees algebra is Cohen-Macaulay (so S_2 holds) and some
    power J_f^m with m <= m_max has depth R/J_f^m = 0.
    """
    n = f.ring.n
    m_max = m_max or n
    ev = {"field": "rationals; birationality read after extending to the algebraic closure"}
    rows = [[g.diff(j) for j in range(n)] for g in f.gradient()]
    spread = _rank(rows)
    ev["jacobian_rank"] = spread
    if spread < n:
        ev["route"] = "analytic spread below n"
        return False, ev
    phi1 = linear_syzygy_part(f)
    ev["linear_syzygies"] = phi1.ncols
    a = homaloidal_linear_condition(f)
    ev["linear_minors_nonzero"] = a
    if not a:
        ev["route"] = "linear minors vanish"
        return False, ev
    ctx = BlowupContext.jacobian(f)
    cm = rees_is_cm(ctx)
    ev["rees_cm"] = cm
    if not cm:
        ev["route"] = "Rees algebra not Cohen-Macaulay"
        return "inconclusive", ev
    tab = depth_table or depth_power_table(f, m_max, stop_at_zero=True)
    ev["depth_table"] = {str(m): v for m, v in sorted(tab.values.items())}
    w = tab.zero_witness()
    ev["depth_zero_at"] = w
    if w is None:
        ev["route"] = "no power with depth 0 up to m = %d" % m_max
        return "inconclusive", ev
    ev["route"] = "linear minors and Rees CM with depth R/J^%d = 0" % w
    return True, ev


def _power_of_f(h, f):
    """(cofactor, k) with h = cofactor * f^k and f not dividing cofactor."""
    k = 0
    while h and not h.is_constant() and h.degree() >= f.degree():
        q, r = h.divmod(f)
        if r:
            break
        h, k = q, k + 1
    return h, k


def hessian_experiment(f, freeness_check=True):
    """Hessian determinant h(f), its squarefree part and freeness data."""
    h = hessian_determinant(f)
    out = {"hessian": str(h), "hessian_zero": not h}
    if not h:
        return out
    cof, k = _power_of_f(h, f)
    out["f_power"] = k
    out["cofactor"] = str(cof)
    out["is_square_multiple"] = k == 2 and cof.is_constant()
    red = squarefree_part(h)
    out["reduced"] = red.degree() == h.degree()
    out["reduced_part"] = str(red)
    out["reduced_degree"] = red.degree()
    if not freeness_check or red.is_constant():
        return out
    if is_cone(red):
        out["reduced_part_cone"] = True
        return out
    out["reduced_part_cone"] = False
    try:
        cert = freeness(red, hilbert_burch=False)
    except DivisorError as e:
        out["reduced_part_free"] = None
        out["note"] = str(e)
        return out
    out["reduced_part_free"] = cert.is_free
    out["reduced_part_linear_free"] = bool(cert.is_free and
                                           all(t == red.degree() for t in cert.phi.col_twists))
    return out


def maxspread_report(f, m_max=None, tasks=("maxspread", "depth-table", "homaloidal")):
    """Fill a MaxSpreadReport; each stage records a truncation on timeout."""
    n = f.ring.n
    m_max = m_max or n
    rep = MaxSpreadReport()
    if "maxspread" in tasks:
        try:
            max_spread_check(f, rep)
            rep.ext_consistency = ext_consistency_check(f)
        except budget.ResourceExhausted:
            rep.truncated.append("maxspread")
    if "depth-table" in tasks or "homaloidal" in tasks:
        rep.depth_table = depth_power_table(f, m_max)
        rep.depth_zero_witness = rep.depth_table.zero_witness()
        if rep.depth_table.truncated_at is not None:
            rep.truncated.append("depth-table")
    if "homaloidal" in tasks:
        try:
            rep.homaloidal_sufficient, rep.homaloidal_evidence = homaloidal_sufficient(
                f, m_max, rep.depth_table)
        except budget.ResourceExhausted:
            rep.truncated.append("homaloidal")
    if "hessian" in tasks:
        try:
            rep.hessian = hessian_experiment(f)
        except budget.ResourceExhausted:
            rep.truncated.append("hessian")
    return rep
