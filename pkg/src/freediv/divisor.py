"""Free-divisor analysis of one homogeneous polynomial.

Conventions: a derivation theta = sum g_i d/dx_i is stored by its coefficient
vector; d/dx_i has degree -1, so theta has degree deg(g_i) - 1 and the Euler
derivation sits in degree 0.  Matrices of derivations therefore carry row
twists -1.
"""

from dataclasses import dataclass, field
from typing import Optional

from . import budget
from .groebner.ideal import Ideal, dimension, ideal_equal, minors_ideal
from .homalg.presentation import (GradedModulePresentation, subquotient,
                                  syzygies)
from .matrix import GradedMatrix, determinant, row_echelon_pivots
from .poly import Polynomial, fmt_q


class DivisorError(ValueError):
    """Input violates a precondition (zero, non-homogeneous, cone, ...)."""


class NotLogarithmicError(ValueError):
    def __init__(self, msg, index=None):
        super().__init__(msg)
        self.index = index


def _check_input(f):
    if not isinstance(f, Polynomial):
        raise TypeError("expected a Polynomial")
    if not f:
        raise DivisorError("zero polynomial")
    if not f.is_homogeneous():
        raise DivisorError("polynomial is not homogeneous")
    if any(w != 1 for w in f.ring.weights):
        raise DivisorError("standard grading required")


def jacobian_ideal(f):
    """J_f generated by the n partial derivatives (zero partials dropped)."""
    _check_input(f)
    return Ideal(f.ring, f.gradient())


def is_cone(f):
    """True iff the partials are linearly dependent over the coefficients."""
    if not f:
        return True
    vecs = [dict(p._t) for p in f.gradient()]
    return len(row_echelon_pivots(vecs)) < f.ring.n


def jacobian_height(f):
    return dimension(jacobian_ideal(f)).height


def is_reduced(f):
    """ht J_f >= 2 (f lies in J_f by Euler, so this is reducedness)."""
    _check_input(f)
    if is_cone(f):
        raise DivisorError("cone input")
    if f.degree() <= 1:
        return True
    return jacobian_height(f) >= 2


def is_reduced_squarefree(f):
    """Squarefree test through gcds; accepts cones.  Used as an oracle."""
    from .gcd import is_squarefree
    if not f:
        return False
    return is_squarefree(f)


def _gradient_row(f):
    d = f.degree()
    return GradedMatrix(f.ring, [f.gradient()], [0], [d - 1] * f.ring.n)


def jacobian_syzygies(f):
    """Minimal syzygy matrix of (f_x1, ..., f_xn), n x m."""
    return syzygies(_gradient_row(f))


def jacobian_resolution(f):
    return GradedModulePresentation.quotient_ring(jacobian_ideal(f)).resolution()


def jacobian_pd(f):
    """Projective dimension of J_f itself (one less than that of R/J_f)."""
    return jacobian_resolution(f).projective_dimension() - 1


@dataclass
class FreenessCertificate:
    is_free: bool
    height: int
    pd: int
    phi: Optional[GradedMatrix] = None
    hilbert_burch: Optional[bool] = None

    def as_dict(self):
        out = {"is_free": self.is_free, "jacobian_height": self.height,
               "jacobian_pd": self.pd, "hilbert_burch": self.hilbert_burch}
        if self.phi is not None:
            out["phi"] = self.phi.to_strings()
        return out


def freeness(f, hilbert_burch=True):
    _check_input(f)
    if is_cone(f):
        raise DivisorError("cone input")
    ht = jacobian_height(f)
    if ht < 2:
        raise DivisorError("polynomial is not reduced")
    pd = jacobian_pd(f)
    free = ht == 2 and pd == 1
    cert = FreenessCertificate(free, ht, pd)
    if free:
        phi = jacobian_syzygies(f)
        cert.phi = phi
        if hilbert_burch:
            cert.hilbert_burch = ideal_equal(minors_ideal(phi, f.ring.n - 1), jacobian_ideal(f))
    return cert


def is_free_divisor(f, certificate=False):
    cert = freeness(f, hilbert_burch=certificate)
    return (cert.is_free, cert) if certificate else cert.is_free


def is_linear_free(f):
    """Free with a linear syzygy matrix.  Never raises: bad input is False."""
    try:
        cert = freeness(f, hilbert_burch=False)
    except DivisorError:
        return False
    if not cert.is_free:
        return False
    d = f.degree()
    return all(t == d for t in cert.phi.col_twists)


class LogDerivation:
    """theta = sum g_i d/dx_i with theta(f) in (f), checked on construction."""

    def __init__(self, f, coeffs):
        ring = f.ring
        coeffs = [c if isinstance(c, Polynomial) else Polynomial.constant(ring, c) for c in coeffs]
        if len(coeffs) != ring.n:
            raise ValueError("need %d coefficients, got %d" % (ring.n, len(coeffs)))
        degs = {c.degree() for c in coeffs if c}
        if len(degs) > 1 or not all(c.is_homogeneous() for c in coeffs):
            raise ValueError("coefficients must be homogeneous of one degree")
        self.f = f
        self.coeffs = coeffs
        self.degree = (degs.pop() - 1) if degs else None
        val = Polynomial(ring, {})
        for g, p in zip(coeffs, f.gradient()):
            if g and p:
                val = val + g * p
        q, r = val.divmod(f)
        if r:
            raise NotLogarithmicError("theta(f) is not a multiple of f")
        self.multiplier = q   # theta(f) = multiplier * f

    @classmethod
    def euler(cls, f):
        return cls(f, f.ring.gens())

    def is_zero(self):
        return not any(self.coeffs)

    def __call__(self, p):
        acc = Polynomial(p.ring, {})
        for g, dp in zip(self.coeffs, p.gradient()):
            if g and dp:
                acc = acc + g * dp
        return acc

    def to_strings(self):
        return [str(c) for c in self.coeffs]

    def __repr__(self):
        return "LogDerivation(%s)" % ", ".join(self.to_strings())


def _as_derivations(f, thetas):
    if isinstance(thetas, GradedMatrix):
        thetas = thetas.columns()
    out = []
    for j, t in enumerate(thetas):
        if isinstance(t, LogDerivation):
            out.append(t)
            continue
        try:
            out.append(LogDerivation(f, list(t)))
        except NotLogarithmicError as e:
            raise NotLogarithmicError("candidate %d is not logarithmic" % j, j) from e
    return out


def saito_check(f, thetas):
    """lambda with det[theta_j(x_i)] = lambda f, or None."""
    n = f.ring.n
    thetas = _as_derivations(f, thetas)
    if len(thetas) != n:
        raise ValueError("need exactly %d derivations, got %d" % (n, len(thetas)))
    rows = [[thetas[j].coeffs[i] for j in range(n)] for i in range(n)]
    det = determinant(rows, f.ring)
    if not det:
        return None
    q, r = det.divmod(f)
    if r or not q.is_constant():
        return None
    return q.constant_value()


class LogDerivationModule:
    """T_{R/k}(f) = Syz(J_f) + R*euler, generators as columns (Euler last)."""

    def __init__(self, f):
        _check_input(f)
        self.f = f
        ring = f.ring
        syz = jacobian_syzygies(f)
        cols = syz.columns() + [list(ring.gens())]
        self.generators = [LogDerivation(f, c) for c in cols]
        self.matrix = GradedMatrix.from_columns(ring, cols, [-1] * ring.n,
                                                _theta_twists(cols), nrows=ring.n)

    def degrees(self):
        return list(self.matrix.col_twists)

    def presentation(self):
        """T as coker of the syzygies of its generator matrix."""
        rel = syzygies(self.matrix)
        if rel.ncols == 0:
            return GradedModulePresentation.free(self.f.ring, self.degrees())
        return GradedModulePresentation(rel)

    def generic_rank(self):
        from .matrix import numeric_rank
        return numeric_rank(self.matrix)

    def is_free(self):
        return len(self.generators) == self.f.ring.n and self.presentation().matrix.ncols == 0

    def der_quotient(self):
        """Der_k(R/(f)) = T / f R^n."""
        f = self.f
        ring = f.ring
        n = ring.n
        zero = Polynomial(ring, {})
        fI = [[f if i == j else zero for j in range(n)] for i in range(n)]
        H = GradedMatrix(ring, fI, [-1] * n, [f.degree() - 1] * n)
        return subquotient(self.matrix, H)


def _theta_twists(cols):
    out = []
    for c in cols:
        degs = [e.degree() for e in c if e]
        out.append(degs[0] - 1 if degs else 0)
    return out


def log_derivation_module(f):
    return LogDerivationModule(f)


def der_regularity(f):
    """Regularity of Der_k(R/(f)) from a minimal resolution."""
    return log_derivation_module(f).der_quotient().resolution().regularity()


@dataclass
class DivisorReport:
    degree: int
    n: int
    is_cone: bool
    is_reduced: Optional[bool] = None
    jacobian_height: Optional[int] = None
    jacobian_pd: Optional[int] = None
    is_free: Optional[bool] = None
    is_linear_free: Optional[bool] = None
    saito_lambda: object = None
    der_regularity: Optional[int] = None
    der_formula_holds: Optional[bool] = None
    syzygy_twists: list = field(default_factory=list)
    truncated: list = field(default_factory=list)
    blowup: object = None
    maxspread: object = None

    def check_invariants(self):
        if self.is_free is not None and self.jacobian_height is not None:
            assert self.is_free == (self.jacobian_height == 2 and self.jacobian_pd == 1)
        if self.is_linear_free:
            assert self.degree == self.n

    def as_dict(self):
        lam = None if self.saito_lambda is None else fmt_q(self.saito_lambda)
        out = {
            "degree": self.degree,
            "n": self.n,
            "is_cone": self.is_cone,
            "is_reduced": self.is_reduced,
            "jacobian_height": self.jacobian_height,
            "jacobian_pd": self.jacobian_pd,
            "is_free": self.is_free,
            "is_linear_free": self.is_linear_free,
            "saito_lambda": lam,
            "der_regularity": self.der_regularity,
            "der_formula_holds": self.der_formula_holds,
            "syzygy_twists": list(self.syzygy_twists),
            "truncated": list(self.truncated),
        }
        if self.blowup is not None:
            out["blowup"] = self.blowup.as_dict()
        if self.maxspread is not None:
            out["maxspread"] = self.maxspread.as_dict()
        return out


def divisor_report(f, der=True):
    _check_input(f)
    d = f.degree()
    rep = DivisorReport(degree=d, n=f.ring.n, is_cone=is_cone(f))
    if rep.is_cone:
        return rep
    rep.is_reduced = is_reduced(f)
    if not rep.is_reduced:
        return rep
    cert = freeness(f, hilbert_burch=False)
    rep.jacobian_height = cert.height
    rep.jacobian_pd = cert.pd
    rep.is_free = cert.is_free
    T = log_derivation_module(f)
    rep.syzygy_twists = [t for t in T.degrees()[:-1]]
    if cert.is_free:
        rep.is_linear_free = all(t == d for t in cert.phi.col_twists)
        rep.saito_lambda = saito_check(f, T.generators)
    else:
        rep.is_linear_free = False
    if der:
        try:
            rep.der_regularity = T.der_quotient().resolution().regularity()
            rep.der_formula_holds = rep.der_regularity == d - 2
        except budget.ResourceExhausted:
            rep.truncated.append("der_regularity")
    rep.check_invariants()
    return rep
