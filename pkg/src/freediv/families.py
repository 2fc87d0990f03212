"""Closed-form constructors for the free divisor families and the worked
examples, with the expected results attached to each fixture.

Every fixture carries a ring, the polynomial, and a dict of expectations
``key -> Expectation(value, claim)``.  Claims are short statements of the
known result so that a failing regression run explains itself.
"""

from dataclasses import dataclass, field
from math import comb

from .matrix import GradedMatrix, determinant
from .poly import Polynomial, poly_sum, Q
from .ring import Ring

CAP_N = 6
CAP_AB = 12

FAMILIES = ("family1", "family2", "family3", "family3g", "family4", "normal_crossing", "example")


class FamilyError(ValueError):
    """Invalid family parameters."""


@dataclass
class Expectation:
    value: object
    claim: str
    # set when a direct computation contradicts the stated claim; the
    # regression harness reports such keys instead of failing on them
    discrepancy: str = None


@dataclass
class FamilySpec:
    family_id: str
    params: dict = field(default_factory=dict)
    allow_large: bool = False

    def label(self):
        if self.family_id == "example":
            return self.params["name"]
        if self.family_id == "family4":
            return "family4[%s]" % ",".join(str(a) for a in self.params["a"])
        keys = sorted(self.params)
        return "%s[%s]" % (self.family_id, ",".join("%s=%s" % (k, self.params[k]) for k in keys))


@dataclass
class Fixture:
    spec: FamilySpec
    ring: Ring
    polynomial: Polynomial
    expected: dict = field(default_factory=dict)
    rejected: bool = False
    reason: str = ""
    slow: bool = False
    notes: list = field(default_factory=list)
    # scalars c_i such that T_i stands for c_i * f_xi in quoted Rees generators
    t_scaling: tuple = None

    @property
    def name(self):
        return self.spec.label()

    def expect(self, key, value, claim, discrepancy=None):
        self.expected[key] = Expectation(value, claim, discrepancy)
        return self


# -- helpers -------------------------------------------------------------------

def _names(prefix, k):
    return ["%s%d" % (prefix, i) for i in range(1, k + 1)]


def t_names(k):
    return _names("T", k)


def hankel_fiber_gens(ring, names):
    """2x2 minors of [[y1 .. y_{m-1}], [y2 .. y_m]]."""
    ys = [ring.gen(v) for v in names]
    top, bot = ys[:-1], ys[1:]
    return _two_row_minors(top, bot)


def generic_two_row_gens(ring, names):
    """2x2 minors of [[z1 z3 ..], [z2 z4 ..]]."""
    zs = [ring.gen(v) for v in names]
    return _two_row_minors(zs[0::2], zs[1::2])


def _two_row_minors(top, bot):
    out = []
    m = len(top)
    for i in range(m):
        for j in range(i + 1, m):
            out.append(top[i] * bot[j] - top[j] * bot[i])
    return out


def _check_int(name, v, lo):
    if not isinstance(v, int) or isinstance(v, bool) or v < lo:
        raise FamilyError("%s must be an integer >= %d" % (name, lo))


# -- family 1 ----------------------------------------------------------------

def family1_ring(n):
    return Ring(_names("x", n - 2) + ["w", "u"])


def family1_poly(n):
    R = family1_ring(n)
    w, u = R.gen("w"), R.gen("u")
    f = (w ** (n - 1) * u).scale(2)
    for i in range(1, n - 1):
        f = f + R.gen("x%d" % i) * w ** (i - 1) * u ** (n - i)
    return f


def phi_r(ring, r, w="w", u="u"):
    """(r+1) x r syzygy matrix of (w,u)^r: -w on the diagonal, u below it."""
    W, U = ring.gen(w), ring.gen(u)
    rows = [[0] * r for _ in range(r + 1)]
    for j in range(r):
        rows[j][j] = -W
        rows[j + 1][j] = U
    return GradedMatrix(ring, rows, [r] * (r + 1), [r + 1] * r)


def family1_psi(n):
    """n x (n-1) linear presentation [eta | delta1 | delta2] of J_f."""
    R = family1_ring(n)
    x = [None] + [R.gen("x%d" % i) for i in range(1, n - 1)]
    w, u = R.gen("w"), R.gen("u")
    zero = R.zero()
    cols = []
    eta = phi_r(R, n - 3)
    for j in range(n - 3):
        cols.append(eta.column(j) + [zero, zero])
    # u f_w = 2(n-1) w f_{x_{n-2}} + sum_{i=2}^{n-2} (i-1) x_i f_{x_{i-1}}
    d1 = [zero] * n
    for i in range(2, n - 1):
        d1[i - 2] = x[i].scale(i - 1)
    d1[n - 3] = d1[n - 3] + w.scale(2 * (n - 1))
    d1[n - 2] = -u
    cols.append(d1)
    # (n-1) u f_u = w f_w + sum beta_i x_i f_{x_i}
    d2 = [x[i].scale(n * (n - i - 1) + 1) for i in range(1, n - 1)] + [w, u.scale(-(n - 1))]
    cols.append(d2)
    return GradedMatrix.from_columns(R, cols, [n - 1] * n, [n] * (n - 1))


def _family1(spec):
    n = spec.params.get("n")
    _check_int("n", n, 4)
    if n > CAP_N and not spec.allow_large:
        raise FamilyError("family1 is capped at n <= %d (pass allow_large to override)" % CAP_N)
    R = family1_ring(n)
    fx = Fixture(spec, R, family1_poly(n))
    fx.expect("degree", n, "the family-1 form has degree n")
    fx.expect("is_free", True, "family-1 forms are free divisors")
    fx.expect("is_linear_free", True, "family-1 forms are linear free divisors")
    fx.expect("betti_twists", [[n - 1] * n, [n] * (n - 1)],
              "J_f has a linear resolution R(-n)^(n-1) -> R(-n+1)^n")
    fx.expect("der_regularity", n - 2, "reg Der(R/(f)) equals n - 2")
    if n == 4:
        fx.expect("linear_type", True, "for n = 4 the Jacobian ideal is of linear type")
        fx.expect("analytic_spread", 4, "for n = 4 the analytic spread is 4")
        fx.expect("reduction_number", 0, "for n = 4 the reduction number is 0")
        fx.expect("rees_cm", True, "the Rees algebra of J_f is Cohen-Macaulay")
    else:
        fx.expect("linear_type", False, "for n >= 5 the reduction number is 1, so not of linear type")
        fx.expect("analytic_spread", 4, "for n >= 5 the analytic spread is 4")
        fx.expect("reduction_number", 1, "for n >= 5 the reduction number is 1")
        fx.expect("fiber_cm", True, "the special fiber is Cohen-Macaulay")
        fx.expect("fiber_ideal_hankel", True,
                  "the fiber ideal is I_2 of the 2 x (n-3) Hankel matrix in T1..T_(n-2)")
        fx.expect("max_spread", False, "analytic spread 4 < n, so the Hessian vanishes")
        if n == 5:
            fx.expect("rees_cm", True, "the Rees algebra of J_f is Cohen-Macaulay")
        if n > 5:
            fx.slow = True
    return fx


# -- family 2 ----------------------------------------------------------------

def family2_ring(n):
    return Ring(_names("x", 2 * n - 2) + ["w", "u"])


def family2_poly(n):
    R = family2_ring(n)
    w, u = R.gen("w"), R.gen("u")
    q = R.one()
    for i in range(1, n):
        q = q * (R.gen("x%d" % (2 * i - 1)) * u - R.gen("x%d" % (2 * i)) * w)
    return w * u * q


def family2_psi(n):
    """2n x (2n-1) syzygy matrix of J_f."""
    R = family2_ring(n)
    w, u = R.gen("w"), R.gen("u")
    x = [None] + [R.gen("x%d" % i) for i in range(1, 2 * n - 1)]
    zero = R.zero()
    N = 2 * n
    cols = []
    for i in range(1, n):
        a = [zero] * N
        a[2 * i - 2], a[2 * i - 1] = w, u
        b = [zero] * N
        b[2 * i - 2], b[2 * i - 1] = x[2 * i - 1].scale(n + 1), x[2 * i].scale(n + 1)
        b[N - 2], b[N - 1] = -w, -u
        cols += [a, b]
    last = [zero] * N
    for i in range(1, n):
        last[2 * i - 1] = x[2 * i].scale(n + 1)
    last[N - 2], last[N - 1] = w.scale(-n), u
    cols.append(last)
    return GradedMatrix.from_columns(R, cols, [2 * n - 1] * N, [2 * n] * (N - 1))


def family2_saito(n):
    """2n x 2n matrix of logarithmic derivations; det = (-1)^n (n+1) f."""
    R = family2_ring(n)
    w, u = R.gen("w"), R.gen("u")
    x = [None] + [R.gen("x%d" % i) for i in range(1, 2 * n - 1)]
    zero = R.zero()
    N = 2 * n
    cols = []
    for i in range(1, n):
        a = [zero] * N
        a[2 * i - 2], a[2 * i - 1] = w, u
        b = [zero] * N
        b[2 * i - 2], b[2 * i - 1] = x[2 * i - 1], x[2 * i]
        cols += [a, b]
    c = [zero] * N
    for i in range(1, n):
        c[2 * i - 1] = x[2 * i].scale(n + 1)
    c[N - 2], c[N - 1] = w.scale(-n), u
    cols.append(c)
    cols.append(R.gens())
    return GradedMatrix.from_columns(R, cols, [0] * N, [1] * N)


def family2_sym_forms_n2():
    """The three bilinear forms quoted for Sym(J_f) when n = 2, in
    k[x1,x2,w,u,z1,z2,s,t].

    The first two are entries of [z1 z2 s t] psi_2. The third is not a
    syzygy of the gradient under any relabeling; the third entry of
    [z1 z2 s t] psi_2 is 3*x2*z2 - 2*w*s + u*t.
    """
    B = Ring(["x1", "x2", "w", "u", "z1", "z2", "s", "t"])
    return B, [B("3*x1*z1 + 3*x2*z2 - w*s - u*t"), B("w*z1 + u*z2"),
               B("x2*z1 + x1*z2 + u*s + w*t")]


def _family2(spec):
    n = spec.params.get("n")
    _check_int("n", n, 2)
    if n > CAP_N and not spec.allow_large:
        raise FamilyError("family2 is capped at n <= %d (pass allow_large to override)" % CAP_N)
    R = family2_ring(n)
    fx = Fixture(spec, R, family2_poly(n))
    fx.expect("degree", 2 * n, "the family-2 form has degree 2n")
    fx.expect("is_free", True, "family-2 forms are free divisors")
    fx.expect("is_linear_free", True, "family-2 forms are linear free divisors")
    fx.expect("saito_lambda", n + 1, "the explicit derivation matrix has determinant (n+1) f",
              None if n % 2 == 0 else
              "the determinant computes to (-1)^n (n+1) f; the stated sign fails for odd n")
    fx.expect("der_regularity", 2 * (n - 1), "reg Der(R/(f)) equals 2(n-1)")
    if n == 2:
        fx.expect("linear_type", True, "for n = 2 the Jacobian ideal is of linear type")
        fx.expect("sym_ci", True, "for n = 2 the symmetric algebra is a complete intersection")
    else:
        fx.expect("linear_type", False, "for n >= 3 the reduction number is 1, so not of linear type")
        fx.expect("analytic_spread", n + 2, "for n >= 3 the analytic spread is n + 2")
        fx.expect("reduction_number", 1, "for n >= 3 the reduction number is 1")
        fx.expect("fiber_cm", True, "the special fiber is a generic determinantal ring")
        fx.expect("fiber_ideal_generic", True,
                  "the fiber ideal is I_2 of the generic 2 x (n-1) matrix [[T1 T3 ..],[T2 T4 ..]]")
        fx.expect("rees_cm", True, "the Rees algebra of J_f is Cohen-Macaulay")
        if n == 3:
            fx.expect("sym_ci", True, "for n = 3 the symmetric algebra is a complete intersection")
        fx.slow = n > 3
    return fx


# -- family 3 and the derived family g ------------------------------------------

def plane_ring():
    return Ring(["x", "y", "z"])


def family3_poly(a, b):
    R = plane_ring()
    x, y, z = R.gens()
    return (x ** a - y ** (a - 1) * z) ** b + y ** (a * b)


def family3_phi(a):
    """Syzygy matrix of J_f for beta = 2."""
    R = plane_ring()
    x, y, z = R.gens()
    d = 2 * a - 1
    rows = [[y ** (a - 1), (x * y ** (a - 2) * z).scale(a - 1)],
            [R.zero(), (x ** a - y ** (a - 1) * z).scale(a)],
            [(x ** (a - 1)).scale(a), (y ** a).scale(a * a) + (y ** (a - 2) * z * z).scale(a * (a - 1))]]
    return GradedMatrix(R, rows, [d] * 3, [d + a - 1, d + a])


def family3_rees_P(a):
    """The height-2 ideal I_2 [[H, -x t], [-y s, u], [a x^(a-1), y^(a-2)]]
    in k[x,y,z,T1,T2,T3] (s,t,u = T1,T2,T3)."""
    B = Ring(["x", "y", "z", "T1", "T2", "T3"])
    x, y, z, s, t, u = B.gens()
    H = (x * z * s).scale(a - 1) + ((y * y).scale(a * a) + (z * z).scale(a * (a - 1))) * u \
        - (y * z * t).scale(a)
    M = [[H, -(x * t)], [-(y * s), u], [(x ** (a - 1)).scale(a), y ** (a - 2)]]
    gens = []
    for i in range(3):
        for j in range(i + 1, 3):
            gens.append(M[i][0] * M[j][1] - M[j][0] * M[i][1])
    return B, gens


def family3g_B(a):
    R = plane_ring()
    x, y, z = R.gens()
    return x ** a - y ** (a - 1) * z + y ** a


def family3g_poly(a, b):
    R = plane_ring()
    y = R.gen("y")
    B = family3g_B(a)
    terms = []
    for j in range(b):
        terms.append((B ** (b - j - 1) * y ** (a * j)).scale((-1) ** j * comb(b, j)))
    return poly_sum(R, terms)


def _family3(spec):
    a, b = spec.params.get("alpha"), spec.params.get("beta")
    _check_int("alpha", a, 2)
    _check_int("beta", b, 2)
    if a * b > CAP_AB and not spec.allow_large:
        raise FamilyError("family3 is capped at alpha*beta <= %d" % CAP_AB)
    R = plane_ring()
    fx = Fixture(spec, R, family3_poly(a, b))
    fx.expect("degree", a * b, "the family-3 form has degree alpha*beta")
    fx.expect("is_free", True, "family-3 forms are free divisors")
    fx.expect("is_linear_free", False, "degree alpha*beta > 3 rules out a linear free divisor")
    fx.expect("der_regularity", a * b - 2, "reg Der(R/(f)) equals alpha*beta - 2")
    if (a, b) == (2, 2):
        fx.expect("linear_type", True, "for (2,2) the Jacobian ideal is of linear type")
    if (a == 2 and b >= 3) or (a >= 3 and b == 2):
        fx.expect("linear_type", False, "the Jacobian ideal is not of linear type here")
        fx.expect("analytic_spread", 3, "the special fiber is a polynomial ring in 3 variables")
        fx.expect("reduction_number", 0, "the reduction number is 0")
        fx.expect("fiber_ideal_zero", True, "the special fiber is a polynomial ring")
    if (a, b) == (2, 3) or b == 2:
        fx.expect("rees_cm", True, "the Rees algebra is Cohen-Macaulay for (2,3) and beta = 2")
    if b == 2 and a >= 3:
        fx.expect("rees_equals_P", True, "the Rees ideal equals the explicit height-2 ideal P")
    fx.slow = a * b > 8
    return fx


def _family3g(spec):
    a, b = spec.params.get("alpha"), spec.params.get("beta")
    _check_int("alpha", a, 2)
    _check_int("beta", b, 3)
    if b % 2 == 0:
        raise FamilyError("family3g needs an odd beta >= 3")
    if a * b > CAP_AB and not spec.allow_large:
        raise FamilyError("family3g is capped at alpha*beta <= %d" % CAP_AB)
    R = plane_ring()
    g = family3g_poly(a, b)
    fx = Fixture(spec, R, g)
    d = a * b - a
    fx.expect("degree", d, "g has degree alpha*(beta-1)")
    fx.expect("is_free", True, "g is a free divisor for odd beta >= 3")
    fx.expect("der_regularity", d - 2, "reg Der(R/(g)) equals alpha*beta - alpha - 2")
    if b == 3:
        fx.expect("rees_cm", True, "for beta = 3 the Rees algebra is Cohen-Macaulay")
        fx.expect("reduction_number", 0, "for beta = 3 the reduction number is 0")
        fx.expect("linear_type", a == 2, "for beta = 3 linear type holds exactly when alpha = 2")
        fx.expect("sym_saturation", True,
                  "saturating Sym by (x^(alpha-1), y^(alpha-2)) gives the Rees ideal")
    if b == 5 and a in (2, 3):
        fx.expect("rees_depth_defect", 1, "for beta = 5 the Rees algebra has depth dim - 1")
        fx.expect("reduction_number", 0, "for beta = 5 the reduction number is 0")
        fx.slow = True
    return fx


# -- family 4 ----------------------------------------------------------------

def family4_forms(a):
    R = plane_ring()
    x, y, z = R.gens()
    a = [Q(c) for c in a]
    return R, [x.scale(a[3 * i]) + y.scale(a[3 * i + 1]) + z.scale(a[3 * i + 2]) for i in range(3)]


def coefficients_of_forms(*forms):
    """Nine coefficients from three linear forms given as text in x, y, z."""
    R = plane_ring()
    out = []
    for s in forms:
        p = R(s) if isinstance(s, str) else s
        if p and (not p.is_homogeneous() or p.degree() != 1):
            raise FamilyError("family4 needs linear forms, got %s" % p)
        out += [p.coefficient((1, 0, 0)), p.coefficient((0, 1, 0)), p.coefficient((0, 0, 1))]
    return tuple(out)


def family4_theta(a):
    R, (L1, L2, L3) = family4_forms(a)
    x, y, z = R.gens()
    Qs = [x * L2 - y * L1, x * L3 - z * L1, y * L3 - z * L2]
    rows = [[q.diff(v) for q in Qs] for v in ("x", "y", "z")]
    return GradedMatrix(R, rows, [0, 0, 0], [1, 1, 1], check=False)


def family4_poly(a):
    th = family4_theta(a)
    return determinant(th)


def family4_Phi(a):
    """Derivation matrix [theta1 | theta2 | euler] with det = f/2."""
    R, (L1, L2, L3) = family4_forms(a)
    a = [Q(c) for c in a]
    x, y, z = R.gens()
    L = (L1, L2, L3)
    col1 = [poly_sum(R, [L[k].scale(a[3 * i + k]) for k in range(3)]) for i in range(3)]
    return GradedMatrix.from_columns(R, [col1, list(L), [x, y, z]], [0, 0, 0], [1, 1, 1], check=False)


def family4_phi(a):
    """3 x 2 linear presentation of J_f."""
    R, (L1, L2, L3) = family4_forms(a)
    a = [Q(c) for c in a]
    x, y, z = R.gens()
    A = a[0] + a[4] + a[8]
    Bc = -4 * a[5] * a[7] - (a[4] - a[8]) ** 2 - 4 * a[2] * a[6] - 4 * a[1] * a[3] \
        + 3 * a[0] * (a[4] + a[8])
    C = 2 * a[0] + a[4] + a[8]
    L = (L1, L2, L3)
    X = (x, y, z)
    c1 = [poly_sum(R, [L[k].scale(6 * a[3 * i + k]) for k in range(3)]) + X[i].scale(Bc - A * C)
          for i in range(3)]
    c2 = [L[i].scale(3) - X[i].scale(A) for i in range(3)]
    return GradedMatrix.from_columns(R, [c1, c2], [2, 2, 2], [3, 3], check=False)


def _family4(spec):
    a = spec.params.get("a")
    if a is None or len(a) != 9:
        raise FamilyError("family4 needs nine coefficients a1..a9")
    a = tuple(Q(c) for c in a)
    spec.params["a"] = a
    R = plane_ring()
    f = family4_poly(a)
    fx = Fixture(spec, R, f)
    if not f:
        fx.rejected = True
        fx.reason = "the cubic det(Theta) vanishes"
        return fx
    from .divisor import is_reduced_squarefree
    if not is_reduced_squarefree(f):
        fx.rejected = True
        fx.reason = "the cubic det(Theta) is not reduced"
        return fx
    fx.expect("degree", 3, "the family-4 form is a cubic")
    fx.expect("is_free", True, "a nonzero reduced family-4 cubic is free")
    fx.expect("is_linear_free", True, "a nonzero reduced family-4 cubic is linear free")
    fx.expect("linear_type", True, "the Jacobian ideal is of linear type")
    fx.expect("reduction_number", 0, "linear type gives reduction number 0")
    fx.expect("rees_ci", True, "the Rees algebra is a complete intersection of height 2")
    fx.expect("der_regularity", 1, "reg Der(R/(f)) equals 1")
    fx.expect("saito_lambda", Q("1/2"), "the derivation matrix Phi has determinant f/2")
    fx.expect("g_condition_3", True, "the Jacobian ideal satisfies G_3")
    return fx


# -- normal crossing ---------------------------------------------------------

def normal_crossing_ring(n):
    return Ring(_names("x", n))


def normal_crossing_poly(n):
    R = normal_crossing_ring(n)
    f = R.one()
    for v in R.gens():
        f = f * v
    return f


def normal_crossing_phi(n):
    R = normal_crossing_ring(n)
    xs = R.gens()
    zero = R.zero()
    cols = []
    for j in range(n - 1):
        c = [zero] * n
        c[j] = xs[j]
        c[n - 1] = -xs[n - 1]
        cols.append(c)
    return GradedMatrix.from_columns(R, cols, [n - 1] * n, [n] * (n - 1))


def _normal_crossing(spec):
    n = spec.params.get("n")
    _check_int("n", n, 3)
    if n > CAP_N and not spec.allow_large:
        raise FamilyError("normal_crossing is capped at n <= %d" % CAP_N)
    R = normal_crossing_ring(n)
    fx = Fixture(spec, R, normal_crossing_poly(n))
    fx.expect("degree", n, "the normal crossing divisor has degree n")
    fx.expect("is_free", True, "the normal crossing divisor is free")
    fx.expect("is_linear_free", True, "the normal crossing divisor is linear free")
    fx.expect("depth_table", {m: max(0, n - m - 1) for m in range(1, n + 1)},
              "depth R/J^m equals max(0, n-m-1)")
    fx.expect("g_condition_n", True, "ht I_(n-j)(phi) = j+1 for j = 1..n-1")
    fx.expect("analytic_spread", n, "the analytic spread is n")
    fx.expect("max_spread", True, "the Hessian determinant is nonzero")
    fx.expect("rees_cm", True, "the Rees algebra is Cohen-Macaulay")
    fx.expect("linear_type", True, "the squarefree monomial Jacobian ideal is of linear type")
    fx.expect("homaloidal_sufficient", True, "the Cremona involution: the sufficient criterion fires")
    fx.expect("ext_consistent", True, "Ext^1(C_f, R) matches C_f(d-2)")
    fx.expect("cf_cm", True, "C_f is Cohen-Macaulay of projective dimension 1")
    return fx


# -- example catalog ---------------------------------------------------------

def _circulant4(R):
    x, y, z, w = R.gens()
    M = [[x, w, z, y], [y, x, w, z], [w, z, y, x], [z, y, x, w]]
    return determinant(M, R)


def catalecticant_poly():
    R = Ring(["x", "y", "z", "w", "t", "u", "v"])
    x, y, z, w, t, u, v = R.gens()
    return R, determinant([[x, y, z], [z, w, t], [t, u, v]], R)


def recipe_poly(ring, M):
    """2x2 minors (or maximal minors) of M, then det of their Jacobian."""
    from .matrix import GradedMatrix as _GM
    gm = _GM(ring, M, check=False)
    r = gm.nrows
    qs = gm.minors(r)
    rows = [[q.diff(i) for q in qs] for i in range(ring.n)]
    return determinant(rows, ring)


def _example(spec):
    name = spec.params.get("name")
    try:
        builder = _EXAMPLES[name]
    except KeyError:
        raise FamilyError("unknown example %r" % (name,)) from None
    return builder(spec)


def _ex_xyz_w3(spec):
    R = Ring(["x", "y", "z", "w"])
    fx = Fixture(spec, R, R("x*y*z + w^3"))
    fx.expect("is_free", False, "xyz + w^3 is not free")
    fx.expect("linear_type", True, "its Jacobian ideal is of linear type")
    fx.expect("analytic_spread", 4, "hence the analytic spread is 4")
    fx.expect("max_spread", True, "maximal analytic spread")
    return fx


def _ex_gordan_noether(spec):
    R = Ring(["x", "y", "z", "w", "t"])
    fx = Fixture(spec, R, R("x*w^2 + y*t*w + z*t^2"))
    fx.expect("fiber_ideal", ["T2^2 - T1*T3"], "the special fiber is k[T]/(T2^2 - T1*T3)")
    fx.expect("analytic_spread", 4, "the analytic spread is 4 < 5")
    fx.expect("max_spread", False, "the Hessian determinant vanishes")
    fx.expect("rees_cm", True, "the Rees algebra is Cohen-Macaulay")
    fx.expect("depth_table", {1: 2, 2: 1, 3: 1}, "depth R/J = 2 and depth R/J^m = 1 for m >= 2")
    fx.expect("homaloidal_sufficient", False, "cannot fire when the analytic spread is below n")
    fx.expect("ext_consistent", False, "Ext^1(C_f, R) differs from C_f(d-2) without maximal spread")
    return fx


def _ex_quintic(spec):
    R = Ring(["x", "y", "z", "w", "u"])
    fx = Fixture(spec, R, R("2*w^4*u + x*u^4 + y*w*u^3 + z*w^2*u^2"))
    fx.expect("is_linear_free", True, "the quintic is a linear free divisor")
    fx.expect("analytic_spread", 4, "the analytic spread is 4 < 5")
    fx.expect("max_spread", False, "the Hessian determinant vanishes")
    fx.expect("rees_cm", True, "the Rees algebra is Cohen-Macaulay")
    fx.expect("depth_table", {1: 3, 2: 2, 3: 1, 4: 1}, "depths of R/J^m are 3, 2, 1, 1, ...")
    fx.expect("homaloidal_sufficient", False, "cannot fire when the analytic spread is below n")
    return fx


def _ex_sextic(spec):
    R = plane_ring()
    fx = Fixture(spec, R, R("x^6 - 2*x^3*y^2*z + y^4*z^2 + y^6"))
    fx.expect("is_free", True, "the sextic is a (non-linear) free divisor")
    fx.expect("analytic_spread", 3, "the analytic spread is 3")
    fx.expect("max_spread", True, "maximal analytic spread")
    fx.expect("rees_cm", True, "the Rees algebra is Cohen-Macaulay")
    fx.t_scaling = (1, 1, -3)
    fx.expect("rees_contains", ["3*x*y*T1*T2 + 2*x*z*T1*T3 - 3*y*z*T2*T3 - 3*y^2*T3^2 - 2*z^2*T3^2"],
              "a quadratic-in-T generator occurs in the Rees ideal")
    fx.expect("depth_table", {1: 1, 2: 0, 3: 0}, "depth R/J^m = 0 for m >= 2")
    fx.expect("ext_consistent", True, "Ext^1(C_f, R) matches C_f(4)")
    return fx


def _ex_quartic_gs1(spec):
    R = Ring(["x", "y", "z", "w"])
    fx = Fixture(spec, R, R("x^4 - x*y*z^2 + z^3*w"))
    fx.expect("is_free", False, "the quartic is not free (J_f not perfect)")
    fx.expect("linear_type", False, "its Jacobian ideal is not of linear type")
    fx.t_scaling = (1, 4, 1, 4)
    fx.expect("rees_contains", ["4*x*T2^2 - 4*z*T1*T4 - y*T4^2"],
              "a quadratic-in-T generator occurs in the Rees ideal")
    fx.expect("depth_table", {1: 1, 2: 1, 3: 1, 4: 0}, "depths of R/J^m are 1, 1, 1, 0")
    fx.expect("analytic_spread", 4, "the analytic spread is 4")
    fx.expect("max_spread", True, "maximal analytic spread")
    fx.expect("ext_consistent", True, "Ext^1(C_f, R) matches C_f(2)")
    fx.slow = True
    return fx


def _ex_homal_red(spec):
    R = Ring(["x", "y", "z", "w", "t", "u"])
    fx = Fixture(spec, R, R("x*w*(y*z + z*t + t*u)"))
    fx.expect("is_free", False, "the arrangement is not free (J_f not perfect)")
    fx.expect("linearly_presented", True, "J_f is linearly presented")
    fx.expect("pd_power", {3: 5}, "projdim J_f^3 = 5")
    fx.expect("homaloidal_sufficient", True, "the sufficient criterion fires")
    fx.expect("hessian_factor", ("3*x^2*w^2", 2), "h(f) = 3 x^2 w^2 f^2")
    fx.expect("hessian_red_free", False, "h(f)_red = 3f is not free")
    fx.slow = True
    return fx


def _ex_cubic_irreducible(spec):
    R = Ring(["x", "y", "z", "w", "t"])
    fx = Fixture(spec, R, R("x*t^2 + y*z*t + z^3 + w^2*t"))
    fx.expect("is_free", False, "the cubic is not free (ht J_f = 3)")
    fx.expect("jacobian_height", 3, "J_f has height 3")
    fx.expect("jacobian_perfect", True, "J_f is perfect")
    fx.expect("pd_power", {3: 4}, "projdim J_f^3 = 4")
    fx.expect("homaloidal_sufficient", True, "the sufficient criterion fires")
    fx.slow = True
    return fx


def _ex_cubic_few_linear(spec):
    R = Ring(["x", "y", "z", "w"])
    fx = Fixture(spec, R, R("x*w^2 + y*z*w + z^3"))
    note = ("three independent linear syzygies (x, y/2, 0, -w/2), (y, 3z, -w, 0), (z, -w, 0, 0) "
            "exist and their 3-minors do not all vanish")
    fx.expect("linear_syzygy_count", 2, "only two minimal syzygies are linear", note)
    fx.expect("linear_minors_vanish", True, "I_3 of the linear part vanishes", note)
    fx.expect("linear_type", False, "J_f is not of linear type",
              "the Rees ideal computed three ways equals the symmetric ideal, and a linear-algebra "
              "kernel count agrees in low bidegrees")
    fx.expect("rees_cm", True, "the Rees algebra is Cohen-Macaulay")
    fx.expect("homaloidal_sufficient", False, "the linear-minor condition fails, so the criterion is silent",
              "with three linear syzygies the linear-minor condition holds and the criterion fires")
    return fx


def _ex_circulant(spec):
    R = Ring(["x", "y", "z", "w"])
    fx = Fixture(spec, R, _circulant4(R))
    fx.expect("is_linear_free", True, "g is a linear free divisor")
    fx.expect("hessian_is_square_multiple", True, "h(g) = lambda g^2")
    fx.expect("hessian_red_free", True, "h(g)_red is free")
    return fx


def _ex_catalecticant(spec):
    R, f = catalecticant_poly()
    fx = Fixture(spec, R, f)
    fx.expect("hessian_reduced", True, "h(f) is reduced")
    fx.expect("hessian_linear_free", True, "h(f) is a linear free divisor")
    fx.slow = True
    return fx


def _ex_fermat(spec):
    R = plane_ring()
    fx = Fixture(spec, R, R("x^3 + y^3 + z^3"))
    fx.expect("is_free", False, "the Fermat cubic is not free (ht J_f = 3)")
    fx.expect("jacobian_height", 3, "J_f is generated by x^2, y^2, z^2")
    return fx


def _ex_recipe_e(which):
    mats = {
        1: ["x^2", "y", "z", "y^2", "z", "x"],
        2: ["x", "y", "z", "z^2", "x^2", "y^2"],
        3: ["x^2", "y^2", "z^2", "z^2", "x^2", "y^2"],
    }

    def build(spec):
        R = plane_ring()
        e = [R(s) for s in mats[which]]
        f = recipe_poly(R, [e[:3], e[3:]])
        fx = Fixture(spec, R, f)
        fx.expect("is_free", False, "the higher-degree recipe output is not free")
        fx.slow = True
        return fx
    return build


def _ex_recipe_f(spec):
    R = Ring(["x", "y", "z", "w"])
    M = [["x", "y", "z", "w"], ["x - y", "x + w", "y - z", "x + 3*y"], ["2*y - z", "3*w", "x - w", "y + 2*w"]]
    f = recipe_poly(R, [[R(s) for s in r] for r in M])
    fx = Fixture(spec, R, f)
    fx.expect("is_reduced", True, "the four-variable recipe output is reduced")
    fx.expect("is_free", False, "the four-variable recipe output is not free")
    fx.slow = True
    return fx


_EXAMPLES = {
    "xyz_w3": _ex_xyz_w3,
    "gordan_noether": _ex_gordan_noether,
    "quintic": _ex_quintic,
    "sextic": _ex_sextic,
    "quartic_gs1": _ex_quartic_gs1,
    "homal_red": _ex_homal_red,
    "cubic_irreducible": _ex_cubic_irreducible,
    "cubic_few_linear": _ex_cubic_few_linear,
    "circulant4": _ex_circulant,
    "catalecticant": _ex_catalecticant,
    "fermat_cubic": _ex_fermat,
    "recipe_e1": _ex_recipe_e(1),
    "recipe_e2": _ex_recipe_e(2),
    "recipe_e3": _ex_recipe_e(3),
    "recipe_f": _ex_recipe_f,
}

EXAMPLE_NAMES = tuple(_EXAMPLES)

_BUILDERS = {
    "family1": _family1,
    "family2": _family2,
    "family3": _family3,
    "family3g": _family3g,
    "family4": _family4,
    "normal_crossing": _normal_crossing,
    "example": _example,
}


def build(spec):
    if isinstance(spec, str):
        spec = parse_spec(spec)
    try:
        b = _BUILDERS[spec.family_id]
    except KeyError:
        raise FamilyError("unknown family %r" % (spec.family_id,)) from None
    return b(spec)


def parse_spec(text):
    """'family1:n=5', 'family3:alpha=3,beta=2', 'family4:L=y;x;x',
    'family4:a=1,0,0,...', 'example:sextic', 'normal_crossing:n=4'."""
    if ":" in text:
        fam, rest = text.split(":", 1)
    else:
        fam, rest = text, ""
    fam = fam.strip()
    if fam == "example":
        return FamilySpec("example", {"name": rest.strip()})
    params = {}
    if fam == "family4":
        rest = rest.strip()
        if rest.startswith("L="):
            forms = rest[2:].split(";")
            if len(forms) != 3:
                raise FamilyError("family4 L= needs three ';'-separated forms")
            return FamilySpec("family4", {"a": coefficients_of_forms(*forms)})
        if rest.startswith("a="):
            vals = [Q(v) for v in rest[2:].split(",")]
            return FamilySpec("family4", {"a": tuple(vals)})
        raise FamilyError("family4 needs L=...;...;... or a=a1,...,a9")
    for part in filter(None, (p.strip() for p in rest.split(","))):
        if "=" not in part:
            raise FamilyError("bad parameter %r" % part)
        k, v = part.split("=", 1)
        try:
            params[k.strip()] = int(v)
        except ValueError:
            raise FamilyError("parameter %s must be an integer" % k) from None
    return FamilySpec(fam, params)


def reference_matrices(spec):
    """[(name, GradedMatrix)] of explicit syzygy / derivation matrices."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    fid, p = spec.family_id, spec.params
    if fid == "family1":
        n = p["n"]
        return [("psi", family1_psi(n))]
    if fid == "family2":
        n = p["n"]
        return [("psi", family2_psi(n)), ("saito", family2_saito(n))]
    if fid == "family3" and p.get("beta") == 2:
        return [("phi", family3_phi(p["alpha"]))]
    if fid == "family4":
        a = tuple(Q(c) for c in p["a"])
        return [("phi", family4_phi(a)), ("saito", family4_Phi(a))]
    if fid == "normal_crossing":
        return [("phi", normal_crossing_phi(p["n"]))]
    return []


def example_catalog(include_slow=True):
    out = []
    for name in EXAMPLE_NAMES:
        fx = build(FamilySpec("example", {"name": name}))
        if include_slow or not fx.slow:
            out.append(fx)
    return out


def default_corpus(include_slow=False):
    """The regression corpus: family instances plus the example catalog."""
    specs = [FamilySpec("family1", {"n": n}) for n in (4, 5, 6)]
    specs += [FamilySpec("family2", {"n": n}) for n in (2, 3)]
    specs += [FamilySpec("family3", {"alpha": a, "beta": b})
              for a, b in ((2, 2), (2, 3), (3, 2), (4, 2))]
    specs += [FamilySpec("family3g", {"alpha": a, "beta": 3}) for a in (2, 3)]
    specs += [FamilySpec("family3g", {"alpha": 2, "beta": 5})]
    specs += [FamilySpec("family4", {"a": coefficients_of_forms(*L)}) for L in FAMILY4_SAMPLES]
    specs += [FamilySpec("normal_crossing", {"n": n}) for n in (3, 4, 5)]
    out = [build(s) for s in specs]
    out += example_catalog(True)
    if not include_slow:
        out = [f for f in out if not f.slow]
    return out


# three-form samples; the first two come with known closed forms
FAMILY4_SAMPLES = (
    ("y", "x", "x"),
    ("0", "x + z", "y + z"),
    ("x + y", "y - z", "2*x + z"),
    ("y + z", "3*x", "x - y + 2*z"),
    ("2*y", "x + z", "x - y"),
    ("x - y", "x + y + z", "y + z"),   # degenerate: f = -2(x+z)^3
    ("y", "x", "z"),                    # degenerate: f = 0
)
