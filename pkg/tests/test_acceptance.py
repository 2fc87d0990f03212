"""Acceptance criteria 1-12.

Each test prints one line "criterion k: PASS|FAIL ..." to the terminal
(outside pytest's capture) and asserts the attainable parts at the stated
tolerances; all equalities are exact.  Budgets are wall-clock limits.
"""

import time

import pytest

from freediv import blowup as bl
from freediv import budget
from freediv import divisor as dv
from freediv import euler_check
from freediv import families as F
from freediv import maxspread as ms
from freediv.cli.evaluate import Session, evaluate
from freediv.cli.main import regress, to_json
from freediv.groebner.ideal import (Ideal, dimension, ideal_equal, ideal_power, minors_ideal,
                                    saturate)
from freediv.homalg.presentation import GradedModulePresentation
from freediv.matrix import determinant

from conftest import depth_by_regular_sequence
from test_groebner import spair_closure_sweep


@pytest.fixture
def line(capsys):
    def emit(k, problems, elapsed, budget, extra=""):
        over = elapsed > budget
        ok = not problems and not over
        msg = "criterion %d: %s (%.1fs, budget %ds)%s" % (
            k, "PASS" if ok else "FAIL", elapsed, budget, extra)
        if problems:
            msg += " -- " + "; ".join(problems)
        if over:
            msg += " -- over budget"
        with capsys.disabled():
            print("\n" + msg)
        return ok
    return emit


class Checker:
    def __init__(self):
        self.problems = []
        self.t0 = time.monotonic()

    def eq(self, label, got, want):
        if got != want:
            self.problems.append("%s: got %r, want %r" % (label, got, want))

    def true(self, label, cond):
        if not cond:
            self.problems.append(label)

    def elapsed(self):
        return time.monotonic() - self.t0


def ctx_of(fx):
    return bl.BlowupContext.jacobian(fx.polynomial)


def fixture_value(fx, key):
    """Computed value of a fixture expectation key and whether it matches."""
    return evaluate(Session(fx), key, fx.expected[key].value)


# -- 1 -----------------------------------------------------------------------

def test_criterion_1_family1_linear_free(line):
    c = Checker()
    slowest = 0.0
    for n in (4, 5, 6):
        t = time.monotonic()
        f = F.build("family1:n=%d" % n).polynomial
        c.true("n=%d is_linear_free" % n, dv.is_linear_free(f))
        res = dv.jacobian_resolution(f)
        c.eq("n=%d F1 twists" % n, res.twists(1), [n - 1] * n)
        c.eq("n=%d F2 twists" % n, res.twists(2), [n] * (n - 1))
        c.eq("n=%d length" % n, res.projective_dimension(), 2)
        slowest = max(slowest, time.monotonic() - t)
    assert line(1, c.problems, slowest, 10, " slowest instance")
    assert not c.problems


# -- 2 -----------------------------------------------------------------------

def test_criterion_2_family1_blowup(line):
    c = Checker()
    ctx = ctx_of(F.build("family1:n=4"))
    c.true("n=4 linear type", bl.is_linear_type(ctx))
    c.eq("n=4 spread", bl.analytic_spread(ctx), 4)
    c.eq("n=4 reduction number", bl.reduction_number(ctx), 0)
    for n in (5, 6):
        ctx = ctx_of(F.build("family1:n=%d" % n))
        c.eq("n=%d spread" % n, bl.analytic_spread(ctx), 4)
        c.eq("n=%d reduction number" % n, bl.reduction_number(ctx), 1)
        c.true("n=%d fiber CM" % n, bl.fiber_is_cm(ctx))
        Fr = ctx.fiber_ring
        H = Ideal(Fr, F.hankel_fiber_gens(Fr, ctx.t_names[:n - 2]))
        c.true("n=%d fiber = Hankel I_2" % n, ideal_equal(bl.fiber_ideal(ctx), H))
    assert line(2, c.problems, c.elapsed(), 60)
    assert not c.problems


# -- 3 -----------------------------------------------------------------------

def test_criterion_3_family1_rees_cm(line):
    c = Checker()
    for n in (4, 5):
        c.true("n=%d Rees CM" % n, bl.rees_is_cm(ctx_of(F.build("family1:n=%d" % n))))
    assert line(3, c.problems, c.elapsed(), 300)
    assert not c.problems


# -- 4 -----------------------------------------------------------------------

def _saito_det(n):
    fx = F.build("family2:n=%d" % n)
    return determinant(F.family2_saito(n)), fx.polynomial


def test_criterion_4_family2(line):
    c = Checker()
    # n = 2: det equals 3 f exactly
    det, f = _saito_det(2)
    c.eq("n=2 det", det, f.scale(3))
    # n = 2: linear type; Sym is cut out by the entries of [T] psi_2 and
    # they form a regular sequence; the quoted forms form one as well
    fx = F.build("family2:n=2")
    B, forms = F.family2_sym_forms_n2()
    ctx = bl.BlowupContext(fx.polynomial.gradient(), t_names=["z1", "z2", "s", "t"])
    c.true("n=2 linear type", bl.is_linear_type(ctx))
    S = bl.symmetric_ideal(ctx)
    koszul = {(0, 0): 1, (1, 2): 3, (2, 4): 3, (3, 6): 1}
    # homogeneous forms are a regular sequence iff their height is their
    # number; the Koszul shape of the resolution confirms it
    for label, I in (("Sym", S), ("quoted forms", Ideal(B, forms))):
        c.eq("n=2 %s height" % label, dimension(I).height, 3)
        c.eq("n=2 %s Betti table" % label,
             GradedModulePresentation.quotient_ring(I).resolution().betti, koszul)
    c.true("n=2 L1, L2 in Sym", all(S.contains(g) for g in forms[:2]))
    notes = []
    if S.contains(forms[2]):
        c.problems.append("n=2 quoted L3 unexpectedly lies in Sym")
    else:
        notes.append("n=2 quoted L3 is not in Sym (ledgered discrepancy)")
    # n = 3 blowup data
    fx = F.build("family2:n=3")
    ctx = ctx_of(fx)
    Fr = ctx.fiber_ring
    G = Ideal(Fr, F.generic_two_row_gens(Fr, ctx.t_names[:4]))
    c.true("n=3 fiber = I_2 generic 2x2", ideal_equal(bl.fiber_ideal(ctx), G))
    c.eq("n=3 spread", bl.analytic_spread(ctx), 5)
    c.eq("n=3 reduction number", bl.reduction_number(ctx), 1)
    c.true("n=3 Rees CM", bl.rees_is_cm(ctx))
    # n = 3: the literal determinant claim fails by a sign; it is reported
    # here and asserted in the strict xfail below
    det3, f3 = _saito_det(3)
    if det3 != f3.scale(4):
        lam = dv.saito_check(f3, F.family2_saito(3))
        notes.append("n=3 det = %s*f, stated 4*f (ledgered discrepancy)" % lam)
    line(4, c.problems + notes, c.elapsed(), 300)
    assert not c.problems
    assert c.elapsed() < 300


@pytest.mark.xfail(strict=True, reason="the third quoted n = 2 form is not a syzygy of the gradient")
def test_criterion_4_literal_forms_in_sym():
    fx = F.build("family2:n=2")
    B, forms = F.family2_sym_forms_n2()
    ctx = bl.BlowupContext(fx.polynomial.gradient(), t_names=["z1", "z2", "s", "t"])
    assert ideal_equal(Ideal(B, forms), bl.symmetric_ideal(ctx))


@pytest.mark.xfail(strict=True, reason="det of the stated derivation matrix is -4f for n = 3")
def test_criterion_4_literal_det_n3():
    det, f = _saito_det(3)
    assert det == f.scale(4)


# -- 5 -----------------------------------------------------------------------

def test_criterion_5_family3(line):
    c = Checker()
    for a in range(2, 7):
        for b in range(2, 7):
            if a * b <= 12:
                f = F.build("family3:alpha=%d,beta=%d" % (a, b)).polynomial
                c.true("(%d,%d) free" % (a, b), dv.is_free_divisor(f))
    c.true("(2,2) linear type", bl.is_linear_type(ctx_of(F.build("family3:alpha=2,beta=2"))))
    for a, b in ((2, 3), (3, 2), (4, 2)):
        ctx = ctx_of(F.build("family3:alpha=%d,beta=%d" % (a, b)))
        c.true("(%d,%d) Rees CM" % (a, b), bl.rees_is_cm(ctx))
    fx = F.build("family3:alpha=3,beta=2")
    ctx = ctx_of(fx)
    Bp, gens = F.family3_rees_P(3)
    P = Ideal(ctx.extended_ring, [g.to_ring(ctx.extended_ring) for g in gens])
    c.true("(3,2) Rees = P", ideal_equal(bl.rees_ideal(ctx), P))
    c.eq("(3,2) spread", bl.analytic_spread(ctx), 3)
    c.eq("(3,2) reduction number", bl.reduction_number(ctx), 0)
    c.true("(3,2) fiber is a polynomial ring", bl.fiber_ideal(ctx).is_zero())
    assert line(5, c.problems, c.elapsed(), 300)
    assert not c.problems


# -- 6 -----------------------------------------------------------------------

def test_criterion_6_family3g(line):
    c = Checker()
    for a in (2, 3):
        fx = F.build("family3g:alpha=%d,beta=3" % a)
        g = fx.polynomial
        ctx = ctx_of(fx)
        c.true("a=%d free" % a, dv.is_free_divisor(g))
        c.eq("a=%d reg Der" % a, dv.der_regularity(g), 3 * a - a - 2)
        c.true("a=%d Rees CM" % a, bl.rees_is_cm(ctx))
        c.eq("a=%d reduction number" % a, bl.reduction_number(ctx), 0)
        B = ctx.extended_ring
        K = Ideal(B, [B.gen("x") ** (a - 1), B.gen("y") ** (a - 2)])
        c.true("a=%d Sym saturation = Rees" % a,
               ideal_equal(saturate(bl.symmetric_ideal(ctx), K), bl.rees_ideal(ctx)))
    ctx = ctx_of(F.build("family3g:alpha=2,beta=5"))
    c.eq("(2,5) Rees depth - dim", bl.rees_depth(ctx) - bl.rees_dimension(ctx), -1)
    assert line(6, c.problems, c.elapsed(), 600)
    assert not c.problems


# -- 7 -----------------------------------------------------------------------

def test_criterion_7_family4(line):
    c = Checker()
    good = 0
    for L in F.FAMILY4_SAMPLES:
        fx = F.build(F.FamilySpec("family4", {"a": F.coefficients_of_forms(*L)}))
        if fx.rejected:
            continue
        good += 1
        f = fx.polynomial
        ctx = ctx_of(fx)
        tag = ";".join(L)
        c.true("%s linear free" % tag, dv.is_linear_free(f))
        c.true("%s linear type" % tag, bl.is_linear_type(ctx))
        c.true("%s Rees CI of height 2" % tag,
               bl.complete_intersection_check(ctx) and bl.rees_height(ctx) == 2)
        c.eq("%s reg Der" % tag, dv.der_regularity(f), 1)
    c.true("at least five good samples (%d)" % good, good >= 5)
    names = [";".join(L) for L in F.FAMILY4_SAMPLES]
    c.true("sample y;x;x present", "y;x;x" in names)
    c.true("sample 0;x + z;y + z present", "0;x + z;y + z" in names)
    bad = F.build("family4:L=x - y;x + y + z;y + z")
    x, y, z = bad.ring.gens()
    c.eq("degenerate cubic", bad.polynomial, ((x + z) ** 3).scale(-2))
    c.true("degenerate cubic rejected", bad.rejected)
    assert line(7, c.problems, c.elapsed(), 30)
    assert not c.problems


# -- 8 -----------------------------------------------------------------------

def test_criterion_8_normal_crossing(line):
    c = Checker()
    for n in (3, 4, 5):
        fx = F.build("normal_crossing:n=%d" % n)
        f = fx.polynomial
        ctx = ctx_of(fx)
        tab = ms.depth_power_table(f, n)
        c.eq("n=%d depths" % n, tab.values, {m: max(0, n - m - 1) for m in range(1, n + 1)})
        c.true("n=%d G_n with equality" % n, bl.g_condition_equality(ctx, n))
        c.eq("n=%d spread" % n, bl.analytic_spread(ctx), n)
        c.true("n=%d Rees CM" % n, bl.rees_is_cm(ctx))
        c.eq("n=%d homaloidal" % n, ms.homaloidal_sufficient(f)[0], True)
    assert line(8, c.problems, c.elapsed(), 300)
    assert not c.problems


# -- 9 -----------------------------------------------------------------------

def _pd_of_power(f, m):
    J = dv.jacobian_ideal(f)
    return GradedModulePresentation.quotient_ring(ideal_power(J, m)).resolution() \
        .projective_dimension() - 1


def test_criterion_9_example_suite(line):
    c = Checker()
    ex = {name: F.build("example:" + name) for name in
          ("gordan_noether", "quintic", "sextic", "quartic_gs1", "homal_red", "cubic_irreducible")}

    fx = ex["gordan_noether"]
    ctx = ctx_of(fx)
    Fr = ctx.fiber_ring
    c.true("G-N fiber", ideal_equal(bl.fiber_ideal(ctx), Ideal(Fr, [Fr("T2^2 - T1*T3")])))
    c.eq("G-N spread", bl.analytic_spread(ctx), 4)

    fx = ex["quintic"]
    c.eq("quintic depths", ms.depth_power_table(fx.polynomial, 4).values, {1: 3, 2: 2, 3: 1, 4: 1})
    c.true("quintic Rees CM", bl.rees_is_cm(ctx_of(fx)))

    fx = ex["sextic"]
    c.eq("sextic spread", bl.analytic_spread(ctx_of(fx)), 3)
    got, ok = fixture_value(fx, "rees_contains")
    c.true("sextic quoted generator in reduced GB", ok and len(got) == 1)
    c.eq("sextic depth R/J^2", ms.depth_power_table(fx.polynomial, 2).values[2], 0)

    fx = ex["quartic_gs1"]
    c.eq("G-S1 depths", ms.depth_power_table(fx.polynomial, 4).values, {1: 1, 2: 1, 3: 1, 4: 0})
    c.eq("G-S1 spread", bl.analytic_spread(ctx_of(fx)), 4)
    got, ok = fixture_value(fx, "rees_contains")
    c.true("G-S1 quoted generator in reduced GB", ok and len(got) == 1)

    fx = ex["homal_red"]
    c.eq("homal-red homaloidal", ms.homaloidal_sufficient(fx.polynomial)[0], True)
    c.eq("homal-red pd J^3", _pd_of_power(fx.polynomial, 3), 5)

    fx = ex["cubic_irreducible"]
    f = fx.polynomial
    J = dv.jacobian_ideal(f)
    c.eq("cubic ht J", dimension(J).height, 3)
    c.eq("cubic pd R/J", GradedModulePresentation.quotient_ring(J).resolution()
         .projective_dimension(), 3)
    c.eq("cubic pd J^3", _pd_of_power(f, 3), 4)
    c.eq("cubic homaloidal", ms.homaloidal_sufficient(f)[0], True)
    assert line(9, c.problems, c.elapsed(), 900)
    assert not c.problems


# -- 10 ----------------------------------------------------------------------

FIXTURE_DEADLINE = 240.0


def test_criterion_10_max_spread_agreement(line):
    c = Checker()
    checked = 0
    unverified = []
    for fx in F.default_corpus(include_slow=True):
        f = fx.polynomial
        if fx.rejected or dv.is_cone(f) or f.degree() < 3:
            continue
        try:
            with budget.deadline(FIXTURE_DEADLINE):
                ms.max_spread_check(f)   # raises when the three verdicts disagree
            checked += 1
        except budget.ResourceExhausted:
            unverified.append("%s: not decided within %gs" % (fx.name, FIXTURE_DEADLINE))
        except bl.InconsistencyError as e:
            c.problems.append("%s: %s" % (fx.name, e))
    for spec in ("normal_crossing:n=3", "normal_crossing:n=4", "normal_crossing:n=5",
                 "example:sextic", "example:quartic_gs1"):
        f = F.build(spec).polynomial
        c.true("%s Ext consistency with shift %d" % (spec, f.degree() - 2),
               ms.ext_consistency_check(f))
    # fixtures that run out of time make the criterion FAIL; they are
    # covered by the strict xfail below, the rest must agree
    line(10, c.problems + unverified, c.elapsed(), 600, " %d fixtures" % checked)
    assert not c.problems
    assert [u.split(":")[0] for u in unverified] == ["recipe_f"]


@pytest.mark.xfail(strict=True, raises=budget.ResourceExhausted,
                   reason="analytic spread of the degree 8 example does not finish in budget")
def test_criterion_10_recipe_f_within_budget():
    f = F.build("example:recipe_f").polynomial
    with budget.deadline(60):
        ms.max_spread_check(f)


# -- 11 ----------------------------------------------------------------------

def test_criterion_11_hessian_experiments(line):
    c = Checker()
    g = F.build("example:circulant4").polynomial
    h = ms.hessian_experiment(g)
    c.true("circulant h = c g^2", h["is_square_multiple"])
    c.true("circulant h_red free", h["reduced_part_free"])

    fx = F.build("example:homal_red")
    f = fx.polynomial
    h = ms.hessian_experiment(f)
    c.eq("homal-red cofactor", fx.ring(h["cofactor"]), fx.ring("3*x^2*w^2"))
    c.eq("homal-red power of f", h["f_power"], 2)
    red = fx.ring(h["reduced_part"])
    c.true("homal-red h_red is a multiple of f", red.monic() == f.monic())
    c.eq("homal-red h_red free", h["reduced_part_free"], False)

    h = ms.hessian_experiment(F.build("example:catalecticant").polynomial)
    c.true("catalecticant h reduced", h["reduced"])
    c.true("catalecticant h_red linear free", h["reduced_part_linear_free"])
    assert line(11, c.problems, c.elapsed(), 3600)
    assert not c.problems


# -- 12 ----------------------------------------------------------------------

def test_criterion_12_property_suites(line):
    c = Checker()
    c.eq("S-pair closure on 200 random ideals", spair_closure_sweep(200), 200)

    for fx in F.default_corpus(include_slow=True):
        f = fx.polynomial
        if not f.is_homogeneous():
            continue
        c.true("%s euler_check" % fx.name, euler_check(f))
        if fx.rejected or dv.is_cone(f) or not dv.is_reduced(f):
            continue
        J = dv.jacobian_ideal(f)
        if not fx.slow:
            # depth + pd = arity for R/J_f, depth found by a regular sequence
            pd = GradedModulePresentation.quotient_ring(J).resolution().projective_dimension()
            c.eq("%s depth + pd" % fx.name, depth_by_regular_sequence(J) + pd, f.ring.n)
        cert = dv.freeness(f, hilbert_burch=False)
        if cert.is_free:
            c.true("%s Hilbert-Burch" % fx.name,
                   ideal_equal(minors_ideal(cert.phi, f.ring.n - 1), J))

    env1, code1 = regress()
    env2, code2 = regress()
    c.true("regression exit codes", code1 == code2 == 0)
    c.true("two regression runs byte-identical", to_json(env1) == to_json(env2))
    assert line(12, c.problems, c.elapsed(), 1800)
    assert not c.problems
