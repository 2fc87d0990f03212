import pytest

from freediv import euler_check, families as F
from freediv.divisor import freeness, jacobian_ideal
from freediv.groebner.ideal import ideal_equal, minors_ideal


def fast_corpus():
    return F.default_corpus(include_slow=False)


def test_parse_spec():
    s = F.parse_spec("family3:alpha=3,beta=2")
    assert s.family_id == "family3" and s.params == {"alpha": 3, "beta": 2}
    assert F.parse_spec("example:sextic").params == {"name": "sextic"}
    assert len(F.parse_spec("family4:L=y;x;x").params["a"]) == 9
    for bad in ["family1:n", "family1:n=x", "family4:L=x;y", "family4:b=1"]:
        with pytest.raises(F.FamilyError):
            F.parse_spec(bad)


def test_family_parameter_checks():
    with pytest.raises(F.FamilyError):
        F.build("family1:n=3")
    with pytest.raises(F.FamilyError):
        F.build("family1:n=7")
    assert F.build(F.FamilySpec("family1", {"n": 7}, allow_large=True)).polynomial.degree() == 7
    with pytest.raises(F.FamilyError):
        F.build("family3:alpha=4,beta=4")
    with pytest.raises(F.FamilyError):
        F.build("family3g:alpha=2,beta=4")
    with pytest.raises(F.FamilyError):
        F.build("family4:L=x^2;y;z")
    with pytest.raises(F.FamilyError):
        F.build("nosuch:n=3")


def test_degenerate_family4_rejected():
    fx = F.build("family4:L=x - y;x + y + z;y + z")
    assert fx.rejected and "reduced" in fx.reason
    f = fx.polynomial
    x, y, z = f.ring.gens()
    assert f == ((x + z) ** 3).scale(-2)


def test_euler_on_every_fixture():
    for fx in F.default_corpus(include_slow=True):
        if fx.polynomial.is_homogeneous():
            assert euler_check(fx.polynomial), fx.name


def test_reference_syzygies_annihilate_gradient():
    for fx in fast_corpus():
        grad = fx.polynomial.gradient()
        for name, M in F.reference_matrices(fx.spec):
            if name == "saito":
                continue
            for col in M.columns():
                s = sum((a * g for a, g in zip(col, grad)), fx.ring.zero())
                assert s.is_zero(), (fx.name, name)


def test_hilbert_burch_on_free_fast_fixtures():
    for fx in fast_corpus():
        if fx.rejected or not fx.expected.get("is_free") or not fx.expected["is_free"].value:
            continue
        cert = freeness(fx.polynomial)
        assert cert.is_free and cert.hilbert_burch, fx.name
        n = fx.ring.n
        assert ideal_equal(minors_ideal(cert.phi, n - 1), jacobian_ideal(fx.polynomial))


def test_expectations_have_claims():
    for fx in F.default_corpus(include_slow=True):
        for key, e in fx.expected.items():
            assert e.claim, (fx.name, key)


def test_labels_unique():
    names = [fx.name for fx in F.default_corpus(include_slow=True)]
    assert len(names) == len(set(names))
