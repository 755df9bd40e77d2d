import math

import pytest

import ncbinom


def test_version():
    assert ncbinom.__version__ == "0.1.0"


def test_theorem1_matches_brute_force():
    for n in range(7):
        assert ncbinom.theorem1_expand(n) == ncbinom.brute_expand(n)
        assert ncbinom.theorem2_expand(n) == ncbinom.brute_expand(n)
        assert ncbinom.corollary1_expand(n) == ncbinom.brute_expand(n)
        assert ncbinom.lemma3_defect(n).is_zero()
    assert str(ncbinom.theorem1_expand(2)) == "A^2 + A*B + B*A + B^2"


def test_ncpoly_arithmetic_and_derivation():
    a, b = ncbinom.ab_gen("A"), ncbinom.ab_gen("B")
    assert str(ncbinom.nc_derivation(b, a)) == "-A*B + B*A"
    assert ncbinom.nc_pow(a + b, 2) == (a + b) * (a + b)
    assert a.degree() == 1
    assert a.generators() == ["A", "B"]


def test_hsq_closed_form():
    hsq = ncbinom.RelationSystem.family("hsq")
    for n in range(6):
        assert hsq.quotient_eq(ncbinom.closed_form_hsq(n), ncbinom.brute_expand(n))
    assert str(ncbinom.gamma(3)) == "1 + 3*h + 2*h^2"
    assert ncbinom.gamma(5).eval({"h": "1"}) == str(math.factorial(5))
    nf = hsq.normal_form(hsq.word(["B", "A"]))
    assert str(nf) == "h*A^2 + A*B"
    assert nf == hsq.normal_form(hsq.word(["B", "A"]), strategy="rightmost")


def test_weyl():
    weyl = ncbinom.RelationSystem.family("weyl")
    for n in range(6):
        assert weyl.quotient_eq(ncbinom.closed_form_weyl(n), ncbinom.brute_expand(n, weyl))
    assert str(ncbinom.weyl_coeff(4, 2)) == "3*C^2"
    assert ncbinom.weyl_coeff(6, 2, via="recurrence") == ncbinom.weyl_coeff(6, 2)
    with pytest.raises(ValueError):
        ncbinom.weyl_coeff(4, 3)


def test_expand_report():
    report = ncbinom.expand(3, "closed_weyl")
    assert report["oracle_match"] is True
    assert report["relation"] == "weyl"
    with pytest.raises(ValueError):
        ncbinom.expand(2, "closed_hsq", ncbinom.RelationSystem.family("commutative"))
    with pytest.raises(ValueError):
        ncbinom.expand(2, "bogus")


def test_relation_json_and_validation():
    hsq = ncbinom.RelationSystem.family("hsq")
    again = ncbinom.RelationSystem.from_json(hsq.to_json())
    assert again.validate()["ok"]
    bad = ncbinom.RelationSystem.from_json(
        '{"alphabet":[{"name":"A"},{"name":"B"}],'
        '"rules":[{"pair":["A","B"],"replacement":{"terms":[{"coeff":"1","word":["B","A"]}]}}]}'
    )
    assert not bad.validate()["ok"]


def test_hermite_and_operators():
    assert str(ncbinom.hermite_he(3)) == "x^3 - 3*x"
    for n in range(12):
        oracle = ncbinom.hermite_he(n, "recurrence_oracle")
        assert ncbinom.hermite_he(n, "operator") == oracle
        assert ncbinom.hermite_he(n, "explicit_sum") == oracle
    assert ncbinom.hermite_he(2).coeffs() == {0: "-1", 2: "1"}
    p = ncbinom.hermite_he(4)
    assert ncbinom.Poly1.from_json(p.to_json()) == p
    assert str(ncbinom.lambda_expansion(2)) == "x^2 + lambda"
    assert ncbinom.x2d_check(4, 2)


def test_exp_identities():
    for order in range(5):
        assert ncbinom.exp_identity_defect("corollary2", order).is_zero()
        assert ncbinom.exp_identity_defect("corollary3", order).is_zero()


def test_run_suite():
    ok, text = ncbinom.run_suite("theorem1", max_n=5, seed=1)
    assert ok
    assert "PASS" in text and "FAIL" not in text
    with pytest.raises(ValueError):
        ncbinom.run_suite("nope")
