from fractions import Fraction

import pytest

import partial_hopf as ph


def zero_on_g():
    h = ph.group_algebra(ph.FiniteGroup.cyclic(2))
    return ph.zero_on_nonidentity(h, ph.base_field_algebra())


def test_algebra_basics():
    m = ph.matrix_algebra(2)
    assert m.dim == 4
    assert m.product([0, 1, 0, 0], [0, 0, 1, 0]) == ["1", "0", "0", "0"]
    assert m.right_annihilator_dim() == 0
    lu = ph.left_unit_algebra()
    assert lu.unit is None
    assert lu.right_annihilator_dim() == 1


def test_fractions_are_accepted():
    a = ph.Algebra([[1]], unit=[1])
    assert a.product([Fraction(1, 2)], [Fraction(2, 3)]) == ["1/3"]


def test_zero_on_g_pipeline():
    pa = zero_on_g()
    assert pa.verify()["ok"]
    g = ph.standard_globalization(pa)
    assert g.dim == 2
    assert ph.is_minimal(pa, g)
    assert ph.verify_globalization(pa, g)["ok"]
    assert ph.iso_to_product_of_fields(g.algebra) is not None
    assert ph.smash_dimensions(pa) == (2, 1)
    ctx = ph.smash_morita_context(pa)
    assert ctx["dims"] == (1, 4, 2, 2)
    assert ctx["strict"]
    assert ph.iso_to_matrix_algebra(ctx["B"], 2) is not None


def test_half_scaling_is_rejected():
    h = ph.group_algebra(ph.FiniteGroup.cyclic(2))
    pa = ph.PartialAction(h, ph.base_field_algebra(), [[[1]], [["1/2"]]])
    rep = pa.verify()
    assert not rep["ok"]
    assert any(c["name"] == "composition" and c["status"] == "fail" for c in rep["checks"])
    with pytest.raises(ph.Error):
        ph.smash_algebra(pa)


def test_grading_pipeline():
    d = ph.grading_pipeline(2, [0, 1], [0, 0])
    assert d["dim"] == 8
    assert d["minimal"]
    assert d["mutually_inverse"]
    assert d["action"]["ok"]


def test_fuzz_suite():
    suite = ph.fuzz_suite(20261015, 10)
    assert len(suite) == 10
    for label, pa in suite:
        assert pa.verify()["ok"], label
        a = pa.algebra
        if a.is_idempotent() or a.right_annihilator_dim() == 0 or a.left_annihilator_dim() == 0:
            assert ph.partial_representation_report(pa)["ok"], label
        else:
            with pytest.raises(ph.Error):
                ph.partial_representation_report(pa)


def test_load_action_and_errors():
    doc = """{"documents": [
      {"kind": "group", "name": "Z2", "cyclic": 2},
      {"kind": "hopf", "name": "H", "type": "group_algebra", "group": "Z2"},
      {"kind": "algebra", "name": "Q", "builtin": "field"},
      {"kind": "action", "name": "z", "hopf": "H", "algebra": "Q", "operators": [[["1"]], [["0"]]]}]}"""
    pa = ph.load_action(doc)
    assert pa.verify()["ok"]
    with pytest.raises(ph.Error):
        ph.Algebra([[1, 0]])


def test_prime_field():
    m = ph.matrix_algebra(2, "fp:3")
    assert m.field == "fp:3"
    assert m.product([2, 0, 0, 0], [2, 0, 0, 0]) == ["1", "0", "0", "0"]
