import pytest

import charone


def test_corpus_loads_and_validates():
    assert charone.bundled_corpus() == ["bool.sr", "c3.sr", "b_z2.sr", "chain4.sr"]
    for name in charone.bundled_corpus():
        assert len(charone.Semiring.load(name)) >= 2


def test_b_z2_basics():
    B = charone.Semiring.load("b_z2")
    assert B.elements == ["0", "1", "g", "1+g"]
    assert B.mul("g", "g") == "1"
    assert B.add("1", "g") == "1+g"
    assert B.leq("g", "1+g")
    assert B.is_simple() and B.is_unitgenerated()


def test_validate_reports_distributivity():
    text = open_corpus_text("c3").replace("0 a a\n0 a 1", "0 1 a\n0 a 1")
    violations = charone.validate(text)
    assert ("distributivity", ["a", "a", "1"]) in violations
    with pytest.raises(charone.InvalidSemiring):
        charone.Semiring.parse(text)


def test_orders_and_congruences():
    B = charone.Semiring.load("bool")
    assert charone.valuation_orders(B) == 2
    assert charone.valuation_orders(B, nondegenerate=True) == 1
    C3 = charone.Semiring.load("c3")
    assert charone.congruences(C3, "prime") == [[["0", "a"], ["1"]], [["0"], ["a", "1"]]]
    assert charone.reduction_kernel(charone.Semiring.load("b_z2")) == [["0"], ["1", "g", "1+g"]]
    assert charone.is_admissible(B, "1>0")
    assert not charone.is_admissible(B, "0>1")


def test_integrality():
    A = charone.Semiring.load("b_z2")
    R = ["0", "1"]
    assert charone.contract(A, A.elements) == [["0"], ["1", "g", "1+g"]]
    assert len(charone.contract(A, R)) == 4
    assert charone.is_integral(A, R, "g") == "n=2, c0=1, c1=0"
    assert charone.is_quasiintegral(A, R, "1+g") == "1+g"
    assert charone.quasiintegral_closure(A, R) == A.elements
    assert charone.is_extensible(A, R)
    with pytest.raises(ValueError):
        charone.is_quasiintegral(charone.Semiring.load("c3"), R, "a")


def test_contraction_lemmas():
    assert all(ok for _, _, ok in charone.contraction_lemmas(4))


def test_extend_valuation():
    r = charone.extend_valuation(5, -1)
    assert r["passed"] and r["kind"] == "split"
    assert [(e["e"], e["f"]) for e in r["extensions"]] == [(1, 1), (1, 1)]
    two = charone.extend_valuation(2, -1)
    assert two["extensions"][0]["scale"] == "1/2"
    with pytest.raises(ValueError):
        charone.extend_valuation(4, -1)


def open_corpus_text(name):
    from pathlib import Path

    return (Path(__file__).resolve().parents[2] / "corpus" / f"{name}.sr").read_text()
