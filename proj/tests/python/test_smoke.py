import pytest

import tritile


def test_cyclotomic_and_minpoly():
    assert tritile.cyclotomic(28) == "x^12 - x^10 + x^8 - x^6 + x^4 - x^2 + 1"
    assert tritile.minpoly_sin(1, 5) == "x^4 - 5/4*x^2 + 5/16"
    assert tritile.totient(28) == 12


def test_certificates():
    assert tritile.certify("piover5")[0] == "unsat"
    verdict, text = tritile.certify("threetwo-case1")
    assert verdict == "unsat" and "check cubic1: ok" in text
    with pytest.raises(ValueError):
        tritile.certify("nope")


def test_search_is_empty_and_deterministic():
    sols, text = tritile.search_threetwo(30, 1)
    assert sols == []
    assert text == tritile.search_threetwo(30, 4)[1]


def test_generate_verify_classify():
    ok, n, rows = tritile.verify(tritile.generate("threem2", 2))
    assert ok and n == 12 and rows == [[0, 0, 2]] * 3
    fams = tritile.classify(27)
    assert fams[0]["id"] == "i" and "twentyseven" in fams[0]["witnesses"]
    assert tritile.verify(tritile.witness("twentyseven"))[:2] == (True, 27)
    assert tritile.classify(7) == []
    with pytest.raises(ValueError):
        tritile.verify("garbage")
