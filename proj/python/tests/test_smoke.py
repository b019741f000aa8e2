import pytest

import rebit


def test_ghz_is_semisimple():
    label = rebit.classify(rebit.state(e0000=1, e1111=1))
    assert label["type"] == "semisimple"
    assert (label["i"], label["j"], label["k"]) == (10, 1, 1)
    assert label["lambda"] == ["1"]


def test_mixed_state_and_decomposition():
    s = rebit.state(e0000=1, e1111=1, e0110=1, e1001=1, e0101=1, e1010=1, e0011=1)
    label = rebit.classify(s)
    assert label["type"] == "mixed"
    assert (label["i"], label["j"], label["r"], label["k"]) == (2, 1, 1, 1)
    parts = rebit.decompose(s)
    assert parts["nilpotent"] == {"coeffs": {"0011": "1"}}


def test_invariants_scale():
    s = rebit.state(e0000=1, e1111=1)
    t = rebit.state(e0000=2, e1111=2)
    a, b = rebit.invariants(s), rebit.invariants(t)
    from fractions import Fraction
    assert Fraction(b["H"]) == 4 * Fraction(a["H"])
    assert Fraction(b["L12"]) == 16 * Fraction(a["L12"])


def test_h1_normalizer():
    assert rebit.h1("normalizer")["classes"] == 7
    assert rebit.h1("gamma:4")["classes"] == 4


def test_errors():
    with pytest.raises(rebit.ParseError):
        rebit.classify('{"coeffs": ')
    with pytest.raises(rebit.MathError):
        rebit.classify(rebit.state(e0000="0,0,0,0,1,0,0,0"))
    code, _, err = rebit.run("frobnicate")
    assert code != 0 and "Usage" in err


def test_selftest_subset():
    results = rebit.selftest(only=[1, 2, 4])
    assert [r.id for r in results] == [1, 2, 4]
    assert all(r.passed for r in results)
