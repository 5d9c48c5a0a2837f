"""Smoke tests for the nsgoto extension; runnable directly or through pytest."""

import json

import nsgoto


def test_basic_invariants():
    s = nsgoto.Semigroup("4,5,7")
    assert s.generators == [4, 5, 7]
    assert s.multiplicity == 4
    assert s.embedding_dim == 3
    assert s.frobenius == 6
    assert s.gaps == [1, 2, 3, 6]
    assert 6 not in s
    assert 8 in s
    assert s.ord(6) == -1
    assert s.t_set() == [3, 6]


def test_goto_numbers():
    s = nsgoto.Semigroup([4, 5, 7])
    gv = s.goto_vector()
    assert gv["sigma"] == [1, 2, 2, 2]
    assert gv["tau"] == 1
    assert gv["rho"] == 2
    assert s.goto_number(7) == 2
    assert s.goto_number(5) == 1
    assert s.goto_number_oracle(4) == 2

    t = nsgoto.Semigroup("5,6,9")
    assert t.goto_number(14) == 3
    assert t.goto_closed_form(9) == 3
    assert t.family()["family"] == "SymMultiplicity5"


def test_classification():
    s = nsgoto.Semigroup("5,6,14")
    r = s.report()
    assert (r["delta"], r["gamma"], r["ord_conductor"]) == (1, 1, 1)
    assert (r["tau"], r["g_a1"], r["reduction_number"]) == (2, 3, 4)
    assert not r["flags"]["symmetric"]

    g = nsgoto.Semigroup("10,17,35")
    assert g.is_symmetric()
    assert g.purity() == (True, True)
    assert g.reduction_number() == 5
    assert g.report()["flags"]["gr_gorenstein"]

    parsed = json.loads(g.report_json())
    assert parsed["tau"] == 5


def test_enumeration_and_verify():
    lists = nsgoto.enumerate_semigroups(genus_max=4)
    assert len(lists) == 15  # 1 + 1 + 2 + 4 + 7
    assert [2, 3] in lists

    sym = nsgoto.enumerate_semigroups(multiplicity=5, frobenius_max=19, filter="symmetric")
    assert [5, 6, 9] in sym and [5, 8, 12] in sym

    report = nsgoto.verify("goto_differential", genus_max=7)
    assert report["failed"] == 0

    assert "theorem_except" in nsgoto.properties()


def test_errors():
    try:
        nsgoto.Semigroup("2,4")
    except nsgoto.NotNumericalError:
        pass
    else:
        raise AssertionError("gcd 2 must be rejected")

    s = nsgoto.Semigroup("4,5,7")
    try:
        s.goto_number(6)
    except nsgoto.NotAMemberError:
        pass
    else:
        raise AssertionError("6 is not a member")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            fn()
            print(f"ok: {name}")
    print("python smoke tests passed")
