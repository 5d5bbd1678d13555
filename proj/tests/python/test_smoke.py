import ordlab
import pytest
from ordlab import Ordinal, OrdSet


def test_ordinals_and_sets():
    assert str(Ordinal("w*2") + Ordinal("w")) == "w*3"
    assert Ordinal("w") < Ordinal("w+1")
    s = OrdSet("{w+1, w+3}")
    assert Ordinal("w+3") in s
    assert str(OrdSet("{1,2,3}").otp()) == "3"
    with pytest.raises(ordlab.ParseError):
        Ordinal("w^^2")


def test_walk_example():
    r = ordlab.walk(ordlab.ladder(), "w*2+3", "w^2", 0)
    assert [(str(b), i) for b, i in r["steps"]] == [("w^2", 0), ("w*3", 0)]
    assert r["projection"] == [OrdSet("{w, w*2}"), OrdSet("{w*2+1, w*2+2}")]
    assert [str(t) for t in r["trace"]] == ["2", "2"]


def test_transform_and_validation():
    t = ordlab.transform(ordlab.limits())
    assert t.i_of("w^3") == 1
    assert ordlab.validate_indexed(t)["ok"]
    counts = t.case_counts()
    assert counts is not None and counts[3] > 0
    assert ordlab.ladder().case_counts() is None
    probe = ["w", "w*2", "w^2", "w^2+w", "w^3"]
    assert ordlab.check_walk_lemmas(t, probe)["ok"]


def test_colorings():
    c = ordlab.Coloring(3, 2, [1, 1, 0])
    assert c(0, 2) == 1
    assert ordlab.check_subadditive(c)["ok"]
    assert ordlab.covering_matrix(c)[0][2] == 0b10
    assert ordlab.validate_matrix(c, 3)["ok"]
    assert not ordlab.check_subadditive(ordlab.Coloring(3, 2, [0, 1, 0]))["ok"]


def test_diamond_roundtrip():
    b = OrdSet("{0,2}")
    club = ordlab.diamond_encode("w", b)
    assert club == OrdSet("{w+1, w+3}")
    assert ordlab.diamond_decode(club, "w") == b
