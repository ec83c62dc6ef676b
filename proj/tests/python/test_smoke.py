import pytest

import igenum


def test_counts():
    assert igenum.count("threshold", 5) == 16
    assert igenum.count("proper-interval", 3) == 2
    assert igenum.count("chain", 3) == 3
    assert igenum.count("threshold", 64) == 2**63
    assert igenum.count("cochain", 2, m=1) == 1


def test_enumerator():
    e = igenum.Enumerator("proper-interval", 3)
    assert e.count() == 2
    assert sorted(e.strings()) == ["LLLRRR", "LLRLRR"]
    assert e.strings(limit=1) == e.strings()[:1]
    assert e.decode("LLLRRR") == (3, [(1, 2), (1, 3), (2, 3)])
    assert e.accepts("LLRLRR")
    assert e.stats()["total_nodes"] > 2
    assert e.dot().startswith("digraph")


def test_sampling_is_repeatable():
    e = igenum.Enumerator("bipartite-permutation", 7)
    assert e.sample(seed=5, num=10) == e.sample(seed=5, num=10)
    assert all(e.accepts(s) for s in e.sample(seed=1, num=20))


def test_strings():
    assert igenum.height_profile("LLRR") == [0, 1, 2, 1, 0]
    assert igenum.alternate("LLRLRR") == "LRLRRL"
    assert igenum.inverse_alternate("LRLRRL") == "LLRLRR"
    assert igenum.reverse_complement("LRRR") == "LLLR"


def test_cross_check():
    r = igenum.cross_check("chain", 4, m=3)
    assert r["ok"] and r["oracle_count"] == r["bdd_count"]


def test_errors():
    with pytest.raises(ValueError):
        igenum.count("interval", 3)
    with pytest.raises(ValueError):
        igenum.count("bipartite-permutation", 3, k=2)
    with pytest.raises(igenum.EmptyLanguageError):
        igenum.Enumerator("proper-interval", 3, k=1).sample(seed=0)
    with pytest.raises(igenum.ResourceLimitError):
        igenum.cross_check("threshold", 9)
