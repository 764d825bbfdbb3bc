import json

import pytest

import crossfam as cf


def test_family_roundtrip():
    f = cf.SetFamily(3, [[2, 3], [1], []])
    assert f.n == 3
    assert len(f) == 3
    assert f.members() == [[], [1], [2, 3]]
    assert [1] in f
    assert f == cf.SetFamily(3, [[1], [2, 3], []])


def test_bounded_and_star():
    assert cf.bounded_family(2, 1) == cf.SetFamily(2, [[], [1], [2]])
    assert len(cf.star(cf.bounded_family(4, 2), 1)) == 4
    assert cf.star_size_bound(4, 2) == 4


def test_compression():
    family, trace = cf.compress_to_fixed_point(cf.SetFamily(3, [[2], [2, 3]]))
    assert family == cf.SetFamily(3, [[1], [1, 2]])
    assert cf.is_compressed(family)
    assert all(s["potential_after"] < s["potential_before"] for s in trace)


def test_search_and_theorems():
    r = cf.verify_theorem1(3, 3, 2, 2)
    assert r["max_product"] == 9 and r["equality"]
    assert cf.verify_corollary3([2, 2, 2])["max_product"] == 8
    g = cf.downward_closure(cf.SetFamily(3, [[1, 2], [1, 3]]))
    assert cf.verify_theorem4(g, cf.power_set(2))["max_product"] == 6
    assert cf.max_product(cf.power_set(3), cf.power_set(3), strategy="galois", threads=2)["max_product"] == 16
    assert cf.pairwise_to_k_product([1, 4], [2, 2])


def test_hereditary_and_prooflab():
    assert len(cf.enumerate_downsets(4)) == 168
    assert cf.lemma2_check(cf.downward_closure(cf.SetFamily(3, [[1, 2], [3]])), 1)
    a = cf.SetFamily(3, [[1, 2], [1, 3], [2, 3], [1, 2, 3]])
    assert cf.find_conflicts(a, a)["k"] == 2
    assert cf.alteration_ledger(a, a)["all_passed"]
    assert cf.am_gm_endgame(3, 4) == 16


def test_errors():
    with pytest.raises(ValueError):
        cf.bounded_family(3, 4)
    with pytest.raises(cf.PreconditionError):
        cf.find_conflicts(cf.SetFamily(2, [[1], [2]]), cf.SetFamily(2, [[1], [2]]))
    with pytest.raises(cf.BudgetExceeded):
        cf.enumerate_downsets(7, True)


def test_cli():
    code, out, err = cf.run_cli(["verify-bounded", "--m", "3", "--n", "3", "--r", "2", "--s", "2"])
    assert code == 0
    assert json.loads(out)["results"]["max_product"] == 9
    code, _, err = cf.run_cli(["verify-bounded", "--m", "3", "--n", "3", "--r", "9", "--s", "2"])
    assert code == 2 and err
