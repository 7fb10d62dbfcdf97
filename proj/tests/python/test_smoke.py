"""Smoke tests for the python bindings."""

import _enhom as en


def test_tree_listing():
    trees = en.trees(2, 4)
    assert len(trees) == 4
    assert trees[0] == "2; 0,0; f2=[0]"
    # deterministic order
    assert trees == en.trees(2, 4)


def test_hom_count():
    fork = "2; 2,2; f2=[0,1,2]"
    crook = "2; 1,2; f2=[0,0,1]"
    assert en.hom_count(fork, crook) == 2


def test_dual_numbers_bar_homology():
    betti = en.bar_betti("trunc-poly:2", "q", 5, 12)
    assert betti == [1, 1, 1, 1, 1, 1]
    assert en.hochschild_betti("trunc-poly:2", "q", 5, 12) == betti


def test_en_betti_kz2():
    table = en.en_betti(2, "poly:1", "q", 4, 6)
    assert table["betti_by_degree"] == [1, 0, 1, 0, 1]


def test_verify_acyclic():
    ok, offender = en.verify_acyclic(2, 6)
    assert ok, offender


def test_d2_check():
    assert en.d2_check(2, "trunc-poly:3", 3)


def test_iterated_bar_cross_check():
    tree_side = en.en_betti(2, "trunc-poly:3", "q", 4, 5)["betti_by_degree"]
    bar_side = en.iterated_bar_betti("trunc-poly:3", 2, "q", 4, 5)
    assert tree_side == bar_side
