"""Smoke tests for the python bindings."""

import json

import gsslat


def test_parse_and_expand():
    assert gsslat.parse("s3 r2 s1") == "s3 r2 s1"
    assert gsslat.expand("s3") == [5, 2, 2]
    assert gsslat.factor_aword([4, 2, 2]) == "s2 r1"
    assert gsslat.canonical("r2 s3") == "s3 r2"
    assert gsslat.classify("s1 s2") == "EvenInoueHirzebruch"
    assert gsslat.sigma_n("s2 r1") == 8


def test_matrix_path():
    assert gsslat.intersection_form("s1 r1") == [[1, -1], [-1, 2]]
    assert gsslat.intersection_form("s1 r1", surface=True) == [[-1, 1], [1, -2]]
    assert gsslat.det("s1 r1 s2 s1") == 49
    assert gsslat.is_positive_definite("s2 s2")
    assert not gsslat.is_positive_definite("r3")
    assert gsslat.chain_det([2] * 30) == 31
    assert gsslat.cycle_det([2] * 30) == 0


def test_tiling_path():
    assert gsslat.mark_set("s1 r1 s2 s1") == [0]
    assert gsslat.poly_text_of_marks(3, [0]) == "X0*X1*X2 + X1*X2 + X0 + X1"
    assert gsslat.eval_poly(3, [0], [1, 2, 1]) == 7
    assert gsslat.delta("s2 r1 s1 r1") == 6
    assert gsslat.lattice_index("s2 s2") == 4
    assert gsslat.twisting_coefficient("s3 r2") == 4


def test_cross_checks():
    report = gsslat.analyze("s2 r1 s1 r1")
    assert report["ok"]
    assert report["det"] == 25
    assert report["branch_dets"] == [3, 2]
    for word in gsslat.enumerate_words(7):
        r = gsslat.analyze(word)
        assert r["ok"], word
        if r["index"] is not None:
            assert r["det"] == r["index"] ** 2


def test_big_values_are_exact():
    # A long word with many branches: the index grows multiplicatively and
    # must round-trip exactly into python ints.
    word = " ".join(["s9 r1"] * 8)
    assert gsslat.delta(word) == 10**8
    idx = gsslat.lattice_index(word)
    assert idx == 10**8 - 1
    assert gsslat.det(word) == idx**2


def test_atlas_and_graph():
    lines = gsslat.atlas_csv(3).strip().split("\n")
    assert lines[0] == "word,n,N,rho,sigma_n,class,det,index,delta,branch_dets,poly"
    assert "s1 r1,2,1,1,5,Intermediate,1,1,2,2,X0" in lines
    g = gsslat.dual_graph("s2 r2")
    assert g["cycles"] == [[2, 4]]
    assert g["branches"] == [{"weights": [2, 2], "root": 0}]
    assert gsslat.to_dot("r3") == gsslat.to_dot("r3")
    assert gsslat.verify_reduction("s2 r1", [5])
