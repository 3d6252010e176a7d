import pytest

from globalk import groups as gr
from globalk.errors import BadSelector, OrderCapExceeded

from oracles import conjugacy_class_count, normalizer_order, subgroups_by_subsets


@pytest.mark.parametrize("name,count", [("C1", 1), ("C2", 2), ("S3", 6), ("C2xC2", 5), ("D4", 10)])
def test_subgroup_counts(name, count):
    G = gr.by_name(name)
    subs = gr.all_subgroups(G)
    assert len(subs) == count
    assert {frozenset(H.elements) for H in subs} == set(subgroups_by_subsets(G))


@pytest.mark.parametrize("name", ["C1", "C2", "C3", "C4", "C2xC2", "C6", "S3", "D4", "Q8", "C8", "C2xC4"])
def test_class_counts_match_brute_force(name):
    G = gr.by_name(name)
    assert len(gr.conjugacy_classes_of_subgroups(G)) == conjugacy_class_count(G)


def test_class_counts_examples():
    assert len(gr.conjugacy_classes_of_subgroups(gr.by_name("C1"))) == 1
    assert len(gr.conjugacy_classes_of_subgroups(gr.by_name("S3"))) == 4
    assert len(gr.conjugacy_classes_of_subgroups(gr.by_name("D4"))) == 8
    assert gr.subgroup_class_names(gr.by_name("S3")) == ["e", "C2", "C3", "S3"]


def test_weyl_groups():
    S3 = gr.by_name("S3")
    W, _, _ = gr.weyl_group(S3, S3.whole)
    assert W.order == 1
    W, _, _ = gr.weyl_group(S3, S3.trivial)
    assert W.order == 6 and gr.isomorphism_type(W) == "S3"
    C2 = gr.conjugacy_classes_of_subgroups(S3).rep(1)
    W, _, _ = gr.weyl_group(S3, C2)
    assert W.order == 1


@pytest.mark.parametrize("name", ["S3", "D4", "Q8", "A4"])
def test_weyl_orders_brute_force(name):
    G = gr.by_name(name)
    for H in gr.all_subgroups(G):
        W, _, _ = gr.weyl_group(G, H)
        assert W.order * len(H) == normalizer_order(G, H.elements)


def test_double_cosets():
    S3 = gr.by_name("S3")
    assert gr.double_cosets(S3, S3.whole, S3.whole) == [S3.identity]
    C2 = gr.conjugacy_classes_of_subgroups(S3).rep(1)
    assert len(gr.double_cosets(S3, C2, C2)) == 2
    C6 = gr.by_name("C6")
    subs = {len(H): H for H in gr.all_subgroups(C6)}
    assert len(gr.double_cosets(C6, subs[2], subs[3])) == 1


def test_double_cosets_partition():
    G = gr.by_name("D4")
    for K in gr.all_subgroups(G):
        for H in gr.all_subgroups(G):
            covered = set()
            for g in gr.double_cosets(G, K, H):
                dc = {G.mult[G.mult[k][g]][h] for k in K for h in H}
                assert not dc & covered
                covered |= dc
            assert covered == set(G.elements)


def test_homs_up_to_conjugacy():
    C2, C3, S3 = (gr.by_name(n) for n in ("C2", "C3", "S3"))
    assert len(gr.homs_up_to_conjugacy(C2, C2)) == 2
    assert len(gr.homs_up_to_conjugacy(C3, C2)) == 1
    assert len(gr.homs_up_to_conjugacy(C2, S3)) == 2


def test_cayley_roundtrip():
    G = gr.by_name("S3")
    H = gr.load_cayley(G.to_text(), name="T")
    assert gr.isomorphism_type(H) == "S3"


def test_bad_cayley_rejected():
    with pytest.raises(Exception):
        gr.load_cayley("0 1\n0 1\n", name="bad")


def test_selectors():
    assert gr.by_name("e").order == 1
    with pytest.raises(BadSelector):
        gr.by_name("nonsense")


def test_order_cap(monkeypatch):
    monkeypatch.setenv("GLOBALK_CAPS", "order=4")
    with pytest.raises(OrderCapExceeded):
        gr.by_name("C5xC5")
