import numpy as np

from globalk import groups as gr
from globalk import gsets as gs

from oracles import fixed_cosets


def sub(G, order):
    return next(H for H in sorted(gr.all_subgroups(G)) if len(H) == order)


def test_decompose_examples():
    C2 = gr.by_name("C2")
    assert gs.decompose(gs.empty_gset(C2)).multiplicities == {}
    reg = gs.coset_gset(C2, C2.trivial)
    assert gs.decompose(reg).multiplicities == {0: 1}
    three = gs.disjoint_union(reg, gs.coset_gset(C2, C2.whole))
    assert gs.decompose(three).multiplicities == {0: 1, 1: 1}
    assert gs.decompose(gs.disjoint_union(three, three)).multiplicities == {0: 2, 1: 2}


def test_s3_on_three_points():
    S3 = gr.by_name("S3")
    X = gs.coset_gset(S3, sub(S3, 2))
    orbs = gs.orbits_and_stabilizers(X)
    assert len(orbs) == 1 and len(orbs[0][1]) == 2


def test_transitive_is_unit_vector():
    G = gr.by_name("D4")
    sc = gr.conjugacy_classes_of_subgroups(G)
    for i, H in enumerate(sc.representatives):
        assert gs.decompose(gs.coset_gset(G, H)).multiplicities == {i: 1}


def test_table_of_marks_c2():
    assert gs.table_of_marks(gr.by_name("C2")).tolist() == [[2, 0], [1, 1]]


def test_table_of_marks_brute_force():
    for name in ("S3", "C2xC2", "D4", "Q8", "A4"):
        G = gr.by_name(name)
        reps = gr.conjugacy_classes_of_subgroups(G).representatives
        T = gs.table_of_marks(G)
        expect = np.array([[fixed_cosets(G, K, H) for H in reps] for K in reps])
        assert np.array_equal(T, expect), name
        assert (T[-1] == 1).all()
        assert T[0][0] == G.order


def test_restrict_and_induce():
    C2 = gr.by_name("C2")
    X = gs.coset_gset(C2, C2.whole)
    assert gs.isomorphic(gs.restrict_along(gr.identity_hom(C2), X), X)
    pt = gs.coset_gset(C2.trivial.as_group()[0], C2.trivial.as_group()[0].whole)
    assert gs.decompose(gs.induce(C2.trivial, pt)).multiplicities == {0: 1}


def test_res_of_induced_matches_double_cosets():
    S3 = gr.by_name("S3")
    H = sub(S3, 2)
    Hg, inc = H.as_group()
    pt = gs.coset_gset(Hg, Hg.whole)
    Y = gs.restrict_along(inc, gs.induce(H, pt))
    assert gs.decompose(Y).multiplicities == {0: 1, 1: 1}
    assert Y.size == 3


def test_isotypical_parts():
    C2 = gr.by_name("C2")
    X = gs.disjoint_union(gs.coset_gset(C2, C2.trivial), gs.coset_gset(C2, C2.whole))
    assert gs.isotypical_part(X, 0)[0].size == 2
    assert gs.isotypical_part(X, 1)[0].size == 1
    assert gs.isotypical_part(gs.empty_gset(C2), 0)[0].size == 0
    T = gs.coset_gset(C2, C2.whole)
    assert gs.isomorphic(gs.isotypical_part(T, 1)[0], T)
