import random

import pytest

from globalk import bisets as bs
from globalk import groups as gr
from globalk import gsets as gs
from globalk.errors import NotRightFree

from oracles import graph_subgroups_meeting_trivially


def word_apply(K, G, t, X):
    """ind_L^K alpha^* X, the tr/res word of a term acting on a G-set."""
    L, alpha, _ = bs.to_tr_res_word(K, G, t)
    return gs.induce(L, gs.restrict_along(alpha, X))


def class_apply(c, X):
    out = gs.empty_gset(c.K)
    for t, n in c.terms.items():
        for _ in range(n):
            out = gs.disjoint_union(out, word_apply(c.K, c.G, t, X))
    return out


def test_identity_biset_is_unit():
    S3 = gr.by_name("S3")
    c = bs.classify(bs.identity_biset(S3))
    assert sum(c.terms.values()) == 1
    t = next(iter(c.terms))
    assert list(t.L) == list(S3.elements) and list(t.alpha) == list(S3.elements)
    for t in bs.terms(S3, gr.by_name("C2")):
        S = bs.transitive_biset(S3, gr.by_name("C2"), t)
        assert bs.classify(bs.balanced_product(bs.identity_biset(S3), S)) == bs.BisetClass.single(S3, S.G, t)


def test_transfer_biset_c2_over_e():
    C2, e = gr.by_name("C2"), gr.by_name("C1")
    iota = gr.GroupHom(e, C2, [C2.identity])
    c = bs.classify(bs.transfer_biset(iota))
    (t, n), = c.terms.items()
    assert n == 1 and list(t.L) == [C2.identity]


def test_disjoint_union_adds():
    S3 = gr.by_name("S3")
    S = bs.identity_biset(S3)
    assert bs.classify(bs.disjoint_union(S, S)).terms == (bs.classify(S) + bs.classify(S)).terms


def test_not_right_free():
    C2 = gr.by_name("C2")
    e = gr.by_name("C1")
    with pytest.raises(NotRightFree):
        bs.classify(bs.Biset(e, C2, [[0]], [[0], [0]]))


@pytest.mark.parametrize("K,G", [("C2", "C2"), ("C2", "C1"), ("C1", "C2"), ("S3", "C2"), ("C2xC2", "C2"), ("C4", "C2")])
def test_term_count_matches_graph_subgroups(K, G):
    K, G = gr.by_name(K), gr.by_name(G)
    assert len(bs.terms(K, G)) == graph_subgroups_meeting_trivially(K, G)
    assert len(bs.terms(K, G)) == len(bs.graph_subgroup_classes(K, G))


def test_a_c2_term_counts():
    C2, e = gr.by_name("C2"), gr.by_name("C1")
    assert len(bs.terms(C2, C2)) == 3
    assert len(bs.terms(e, C2)) == 1


def test_restriction_then_transfer_double_coset():
    S3 = gr.by_name("S3")
    H = next(H for H in sorted(gr.all_subgroups(S3)) if len(H) == 2)
    Hg, inc = H.as_group()
    T = bs.restriction_biset(inc)
    S = bs.transfer_biset(inc)
    c = bs.classify(bs.balanced_product(T, S))
    # res^{S3}_{C2} tr_{C2}^{S3}: one term per double coset in C2\S3/C2
    assert sum(c.terms.values()) == len(gr.double_cosets(S3, H, H)) == 2
    X = gs.coset_gset(Hg, Hg.whole)
    assert gs.decompose(class_apply(c, X)).multiplicities == {0: 1, 1: 1}


def test_word_vs_biset_composition_random():
    rng = random.Random(3)
    names = ["C1", "C2", "C3", "C4", "C2xC2", "S3"]
    checked = 0
    while checked < 50:
        L_, K, G = (gr.by_name(rng.choice(names)) for _ in range(3))
        t1 = rng.choice(bs.terms(K, G))
        t2 = rng.choice(bs.terms(L_, K))
        comp = bs.compose_terms(L_, K, G, t2, t1)
        for H in gr.conjugacy_classes_of_subgroups(G).representatives:
            X = gs.coset_gset(G, H)
            lhs = word_apply(L_, K, t2, word_apply(K, G, t1, X))
            assert gs.isomorphic(lhs, class_apply(comp, X))
        checked += 1


def test_composition_associative_sample():
    rng = random.Random(5)
    names = ["C1", "C2", "C3", "S3"]
    for _ in range(20):
        A, B, C, D = (gr.by_name(rng.choice(names)) for _ in range(4))
        s = bs.BisetClass.single(C, D, rng.choice(bs.terms(C, D)))
        t = bs.BisetClass.single(B, C, rng.choice(bs.terms(B, C)))
        u = bs.BisetClass.single(A, B, rng.choice(bs.terms(A, B)))
        assert bs.compose_classes(u, bs.compose_classes(t, s)) == bs.compose_classes(bs.compose_classes(u, t), s)
