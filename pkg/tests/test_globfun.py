import numpy as np
import pytest

from globalk import bisets as bs
from globalk import globfun as gf
from globalk import groups as gr
from globalk import gsets as gs


def W(*names):
    return gf.GroupWindow(list(names))


def test_a_c2_ranks():
    A = gf.free_global_functor_A(gr.by_name("C2"), W("C1", "C2"))
    assert A.ranks() == [1, 3]
    assert gf.verify_axioms(A).passed


def test_a_trivial_is_burnside_basis():
    w = W("C1", "C2", "C3", "S3")
    A = gf.free_global_functor_A(gr.by_name("C1"), w)
    assert A.ranks() == [len(gr.conjugacy_classes_of_subgroups(G)) for G in w]
    assert gf.compare_functors(A, gf.burnside_by_marks(w)).isomorphic


def test_b_ranks():
    w = W("C1", "C2")
    assert gf.burnside_type_B(gr.by_name("C2"), w).ranks() == [2, 5]
    assert gf.burnside_type_B(gr.by_name("C1"), W("C1")).ranks() == [1]
    Be = gf.burnside_type_B(gr.by_name("C1"), w)
    assert gf.compare_functors(Be, gf.free_global_functor_A(gr.by_name("C1"), w)).isomorphic


def test_transfer_and_double_coset_on_a_c2():
    C2 = gr.by_name("C2")
    A = gf.free_global_functor_A(C2, W("C1", "C2"))
    tr = A.tr("C2", "C1")
    res = A.res("C2", "C1")
    # tr of the single class at e, against composing bisets directly
    e = gr.by_name("C1")
    iota = gr.GroupHom(e, C2, [C2.identity])
    comp = bs.compose_classes(bs.classify(bs.transfer_biset(iota)),
                              bs.BisetClass.single(e, C2, bs.terms(e, C2)[0]))
    expect = np.zeros(3, dtype=np.int64)
    for t, n in comp.terms.items():
        expect[bs.terms(C2, C2).index(t)] += n
    assert tr[:, 0].tolist() == expect.tolist()
    assert (res @ tr).tolist() == [[2]]


def test_identity_term_acts_as_identity():
    A = gf.free_global_functor_A(gr.by_name("S3"), W("C1", "C2", "C3", "S3"))
    S3 = A.window.get("S3")
    ident = bs.canonical_term(S3, S3, list(S3.elements), list(S3.elements))
    assert np.array_equal(A.op(S3, S3, ident), np.eye(A.rank(S3), dtype=np.int64))


def test_a_s3_axioms():
    A = gf.free_global_functor_A(gr.by_name("S3"), W("C1", "C2", "C3", "S3"))
    assert gf.verify_axioms(A).passed


@pytest.mark.parametrize("names", [("C1", "C2"), ("C1", "C3"), ("C1", "C5")])
def test_constant_functor_passes(names):
    assert gf.verify_axioms(gf.constant_functor(W(*names))).passed


def test_corrupted_transfer_is_caught():
    w = W("C1", "C2")
    M = gf.constant_functor(w)
    C2, e = w.get("C2"), w.get("C1")
    _, _, t = gf.transfer_term(w, C2.trivial, C2.whole)
    bad = M.with_override(e, C2, t, [[1]])
    rep = gf.verify_axioms(bad)
    assert not rep.passed
    assert "double coset" in {f[0] for f in rep.failures()}


def test_burnside_by_marks_matches_gsets():
    w = W("C1", "C2", "C3", "S3")
    B = gf.burnside_by_marks(w)
    S3 = w.get("S3")
    sc = gr.conjugacy_classes_of_subgroups(S3)
    for i, H in enumerate(sc.representatives):
        Hg, inc = H.as_group()
        X = gs.restrict_along(inc, gs.coset_gset(S3, S3.trivial))
        assert gs.decompose(X).multiplicities == {0: 6 // len(H)}
    assert B.ranks() == [1, 2, 2, 4]
    assert gf.verify_axioms(B).passed


def test_group_complete_of_burnside_monoid():
    w = W("C1", "C2")
    B = gf.burnside_by_marks(w)
    P = gf.PreGlobalFunctor(w, B.atoms, B._evaluator, "A+")
    M = gf.group_complete(P)
    assert gf.compare_functors(M, B).isomorphic


def test_group_complete_empty_atoms_is_zero():
    w = W("C1", "C2")
    Z = gf.zero_functor(w)
    P = gf.PreGlobalFunctor(w, Z.atoms, Z._evaluator, "0")
    assert gf.group_complete(P).ranks() == [0, 0]


def test_represent_to_morphism():
    w = W("C1", "C2")
    C2 = gr.by_name("C2")
    A = gf.free_global_functor_A(C2, w)
    f = gf.represent_to_morphism(A, "C2", gf.universal_element(C2, w))
    for G in w:
        assert np.array_equal(f[G.name], np.eye(A.rank(G), dtype=np.int64))
    Z = gf.constant_functor(w)
    g = gf.represent_to_morphism(Z, "C2", [1])
    assert g["C2"].tolist() == [[2 // len(t.L) for t in bs.terms(C2, C2)]]
    assert gf.check_naturality(A, Z, g).passed


def test_compare_self_and_obstruction():
    w = W("C1", "C2")
    A = gf.free_global_functor_A(gr.by_name("C2"), w)
    r = gf.compare_functors(A, A)
    assert r.isomorphic
    assert not gf.compare_functors(A, gf.burnside_by_marks(w)).isomorphic


def test_compare_b_c2_with_sum_of_a():
    w = W("C1", "C2")
    B = gf.burnside_type_B(gr.by_name("C2"), w)
    S = gf.direct_sum([gf.free_global_functor_A(gr.by_name("C2"), w), gf.free_global_functor_A(gr.by_name("C1"), w)])
    assert gf.compare_functors(B, S).isomorphic


def test_json_is_deterministic():
    w = W("C1", "C2")
    a = gf.free_global_functor_A(gr.by_name("C2"), w).to_json()
    b = gf.free_global_functor_A(gr.by_name("C2"), w).to_json()
    assert a == b and a["schema"] == 1
