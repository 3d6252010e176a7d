import numpy as np
import pytest

from globalk import globfun as gf
from globalk import groups as gr
from globalk import parsummable as ps
from globalk.errors import WindowTooSmall
from globalk.instances import DiscreteMonoid, FinSets, GFinSets, OneObjectGroup, ProjModules


class BrokenSupport(FinSets):
    """Support is the least label: S2 fails under non-monotone injections."""

    def support(self, x):
        return frozenset([min(x)]) if x else frozenset()


def test_window_sizes():
    assert len(ps.build_window(gr.by_name("C1"), 3).labels) == 3
    assert len(ps.build_window(gr.by_name("C2"), 1).labels) == 3
    assert len(ps.build_window(gr.by_name("S3"), 1).labels) == 12


def test_window_prefix_property():
    G = gr.by_name("S3")
    a, b = ps.build_window(G, 1), ps.build_window(G, 2)
    assert list(b.labels)[: len(a.labels)] == list(a.labels)
    assert a.validate() is None or a.validate()


def test_embedding_is_equivariant():
    G = gr.by_name("S3")
    src = ps.build_window(G, 1, offset=100)
    U = ps.build_window(G, 2)
    pts = list(src.labels)[:9]  # S3/e and S3/C2 copies
    lam = ps.equivariant_embedding(G, pts, src.act, U)
    assert lam.is_equivariant(gr.identity_hom(G), src, U)
    assert len(set(lam.map.values())) == len(pts)


def test_window_too_small():
    G = gr.by_name("C2")
    U = ps.build_window(G, 1)
    with pytest.raises(WindowTooSmall):
        ps.equivariant_embedding(G, [0, 1, 2, 3], lambda g, p: p if g == 0 else p ^ 1, U)


def test_mcat_axioms_finsets():
    assert ps.verify_mcat_axioms(FinSets(), range(5)).passed


def test_mcat_axioms_broken_support():
    rep = ps.verify_mcat_axioms(BrokenSupport(), range(5), samples=80)
    assert "S2" in {f[0] for f in rep.failures()}


def test_mcat_axioms_discrete_monoid():
    rep = ps.verify_mcat_axioms(DiscreteMonoid(), range(4), bound=3)
    assert rep.passed
    assert all(DiscreteMonoid().support(x) == frozenset() for x in DiscreteMonoid().objects_on(range(4), 3))


def test_gamma_examples():
    C = FinSets()
    labels = range(3)
    assert sorted(x for (x,) in ps.gamma_value(C, 1, labels)) == sorted(C.objects_on(labels))
    assert len(ps.gamma_value(C, 2, labels)) == 27
    A, B = frozenset({0}), frozenset({2})
    assert ps.gamma_map(C, {1: 1, 2: 1}, 2, 1, (A, B)) == (A | B,)
    assert ps.check_gamma_functoriality(C, range(4), 3, 2, 2).passed


def test_fixed_category_examples():
    C2 = gr.by_name("C2")
    U = ps.build_window(C2, 1)
    F = ps.fixed_category(FinSets(), C2, U)
    assert len(F.objects) == 4
    assert F.check_closed()
    e = gr.by_name("C1")
    Ue = ps.build_window(e, 3)
    assert len(ps.fixed_category(FinSets(), e, Ue).objects) == 2 ** 3
    B = ps.fixed_category(OneObjectGroup(C2), C2, U)
    assert len(B.objects) == 1
    assert len(B.morphisms(B.objects[0], B.objects[0])) == 2


def test_pi0_finsets():
    M = ps.pi0_with_addition(FinSets(), gr.by_name("C1"), 3, 3)
    assert M.rank == 1
    M = ps.pi0_with_addition(FinSets(), gr.by_name("C2"), 2, 2)
    assert M.rank == 2
    assert [FinSets().size(x) for x in M.atom_reps()] == [2, 1]


@pytest.mark.parametrize("mode", ["split", "exhaustive"])
def test_pi0_modes_agree(mode):
    M = ps.pi0_with_addition(FinSets(), gr.by_name("S3"), 6, 6, mode=mode)
    assert M.rank == 4
    assert all(all(v) for v in M.checks.values())


def test_pi0_discrete_monoid():
    for name in ("C1", "C2", "S3"):
        assert ps.pi0_with_addition(DiscreteMonoid(), gr.by_name(name), 2, 4).rank == 1


def test_res_and_tr_finsets():
    w = gf.GroupWindow(["C1", "C2"])
    K = ps.swan_k(FinSets(), w, 2)
    # atoms at C2: [C2/e], [C2/C2]
    assert K.res("C2", "C1").tolist() == [[2, 1]]
    assert K.tr("C2", "C1").tolist() == [[1], [0]]
    assert (K.res("C2", "C1") @ K.tr("C2", "C1")).tolist() == [[2]]
    assert K.swan_data.choice_agreement()[0] == K.swan_data.choice_agreement()[1]


def test_swan_finsets_is_burnside():
    w = gf.GroupWindow(["C1", "C2"])
    K = ps.swan_k(FinSets(), w, 3)
    B = gf.burnside_by_marks(w)
    r = gf.compare_functors(K, B)
    assert r.isomorphic
    for G, H, t in K.all_terms():
        assert np.array_equal(K.op(G, H, t), B.op(G, H, t))


def test_swan_discrete_monoid_is_constant():
    w = gf.GroupWindow(["C1", "C2", "C3"])
    K = ps.swan_k(DiscreteMonoid(), w, 3)
    assert gf.compare_functors(K, gf.constant_functor(w)).isomorphic


def test_swan_gfinsets_is_b():
    w = gf.GroupWindow(["C1", "C2"])
    C2 = gr.by_name("C2")
    K = ps.swan_k(GFinSets(C2), w, 4)
    assert K.ranks() == [2, 5]
    assert gf.compare_functors(K, gf.burnside_type_B(C2, w)).isomorphic


def test_stabilization():
    w = gf.GroupWindow(["C1", "C2"])
    assert ps.stabilization_check(FinSets(), w, 2, 2).passed


def test_saturation():
    for name in ("C2", "C3"):
        assert ps.saturation_probe(FinSets(), gr.by_name(name), 3, 3).saturated
    assert ps.saturation_probe(ProjModules(2), gr.by_name("C2"), 2, 2).saturated
    r = ps.saturation_probe(OneObjectGroup(gr.by_name("C2")), gr.by_name("C2"), 1, 1)
    assert not r.saturated
    assert (r.g_object_classes, r.fixed_classes) == (2, 1)
    assert r.missing
    assert ps.saturation_probe(DiscreteMonoid(), gr.by_name("C2"), 2, 2).saturated


def test_derived_monoidal_finsets():
    C = FinSets()
    rep = ps.verify_derived_monoidal(C, range(4), bound=2)
    assert rep.passed
    D = ps.DerivedMonoidal(C, lambda l: 2 * l, lambda l: 2 * l + 1)
    A, B = frozenset({0, 1}), frozenset({1})
    assert D.tensor(A, B) == frozenset({0, 2, 3})
    assert D.tensor(A, C.zero()) == frozenset({0, 2})
