"""Cross-checks between instances: the order-preserving comparison F -> Phi(Sigma),
the free generator comparison, and the isotypical splitting of Gamma-sets."""

from __future__ import annotations

import itertools
import random

from .. import bisets as bs
from .. import globfun as gf
from ..groups import Subgroup, by_name, conjugacy_classes_of_subgroups, weyl_group
from ..parsummable import Mor, pi0_with_addition, swan_k
from .finsets import FinSets
from .free import FreeParsummable
from .gfinsets import GFinSets
from .phi import PhiCategory, SigmaCategory


# ------------------------------------------------------------------ F -> Phi(Sigma)

def epsilon_obj(A):
    return tuple((l, 1) for l in sorted(A))


def epsilon_mor(f):
    """lambda_B^-1 o f o lambda_A, with lambda the order-preserving bijections onto {0..n-1}."""
    A = sorted(f.src)
    posB = {b: i for i, b in enumerate(sorted(f.tgt))}
    fd = dict(f.data)
    n = len(A)
    return Mor(epsilon_obj(f.src), epsilon_obj(f.tgt), Mor(n, n, tuple(posB[fd[a]] for a in A)))


def _rand_inj(rng, labels, extra=5):
    pool = list(labels) + [max(labels) + 1 + i for i in range(extra)]
    return dict(zip(labels, rng.sample(pool, len(labels))))


def phi_of_sigma_equivalence(n_labels=5, group="C2", multiplicity=2, bound=4, samples=100, seed=0):
    """Check that epsilon: F -> Phi(Sigma) is an equivalence compatible with injections and sums."""
    rng = random.Random(seed)
    F, P = FinSets(), PhiCategory(SigmaCategory())
    L = list(range(n_labels))
    rep = gf.Report(f"Phi(Sigma) vs F on {n_labels} labels")
    objs = list(F.objects_on(L))
    rep.add("zero", "epsilon(0)", epsilon_obj(F.zero()) == P.zero())
    # fully faithful
    for A in objs:
        for B in objs:
            if len(A) != len(B):
                continue
            imgs = [epsilon_mor(f) for f in F.hom(A, B)]
            target = list(P.hom(epsilon_obj(A), epsilon_obj(B)))
            ok = len(set(imgs)) == len(imgs) == len(target) and set(imgs) <= set(target)
            rep.add("fully faithful", f"{sorted(A)}->{sorted(B)}", ok)
    # functoriality
    for _ in range(samples):
        A = rng.choice(objs)
        B = rng.choice([b for b in objs if len(b) == len(A)])
        C = rng.choice([c for c in objs if len(c) == len(A)])
        f = rng.choice(list(F.hom(A, B)))
        g = rng.choice(list(F.hom(B, C)))
        rep.add("functor", "composition", epsilon_mor(F.compose(g, f)) == P.compose(epsilon_mor(g), epsilon_mor(f)))
    rep.add("functor", "identities", all(epsilon_mor(F.identity(A)) == P.identity(epsilon_obj(A)) for A in objs))
    # essentially surjective
    for x in P.objects_on(L, n_labels):
        k = P.size(x)
        A = frozenset(L[:k])
        rep.add("essentially surjective", P.describe(x), next(iter(P.hom(x, epsilon_obj(A))), None) is not None)
    # compatibility with injections and sums
    for _ in range(samples):
        A = rng.choice(objs)
        u = _rand_inj(rng, L)
        rep.add("injection-equivariant", "objects", epsilon_obj(F.act(u, A)) == P.act(u, epsilon_obj(A)))
        rep.add("injection-equivariant", "structure isos", epsilon_mor(F.circ(u, A)) == P.circ(u, epsilon_obj(A)))
        B = frozenset(rng.sample([l for l in L if l not in A], rng.randrange(len(L) - len(A) + 1)))
        rep.add("additive", "objects", epsilon_obj(F.add(A, B)) == P.add(epsilon_obj(A), epsilon_obj(B)))
        f = rng.choice(list(F.hom(A, A)))
        g = rng.choice(list(F.hom(B, B)))
        rep.add("additive", "morphisms", epsilon_mor(F.add_mor(f, g)) == P.add_mor(epsilon_mor(f), epsilon_mor(g)))
    # basic relation v_o u_o = (vu)_o in Phi(Sigma)
    pobjs = list(P.objects_on(L, n_labels))
    for _ in range(samples):
        x = rng.choice(pobjs)
        u = _rand_inj(rng, L)
        v = _rand_inj(rng, sorted(set(u.values())))
        vu = {l: v[u[l]] for l in L}
        rep.add("basic relation", P.describe(x), P.compose(P.circ(v, P.act(u, x)), P.circ(u, x)) == P.circ(vu, x))
    # pi_0 of the G-fixed categories, atom for atom
    G = by_name(group)
    MF = pi0_with_addition(F, G, multiplicity, bound)
    MP = pi0_with_addition(P, G, multiplicity, bound, window=MF.window)
    rep.add("pi0 rank", G.name, MF.rank == MP.rank, f"{MF.rank} vs {MP.rank}")
    hit = []
    for i, A in enumerate(MF.atom_reps()):
        v = MP.classify(epsilon_obj(A))
        ok = int(v.sum()) == 1
        hit.append(int(v.argmax()) if ok else None)
        rep.add("pi0 atoms", F.describe(A, MF.window), ok)
    rep.add("pi0 atoms", "bijective", sorted(h for h in hit if h is not None) == list(range(MP.rank)))
    rep.matching = hit
    return rep


# ------------------------------------------------------------------ free generator

def iota_obj(T, x):
    return T.add_all(x)


def iota_mor(T, P, f):
    pairs = []
    for _, h in f.data:
        pairs.extend(h.data)
    return Mor(iota_obj(T, f.src), iota_obj(T, f.tgt), tuple(sorted(pairs)))


def free_generator_iso(Gamma, n_labels=None, bound=None, window=("C1", "C2"), samples=60, seed=0):
    """iota: P(B_gl Gamma) -> (Gamma F)_free is bijective on objects and hom sets, and
    Swan K of the free Gamma-sets is A_Gamma on the window."""
    Gamma = by_name(Gamma) if isinstance(Gamma, str) else Gamma
    rng = random.Random(seed)
    # two free orbits when they fit in 8 labels, else one
    n = n_labels if n_labels is not None else (2 * Gamma.order if Gamma.order <= 4 else Gamma.order)
    bound = bound if bound is not None else n
    B = GFinSets(Gamma, free=True, transitive=True)
    P = FreeParsummable(B)
    T = GFinSets(Gamma, free=True)
    L = list(range(n))
    rep = gf.Report(f"free generator comparison for {Gamma.name}")
    pobjs = list(P.objects_on(L, bound))
    images = [iota_obj(T, x) for x in pobjs]
    tobjs = set(T.objects_on(L, bound))
    rep.add("bijective on objects", f"{len(pobjs)} objects", len(set(images)) == len(images) and set(images) == tobjs,
            f"{len(set(images))} images vs {len(tobjs)} targets")
    pairs = [(x, y) for x in pobjs for y in pobjs if P.size(x) == P.size(y) and len(x) == len(y)]
    if len(pairs) > samples:
        pairs = rng.sample(pairs, samples)
    for x, y in pairs:
        src = list(P.hom(x, y))
        imgs = [iota_mor(T, P, f) for f in src]
        tgt = list(T.hom(iota_obj(T, x), iota_obj(T, y)))
        ok = len(set(imgs)) == len(imgs) == len(tgt) and set(imgs) == set(tgt)
        rep.add("bijective on hom sets", f"{len(x)} orbits", ok, f"{len(imgs)} vs {len(tgt)}")
        if x == y:
            k = len(x)
            expect = 1
            for i in range(2, k + 1):
                expect *= i
            expect *= Gamma.order ** k
            rep.add("automorphism count", f"{k} orbits", len(tgt) == expect, f"{len(tgt)} vs {expect}")
    for _ in range(samples):
        x = rng.choice(pobjs)
        u = _rand_inj(rng, L)
        rep.add("injection-equivariant", "", iota_obj(T, P.act(u, x)) == T.act(u, iota_obj(T, x))
                and iota_mor(T, P, P.circ(u, x)) == T.circ(u, iota_obj(T, x)))
    win = gf.GroupWindow(list(window))
    K = swan_k(T, win, Gamma.order * max(G.order for G in win))
    A = gf.free_global_functor_A(Gamma, K.window)
    iso = gf.compare_functors(K, A)
    rep.add("Swan K is A", Gamma.name, iso.isomorphic, iso.obstruction)
    rep.swan, rep.A, rep.iso = K, A, iso
    return rep


# ------------------------------------------------------------------ splitting

def _weyl_data(Gamma):
    sc = conjugacy_classes_of_subgroups(Gamma)
    out = []
    for H in sc.representatives:
        W, proj, inc = weyl_group(Gamma, H)
        lift = {}
        for nidx in proj.source.elements:
            lift.setdefault(proj.image[nidx], inc.image[nidx])
        out.append((H, W, lift))
    return out


def _fixed_point_term(T, x, window, H, W, lift):
    """The K-W-biset of points of x whose Gamma-stabilizer is exactly H, classified as a term."""
    K, Gamma = window.group, T.Gamma
    acts = [x.action(c) for c in Gamma.elements]
    pts = [a for a in x.labels if sorted(c for c in Gamma.elements if acts[c][a] == a) == list(H.elements)]
    pos = {a: i for i, a in enumerate(pts)}
    left = [[pos[window.act(k, a)] for a in pts] for k in K.elements]
    right = [[pos[acts[Gamma.inv[lift[w]]][a]] for a in pts] for w in W.elements]
    S = bs.Biset(K, W, left, right)
    cls = bs.classify(S)
    if sum(cls.terms.values()) != 1:
        return None
    return next(iter(cls.terms))


def splitting_check(Gamma, window=("C1", "C2"), bound=None):
    """Swan K of Gamma-sets is the sum over subgroup classes (H) of A_{W H}, matched by H-fixed points."""
    Gamma = by_name(Gamma) if isinstance(Gamma, str) else Gamma
    T = GFinSets(Gamma)
    win = gf.GroupWindow(list(window))
    bound = bound if bound is not None else Gamma.order * max(G.order for G in win)
    K = swan_k(T, win, bound)
    data = _weyl_data(Gamma)
    S = gf.direct_sum([gf.free_global_functor_A(W, K.window) for _, W, _ in data], name=f"sum A_W({Gamma.name})")
    rep = gf.Report(f"splitting for {Gamma.name}")
    matching = {}
    for G in win:
        P = bs.product_group(G, Gamma)
        n_classes = len(conjugacy_classes_of_subgroups(P))
        counts = [len(bs.terms(G, W)) for _, W, _ in data]
        rep.add("rank identity", G.name, n_classes == sum(counts) == K.rank(G),
                f"{n_classes} classes, {' + '.join(map(str, counts))} terms, rank {K.rank(G)}")
        M = K.swan_data.monoids[G.name]
        offsets = list(itertools.accumulate([0] + counts))
        perm = []
        for x in M.atom_reps():
            a = x.labels[0]
            stab = Subgroup(Gamma, [c for c in Gamma.elements if x.action(c)[a] == a])
            sc = conjugacy_classes_of_subgroups(Gamma)
            hid = sc.class_of(stab)
            H, W, lift = data[hid]
            t = _fixed_point_term(T, x, M.window, H, W, lift)
            perm.append(None if t is None else offsets[hid] + bs.terms(G, W).index(t))
        ok = None not in perm and sorted(perm) == list(range(K.rank(G)))
        rep.add("fixed-point matching", G.name, ok, str(perm))
        matching[G.name] = perm
    if rep.passed:
        iso = gf.compare_functors(K, S, matching)
        rep.add("isomorphism", "all terms", iso.isomorphic, iso.obstruction)
        rep.iso = iso
    rep.swan, rep.target, rep.matching = K, S, matching
    return rep
