"""Parsummable categories on finite label windows.

Labels are non-negative integers.  An injection is any mapping ``label -> label``
(a dict); it only ever needs to be defined on the supports involved.  A G-window
is a finite G-set of labels assembled from copies of the transitive G-sets G/H.

Instances subclass :class:`ParsumCat`. They provide objects and morphisms, the
action of injections with its supports, and the partial sum.  The engine here computes fixed
categories, component monoids, restrictions, transfers and Swan K-theory.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

import numpy as np

from . import bisets as bs
from .errors import ImagesOverlap, NonCancellative, NonUniqueDecomposition, WindowTooSmall
from .globfun import GroupWindow, PreGlobalFunctor, Report, compare_functors, group_complete
from .groups import (Subgroup, conjugacy_classes_of_subgroups, generators, normalizer,
                     subgroup_class_names)
from .gsets import coset_gset


@dataclass(frozen=True)
class Mor:
    src: object
    tgt: object
    data: object


# ------------------------------------------------------------------ windows

class LabelSet:
    """A finite set of labels, optionally a G-set.

    For windows built by :func:`build_window`, ``copies`` lists every transitive
    piece as ``(class id, labels)`` where ``labels[i]`` is the label of the i-th
    point of ``coset_gset(G, H)``.
    """

    def __init__(self, labels, group=None, perms=None, copies=None):
        self.labels = tuple(sorted(labels))
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("labels must be distinct")
        self.group = group
        self.perms = perms          # perms[g]: dict label -> label
        self.copies = copies or []

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __repr__(self):
        g = f", {self.group.name}" if self.group is not None else ""
        return f"LabelSet({len(self.labels)} labels{g})"

    def act(self, g, label):
        return self.perms[g][label]

    def orbit(self, label):
        return sorted({self.perms[g][label] for g in self.group.elements})

    def orbits(self, labels=None):
        todo = sorted(self.labels if labels is None else labels)
        seen, out = set(), []
        for x in todo:
            if x not in seen:
                o = self.orbit(x)
                seen.update(o)
                out.append(o)
        return out

    def stabilizer(self, label):
        return Subgroup(self.group, [g for g in self.group.elements if self.perms[g][label] == label])

    def is_invariant(self, labels):
        s = set(labels)
        return all(self.perms[g][x] in s for g in self.group.elements for x in s)

    def validate(self):
        if self.group is None:
            return True
        G = self.group
        for g in G.elements:
            p = self.perms[g]
            if sorted(p) != list(self.labels) or sorted(p.values()) != list(self.labels):
                raise ValueError("group element does not permute the labels")
            for h in G.elements:
                gh = self.perms[G.mult[g][h]]
                if any(gh[x] != p[self.perms[h][x]] for x in self.labels):
                    raise ValueError("not an action")
        return True


def plain_window(n, offset=0):
    return LabelSet(range(offset, offset + n))


def build_window(G, m, offset=0):
    """m copies of G/H for every subgroup class (H); copy-major order, so window(m) is a prefix of window(m+1)."""
    sc = conjugacy_classes_of_subgroups(G)
    coset_sets = [coset_gset(G, H) for H in sc.representatives]
    perms = {g: {} for g in G.elements}
    copies = []
    nxt = offset
    for _ in range(m):
        for cid, X in enumerate(coset_sets):
            labels = list(range(nxt, nxt + X.size))
            nxt += X.size
            copies.append((cid, labels))
            for g in G.elements:
                for i in range(X.size):
                    perms[g][labels[i]] = labels[X.action[g][i]]
    return LabelSet(range(offset, nxt), G, perms, copies)


class InjectionMap:
    """An injective map of labels, with optional source/target label sets."""

    def __init__(self, mapping, source=None, target=None):
        self.map = dict(mapping)
        if len(set(self.map.values())) != len(self.map):
            raise ValueError("map is not injective")
        self.source, self.target = source, target

    def __call__(self, x):
        return self.map[x]

    def __getitem__(self, x):
        return self.map[x]

    def image(self, labels):
        return frozenset(self.map[x] for x in labels)

    def is_equivariant(self, alpha, src_window, tgt_window):
        """Check u(alpha(k) . x) = k . u(x) for a hom alpha: K -> G (src a G-window, tgt a K-window)."""
        for k in alpha.source.elements:
            for x, y in self.map.items():
                if self.map.get(src_window.act(alpha.image[k], x)) != tgt_window.act(k, y):
                    return False
        return True


def equivariant_embedding(K, points, act, window, avoid=(), variant=0):
    """A K-equivariant injection from a finite K-set into a K-window.

    ``act(k, p)`` gives the action on ``points``.  Each orbit goes onto a free
    copy of the matching G/H piece; ``variant=1`` uses the last free copies and
    twists each by a normalizer element, giving a second canonical choice.
    """
    sc = conjugacy_classes_of_subgroups(K)
    used = set(avoid)
    free = {}
    for cid, labels in window.copies:
        free.setdefault(cid, []).append(labels)
    out = {}
    seen = set()
    for p in sorted(points):
        if p in seen:
            continue
        orbit = {act(k, p) for k in K.elements}
        seen |= orbit
        stab = Subgroup(K, [k for k in K.elements if act(k, p) == p])
        cid = sc.class_of(stab)
        H = sc.rep(cid)
        kk = next(k for k in K.elements if tuple(sorted(K.conj(k, s) for s in stab)) == H.elements)
        base = act(kk, p)                     # stabilizer of base is exactly H
        cands = [lab for lab in free.get(cid, []) if not used.intersection(lab)]
        if not cands:
            raise WindowTooSmall(f"no free copy of {K.name}/{subgroup_class_names(K)[cid]} left in the window")
        labels = cands[-1] if variant else cands[0]
        X = coset_gset(K, H)
        start = 0
        if variant:
            extra = [n for n in normalizer(K, H) if n not in H]
            if extra:
                start = X.action[extra[-1]][0]
        for k in K.elements:
            out[act(k, base)] = labels[X.action[k][start]]
        used.update(labels)
    return InjectionMap(out)


# ------------------------------------------------------------------ interface

class MCategory:
    """Base class for categories with an action of label injections.

    Subclasses implement ``objects_on``, ``size``, ``support``, ``act``, ``circ``,
    ``compose``, ``identity``, ``inverse`` and ``hom``.  All shipped instances are
    groupoids, so ``hom`` lists isomorphisms.
    """

    name = "C"
    splittable = False

    def objects_on(self, labels, bound=None):
        raise NotImplementedError

    def size(self, x):
        raise NotImplementedError

    def support(self, x):
        raise NotImplementedError

    def act(self, u, x):
        raise NotImplementedError

    def circ(self, u, x):
        """The isomorphism u_o^x : x -> u_*(x)."""
        raise NotImplementedError

    def compose(self, g, f):
        raise NotImplementedError

    def identity(self, x):
        raise NotImplementedError

    def inverse(self, f):
        raise NotImplementedError

    def hom(self, x, y):
        raise NotImplementedError

    # derived structure

    def act_mor(self, u, f):
        """u_*(f) = u_o^y o f o (u_o^x)^-1."""
        return self.compose(self.circ(u, f.tgt), self.compose(f, self.inverse(self.circ(u, f.src))))

    def bracket(self, v, u, x):
        """[v, u]^x : u_*(x) -> v_*(x)."""
        return self.compose(self.circ(v, x), self.inverse(self.circ(u, x)))

    def support_bound(self, bound):
        """Largest support of an object of size <= bound, or None when unbounded."""
        return None

    def invariant(self, x, window):
        return (self.size(x),)

    def describe(self, x, window=None):
        return repr(x)

    def atom_key(self, x, window):
        """Sort key fixing the canonical atom order."""
        return (self.size(x), repr(self.invariant(x, window)))

    def find_equivariant_iso(self, x, rx, y, ry):
        """An iso f: x -> y with f o rx[g] = ry[g] o f for every key g, or None."""
        for f in self.hom(x, y):
            if all(self.compose(f, rx[g]) == self.compose(ry[g], f) for g in rx):
                return f
        return None

    def equivariant_isos(self, x, rx, y, ry):
        for f in self.hom(x, y):
            if all(self.compose(f, rx[g]) == self.compose(ry[g], f) for g in rx):
                yield f

    def is_iso(self, f):
        try:
            inv = self.inverse(f)
        except (ValueError, ArithmeticError):
            return False
        return self.compose(inv, f) == self.identity(f.src) and self.compose(f, inv) == self.identity(f.tgt)


class ParsumCat(MCategory):
    """An M-category with a sum defined on disjointly supported objects and morphisms."""

    def zero(self):
        raise NotImplementedError

    def add(self, x, y):
        raise NotImplementedError

    def add_mor(self, f, g):
        raise NotImplementedError

    def add_all(self, xs):
        out = self.zero()
        for x in xs:
            out = self.add(out, x)
        return out

    def split(self, x, window):
        """Disjointly supported fixed summands of x; splittable instances return indecomposable parts."""
        return [x]

    def fixed_candidates(self, window, bound):
        """Fixed objects on a G-window covering every class of size <= bound.

        Default: objects whose support is exactly a union of leading window copies.
        Any invariant support can be moved onto such a union by an equivariant
        relabeling, whose structure iso is itself fixed.
        """
        sb = self.support_bound(bound)
        by_class = {}
        for cid, labels in window.copies:
            by_class.setdefault(cid, []).append(labels)
        cids = sorted(by_class)
        ranges = [range(len(by_class[c]) + 1) for c in cids]
        for ks in itertools.product(*ranges):
            labels = [lab for c, k in zip(cids, ks) for copy in by_class[c][:k] for lab in copy]
            if sb is not None and len(labels) > sb:
                continue
            want = frozenset(labels)
            for x in self.objects_on(labels, bound):
                if self.support(x) == want and is_fixed(self, x, window):
                    yield x

    def atom_candidates(self, window, bound):
        for x in self.fixed_candidates(window, bound):
            if x != self.zero() and len(self.split(x, window)) == 1:
                yield x


# ------------------------------------------------------------------ fixed categories

def window_rho(C, x, window):
    """The G-action on a fixed object: g |-> (l^g)_o^x, over a generating set."""
    G = window.group
    return {g: C.circ(window.perms[g], x) for g in generators(G)}


def is_fixed(C, x, window):
    G = window.group
    return all(C.act(window.perms[g], x) == x for g in generators(G))


def is_fixed_mor(C, f, window):
    G = window.group
    return all(C.act_mor(window.perms[g], f) == f for g in generators(G))


def fixed_iso(C, x, y, window):
    """A G-fixed isomorphism x -> y between fixed objects of the same window, or None."""
    if x == y:
        return C.identity(x)
    return C.find_equivariant_iso(x, window_rho(C, x, window), y, window_rho(C, y, window))


class FixedCategoryWindow:
    """G-fixed objects and morphisms of C on a G-window (exhaustive; for small windows)."""

    def __init__(self, C, window, bound=None):
        self.C, self.window, self.group = C, window, window.group
        self.objects = [x for x in C.objects_on(window.labels, bound) if is_fixed(C, x, window)]

    def morphisms(self, x, y):
        return [f for f in self.C.hom(x, y) if is_fixed_mor(self.C, f, self.window)]

    def check_closed(self):
        C = self.C
        for x in self.objects:
            for y in self.objects:
                for f in self.morphisms(x, y):
                    for z in self.objects:
                        for g in self.morphisms(y, z):
                            if not is_fixed_mor(C, C.compose(g, f), self.window):
                                return False
        return True


def fixed_category(C, G, window, bound=None):
    if window.group is not G:
        raise ValueError("window is not a window for this group")
    return FixedCategoryWindow(C, window, bound)


# ------------------------------------------------------------------ component monoids

def translate(C, y, window, avoid, variant=0):
    """A copy of the fixed object y moved by an equivariant injection off the labels in ``avoid``."""
    G = window.group
    supp = C.support(y)
    if not supp:
        return y
    u = equivariant_embedding(G, supp, window.act, window, avoid=avoid, variant=variant)
    return C.act(u.map, y)


@dataclass
class Pi0Class:
    rep: object
    size: int
    inv: tuple
    vector: object = None


@dataclass
class Pi0Monoid:
    """Isomorphism classes of fixed objects up to a size bound, presented by atoms."""

    C: object
    group: object
    window: object
    bound: int
    mode: str
    classes: list
    atoms: list                       # indices into classes
    sums: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)

    @property
    def rank(self):
        return len(self.atoms)

    def atom_reps(self):
        return [self.classes[i].rep for i in self.atoms]

    def atom_names(self):
        return [self.C.describe(self.classes[i].rep, self.window) for i in self.atoms]

    def find_class(self, x, pool=None):
        C = self.C
        inv = C.invariant(x, self.window)
        for i in (pool if pool is not None else range(len(self.classes))):
            c = self.classes[i]
            if c.inv == inv and fixed_iso(C, x, c.rep, self.window) is not None:
                return i
        return None

    def classify(self, x):
        """Atom multiplicities of a fixed object on this window."""
        C = self.C
        v = np.zeros(self.rank, dtype=np.int64)
        parts = C.split(x, self.window) if self.mode == "split" else [x]
        for p in parts:
            if C.size(p) > self.bound:
                raise WindowTooSmall(f"object of size {C.size(p)} exceeds the bound {self.bound}; raise the bound")
            i = self.find_class(p, self.atoms if self.mode == "split" else None)
            if i is None:
                raise WindowTooSmall(f"object {C.describe(p, self.window)} matches no enumerated class; "
                                     "enlarge the window or the bound")
            v += self.classes[i].vector
        return v

    def add_classes(self, v, w):
        return np.asarray(v) + np.asarray(w)

    def same_atoms(self, other):
        """Atom bijection self -> other (reps compared in the larger window), or None."""
        big = self if len(self.window) >= len(other.window) else other
        perm = []
        for i in self.atoms:
            x = self.classes[i].rep
            hit = None
            for j, a in enumerate(other.atoms):
                y = other.classes[a].rep
                if self.C.invariant(x, big.window) == other.C.invariant(y, big.window) and \
                        fixed_iso(self.C, x, y, big.window) is not None:
                    hit = j
                    break
            if hit is None:
                return None
            perm.append(hit)
        return perm if sorted(perm) == list(range(other.rank)) else None


def pi0_with_addition(C, G, multiplicity, bound, mode=None, window=None):
    """Component monoid of F^G C on ``build_window(G, multiplicity)`` up to ``bound``.

    ``mode='exhaustive'`` enumerates all classes and closes them under sums;
    ``mode='split'`` (default for splittable instances) uses the instance's
    support splitting and only enumerates indecomposable candidates.
    """
    U = window or build_window(G, multiplicity)
    mode = mode or ("split" if C.splittable else "exhaustive")
    classes = []
    M = Pi0Monoid(C, G, U, bound, mode, classes, [])

    def add_class(x, prefer_small=False):
        i = M.find_class(x)
        if i is None:
            classes.append(Pi0Class(x, C.size(x), C.invariant(x, U)))
            i = len(classes) - 1
        elif prefer_small and len(C.support(x)) < len(C.support(classes[i].rep)):
            classes[i].rep = x      # smaller supports leave room for disjoint translates
        return i

    if mode == "split":
        for x in C.atom_candidates(U, bound):
            if C.size(x) <= bound:
                add_class(x)
        order = sorted(range(len(classes)), key=lambda i: (C.atom_key(classes[i].rep, U), i))
        classes[:] = [classes[i] for i in order]
        M.atoms = list(range(len(classes)))
        for k, c in enumerate(classes):
            c.vector = np.eye(len(classes), dtype=np.int64)[k]
        _check_split_sums(M)
        return M

    zero = C.zero()
    add_class(zero)
    for x in C.fixed_candidates(U, bound):
        if C.size(x) <= bound:
            add_class(x, prefer_small=True)
    # close under sums of pairs within the bound
    done = set()
    changed = True
    while changed:
        changed = False
        n = len(classes)
        for i in range(1, n):
            for j in range(i, n):
                if (i, j) in done or classes[i].size + classes[j].size > bound:
                    continue
                done.add((i, j))
                x = classes[i].rep
                y = translate(C, classes[j].rep, U, C.support(x))
                s = C.add(x, y)
                k = add_class(s)
                if k >= n:
                    changed = True
                M.sums[(i, j)] = k
                # second disjointification: move the other summand
                y2 = translate(C, classes[i].rep, U, C.support(classes[j].rep), variant=1)
                k2 = M.find_class(C.add(classes[j].rep, y2))
                M.checks.setdefault("sum well-defined", []).append(k2 == k)
    zero_i = 0
    nonzero = [i for i in range(len(classes)) if i != zero_i]
    hit = set(M.sums.values())
    atoms = [i for i in nonzero if i not in hit]
    atoms.sort(key=lambda i: (C.atom_key(classes[i].rep, U), i))
    M.atoms = atoms
    # cancellativity among enumerated sums
    seen = {}
    for (i, j), k in M.sums.items():
        for a, c in ((i, j), (j, i)):
            key = (c, k)
            if key in seen and seen[key] != a:
                raise NonCancellative(f"classes {seen[key]} and {a} become equal after adding class {c}")
            seen[key] = a
    # unique decomposition into atoms
    for (i, j), k in M.sums.items():
        if k == zero_i:
            raise NonUniqueDecomposition(
                f"{C.describe(classes[i].rep, U)} and {C.describe(classes[j].rep, U)} add to zero; pi_0 is not free")
    idx = {a: n for n, a in enumerate(atoms)}
    decomp = {zero_i: {tuple([0] * len(atoms))}}
    pending = sorted(nonzero, key=lambda i: classes[i].size)
    while pending:
        left = []
        for i in pending:
            parts = [(a, b) for (a, b), k in M.sums.items() if k == i]
            if any(a not in decomp or b not in decomp for a, b in parts):
                left.append(i)
                continue
            opts = set()
            if i in idx:
                v = [0] * len(atoms)
                v[idx[i]] = 1
                opts.add(tuple(v))
            for a, b in parts:
                for va in decomp[a]:
                    for vb in decomp[b]:
                        opts.add(tuple(p + q for p, q in zip(va, vb)))
            if len(opts) != 1:
                raise NonUniqueDecomposition(
                    f"class {C.describe(classes[i].rep, U)} has atom decompositions {sorted(opts)}")
            decomp[i] = opts
        if len(left) == len(pending):
            raise NonUniqueDecomposition("sums form a cycle among nonzero classes; pi_0 is not free")
        pending = left
    for i, c in enumerate(classes):
        c.vector = np.array(next(iter(decomp[i])), dtype=np.int64)
    return M


def _check_split_sums(M):
    C, U = M.C, M.window
    oks = []
    for a in M.atoms:
        for b in M.atoms:
            if M.classes[a].size + M.classes[b].size > M.bound:
                continue
            x = M.classes[a].rep
            try:
                y = translate(C, M.classes[b].rep, U, C.support(x))
            except WindowTooSmall:
                continue
            v = M.classify(C.add(x, y))
            oks.append(bool((v == M.classes[a].vector + M.classes[b].vector).all()))
    M.checks["sum well-defined"] = oks


# ------------------------------------------------------------------ restriction and transfer

def restriction_pi0(C, alpha, MG, MK, x, variant=0):
    """Restrict the fixed object x (on MG's window) along alpha: K -> G into MK's window; returns the object."""
    UG, UK = MG.window, MK.window
    supp = C.support(x)
    if not supp:
        return x
    lam = equivariant_embedding(alpha.source, supp, lambda k, p: UG.act(alpha.image[k], p), UK, variant=variant)
    return C.act(lam.map, x)


def transfer_biset(C, S, MG, MK, x, variant=0, shift_reps=False):
    """The transfer along a right-free K-G-biset S: sum over S/G of psi^s_*(x), as an object on MK's window."""
    if not S.is_right_free():
        from .errors import NotRightFree
        raise NotRightFree("transfer needs a right-free biset")
    K, G = S.K, S.G
    UG, UK = MG.window, MK.window
    supp = sorted(C.support(x))
    # G-orbit representatives of S (least points), and for each point its (rep index, g) with s = rep.g
    reps, where = [], {}
    for s in range(S.size):
        if s in where:
            continue
        i = len(reps)
        reps.append(s)
        for g in G.elements:
            where[S.right[g][s]] = (i, g)
    if shift_reps:
        # use s_i.g_i as representatives, g_i the last group element
        gl = G.order - 1
        reps = [S.right[gl][s] for s in reps]
        where = {}
        for i, s in enumerate(reps):
            for g in G.elements:
                where[S.right[g][s]] = (i, g)
    if not supp:
        return C.add_all([x for _ in reps])

    def act(k, p):
        i, u = p
        j, g = where[S.left[k][reps[i]]]
        return (j, UG.act(g, u))

    points = [(i, u) for i in range(len(reps)) for u in supp]
    psi = equivariant_embedding(K, points, act, UK, variant=variant)
    parts = [C.act({u: psi[(i, u)] for u in supp}, x) for i in range(len(reps))]
    return C.add_all(parts)


# ------------------------------------------------------------------ Swan K-theory

@dataclass
class SwanData:
    monoids: dict
    choice_checks: list = field(default_factory=list)

    def choice_agreement(self):
        n = len(self.choice_checks)
        return sum(self.choice_checks), n


def pi0_functor(C, window, bound, multiplicity=None, mode=None, check_choices=True, name=None):
    """The pre-global functor G |-> pi_0(F^G C) on a window of groups."""
    if not isinstance(window, GroupWindow):
        window = GroupWindow(window)
    m = multiplicity if multiplicity is not None else bound
    monoids = {G.name: pi0_with_addition(C, G, m if not callable(m) else m(G), bound, mode=mode) for G in window}
    data = SwanData(monoids)
    atoms = {G.name: monoids[G.name].atom_names() for G in window}
    cancellative = True

    def ev(G, K, t):
        MG, MK = monoids[G.name], monoids[K.name]
        S = bs.transitive_biset(K, G, t)
        cols = []
        for x in MG.atom_reps():
            v = MK.classify(transfer_biset(C, S, MG, MK, x))
            if check_choices:
                v2 = MK.classify(transfer_biset(C, S, MG, MK, x, variant=1, shift_reps=True))
                data.choice_checks.append(bool((v == v2).all()))
            cols.append(v)
        return np.array(cols, dtype=np.int64).T if cols else np.zeros((MK.rank, 0), dtype=np.int64)

    P = PreGlobalFunctor(window, atoms, ev, name or f"pi0({C.name})", cancellative=cancellative)
    P.swan_data = data
    return P


def swan_k(C, window, bound, multiplicity=None, mode=None, check_choices=True, name=None):
    P = pi0_functor(C, window, bound, multiplicity, mode, check_choices, name)
    K = group_complete(P)
    K.name = name or f"K({C.name})"
    K.swan_data = P.swan_data
    K._ops = P._ops  # share the cache so later evaluations stay consistent
    return K


def restriction_choice_check(C, alpha, MG, MK):
    """Classes of restricted atoms under two embeddings lambda, lambda'; returns list of agreements."""
    out = []
    for x in MG.atom_reps():
        a = MK.classify(restriction_pi0(C, alpha, MG, MK, x, variant=0))
        b = MK.classify(restriction_pi0(C, alpha, MG, MK, x, variant=1))
        out.append(bool((a == b).all()))
    return out


def stabilization_check(C, window, bound, multiplicity, mode=None):
    """Compare the functor at multiplicity m and m+1: same atoms and same matrices."""
    F1 = swan_k(C, window, bound, multiplicity, mode, check_choices=False)
    F2 = swan_k(C, window, bound, multiplicity + 1, mode, check_choices=False)
    rep = Report(f"stabilization[{C.name}, m={multiplicity}]")
    matching = {}
    for G in F1.window:
        perm = F1.swan_data.monoids[G.name].same_atoms(F2.swan_data.monoids[G.name])
        rep.add("atoms", G.name, perm is not None)
        matching[G.name] = perm
    if all(p is not None for p in matching.values()):
        iso = compare_functors(F1, F2, matching)
        rep.add("matrices", "all terms", iso.isomorphic, iso.obstruction)
    return rep


# ------------------------------------------------------------------ axioms

def _random_injection(rng, labels, fresh_from, extra=4):
    pool = list(labels) + list(range(fresh_from, fresh_from + extra))
    img = rng.sample(pool, len(labels))
    return dict(zip(labels, img))


def verify_mcat_axioms(C, labels, bound=None, samples=50, seed=0):
    """Sampled checks of the support and sum axioms S1-S6 and the basic relation."""
    rng = random.Random(seed)
    labels = list(labels)
    fresh = (max(labels) + 1) if labels else 0
    objs = list(C.objects_on(labels, bound))
    rep = Report(f"m-category axioms[{C.name}]")
    if not objs:
        rep.add("objects", "window", False, "no objects")
        return rep
    pick = [rng.choice(objs) for _ in range(samples)]
    for x in pick:
        supp = C.support(x)
        rep.add("support within window", repr(x)[:60], set(supp) <= set(labels))
        u = _random_injection(rng, labels, fresh)
        v = dict(u)
        # v agrees with u on the support and differs elsewhere
        off = [l for l in labels if l not in supp]
        used = set(v[l] for l in supp)
        spare = [l for l in range(fresh + 10, fresh + 10 + len(off))]
        for l, s in zip(off, spare):
            v[l] = s
        rep.add("S1", repr(x)[:60], C.act(u, x) == C.act(v, x) and C.circ(u, x) == C.circ(v, x))
        rep.add("S2", repr(x)[:60], C.support(C.act(u, x)) == frozenset(u[l] for l in supp))
        w = _random_injection(rng, sorted(set(u.values())), fresh + 40)
        wu = {l: w[u[l]] for l in labels}
        lhs = C.compose(C.circ(w, C.act(u, x)), C.circ(u, x))
        rep.add("basic relation", repr(x)[:60], lhs == C.circ(wu, x))
        idu = {l: l for l in labels}
        rep.add("identity acts trivially", repr(x)[:60], C.act(idu, x) == x and C.circ(idu, x) == C.identity(x))
    # morphisms
    for _ in range(samples):
        x = rng.choice(objs)
        ys = [y for y in objs if C.size(y) == C.size(x)]
        y = rng.choice(ys)
        homs = list(itertools.islice(C.hom(x, y), 50))
        if not homs:
            continue
        f = rng.choice(homs)
        u = _random_injection(rng, labels, fresh)
        v = dict(u)
        supp = C.support(x) | C.support(y)
        for n, l in enumerate(l for l in labels if l not in supp):
            v[l] = fresh + 100 + n
        rep.add("S3", "morphism", C.act_mor(u, f) == C.act_mor(v, f))
    # sums
    rep.add("S6", "zero", C.support(C.zero()) == frozenset())
    parts_cache = {}
    for _ in range(samples):
        # three objects on a random partition of the window, hence disjointly supported
        cut = [rng.randrange(3) for _ in labels]
        xs = []
        for k in range(3):
            part = tuple(l for l, c in zip(labels, cut) if c == k)
            if part not in parts_cache:
                parts_cache[part] = list(C.objects_on(part, bound))
            xs.append(rng.choice(parts_cache[part]))
        x, y, z = xs
        xy = C.add(x, y)
        ok = (xy == C.add(y, x) and C.add(xy, z) == C.add(x, C.add(y, z))
              and C.add(x, C.zero()) == x and C.add(C.zero(), x) == x)
        rep.add("S4", "sum", ok)
        rep.add("S5", "sum", C.support(xy) <= C.support(x) | C.support(y))
        # the sum commutes with the injection action and is functorial
        u = _random_injection(rng, labels, fresh)
        rep.add("sum equivariant", "sum", C.act(u, xy) == C.add(C.act(u, x), C.act(u, y))
                and C.circ(u, xy) == C.add_mor(C.circ(u, x), C.circ(u, y)))
        rep.add("sum of identities", "sum", C.add_mor(C.identity(x), C.identity(y)) == C.identity(xy))
        fx = rng.choice(list(itertools.islice(C.hom(x, x), 24)))
        fy = rng.choice(list(itertools.islice(C.hom(y, y), 24)))
        gx = rng.choice(list(itertools.islice(C.hom(x, x), 24)))
        gy = rng.choice(list(itertools.islice(C.hom(y, y), 24)))
        rep.add("sum functorial", "sum", C.compose(C.add_mor(gx, gy), C.add_mor(fx, fy))
                == C.add_mor(C.compose(gx, fx), C.compose(gy, fy)))
    return rep


# ------------------------------------------------------------------ gamma construction

def gamma_value(C, n, labels, bound=None):
    """Objects of gamma(C)(n+): n-tuples with pairwise disjoint supports."""
    if n == 0:
        return [()]
    objs = list(C.objects_on(labels, bound))
    out = []

    def rec(prefix, used):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for x in objs:
            s = C.support(x)
            if not (s & used):
                rec(prefix + [x], used | s)

    rec([], frozenset())
    return out


def gamma_map(C, lam, m, n, xs):
    """gamma(C)(lam) for a based map lam: {1..m} -> {0..n}; works on objects and on morphism tuples."""
    out = []
    for j in range(1, n + 1):
        parts = [xs[i - 1] for i in range(1, m + 1) if lam[i] == j]
        if xs and isinstance(xs[0], Mor):
            acc = None
            for f in parts:
                acc = f if acc is None else C.add_mor(acc, f)
            out.append(acc if acc is not None else C.identity(C.zero()))
        else:
            out.append(C.add_all(parts))
    return tuple(out)


def check_gamma_functoriality(C, labels, m, n, k, bound=None, samples=30, seed=0):
    rng = random.Random(seed)
    rep = Report(f"gamma functoriality[{C.name}]")
    tuples = gamma_value(C, m, labels, bound)
    for _ in range(samples):
        lam = {i: rng.randrange(n + 1) for i in range(1, m + 1)}
        kap = {j: rng.randrange(k + 1) for j in range(1, n + 1)}
        comp = {i: (kap[lam[i]] if lam[i] else 0) for i in range(1, m + 1)}
        xs = rng.choice(tuples)
        a = gamma_map(C, kap, n, k, gamma_map(C, lam, m, n, xs))
        b = gamma_map(C, comp, m, k, xs)
        rep.add("composition", f"{lam} {kap}", a == b)
    return rep


# ------------------------------------------------------------------ saturation

def g_actions(C, G, y):
    """All homomorphisms G -> Aut(y), as dicts on a generating set."""
    gens = generators(G)
    auts = [f for f in C.hom(y, y)]
    ident = C.identity(y)
    out = []
    for imgs in itertools.product(auts, repeat=len(gens)):
        table = {G.identity: ident}
        frontier = [G.identity]
        ok = True
        while frontier and ok:
            nxt = []
            for g in frontier:
                for s, a in zip(gens, imgs):
                    h = G.mult[g][s]
                    val = C.compose(table[g], a)
                    if h in table:
                        if table[h] != val:
                            ok = False
                            break
                    else:
                        table[h] = val
                        nxt.append(h)
                if not ok:
                    break
            frontier = nxt
        if ok:
            out.append({s: table[s] for s in gens})
    return out


def _mor_text(C, f):
    return C.describe_mor(f) if hasattr(C, "describe_mor") else repr(f.data)


@dataclass
class SaturationReport:
    category: str
    group: str
    bound: int
    g_object_classes: int
    fixed_classes: int
    missing: list
    saturated: bool

    def to_json(self):
        return dict(self.__dict__)


def saturation_probe(C, G, multiplicity, bound, plain_labels=None):
    """Is every G-object of size <= bound isomorphic to lambda_flat of a fixed object?"""
    M = pi0_with_addition(C, G, multiplicity, bound, mode="exhaustive")
    U = M.window
    fixed = [(c.rep, window_rho(C, c.rep, U)) for c in M.classes]
    n = plain_labels if plain_labels is not None else bound
    Up = plain_window(n, offset=len(U.labels) + 1000)
    # iso classes of plain objects
    plain = []
    for y in C.objects_on(Up.labels, bound):
        if C.size(y) > bound:
            continue
        if not any(C.size(z) == C.size(y) and next(iter(C.hom(y, z)), None) is not None for z in plain):
            plain.append(y)
    gobjs = []
    for y in plain:
        for rho in g_actions(C, G, y):
            if not any(z is y and C.find_equivariant_iso(y, rho, z, r2) is not None for z, r2 in gobjs):
                gobjs.append((y, rho))
    missing = []
    for y, rho in gobjs:
        if not any(C.size(x) == C.size(y) and C.find_equivariant_iso(x, rx, y, rho) is not None for x, rx in fixed):
            acts = ", ".join(f"{g}: {_mor_text(C, r)}" for g, r in rho.items())
            missing.append(f"{C.describe(y)} with action {{{acts}}}")
    return SaturationReport(C.name, G.name, bound, len(gobjs), len(M.classes), missing, not missing)


# ------------------------------------------------------------------ derived symmetric monoidal structure

def _inj(f, labels):
    return {l: f(l) for l in labels}


class DerivedMonoidal:
    """The monoidal structure x (x) y = phi1_*(x) + phi2_*(y) built from an injection pair."""

    def __init__(self, C, phi1=lambda j: 2 * j, phi2=lambda j: 2 * j + 1, universe=256):
        self.C = C
        self.universe = range(universe)
        self.p1 = _inj(phi1, self.universe)
        self.p2 = _inj(phi2, self.universe)
        if set(self.p1.values()) & set(self.p2.values()):
            raise ImagesOverlap("phi1 and phi2 must have disjoint images")

    def comp(self, a, b):
        return {l: a[b[l]] for l in self.universe if b[l] in a}

    def tensor(self, x, y):
        return self.C.add(self.C.act(self.p1, x), self.C.act(self.p2, y))

    def tensor_mor(self, f, g):
        return self.C.add_mor(self.C.act_mor(self.p1, f), self.C.act_mor(self.p2, g))

    def bracket(self, psis, phis, xs):
        """[psi, phi]^{x_1..x_n}: sum phi^i_* x_i -> sum psi^i_* x_i."""
        C = self.C
        acc = None
        for ps, ph, x in zip(psis, phis, xs):
            f = C.bracket(ps, ph, x)
            acc = f if acc is None else C.add_mor(acc, f)
        return acc

    def alpha(self, x, y, z):
        p1, p2 = self.p1, self.p2
        left = [self.comp(p1, p1), self.comp(p1, p2), p2]        # (x y) z
        right = [p1, self.comp(p2, p1), self.comp(p2, p2)]       # x (y z)
        return self.bracket(right, left, [x, y, z])

    def tau(self, x, y):
        return self.bracket([self.p2, self.p1], [self.p1, self.p2], [x, y])

    def right_unit(self, x):
        ident = {l: l for l in self.universe}
        return self.C.bracket(ident, self.p1, x)

    def left_unit(self, x):
        ident = {l: l for l in self.universe}
        return self.C.bracket(ident, self.p2, x)

    def sharp(self, x, y):
        """phi_sharp: x (x) y -> x + y for disjointly supported x, y."""
        ident = {l: l for l in self.universe}
        return self.C.add_mor(self.C.bracket(ident, self.p1, x), self.C.bracket(ident, self.p2, y))


def verify_derived_monoidal(C, labels, bound=None, other=None, max_tuples=4000, seed=0):
    """Pentagon, hexagon, symmetry, unit and comparison checks for the derived monoidal structure."""
    rng = random.Random(seed)
    T = DerivedMonoidal(C)
    S = other or DerivedMonoidal(C, lambda j: 3 * j + 1, lambda j: 3 * j)
    objs = list(C.objects_on(list(labels), bound))
    rep = Report(f"derived monoidal[{C.name}]")
    c, comp = C, C.compose

    def tuples(k):
        allt = list(itertools.product(objs, repeat=k))
        if len(allt) > max_tuples:
            rep.add("coverage", f"{k}-tuples", True, f"sampled {max_tuples} of {len(allt)}")
            return rng.sample(allt, max_tuples)
        return allt

    for x, y in tuples(2):
        tt = comp(T.tau(y, x), T.tau(x, y))
        rep.add("symmetry", "", tt == c.identity(T.tensor(x, y)))
        mu_xy = S_to_T(T, S, x, y)
        rep.add("comparison symmetric", "",
                comp(mu_xy.__class__ and S_to_T(T, S, y, x), S.tau(x, y)) == comp(T.tau(x, y), mu_xy))
        rep.add("comparison unit", "", comp(T.right_unit(x), S_to_T(T, S, x, C.zero())) == S.right_unit(x))
        if not (C.support(x) & C.support(y)):
            sh = T.sharp(x, y)
            rep.add("sharp is iso", "", C.is_iso(sh) and sh.tgt == C.add(x, y))
            rep.add("sharp symmetric", "", comp(T.sharp(y, x), T.tau(x, y)) == sh)
    for x, y, z in tuples(3):
        a = T.alpha(x, y, z)
        lhs = comp(T.alpha(y, z, x), comp(T.tau(x, T.tensor(y, z)), a))
        rhs = comp(T.tensor_mor(c.identity(y), T.tau(x, z)),
                   comp(T.alpha(y, x, z), T.tensor_mor(T.tau(x, y), c.identity(z))))
        rep.add("hexagon", "", lhs == rhs)
        if y == C.zero():
            tri = comp(T.tensor_mor(c.identity(x), T.left_unit(z)), T.alpha(x, y, z))
            rep.add("unit triangle", "", tri == T.tensor_mor(T.right_unit(x), c.identity(z)))
        # comparison compatible with associators
        lhs = comp(S_to_T(T, S, x, T.tensor(y, z)),
                   comp(S.tensor_mor(c.identity(x), S_to_T(T, S, y, z)), S.alpha(x, y, z)))
        rhs = comp(T.alpha(x, y, z),
                   comp(S_to_T(T, S, T.tensor(x, y), z), S.tensor_mor(S_to_T(T, S, x, y), c.identity(z))))
        rep.add("comparison monoidal", "", lhs == rhs)
        sx, sy, sz = C.support(x), C.support(y), C.support(z)
        if not (sx & sy or sx & sz or sy & sz):
            lhs = comp(T.sharp(x, C.add(y, z)), T.tensor_mor(c.identity(x), T.sharp(y, z)))
            rhs = comp(T.sharp(C.add(x, y), z), comp(T.tensor_mor(T.sharp(x, y), c.identity(z)),
                                                     c.inverse(T.alpha(x, y, z))))
            rep.add("sharp associative", "", lhs == rhs)
    for x, y, z, w in tuples(4):
        lhs = comp(T.alpha(x, y, T.tensor(z, w)), T.alpha(T.tensor(x, y), z, w))
        rhs = comp(T.tensor_mor(c.identity(x), T.alpha(y, z, w)),
                   comp(T.alpha(x, T.tensor(y, z), w), T.tensor_mor(T.alpha(x, y, z), c.identity(w))))
        rep.add("pentagon", "", lhs == rhs)
    return rep


def S_to_T(T, S, x, y):
    """The comparison x (x)_S y -> x (x)_T y, i.e. [phi_T, phi_S]^{x,y}."""
    return T.bracket([T.p1, T.p2], [S.p1, S.p2], [x, y])
