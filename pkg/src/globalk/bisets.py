"""Right-free bisets and the effective Burnside category.

A K-G-biset stores ``left[k][x] = k.x`` and ``right[g][x] = x.g``.  Transitive
right-free bisets are classified by pairs (L <= K, alpha: L -> G), stored as a
``Term`` whose ``alpha`` tuple lists alpha(l) for l in the sorted elements of L.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import GroupMismatch, NotRightFree
from .groups import (GroupHom, Subgroup, all_homs, conjugacy_classes_of_subgroups,
                     direct_product, left_coset_reps)


@dataclass(frozen=True, order=True)
class Term:
    """The transitive biset K x_{L,alpha} G, in canonical form."""

    L: tuple
    alpha: tuple

    def alpha_map(self):
        return dict(zip(self.L, self.alpha))


class Biset:
    def __init__(self, K, G, left, right, check=True):
        self.K, self.G = K, G
        self.left = tuple(tuple(r) for r in left)
        self.right = tuple(tuple(r) for r in right)
        self.size = len(self.left[0]) if self.left else 0
        if check:
            self.validate()

    def __repr__(self):
        return f"Biset({self.K.name}-{self.G.name}, size={self.size})"

    def validate(self):
        K, G, n = self.K, self.G, self.size
        L, R = self.left, self.right
        for x in range(n):
            if L[K.identity][x] != x or R[G.identity][x] != x:
                raise ValueError("identity must act trivially")
        for a in K.elements:
            for b in K.elements:
                ab = K.mult[a][b]
                if any(L[ab][x] != L[a][L[b][x]] for x in range(n)):
                    raise ValueError("left action not compatible with multiplication")
        for a in G.elements:
            for b in G.elements:
                ab = G.mult[a][b]
                if any(R[ab][x] != R[b][R[a][x]] for x in range(n)):
                    raise ValueError("right action not compatible with multiplication")
        for k in K.elements:
            for g in G.elements:
                if any(L[k][R[g][x]] != R[g][L[k][x]] for x in range(n)):
                    raise ValueError("left and right actions do not commute")

    def is_right_free(self):
        G = self.G
        return all(self.right[g][x] != x for x in range(self.size) for g in G.elements if g != G.identity)

    def as_gset(self):
        """The same set as a (K x G)-set via (k, g).x = k x g^-1."""
        from .gsets import GSet
        P = product_group(self.K, self.G)
        nG = self.G.order
        rows = []
        for p in P.elements:
            k, g = divmod(p, nG)
            gi = self.G.inv[g]
            rows.append([self.left[k][self.right[gi][x]] for x in range(self.size)])
        return GSet(P, rows, check=False)


def product_group(K, G):
    key = ("prod", id(G))
    if key not in K._cache:
        K._cache[key] = direct_product(K, G)
    return K._cache[key]


# ---------------------------------------------------------------- canonical terms

def canonical_term(K, G, L, alpha):
    """Canonical representative of (L, alpha) under K-conjugation of L and G-conjugation of alpha."""
    key = ("canon", id(G), tuple(L), tuple(alpha))
    cache = K._cache
    if key in cache:
        return cache[key]
    L = tuple(sorted(L))
    amap = dict(zip(sorted(L), alpha)) if not isinstance(alpha, dict) else alpha
    sc = conjugacy_classes_of_subgroups(K)
    rep = sc.rep(sc.class_of(Subgroup(K, L)))
    best = None
    for k in K.elements:
        if tuple(sorted(K.conj(k, l) for l in L)) != rep.elements:
            continue
        ki = K.inv[k]
        base = [amap[K.conj(ki, l)] for l in rep.elements]
        for g in G.elements:
            cand = tuple(G.conj(g, y) for y in base)
            if best is None or cand < best:
                best = cand
    t = Term(rep.elements, best)
    cache[key] = t
    return t


def terms(K, G):
    """All canonical transitive right-free K-G-bisets, sorted."""
    key = ("terms", id(G))
    if key not in K._cache:
        sc = conjugacy_classes_of_subgroups(K)
        found = set()
        for L in sc.representatives:
            Lg, inc = L.as_group()
            for f in all_homs(Lg, G):
                amap = {inc.image[i]: f.image[i] for i in Lg.elements}
                found.add(canonical_term(K, G, L.elements, [amap[l] for l in L.elements]))
        K._cache[key] = sorted(found, key=lambda t: (sc.class_of(Subgroup(K, t.L)), t.alpha))
    return K._cache[key]


def term_sort_key(K, t):
    sc = conjugacy_classes_of_subgroups(K)
    return (sc.class_of(Subgroup(K, t.L)), t.alpha)


def graph_subgroup_classes(K, G):
    """K x G conjugacy classes of subgroups meeting 1 x G trivially."""
    P = product_group(K, G)
    sc = conjugacy_classes_of_subgroups(P)
    nG = G.order
    return [D for D in sc.representatives if all(d // nG != K.identity or d % nG == G.identity for d in D)]


# ---------------------------------------------------------------- classes

class BisetClass:
    """A right-free biset up to isomorphism: a multiset of canonical terms."""

    def __init__(self, K, G, terms=None):
        self.K, self.G = K, G
        self.terms = Counter({t: n for t, n in (terms or {}).items() if n})

    def __eq__(self, other):
        return (isinstance(other, BisetClass) and other.K is self.K and other.G is self.G
                and self.terms == other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if other.K is not self.K or other.G is not self.G:
            raise GroupMismatch("cannot add bisets between different groups")
        return BisetClass(self.K, self.G, self.terms + other.terms)

    def __repr__(self):
        body = " + ".join(f"{n}*{t}" for t, n in sorted(self.terms.items()))
        return f"BisetClass({self.K.name}<-{self.G.name}: {body or '0'})"

    def to_json(self):
        return {"left": self.K.name, "right": self.G.name,
                "terms": [{"L": list(t.L), "alpha": list(t.alpha), "n": n} for t, n in sorted(self.terms.items())]}

    @classmethod
    def single(cls, K, G, t):
        return cls(K, G, {t: 1})


def classify(S):
    K, G = S.K, S.G
    if not S.is_right_free():
        raise NotRightFree("right action has a nontrivial stabilizer")
    seen = set()
    out = Counter()
    L_, R_ = S.left, S.right
    for x in range(S.size):
        if x in seen:
            continue
        orbit = {R_[g][L_[k][x]] for k in K.elements for g in G.elements}
        seen |= orbit
        amap = {}
        for k in K.elements:
            kx = L_[k][x]
            for g in G.elements:
                if R_[g][x] == kx:
                    amap[k] = g
                    break
        Ls = sorted(amap)
        out[canonical_term(K, G, Ls, [amap[l] for l in Ls])] += 1
    return BisetClass(K, G, out)


# ---------------------------------------------------------------- constructions

def transitive_biset(K, G, t):
    """K x_{L,alpha} G with points (i, g) for the i-th coset rep of K/L."""
    L = Subgroup(K, t.L)
    amap = t.alpha_map()
    reps = left_coset_reps(K, L)
    where = {}
    for i, r in enumerate(reps):
        for l in L:
            where[K.mult[r][l]] = (i, l)
    nG = G.order
    n = len(reps) * nG
    left = []
    for k in K.elements:
        row = [0] * n
        for i, r in enumerate(reps):
            j, l = where[K.mult[k][r]]
            a = amap[l]
            for g in G.elements:
                row[i * nG + g] = j * nG + G.mult[a][g]
        left.append(row)
    right = [[(x // nG) * nG + G.mult[x % nG][h] for x in range(n)] for h in G.elements]
    return Biset(K, G, left, right, check=False)


def identity_biset(G):
    return restriction_biset(GroupHom(G, G, range(G.order)))


def restriction_biset(alpha):
    """_alpha G_G for alpha: K -> G; the biset realizing alpha^*."""
    K, G = alpha.source, alpha.target
    left = [[G.mult[alpha.image[k]][x] for x in G.elements] for k in K.elements]
    right = [[G.mult[x][h] for x in G.elements] for h in G.elements]
    return Biset(K, G, left, right, check=False)


def transfer_biset(iota):
    """_G G_H for an injective iota: H -> G; the biset realizing the transfer."""
    H, G = iota.source, iota.target
    left = [[G.mult[g][x] for x in G.elements] for g in G.elements]
    right = [[G.mult[x][iota.image[h]] for x in G.elements] for h in H.elements]
    return Biset(G, H, left, right, check=False)


def disjoint_union(S, T):
    if S.K is not T.K or S.G is not T.G:
        raise GroupMismatch("bisets over different groups")
    n = S.size
    left = [list(S.left[k]) + [n + y for y in T.left[k]] for k in S.K.elements]
    right = [list(S.right[g]) + [n + y for y in T.right[g]] for g in S.G.elements]
    return Biset(S.K, S.G, left, right, check=False)


def balanced_product(T, S):
    """T x_K S for an L-K-biset T and a K-G-biset S."""
    if T.G is not S.K:
        raise GroupMismatch(f"middle groups differ: {T.G.name} vs {S.K.name}")
    K = S.K
    nS = S.size
    index = {}
    reps = []
    for t in range(T.size):
        for s in range(nS):
            if (t, s) in index:
                continue
            c = len(reps)
            reps.append((t, s))
            for k in K.elements:
                index[(T.right[K.inv[k]][t], S.left[k][s])] = c
    Lg, G = T.K, S.G
    left = [[index[(T.left[l][t], s)] for (t, s) in reps] for l in Lg.elements]
    right = [[index[(t, S.right[g][s])] for (t, s) in reps] for g in G.elements]
    return Biset(Lg, G, left, right, check=False)


def compose_terms(L_, K, G, t2, t1):
    """Class of (L_ x_{t2} K) o (K x_{t1} G), cached on L_."""
    key = ("compose", id(K), id(G), t2, t1)
    if key not in L_._cache:
        L_._cache[key] = classify(balanced_product(transitive_biset(L_, K, t2), transitive_biset(K, G, t1)))
    return L_._cache[key]


def compose_classes(T, S):
    """Composition in the effective Burnside category: T o S."""
    if T.G is not S.K:
        raise GroupMismatch("middle groups differ")
    out = Counter()
    for t2, n2 in T.terms.items():
        for t1, n1 in S.terms.items():
            for t, n in compose_terms(T.K, T.G, S.G, t2, t1).terms.items():
                out[t] += n * n1 * n2
    return BisetClass(T.K, S.G, out)


def to_tr_res_word(K, G, t):
    """The word tr_L^K o alpha^* realizing the term, as (L, alpha, text)."""
    L = Subgroup(K, t.L)
    Lg, inc = L.as_group()
    amap = t.alpha_map()
    alpha = GroupHom(Lg, G, [amap[inc.image[i]] for i in Lg.elements])
    txt = f"tr_{{{len(L)}}}^{{{K.name}}} o alpha*[{','.join(map(str, t.alpha))}]"
    if len(L) == K.order:
        txt = f"alpha*[{','.join(map(str, t.alpha))}]"
    return L, alpha, txt
