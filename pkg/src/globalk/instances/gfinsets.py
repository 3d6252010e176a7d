"""Finite sets with an action of a fixed structure group; injections ignore that action."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .. import bisets as bs
from ..caps import caps
from ..errors import OrderCapExceeded
from ..groups import Subgroup, conjugacy_classes_of_subgroups, generators, subgroup_class_names
from ..gsets import coset_gset
from ..parsummable import Mor, ParsumCat, equivariant_embedding
from ._perm import first_or_none, intertwining_bijections


@dataclass(frozen=True, order=True)
class GObj:
    """labels sorted; rows[c][i] is the image of labels[i] under the structure-group element c."""

    labels: tuple
    rows: tuple

    def action(self, c):
        return dict(zip(self.labels, self.rows[c]))


def group_actions(Gamma, points):
    """Every action of Gamma on the list ``points``, as rows aligned with the points."""
    pts = list(points)
    n = len(pts)
    gens = generators(Gamma)
    perms = list(itertools.permutations(range(n)))
    for imgs in itertools.product(perms, repeat=len(gens)):
        table = {Gamma.identity: tuple(range(n))}
        frontier = [Gamma.identity]
        ok = True
        while frontier and ok:
            nxt = []
            for g in frontier:
                for s, a in zip(gens, imgs):
                    h = Gamma.mult[g][s]
                    val = tuple(table[g][a[i]] for i in range(n))
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
            yield tuple(tuple(pts[table[c][i]] for i in range(n)) for c in Gamma.elements)


class GFinSets(ParsumCat):
    """Finite Gamma-sets in the label universe; ``free=True`` keeps only free Gamma-sets;
    ``transitive=True`` keeps only transitive ones (the generating M-category, no sum)."""

    splittable = True

    def __init__(self, Gamma, free=False, transitive=False):
        if Gamma.order > caps().gamma:
            raise OrderCapExceeded(f"structure group order {Gamma.order} exceeds cap {caps().gamma}")
        self.Gamma = Gamma
        self.free = free
        self.transitive = transitive
        self.name = f"{Gamma.name}F" + ("_free" if free else "") + ("_trans" if transitive else "")
        self._gens = generators(Gamma)

    def _ok(self, x):
        G = self.Gamma
        if self.free:
            for c in G.elements:
                if c != G.identity and any(a == b for a, b in zip(x.labels, x.rows[c])):
                    return False
        if self.transitive and x.labels:
            orbit = {x.rows[c][0] for c in G.elements}
            if len(orbit) != len(x.labels):
                return False
        return True

    def objects_on(self, labels, bound=None):
        labels = sorted(labels)
        top = len(labels) if bound is None else min(bound, len(labels))
        for k in range(top + 1):
            for c in itertools.combinations(labels, k):
                for rows in group_actions(self.Gamma, c):
                    x = GObj(c, rows)
                    if self._ok(x) and (not self.transitive or k):
                        yield x

    def size(self, x):
        return len(x.labels)

    def support(self, x):
        return frozenset(x.labels)

    def support_bound(self, bound):
        return bound

    def act(self, u, x):
        new = sorted((u[a], i) for i, a in enumerate(x.labels))
        labels = tuple(b for b, _ in new)
        rows = tuple(tuple(u[row[i]] for _, i in new) for row in x.rows)
        return GObj(labels, rows)

    def circ(self, u, x):
        return Mor(x, self.act(u, x), tuple((a, u[a]) for a in x.labels))

    def compose(self, g, f):
        gd = dict(g.data)
        return Mor(f.src, g.tgt, tuple((a, gd[b]) for a, b in f.data))

    def identity(self, x):
        return Mor(x, x, tuple((a, a) for a in x.labels))

    def inverse(self, f):
        return Mor(f.tgt, f.src, tuple(sorted((b, a) for a, b in f.data)))

    def _gamma_pairs(self, x, y):
        return [(x.action(c), y.action(c)) for c in self._gens]

    def hom(self, x, y):
        for f in intertwining_bijections(x.labels, y.labels, self._gamma_pairs(x, y)):
            yield Mor(x, y, tuple(sorted(f.items())))

    def zero(self):
        return GObj((), tuple(() for _ in self.Gamma.elements))

    def add(self, x, y):
        if set(x.labels) & set(y.labels):
            raise ValueError("summands must be disjointly supported")
        merged = sorted([(a, x, i) for i, a in enumerate(x.labels)] + [(a, y, i) for i, a in enumerate(y.labels)],
                        key=lambda t: t[0])
        labels = tuple(a for a, _, _ in merged)
        rows = tuple(tuple(z.rows[c][i] for _, z, i in merged) for c in self.Gamma.elements)
        return GObj(labels, rows)

    def add_mor(self, f, g):
        return Mor(self.add(f.src, g.src), self.add(f.tgt, g.tgt), tuple(sorted(f.data + g.data)))

    # fixed objects

    def _orbits(self, x, window):
        """Orbits of window group x structure group on the labels of x."""
        seen, out = set(), []
        acts = [x.action(c) for c in self.Gamma.elements]
        for a in x.labels:
            if a in seen:
                continue
            orb = {acts[c][window.act(k, a)] for k in window.group.elements for c in self.Gamma.elements}
            seen |= orb
            out.append(sorted(orb))
        return out

    def _restrict(self, x, pts):
        pos = [x.labels.index(a) for a in pts]
        return GObj(tuple(pts), tuple(tuple(row[i] for i in pos) for row in x.rows))

    def split(self, x, window):
        return [self._restrict(x, o) for o in self._orbits(x, window)]

    def _product(self, K):
        return bs.product_group(K, self.Gamma)

    def atom_candidates(self, window, bound):
        K = window.group
        P = self._product(K)
        nG = self.Gamma.order
        sc = conjugacy_classes_of_subgroups(P)
        for D in sc.representatives:
            if self.free and any(d // nG == K.identity and d % nG != self.Gamma.identity for d in D):
                continue
            X = coset_gset(P, D)
            if X.size > bound:
                continue
            u = equivariant_embedding(K, range(X.size), lambda k, i: X.action[k * nG + self.Gamma.identity][i], window)
            pts = sorted(u.map.values())
            back = {u[i]: i for i in range(X.size)}
            rows = tuple(tuple(u[X.action[K.identity * nG + c][back[a]]] for a in pts) for c in self.Gamma.elements)
            yield GObj(tuple(pts), rows)

    def _orbit_classes(self, x, window):
        K = window.group
        P = self._product(K)
        nG = self.Gamma.order
        sc = conjugacy_classes_of_subgroups(P)
        out = []
        acts = [x.action(c) for c in self.Gamma.elements]
        for o in self._orbits(x, window):
            a = o[0]
            stab = [k * nG + c for k in K.elements for c in self.Gamma.elements
                    if acts[c][window.act(k, a)] == a]
            out.append(sc.class_of(Subgroup(P, stab)))
        return tuple(sorted(out))

    def invariant(self, x, window):
        if window.group is None:
            return (self.size(x),)
        return (self.size(x), self._orbit_classes(x, window))

    def atom_key(self, x, window):
        return self.invariant(x, window)[::-1]

    def equivariant_isos(self, x, rx, y, ry):
        pairs = [(dict(rx[g].data), dict(ry[g].data)) for g in rx] + self._gamma_pairs(x, y)
        for f in intertwining_bijections(x.labels, y.labels, pairs):
            yield Mor(x, y, tuple(sorted(f.items())))

    def find_equivariant_iso(self, x, rx, y, ry):
        return first_or_none(self.equivariant_isos(x, rx, y, ry))

    def describe(self, x, window=None):
        if window is None or window.group is None:
            return f"{self.Gamma.name}-set{list(x.labels)}"
        K = window.group
        P = self._product(K)
        names = subgroup_class_names(P)
        return " + ".join(f"({K.name}x{self.Gamma.name})/{names[c]}" for c in self._orbit_classes(x, window)) or "0"
