"""Finite sets inside the label universe; sum is union."""

from __future__ import annotations

import itertools

from ..groups import conjugacy_classes_of_subgroups, subgroup_class_names
from ..parsummable import Mor, ParsumCat
from ._perm import first_or_none, intertwining_bijections


def _pairs(d):
    return tuple(sorted(d.items()))


class FinSets(ParsumCat):
    """Objects are finite label sets, morphisms are bijections stored as sorted (a, f(a)) pairs."""

    name = "FinSets"
    splittable = True

    def objects_on(self, labels, bound=None):
        labels = sorted(labels)
        top = len(labels) if bound is None else min(bound, len(labels))
        for k in range(top + 1):
            for c in itertools.combinations(labels, k):
                yield frozenset(c)

    def size(self, x):
        return len(x)

    def support(self, x):
        return frozenset(x)

    def support_bound(self, bound):
        return bound

    def act(self, u, x):
        return frozenset(u[a] for a in x)

    def circ(self, u, x):
        return Mor(x, self.act(u, x), tuple(sorted((a, u[a]) for a in x)))

    def compose(self, g, f):
        gd = dict(g.data)
        return Mor(f.src, g.tgt, tuple((a, gd[b]) for a, b in f.data))

    def identity(self, x):
        return Mor(x, x, tuple((a, a) for a in sorted(x)))

    def inverse(self, f):
        return Mor(f.tgt, f.src, tuple(sorted((b, a) for a, b in f.data)))

    def hom(self, x, y):
        if len(x) != len(y):
            return
        xs, ys = sorted(x), sorted(y)
        for p in itertools.permutations(ys):
            yield Mor(x, y, tuple(zip(xs, p)))

    def zero(self):
        return frozenset()

    def add(self, x, y):
        if x & y:
            raise ValueError("summands must be disjointly supported")
        return x | y

    def add_mor(self, f, g):
        return Mor(self.add(f.src, g.src), self.add(f.tgt, g.tgt), tuple(sorted(f.data + g.data)))

    # fixed objects

    def split(self, x, window):
        return [frozenset(o) for o in window.orbits(x)]

    def atom_candidates(self, window, bound):
        seen = set()
        for cid, labels in window.copies:
            if cid not in seen and len(labels) <= bound:
                seen.add(cid)
                yield frozenset(labels)

    def invariant(self, x, window):
        if window.group is None:
            return (len(x),)
        sc = conjugacy_classes_of_subgroups(window.group)
        return (len(x), tuple(sorted(sc.class_of(window.stabilizer(o[0])) for o in window.orbits(x))))

    def atom_key(self, x, window):
        return self.invariant(x, window)[::-1]

    def find_equivariant_iso(self, x, rx, y, ry):
        f = first_or_none(self.equivariant_isos(x, rx, y, ry))
        return f

    def equivariant_isos(self, x, rx, y, ry):
        pairs = [(dict(rx[g].data), dict(ry[g].data)) for g in rx]
        for f in intertwining_bijections(x, y, pairs):
            yield Mor(x, y, _pairs(f))

    def describe(self, x, window=None):
        if window is None or window.group is None:
            return "{" + ",".join(map(str, sorted(x))) + "}"
        G = window.group
        names = subgroup_class_names(G)
        sc = conjugacy_classes_of_subgroups(G)
        parts = sorted(sc.class_of(window.stabilizer(o[0])) for o in window.orbits(x))
        return " + ".join(f"{G.name}/{names[c]}" for c in parts) or "0"

