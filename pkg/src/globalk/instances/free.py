"""The free parsummable category on an M-category: finite sets of disjointly supported generators."""

from __future__ import annotations

import itertools

from ..parsummable import Mor, ParsumCat


class FreeParsummable(ParsumCat):
    """Objects are sorted tuples of generator objects with pairwise disjoint supports.

    A morphism stores, for each source component i, the pair (target index, generator morphism).
    """

    splittable = True

    def __init__(self, B, name=None):
        self.B = B
        self.name = name or f"P({B.name})"

    def _sorted(self, parts):
        return tuple(sorted(parts))

    def objects_on(self, labels, bound=None):
        gens = [b for b in self.B.objects_on(labels, bound) if self.B.support(b)]
        out = []

        def rec(start, chosen, used, total):
            out.append(tuple(chosen))
            for i in range(start, len(gens)):
                b = gens[i]
                s = self.B.support(b)
                sz = self.B.size(b)
                if s & used or (bound is not None and total + sz > bound):
                    continue
                rec(i + 1, chosen + [b], used | s, total + sz)

        rec(0, [], frozenset(), 0)
        return iter(sorted(set(self._sorted(x) for x in out)))

    def size(self, x):
        return sum(self.B.size(b) for b in x)

    def support(self, x):
        return frozenset().union(*(self.B.support(b) for b in x)) if x else frozenset()

    def support_bound(self, bound):
        return self.B.support_bound(bound)

    def act(self, u, x):
        return self._sorted(self.B.act(u, b) for b in x)

    def circ(self, u, x):
        y = self.act(u, x)
        return Mor(x, y, tuple((y.index(self.B.act(u, b)), self.B.circ(u, b)) for b in x))

    def compose(self, g, f):
        return Mor(f.src, g.tgt, tuple((g.data[j][0], self.B.compose(g.data[j][1], h)) for j, h in f.data))

    def identity(self, x):
        return Mor(x, x, tuple((i, self.B.identity(b)) for i, b in enumerate(x)))

    def inverse(self, f):
        out = [None] * len(f.data)
        for i, (j, h) in enumerate(f.data):
            out[j] = (i, self.B.inverse(h))
        return Mor(f.tgt, f.src, tuple(out))

    def hom(self, x, y):
        if len(x) != len(y):
            return
        for perm in itertools.permutations(range(len(y))):
            choices = [list(self.B.hom(b, y[j])) for b, j in zip(x, perm)]
            for hs in itertools.product(*choices):
                yield Mor(x, y, tuple(zip(perm, hs)))

    def zero(self):
        return ()

    def add(self, x, y):
        if self.support(x) & self.support(y):
            raise ValueError("summands must be disjointly supported")
        return self._sorted(x + y)

    def add_mor(self, f, g):
        src, tgt = self.add(f.src, g.src), self.add(f.tgt, g.tgt)
        where = {}
        for m in (f, g):
            for i, (j, h) in enumerate(m.data):
                where[m.src[i]] = (tgt.index(m.tgt[j]), h)
        return Mor(src, tgt, tuple(where[b] for b in src))

    def split(self, x, window):
        """Group components into orbits of the window group."""
        B = self.B
        left = list(x)
        out = []
        while left:
            b = left[0]
            orbit = {B.act(window.perms[g], b) for g in window.group.elements}
            part = [c for c in left if c in orbit]
            left = [c for c in left if c not in orbit]
            out.append(self._sorted(part))
        return out

    def describe(self, x, window=None):
        return "{" + ", ".join(self.B.describe(b) for b in x) + "}"
