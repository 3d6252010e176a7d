"""Label-indexed families in a permutative category, with shuffle isomorphisms built from the symmetry."""

from __future__ import annotations

import itertools

from ..parsummable import Mor, ParsumCat


class SigmaCategory:
    """Objects n >= 0; morphisms n -> n are permutations (perm[i] = image of i); sum is block sum."""

    name = "Sigma"
    unit = 0

    def objects(self, bound):
        return list(range(1, bound + 1))

    def size(self, a):
        return a

    def tensor(self, a, b):
        return a + b

    def identity(self, a):
        return Mor(a, a, tuple(range(a)))

    def compose(self, g, f):
        if f.tgt != g.src:
            raise ValueError("morphisms do not compose")
        return Mor(f.src, g.tgt, tuple(g.data[i] for i in f.data))

    def inverse(self, f):
        inv = [0] * len(f.data)
        for i, j in enumerate(f.data):
            inv[j] = i
        return Mor(f.tgt, f.src, tuple(inv))

    def hom(self, a, b):
        if a == b:
            for p in itertools.permutations(range(a)):
                yield Mor(a, b, p)

    def tensor_mor(self, f, g):
        n = f.src
        return Mor(f.src + g.src, f.tgt + g.tgt, f.data + tuple(n + j for j in g.data))

    def symmetry(self, m, n):
        return Mor(m + n, n + m, tuple(i + n if i < m else i - m for i in range(m + n)))


class DiscretePermutative:
    """A commutative monoid as a discrete permutative category (identity symmetry).

    Without a table this is the natural numbers.
    """

    unit = 0

    def __init__(self, table=None, name=None):
        self.table = None if table is None else tuple(tuple(r) for r in table)
        self.name = name or ("N" if table is None else f"monoid[{len(self.table)}]")

    def objects(self, bound):
        if self.table is None:
            return list(range(1, bound + 1))
        return list(range(1, len(self.table)))

    def size(self, a):
        return a if self.table is None else int(a != 0)

    def tensor(self, a, b):
        return a + b if self.table is None else self.table[a][b]

    def identity(self, a):
        return Mor(a, a, None)

    def compose(self, g, f):
        if f.tgt != g.src:
            raise ValueError("morphisms do not compose")
        return Mor(f.src, g.tgt, None)

    def inverse(self, f):
        return Mor(f.tgt, f.src, None)

    def hom(self, a, b):
        if a == b:
            yield self.identity(a)

    def tensor_mor(self, f, g):
        return self.identity(self.tensor(f.src, g.src))

    def symmetry(self, m, n):
        return self.identity(self.tensor(m, n))


class PhiCategory(ParsumCat):
    """Objects: sorted tuples of (label, E-object) with non-unit entries.

    hom(a, b) = E(Sigma a, Sigma b), where Sigma a is the product of the entries in
    label order.  The structure isos u_o^a are the block shuffles built from the
    symmetry of E.
    """

    def __init__(self, E):
        self.E = E
        self.name = f"Phi({E.name})"

    def sigma(self, x):
        out = self.E.unit
        for _, e in x:
            out = self.E.tensor(out, e)
        return out

    def _tensor_ids(self, objs):
        E = self.E
        f = E.identity(E.unit)
        for e in objs:
            f = E.tensor_mor(f, E.identity(e))
        return f

    def block_shuffle(self, blocks, target_order):
        """E-iso from the product of ``blocks`` to the product rearranged as [blocks[i] for i in target_order]."""
        E = self.E
        rank = {i: r for r, i in enumerate(target_order)}
        cur = list(range(len(blocks)))
        f = self._tensor_ids(blocks)
        changed = True
        while changed:
            changed = False
            for j in range(len(cur) - 1):
                if rank[cur[j]] > rank[cur[j + 1]]:
                    pre = self._tensor_ids([blocks[i] for i in cur[:j]])
                    post = self._tensor_ids([blocks[i] for i in cur[j + 2:]])
                    step = E.tensor_mor(E.tensor_mor(pre, E.symmetry(blocks[cur[j]], blocks[cur[j + 1]])), post)
                    f = E.compose(step, f)
                    cur[j], cur[j + 1] = cur[j + 1], cur[j]
                    changed = True
        return f

    def objects_on(self, labels, bound=None):
        labels = sorted(labels)
        bound = bound if bound is not None else len(labels)
        vals = self.E.objects(bound)

        def rec(i, acc, total):
            if i == len(labels):
                yield tuple(acc)
                return
            yield from rec(i + 1, acc, total)
            for v in vals:
                s = self.E.size(v)
                if total + s <= bound:
                    yield from rec(i + 1, acc + [(labels[i], v)], total + s)

        return rec(0, [], 0)

    def size(self, x):
        return sum(self.E.size(e) for _, e in x)

    def support(self, x):
        return frozenset(l for l, _ in x)

    def support_bound(self, bound):
        return bound

    def act(self, u, x):
        return tuple(sorted((u[l], e) for l, e in x))

    def circ(self, u, x):
        blocks = [e for _, e in x]
        order = sorted(range(len(x)), key=lambda i: u[x[i][0]])
        return Mor(x, self.act(u, x), self.block_shuffle(blocks, order))

    def compose(self, g, f):
        return Mor(f.src, g.tgt, self.E.compose(g.data, f.data))

    def identity(self, x):
        return Mor(x, x, self.E.identity(self.sigma(x)))

    def inverse(self, f):
        return Mor(f.tgt, f.src, self.E.inverse(f.data))

    def hom(self, x, y):
        for e in self.E.hom(self.sigma(x), self.sigma(y)):
            yield Mor(x, y, e)

    def zero(self):
        return ()

    def add(self, x, y):
        if self.support(x) & self.support(y):
            raise ValueError("summands must be disjointly supported")
        return tuple(sorted(x + y))

    def _unshuffle(self, x, y):
        """Sigma(x + y) -> Sigma x (x) Sigma y."""
        s = self.add(x, y)
        pos = {l: i for i, (l, _) in enumerate(s)}
        order = [pos[l] for l, _ in x] + [pos[l] for l, _ in y]
        return self.block_shuffle([e for _, e in s], order)

    def add_mor(self, f, g):
        E = self.E
        a = self._unshuffle(f.src, g.src)
        b = self._unshuffle(f.tgt, g.tgt)
        return Mor(self.add(f.src, g.src), self.add(f.tgt, g.tgt),
                   E.compose(E.inverse(b), E.compose(E.tensor_mor(f.data, g.data), a)))

    def describe(self, x, window=None):
        return "(" + ", ".join(f"{l}:{e}" for l, e in x) + ")"
