"""Categories with trivial injection action: discrete monoids and one-object groups."""

from __future__ import annotations

from ..parsummable import Mor, ParsumCat


class DiscreteMonoid(ParsumCat):
    """A commutative monoid as a discrete category; every support is empty.

    ``DiscreteMonoid()`` is the natural numbers (objects up to the size bound).
    A finite monoid is given by its addition table on 0..n-1 with 0 the unit;
    every element has size 0.
    """

    def __init__(self, table=None, name=None):
        self.table = None if table is None else tuple(tuple(r) for r in table)
        self.name = name or ("N" if table is None else f"monoid[{len(self.table)}]")

    def objects_on(self, labels, bound=None):
        if self.table is not None:
            return iter(range(len(self.table)))
        return iter(range((bound if bound is not None else 4) + 1))

    def size(self, x):
        # a finite monoid is enumerated completely, so every sum stays in range
        return x if self.table is None else 0

    def support(self, x):
        return frozenset()

    def act(self, u, x):
        return x

    def circ(self, u, x):
        return self.identity(x)

    def compose(self, g, f):
        if f.tgt != g.src:
            raise ValueError("morphisms do not compose")
        return Mor(f.src, g.tgt, None)

    def identity(self, x):
        return Mor(x, x, None)

    def inverse(self, f):
        return Mor(f.tgt, f.src, None)

    def hom(self, x, y):
        if x == y:
            yield self.identity(x)

    def zero(self):
        return 0

    def add(self, x, y):
        return x + y if self.table is None else self.table[x][y]

    def add_mor(self, f, g):
        return self.identity(self.add(f.src, g.src))

    def fixed_candidates(self, window, bound):
        return self.objects_on((), bound)

    def describe(self, x, window=None):
        return str(x)


class OneObjectGroup(ParsumCat):
    """One object whose automorphisms form an abelian group; sum of morphisms is the product."""

    def __init__(self, Gamma):
        if not Gamma.is_abelian():
            raise ValueError("the group must be abelian for the sum to be a functor")
        self.Gamma = Gamma
        self.name = f"B{Gamma.name}"

    def objects_on(self, labels, bound=None):
        return iter(["*"])

    def size(self, x):
        return 0

    def support(self, x):
        return frozenset()

    def act(self, u, x):
        return x

    def circ(self, u, x):
        return self.identity(x)

    def compose(self, g, f):
        return Mor("*", "*", self.Gamma.mult[g.data][f.data])

    def identity(self, x):
        return Mor("*", "*", self.Gamma.identity)

    def inverse(self, f):
        return Mor("*", "*", self.Gamma.inv[f.data])

    def hom(self, x, y):
        for c in self.Gamma.elements:
            yield Mor("*", "*", c)

    def zero(self):
        return "*"

    def add(self, x, y):
        return "*"

    def add_mor(self, f, g):
        return self.compose(f, g)

    def fixed_candidates(self, window, bound):
        return self.objects_on(())

    def describe(self, x, window=None):
        return "*"

    def describe_mor(self, f):
        return str(f.data)
