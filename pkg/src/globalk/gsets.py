"""Finite G-sets stored as explicit action tables."""

from __future__ import annotations

import numpy as np

from .caps import caps
from .errors import SizeCapExceeded
from .groups import (Subgroup, conjugacy_classes_of_subgroups, left_coset_reps)


class GSet:
    """``action[g][x]`` is the image of point x under group element g."""

    def __init__(self, group, action, check=True):
        self.group = group
        self.action = tuple(tuple(int(v) for v in row) for row in action)
        self.size = len(self.action[0]) if self.action else 0
        if self.size > caps().gset:
            raise SizeCapExceeded(f"G-set of size {self.size} exceeds cap {caps().gset}")
        if check:
            self.validate()

    def validate(self):
        G, a, n = self.group, self.action, self.size
        if len(a) != G.order:
            raise ValueError("one row per group element expected")
        if any(a[G.identity][x] != x for x in range(n)):
            raise ValueError("identity must act trivially")
        for g in G.elements:
            if len(set(a[g])) != n:
                raise ValueError("action maps must be bijections")
            for h in G.elements:
                gh = G.mult[g][h]
                if any(a[gh][x] != a[g][a[h][x]] for x in range(n)):
                    raise ValueError("action is not compatible with multiplication")

    @classmethod
    def from_function(cls, group, points, f):
        pts = list(points)
        pos = {p: i for i, p in enumerate(pts)}
        return cls(group, [[pos[f(g, p)] for p in pts] for g in group.elements], check=False)

    def __repr__(self):
        return f"GSet({self.group.name}, size={self.size})"

    def fixed_points(self, H):
        a = self.action
        return [x for x in range(self.size) if all(a[h][x] == x for h in H)]

    def stabilizer(self, x):
        return Subgroup(self.group, [g for g in self.group.elements if self.action[g][x] == x])


def empty_gset(G):
    return GSet(G, [[] for _ in G.elements], check=False)


def coset_gset(G, H):
    """The transitive G-set G/H; point i is the coset of the i-th least coset representative."""
    reps = left_coset_reps(G, H)
    where = {}
    for i, r in enumerate(reps):
        for h in H:
            where[G.mult[r][h]] = i
    return GSet(G, [[where[G.mult[g][r]] for r in reps] for g in G.elements], check=False)


def disjoint_union(X, Y):
    n = X.size
    return GSet(X.group, [list(X.action[g]) + [n + y for y in Y.action[g]] for g in X.group.elements], check=False)


def product(X, Y):
    m = Y.size
    return GSet(X.group, [[X.action[g][i] * m + Y.action[g][j] for i in range(X.size) for j in range(m)]
                          for g in X.group.elements], check=False)


def orbits_and_stabilizers(X):
    seen = set()
    out = []
    for x in range(X.size):
        if x in seen:
            continue
        orb = sorted({X.action[g][x] for g in X.group.elements})
        seen.update(orb)
        out.append((orb, X.stabilizer(x)))
    return out


class GSetClass:
    """Isomorphism class of a finite G-set: multiplicities indexed by subgroup-class id."""

    def __init__(self, group, multiplicities=None):
        self.group = group
        self.multiplicities = {int(k): int(v) for k, v in (multiplicities or {}).items() if v}

    def __eq__(self, other):
        return isinstance(other, GSetClass) and other.group is self.group and other.multiplicities == self.multiplicities

    def __hash__(self):
        return hash(tuple(sorted(self.multiplicities.items())))

    def __add__(self, other):
        m = dict(self.multiplicities)
        for k, v in other.multiplicities.items():
            m[k] = m.get(k, 0) + v
        return GSetClass(self.group, m)

    def __repr__(self):
        names = conjugacy_classes_of_subgroups(self.group).names()
        body = " + ".join(f"{v}*[{self.group.name}/{names[k]}]" for k, v in sorted(self.multiplicities.items()))
        return f"GSetClass({body or '0'})"

    def vector(self):
        v = np.zeros(len(conjugacy_classes_of_subgroups(self.group)), dtype=np.int64)
        for k, n in self.multiplicities.items():
            v[k] = n
        return v

    def to_json(self):
        sc = conjugacy_classes_of_subgroups(self.group)
        return {"group": self.group.name,
                "multiplicities": {",".join(map(str, sc.rep(k).elements)): n
                                   for k, n in sorted(self.multiplicities.items())}}

    @classmethod
    def from_json(cls, group, data):
        sc = conjugacy_classes_of_subgroups(group)
        m = {}
        for key, n in data["multiplicities"].items():
            els = [int(t) for t in key.split(",")] if key else []
            m[sc.class_of(Subgroup(group, els))] = n
        return cls(group, m)


def decompose(X):
    sc = conjugacy_classes_of_subgroups(X.group)
    m = {}
    for _, stab in orbits_and_stabilizers(X):
        k = sc.class_of(stab)
        m[k] = m.get(k, 0) + 1
    return GSetClass(X.group, m)


def marks(X, H):
    return len(X.fixed_points(H))


def table_of_marks(G):
    """Rows: G/K for K running over class representatives; columns: (H) likewise."""
    sc = conjugacy_classes_of_subgroups(G)
    reps = sc.representatives
    return np.array([[marks(coset_gset(G, K), H) for H in reps] for K in reps], dtype=np.int64)


def restrict_along(alpha, X):
    return GSet(alpha.source, [X.action[alpha.image[k]] for k in alpha.source.elements], check=False)


def induce(H, Y):
    """G x_H Y, where H is a Subgroup of G (Y over H.as_group()) or an injective GroupHom into G."""
    if isinstance(H, Subgroup):
        Hg, iota = H.as_group()
    else:
        iota = H
        Hg = iota.source
    if Y.group is not Hg:
        raise ValueError("Y must be a G-set over the source of the inclusion")
    G = iota.target
    back = {x: i for i, x in enumerate(iota.image)}
    Himg = Subgroup(G, iota.image)
    reps = left_coset_reps(G, Himg)
    where = {}
    for i, r in enumerate(reps):
        for h in Himg:
            where[G.mult[r][h]] = (i, h)
    n = Y.size
    rows = []
    for g in G.elements:
        row = []
        for i, r in enumerate(reps):
            j, h = where[G.mult[g][r]]
            row.extend(j * n + Y.action[back[h]][y] for y in range(n))
        rows.append(row)
    return GSet(G, rows, check=False)


def sub_gset(X, pts):
    """The G-invariant subset ``pts`` as a G-set in its own right."""
    pos = {p: i for i, p in enumerate(pts)}
    return GSet(X.group, [[pos[X.action[g][p]] for p in pts] for g in X.group.elements], check=False)


def isotypical_part(X, class_id):
    """Points whose stabilizer lies in the given class, as a G-set plus the point list."""
    sc = conjugacy_classes_of_subgroups(X.group)
    pts = [x for x in range(X.size) if sc.class_of(X.stabilizer(x)) == class_id]
    return sub_gset(X, pts), pts


def isomorphic(X, Y):
    return X.group is Y.group and decompose(X) == decompose(Y)
