"""Finite groups as Cayley tables, with subgroup and conjugacy machinery."""

from __future__ import annotations

import itertools
import re
from collections import deque
from functools import cached_property

from .caps import caps
from .errors import BadSelector, OrderCapExceeded


class Group:
    """A finite group given by its multiplication table.

    Elements are the indices ``0..order-1``; ``mult[a][b]`` is the index of ``ab``.
    """

    def __init__(self, mult, name=None, check=True):
        self.mult = tuple(tuple(int(v) for v in row) for row in mult)
        self.order = len(self.mult)
        self.name = name or f"G{self.order}"
        n = self.order
        if n == 0 or any(len(r) != n for r in self.mult):
            raise ValueError("multiplication table must be square and non-empty")
        ident = [e for e in range(n) if all(self.mult[e][x] == x == self.mult[x][e] for x in range(n))]
        if len(ident) != 1:
            raise ValueError("no unique identity element")
        self.identity = ident[0]
        inv = [None] * n
        for a in range(n):
            for b in range(n):
                if self.mult[a][b] == self.identity:
                    inv[a] = b
                    break
            if inv[a] is None or self.mult[inv[a]][a] != self.identity:
                raise ValueError(f"element {a} has no two-sided inverse")
        self.inv = tuple(inv)
        if check:
            self._check_assoc()
        self._cache = {}

    def _check_assoc(self):
        m = self.mult
        for a in range(self.order):
            ma = m[a]
            for b in range(self.order):
                mab = m[ma[b]]
                mb = m[b]
                for c in range(self.order):
                    if mab[c] != ma[mb[c]]:
                        raise ValueError(f"not associative at ({a},{b},{c})")

    def __repr__(self):
        return f"Group({self.name}, order={self.order})"

    def __len__(self):
        return self.order

    @property
    def elements(self):
        return range(self.order)

    def mul(self, *xs):
        r = self.identity
        for x in xs:
            r = self.mult[r][x]
        return r

    def conj(self, g, x):
        """g x g^-1"""
        return self.mult[self.mult[g][x]][self.inv[g]]

    def element_order(self, x):
        k, y = 1, x
        while y != self.identity:
            y = self.mult[y][x]
            k += 1
        return k

    @cached_property
    def whole(self):
        return Subgroup(self, range(self.order))

    @cached_property
    def trivial(self):
        return Subgroup(self, [self.identity])

    def is_abelian(self):
        m = self.mult
        return all(m[a][b] == m[b][a] for a in range(self.order) for b in range(a))

    def to_text(self):
        lines = [f"order {self.order}"]
        lines += [" ".join(map(str, row)) for row in self.mult]
        return "\n".join(lines) + "\n"


class Subgroup:
    """A subgroup stored as the sorted tuple of its element indices."""

    __slots__ = ("parent", "elements", "_set", "__weakref__", "_as_group")

    def __init__(self, parent, elements):
        self.parent = parent
        self.elements = tuple(sorted(set(elements)))
        self._set = frozenset(self.elements)
        self._as_group = None

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self._set

    def __eq__(self, other):
        return isinstance(other, Subgroup) and other.parent is self.parent and other.elements == self.elements

    def __hash__(self):
        return hash(self.elements)

    def __lt__(self, other):
        return (len(self), self.elements) < (len(other), other.elements)

    def __repr__(self):
        return f"Subgroup({self.parent.name}, {list(self.elements)})"

    def issubset(self, other):
        return self._set <= other._set

    def is_valid(self):
        G = self.parent
        if G.identity not in self:
            return False
        return all(G.mult[a][b] in self for a in self for b in self) and all(G.inv[a] in self for a in self)

    def as_group(self):
        """The subgroup as a standalone group, with the inclusion hom."""
        if self._as_group is None:
            G = self.parent
            els = sorted(self.elements, key=lambda x: (x != G.identity, x))
            pos = {x: i for i, x in enumerate(els)}
            table = [[pos[G.mult[a][b]] for b in els] for a in els]
            H = Group(table, name=f"{G.name}<{len(els)}>", check=False)
            self._as_group = (H, GroupHom(H, G, els))
        return self._as_group


class GroupHom:
    """A homomorphism given by the image of every source element."""

    __slots__ = ("source", "target", "image")

    def __init__(self, source, target, image, check=False):
        self.source = source
        self.target = target
        self.image = tuple(int(v) for v in image)
        if check and not self.is_valid():
            raise ValueError("not a homomorphism")

    def __call__(self, x):
        return self.image[x]

    def __eq__(self, other):
        return (isinstance(other, GroupHom) and other.source is self.source
                and other.target is self.target and other.image == self.image)

    def __hash__(self):
        return hash(self.image)

    def __repr__(self):
        return f"GroupHom({self.source.name}->{self.target.name}, {list(self.image)})"

    def is_valid(self):
        S, T, f = self.source, self.target, self.image
        if len(f) != S.order or f[S.identity] != T.identity:
            return False
        return all(f[S.mult[a][b]] == T.mult[f[a]][f[b]] for a in S.elements for b in S.elements)

    def compose(self, other):
        """self after other."""
        return GroupHom(other.source, self.target, [self.image[x] for x in other.image])

    def kernel(self):
        return Subgroup(self.source, [x for x in self.source.elements if self.image[x] == self.target.identity])

    def image_subgroup(self):
        return Subgroup(self.target, set(self.image))

    def is_injective(self):
        return len(set(self.image)) == len(self.image)

    def restrict(self, H):
        """Restriction to a subgroup H of the source, as a hom from H.as_group()."""
        Hg, inc = H.as_group()
        return self.compose(inc)


def identity_hom(G):
    return GroupHom(G, G, range(G.order))


def conjugation_hom(G, g):
    return GroupHom(G, G, [G.conj(g, x) for x in G.elements])


# ---------------------------------------------------------------- constructors

def from_permutations(gens, name=None):
    """The permutation group generated by ``gens`` (tuples of images)."""
    deg = len(gens[0]) if gens else 1
    ident = tuple(range(deg))
    seen = {ident}
    queue = deque([ident])
    while queue:
        p = queue.popleft()
        for s in gens:
            q = tuple(p[s[i]] for i in range(deg))
            if q not in seen:
                seen.add(q)
                queue.append(q)
    els = sorted(seen)
    els.remove(ident)
    els.insert(0, ident)
    pos = {p: i for i, p in enumerate(els)}
    # (p*q)(i) = p(q(i))
    table = [[pos[tuple(p[q[i]] for i in range(deg))] for q in els] for p in els]
    return Group(table, name=name, check=False)


def cyclic(n):
    return Group([[(a + b) % n for b in range(n)] for a in range(n)], name=f"C{n}" if n > 1 else "C1", check=False)


def direct_product(A, B, name=None):
    nb = B.order
    table = [[A.mult[a1][a2] * nb + B.mult[b1][b2]
              for a2 in range(A.order) for b2 in range(nb)]
             for a1 in range(A.order) for b1 in range(nb)]
    return Group(table, name=name or f"{A.name}x{B.name}", check=False)


def product_pair(P, B, x):
    """Split an element of direct_product(A, B) into its coordinates."""
    return divmod(x, B.order)


def symmetric(n):
    if n == 1:
        return cyclic(1)
    gens = [tuple([1, 0] + list(range(2, n)))]
    if n > 2:
        gens.append(tuple(list(range(1, n)) + [0]))
    return from_permutations(gens, name=f"S{n}")


def alternating4():
    return from_permutations([(1, 2, 0, 3), (1, 0, 3, 2)], name="A4")


def dihedral(n):
    """Symmetries of an n-gon, order 2n; dihedral(4) is D4."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return from_permutations([rot, ref], name=f"D{n}")


def quaternion():
    # units +-1, +-i, +-j, +-k encoded as (sign, unit) with unit in 1,i,j,k
    table = {("1", u): (1, u) for u in "1ijk"}
    table.update({(u, "1"): (1, u) for u in "1ijk"})
    for u in "ijk":
        table[(u, u)] = (-1, "1")
    for a, b, c in ("ijk", "jki", "kij"):
        table[(a, b)] = (1, c)
        table[(b, a)] = (-1, c)
    els = [(s, u) for u in "1ijk" for s in (1, -1)]
    pos = {e: i for i, e in enumerate(els)}

    def mul(x, y):
        s, u = table[(x[1], y[1])]
        return (x[0] * y[0] * s, u)

    return Group([[pos[mul(x, y)] for y in els] for x in els], name="Q8", check=False)


BESTIARY_NAMES = ("C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "S3", "C7", "C8", "C2xC4", "D4", "Q8", "A4", "S4")

_BY_NAME = {}


def by_name(name):
    """Look up a bestiary group: Cn, CmxCn, S3, S4, D4, Q8, A4 (``e`` means C1)."""
    key = name.strip()
    if key in ("e", "1", "C1"):
        key = "C1"
    if key in _BY_NAME:
        return _BY_NAME[key]
    m = re.fullmatch(r"C(\d+)", key)
    m2 = re.fullmatch(r"C(\d+)xC(\d+)", key)
    if m:
        G = cyclic(int(m.group(1)))
    elif m2:
        G = direct_product(cyclic(int(m2.group(1))), cyclic(int(m2.group(2))), name=key)
    elif key == "S3":
        G = symmetric(3)
    elif key == "S4":
        G = symmetric(4)
    elif key == "D4":
        G = dihedral(4)
    elif key == "Q8":
        G = quaternion()
    elif key == "A4":
        G = alternating4()
    else:
        raise BadSelector(f"unknown group {name!r}")
    if G.order > caps().order:
        raise OrderCapExceeded(f"{key} has order {G.order} > cap {caps().order}")
    _BY_NAME[key] = G
    return G


def load_cayley(text, name=None):
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    head = lines[0].split()
    if len(head) != 2 or head[0] != "order":
        raise ValueError("first line must be 'order n'")
    n = int(head[1])
    rows = [list(map(int, ln.split())) for ln in lines[1:1 + n]]
    if len(rows) != n:
        raise ValueError("expected n rows")
    G = Group(rows, name=name)
    if G.identity != 0:
        raise ValueError("element 0 must be the identity")
    return G


# ------------------------------------------------------------------ subgroups

def _check_cap(G):
    if G.order > caps().order:
        raise OrderCapExceeded(f"|{G.name}| = {G.order} exceeds the order cap {caps().order}")


def closure(G, gens):
    els = {G.identity}
    frontier = [G.identity]
    gens = list(gens)
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = G.mult[x][s]
                if y not in els:
                    els.add(y)
                    nxt.append(y)
        frontier = nxt
    return Subgroup(G, els)


def all_subgroups(G):
    _check_cap(G)
    if "subgroups" not in G._cache:
        cyc = {closure(G, [g]) for g in G.elements}
        found = set(cyc)
        frontier = set(cyc)
        while frontier:
            new = set()
            for H in frontier:
                for C in cyc:
                    if C.issubset(H):
                        continue
                    J = closure(G, H.elements + C.elements[:])
                    if J not in found:
                        new.add(J)
            found |= new
            frontier = new
        G._cache["subgroups"] = sorted(found)
    return G._cache["subgroups"]


def conjugate(G, H, g):
    """g H g^-1"""
    return Subgroup(G, [G.conj(g, h) for h in H])


class SubgroupClasses:
    """Conjugacy classes of subgroups, each led by its lexicographically least member."""

    def __init__(self, parent, classes):
        self.parent = parent
        self.classes = classes
        self.representatives = [c[0] for c in classes]
        self.class_index = {H: i for i, c in enumerate(classes) for H in c}

    def __len__(self):
        return len(self.classes)

    def class_of(self, H):
        return self.class_index[H]

    def rep(self, i):
        return self.representatives[i]

    def names(self):
        return subgroup_class_names(self.parent)


def conjugacy_classes_of_subgroups(G):
    if "classes" not in G._cache:
        subs = all_subgroups(G)
        seen = set()
        classes = []
        for H in subs:
            if H in seen:
                continue
            cls = sorted({conjugate(G, H, g) for g in G.elements}, key=lambda S: S.elements)
            seen.update(cls)
            classes.append(cls)
        classes.sort(key=lambda c: (len(c[0]), c[0].elements))
        G._cache["classes"] = SubgroupClasses(G, classes)
    return G._cache["classes"]


def normalizer(G, H):
    return Subgroup(G, [g for g in G.elements if conjugate(G, H, g) == H])


def quotient(G, N):
    """G/N for a normal subgroup N, with the projection hom."""
    cosets = []
    index = {}
    for g in G.elements:
        if g in index:
            continue
        c = tuple(sorted(G.mult[g][n] for n in N))
        for x in c:
            index[x] = len(cosets)
        cosets.append(c)
    ident = index[G.identity]
    order = list(range(len(cosets)))
    order.remove(ident)
    order.insert(0, ident)
    relabel = {old: new for new, old in enumerate(order)}
    reps = [cosets[old][0] for old in order]
    table = [[relabel[index[G.mult[a][b]]] for b in reps] for a in reps]
    Q = Group(table, name=f"{G.name}/{len(N)}", check=False)
    return Q, GroupHom(G, Q, [relabel[index[g]] for g in G.elements])


def weyl_group(G, H):
    """W_G H = N_G H / H, returned with the projection N_G H -> W_G H."""
    N = normalizer(G, H)
    Ng, inc = N.as_group()
    Hin = Subgroup(Ng, [i for i, x in enumerate(inc.image) if x in H])
    W, proj = quotient(Ng, Hin)
    W.name = f"W({len(H)})" if W.order > 1 else "C1"
    return W, proj, inc


def double_cosets(G, K, H):
    """One representative (the least element) per double coset KgH."""
    seen = set()
    reps = []
    for g in G.elements:
        if g in seen:
            continue
        reps.append(g)
        seen.update(G.mult[G.mult[k][g]][h] for k in K for h in H)
    return reps


def left_coset_reps(G, H):
    seen, reps = set(), []
    for g in G.elements:
        if g not in seen:
            reps.append(g)
            seen.update(G.mult[g][h] for h in H)
    return reps


def generators(G, H=None):
    """A small generating set of H (default all of G), chosen greedily."""
    H = G.whole if H is None else H
    gens = []
    cur = G.trivial
    for x in sorted(H.elements, key=lambda x: -G.element_order(x)):
        if x not in cur:
            gens.append(x)
            cur = closure(G, gens)
            if len(cur) == len(H):
                break
    return gens


# ---------------------------------------------------------------- homomorphisms

def _extend(K, G, gens, imgs):
    f = {K.identity: G.identity}
    queue = deque([K.identity])
    while queue:
        x = queue.popleft()
        for s, t in zip(gens, imgs):
            y = K.mult[x][s]
            v = G.mult[f[x]][t]
            if y in f:
                if f[y] != v:
                    return None
            else:
                f[y] = v
                queue.append(y)
    return GroupHom(K, G, [f[x] for x in K.elements])


def all_homs(K, G):
    key = ("homs", id(G))
    if key not in K._cache:
        gens = generators(K)
        cands = [[y for y in G.elements if K.element_order(s) % G.element_order(y) == 0] for s in gens]
        out = []
        for imgs in itertools.product(*cands):
            f = _extend(K, G, gens, imgs)
            if f is not None:
                out.append(f)
        K._cache[key] = out
    return K._cache[key]


def homs_up_to_conjugacy(K, G):
    seen = set()
    out = []
    for f in all_homs(K, G):
        if f.image in seen:
            continue
        out.append(f)
        seen.update(tuple(G.conj(g, y) for y in f.image) for g in G.elements)
    return out


def find_isomorphism(A, B):
    if A.order != B.order:
        return None
    if sorted(map(A.element_order, A.elements)) != sorted(map(B.element_order, B.elements)):
        return None
    gens = generators(A)
    cands = [[y for y in B.elements if B.element_order(y) == A.element_order(s)] for s in gens]
    for imgs in itertools.product(*cands):
        f = _extend(A, B, gens, imgs)
        if f is not None and f.is_injective():
            return f
    return None


def isomorphism_type(G):
    """Name of a bestiary group isomorphic to G, or ``G<order>``."""
    for nm in BESTIARY_NAMES:
        B = by_name(nm)
        if B.order == G.order and find_isomorphism(G, B) is not None:
            return nm
    return f"G{G.order}"


def subgroup_class_names(G):
    """Readable names for the subgroup classes: iso type plus a letter when ambiguous."""
    if "class_names" not in G._cache:
        sc = conjugacy_classes_of_subgroups(G)
        types = [isomorphism_type(H.as_group()[0]) if len(H) > 1 else "e" for H in sc.representatives]
        counts = {t: types.count(t) for t in types}
        seen = {}
        names = []
        for t in types:
            if counts[t] > 1:
                k = seen.get(t, 0)
                seen[t] = k + 1
                names.append(t + "abcdefghijklmnopqrstuvwxyz"[k])
            else:
                names.append(t)
        G._cache["class_names"] = names
    return G._cache["class_names"]
