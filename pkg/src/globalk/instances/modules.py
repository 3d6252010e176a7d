"""Finite-dimensional subspaces of F_p^{(labels)} and matrix-presented group modules.

``ProjModules(p)`` is the window model: an object is a subspace of the free
vector space on the labels, stored in reduced row echelon form over its support
columns.  A morphism is a matrix acting on echelon-basis coordinates.

``MatrixModule`` is the independent oracle: a module given by one matrix per
group element, compared by :func:`module_iso_test`.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

import numpy as np

from .. import modp
from ..caps import caps
from ..errors import DimCapExceeded
from ..groups import GroupHom, Subgroup, by_name, generators, left_coset_reps
from ..parsummable import Mor, ParsumCat


def _t(M):
    return tuple(tuple(int(v) for v in row) for row in np.asarray(M))


@dataclass(frozen=True, order=True)
class Sub:
    labels: tuple
    rows: tuple

    @property
    def dim(self):
        return len(self.rows)

    def matrix(self):
        return np.array(self.rows, dtype=np.int64).reshape(len(self.rows), len(self.labels))

    def pivots(self):
        return [next(j for j, v in enumerate(r) if v) for r in self.rows]


def make_sub(vectors, labels, p):
    """The span of the given vectors (rows over ``labels``), trimmed to its support."""
    labels = list(labels)
    if not len(vectors) or not labels:
        return Sub((), ())
    R, _ = modp.rref(np.asarray(vectors, dtype=np.int64).reshape(len(vectors), len(labels)), p)
    if R.shape[0] == 0:
        return Sub((), ())
    keep = [j for j in range(len(labels)) if R[:, j].any()]
    return Sub(tuple(labels[j] for j in keep), _t(R[:, keep]))


class ProjModules(ParsumCat):
    """Subspaces of F_p^{(labels)}; fixed objects under a window group are its modules."""

    def __init__(self, p=2, two_generated=False, generator_copies=2):
        if p not in (2, 3, 5, 7):
            raise ValueError("p must be a small prime")
        self.p = p
        self.two_generated = two_generated
        self.generator_copies = generator_copies
        self.name = f"P(F{p})"

    # structure

    def objects_on(self, labels, bound=None):
        labels = sorted(labels)
        top = len(labels) if bound is None else min(bound, len(labels))
        for d in range(top + 1):
            for R in modp.subspaces(len(labels), d, self.p):
                yield make_sub(R, labels, self.p)

    def size(self, x):
        return x.dim

    def support(self, x):
        return frozenset(x.labels)

    def act(self, u, x):
        if not x.rows:
            return x
        new = [u[l] for l in x.labels]
        order = sorted(range(len(new)), key=lambda j: new[j])
        M = x.matrix()[:, order]
        return make_sub(M, [new[j] for j in order], self.p)

    def _coords(self, x, vec):
        """Coordinates of vec (dict label -> value) in the echelon basis of x."""
        return [vec.get(x.labels[c], 0) % self.p for c in x.pivots()]

    def circ(self, u, x):
        y = self.act(u, x)
        cols = []
        for r in x.rows:
            vec = {u[l]: v for l, v in zip(x.labels, r)}
            cols.append(self._coords(y, vec))
        M = np.array(cols, dtype=np.int64).T.reshape(y.dim, x.dim)
        return Mor(x, y, _t(M))

    def compose(self, g, f):
        if f.tgt != g.src:
            raise ValueError("morphisms do not compose")
        A = np.array(g.data, dtype=np.int64).reshape(g.tgt.dim, g.src.dim)
        B = np.array(f.data, dtype=np.int64).reshape(f.tgt.dim, f.src.dim)
        return Mor(f.src, g.tgt, _t(A @ B % self.p))

    def identity(self, x):
        return Mor(x, x, _t(np.eye(x.dim, dtype=np.int64)))

    def inverse(self, f):
        A = np.array(f.data, dtype=np.int64).reshape(f.tgt.dim, f.src.dim)
        return Mor(f.tgt, f.src, _t(modp.inverse(A, self.p)) if f.src.dim else ())

    def hom(self, x, y):
        if x.dim != y.dim:
            return
        for M in modp.all_invertible(x.dim, self.p):
            yield Mor(x, y, _t(M))

    def zero(self):
        return Sub((), ())

    def add(self, x, y):
        if set(x.labels) & set(y.labels):
            raise ValueError("summands must be disjointly supported")
        labels = sorted(x.labels + y.labels)
        pos = {l: j for j, l in enumerate(labels)}
        rows = []
        for z in (x, y):
            for r in z.rows:
                v = [0] * len(labels)
                for l, a in zip(z.labels, r):
                    v[pos[l]] = a
                rows.append(v)
        return make_sub(rows, labels, self.p) if rows else Sub((), ())

    def add_mor(self, f, g):
        p = self.p
        S, T = self.add(f.src, g.src), self.add(f.tgt, g.tgt)
        cols = []
        for r in S.rows:
            vec = dict(zip(S.labels, r))
            m = f if set(l for l, a in vec.items() if a) <= set(f.src.labels) else g
            c = np.array(self._coords(m.src, vec), dtype=np.int64)
            A = np.array(m.data, dtype=np.int64).reshape(m.tgt.dim, m.src.dim)
            c2 = A @ c % p
            out = {}
            for coef, row in zip(c2, m.tgt.rows):
                for l, a in zip(m.tgt.labels, row):
                    out[l] = (out.get(l, 0) + int(coef) * a) % p
            cols.append(self._coords(T, out))
        M = np.array(cols, dtype=np.int64).T.reshape(T.dim, S.dim)
        return Mor(S, T, _t(M))

    # fixed objects

    def rho(self, x, window, elements=None):
        G = window.group
        els = G.elements if elements is None else elements
        return {g: np.array(self.circ(window.perms[g], x).data, dtype=np.int64).reshape(x.dim, x.dim)
                for g in els}

    def invariant(self, x, window):
        if window.group is None or not x.dim:
            return (x.dim,)
        R = self.rho(x, window)
        eye = np.eye(x.dim, dtype=np.int64)
        return (x.dim, tuple(x.dim - modp.rank((R[g] - eye) % self.p, self.p) for g in sorted(R)))

    def atom_key(self, x, window):
        inv = self.invariant(x, window)
        return (x.dim, tuple(-f for f in inv[1]) if len(inv) > 1 else ())

    def find_equivariant_iso(self, x, rx, y, ry):
        if x.dim != y.dim:
            return None
        if x.dim == 0:
            return Mor(x, y, ())
        gs = list(rx)
        As = [np.array(rx[g].data, dtype=np.int64).reshape(x.dim, x.dim) for g in gs]
        Bs = [np.array(ry[g].data, dtype=np.int64).reshape(y.dim, y.dim) for g in gs]
        T = _intertwining_iso(As, Bs, self.p, x.dim)
        return None if T is None else Mor(x, y, _t(T))

    def fixed_candidates(self, window, bound):
        """Cyclic submodules spanned by orbits of vectors on the leading window copies.

        Generating vectors live on the first ``generator_copies`` copies of each
        transitive piece.
        Sums of these are produced by the component-monoid closure.  With
        ``two_generated`` the spans of pairs of cyclic submodules are added too.
        """
        G, p = window.group, self.p
        ncls = len({cid for cid, _ in window.copies})
        copies = len(window.copies) // max(ncls, 1)
        c = min(copies, bound, self.generator_copies)
        labels = sorted(l for _, lab in window.copies[:c * ncls] for l in lab)
        pos = {l: j for j, l in enumerate(labels)}
        perms = [[pos[window.act(g, l)] for l in labels] for g in G.elements]
        seen = set()
        cyclic = []
        for vals in itertools.product(range(p), repeat=len(labels)):
            nz = next((v for v in vals if v), 0)
            if nz != 1:
                continue
            orbit = []
            for perm in perms:
                w = [0] * len(labels)
                for j, v in enumerate(vals):
                    w[perm[j]] = v
                orbit.append(w)
            s = make_sub(orbit, labels, p)
            if s.dim <= bound and s not in seen:
                seen.add(s)
                cyclic.append((s, orbit))
        yield self.zero()
        yield from (s for s, _ in cyclic)
        if self.two_generated:
            for (a, oa), (b, ob) in itertools.combinations(cyclic, 2):
                s = make_sub(oa + ob, labels, p)
                if s.dim <= bound and s not in seen:
                    seen.add(s)
                    yield s

    def describe(self, x, window=None):
        inv = self.invariant(x, window) if window is not None else (x.dim,)
        if len(inv) == 1:
            return f"F{self.p}^{x.dim}"
        return f"dim {x.dim}, fixed dims {list(inv[1])}"

    def to_matrix_module(self, x, window):
        return MatrixModule(window.group, self.p, self.rho(x, window))


def _fixed_dims(As, p):
    d = As[0].shape[0] if As else 0
    eye = np.eye(d, dtype=np.int64)
    return [d - modp.rank((A - eye) % p, p) for A in As]


def _intertwining_iso(As, Bs, p, d):
    if _fixed_dims(As, p) != _fixed_dims(Bs, p):
        return None
    space = modp.intertwiner_space(As, Bs, p, d, d)
    return modp.find_invertible_combination(space, p)


def _square(m):
    m = np.asarray(m, dtype=np.int64)
    return np.zeros((0, 0), dtype=np.int64) if m.size == 0 else np.atleast_2d(m)


class MatrixModule:
    """A module over F_p[G] given by ``mats[g]`` (d x d) for every element g."""

    def __init__(self, G, p, mats, check=True):
        self.G, self.p = G, p
        self.mats = {g: _square(m) % p for g, m in mats.items()}
        d = {m.shape[0] for m in self.mats.values()}
        self.dim = d.pop() if d else 0
        if check:
            self.validate()

    def __repr__(self):
        return f"MatrixModule({self.G.name}, F{self.p}, dim={self.dim})"

    def validate(self):
        G, p = self.G, self.p
        if set(self.mats) != set(G.elements):
            raise ValueError("one matrix per group element expected")
        if not (self.mats[G.identity] == np.eye(self.dim, dtype=np.int64)).all():
            raise ValueError("identity must act trivially")
        for g in G.elements:
            for h in G.elements:
                if not ((self.mats[g] @ self.mats[h]) % p == self.mats[G.mult[g][h]]).all():
                    raise ValueError("matrices do not form a representation")
        return True

    @classmethod
    def from_generators(cls, G, p, gen_mats):
        """Extend matrices given on some generating elements to the whole group."""
        d = np.asarray(next(iter(gen_mats.values()))).shape[0]
        table = {G.identity: np.eye(d, dtype=np.int64)}
        frontier = [G.identity]
        while frontier:
            nxt = []
            for g in frontier:
                for s, m in gen_mats.items():
                    h = G.mult[g][s]
                    val = table[g] @ np.asarray(m, dtype=np.int64) % p
                    if h not in table:
                        table[h] = val
                        nxt.append(h)
            frontier = nxt
        return cls(G, p, table)

    @classmethod
    def trivial(cls, G, p, d=1):
        return cls(G, p, {g: np.eye(d, dtype=np.int64) for g in G.elements})

    @classmethod
    def sign(cls, G, p, kernel):
        """The character G -> {1, -1} with the given index-2 kernel."""
        K = set(kernel)
        return cls(G, p, {g: np.array([[1 if g in K else p - 1]]) for g in G.elements})

    @classmethod
    def permutation(cls, X, p):
        n = X.size
        mats = {}
        for g in X.group.elements:
            M = np.zeros((n, n), dtype=np.int64)
            for i in range(n):
                M[X.action[g][i], i] = 1
            mats[g] = M
        return cls(X.group, p, mats, check=False)

    @classmethod
    def regular(cls, G, p):
        from ..gsets import coset_gset
        return cls.permutation(coset_gset(G, G.trivial), p)

    def restrict(self, alpha):
        return MatrixModule(alpha.source, self.p, {k: self.mats[alpha.image[k]] for k in alpha.source.elements},
                            check=False)

    def direct_sum(self, other):
        d1, d2 = self.dim, other.dim
        mats = {}
        for g in self.G.elements:
            M = np.zeros((d1 + d2, d1 + d2), dtype=np.int64)
            M[:d1, :d1] = self.mats[g]
            M[d1:, d1:] = other.mats[g]
            mats[g] = M
        return MatrixModule(self.G, self.p, mats, check=False)

    def induce(self, iota):
        """F_p[G] tensored over F_p[H] with self, for an injective iota: H -> G."""
        H, G = iota.source, iota.target
        back = {x: i for i, x in enumerate(iota.image)}
        Himg = Subgroup(G, iota.image)
        reps = left_coset_reps(G, Himg)
        where = {}
        for i, r in enumerate(reps):
            for h in Himg:
                where[G.mult[r][h]] = (i, h)
        d, k = self.dim, len(reps)
        mats = {}
        for g in G.elements:
            M = np.zeros((k * d, k * d), dtype=np.int64)
            for i, r in enumerate(reps):
                j, h = where[G.mult[g][r]]
                M[j * d:(j + 1) * d, i * d:(i + 1) * d] = self.mats[back[h]]
            mats[g] = M % self.p
        return MatrixModule(G, self.p, mats, check=False)

    def fixed_dims(self):
        return _fixed_dims([self.mats[g] for g in self.G.elements], self.p)

    def to_json(self):
        return {"field": self.p, "group": self.G.name,
                "generators": {str(g): self.mats[g].tolist() for g in generators(self.G)}}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        G = by_name(data["group"])
        gens = {int(g): np.array(m, dtype=np.int64) for g, m in data["generators"].items()}
        M = cls.from_generators(G, int(data["field"]), gens)
        return M


def module_iso_witness(M1, M2):
    """An invertible intertwiner M1 -> M2, or None."""
    cap = caps().dim
    if max(M1.dim, M2.dim) > cap:
        raise DimCapExceeded(f"module dimension {max(M1.dim, M2.dim)} exceeds cap {cap}")
    if M1.G is not M2.G or M1.p != M2.p:
        raise ValueError("modules over different groups or fields")
    if M1.dim != M2.dim:
        return None
    if M1.dim == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if M1.fixed_dims() != M2.fixed_dims():
        return None
    gens = generators(M1.G)
    return _intertwining_iso([M1.mats[g] for g in gens], [M2.mats[g] for g in gens], M1.p, M1.dim)


def module_iso_test(M1, M2):
    return module_iso_witness(M1, M2) is not None


def module_classes(G, p, max_dim):
    """Isomorphism classes of F_p[G]-modules of dimension <= max_dim, by brute force over GL_d."""
    gens = generators(G)
    out = []
    for d in range(1, max_dim + 1):
        cands = list(modp.all_invertible(d, p))
        for imgs in itertools.product(cands, repeat=len(gens)):
            try:
                M = MatrixModule.from_generators(G, p, dict(zip(gens, imgs)))
                M.validate()
            except ValueError:
                continue
            if not any(module_iso_test(M, N) for N in out if N.dim == d):
                out.append(M)
    return out


def indecomposable_classes(G, p, max_dim):
    """Classes not isomorphic to a sum of two smaller classes."""
    allc = module_classes(G, p, max_dim)
    sums = []
    for a, b in itertools.combinations_with_replacement(allc, 2):
        if a.dim + b.dim <= max_dim:
            sums.append(a.direct_sum(b))
    return [M for M in allc if not any(S.dim == M.dim and module_iso_test(M, S) for S in sums)]


def restrict_to_trivial(M):
    return M.restrict(GroupHom(by_name("C1"), M.G, [M.G.identity]))
