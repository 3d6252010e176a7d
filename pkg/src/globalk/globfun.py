"""Global functors tabulated on a finite window of groups.

A functor assigns to each window group K a list of atoms (a basis) and to each
canonical transitive biset term t in A+(G, K) an integer matrix M[t]: M(G) -> M(K).
Matrices are produced lazily by an evaluator and cached.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field

import numpy as np

from . import bisets as bs
from .errors import BadSelector, NonCancellative, WindowMiss
from .groups import (GroupHom, Subgroup, all_subgroups, by_name, conjugacy_classes_of_subgroups,
                     conjugate, double_cosets, find_isomorphism, subgroup_class_names)
from .gsets import coset_gset, decompose, induce, orbits_and_stabilizers, restrict_along, sub_gset


class GroupWindow:
    """A finite list of groups on which functors are tabulated."""

    def __init__(self, groups):
        groups = [by_name(g) if isinstance(g, str) else g for g in groups]
        self.groups = groups
        self.by_name = {G.name: G for G in groups}
        if len(self.by_name) != len(groups):
            raise ValueError("window groups must have distinct names")
        self._reps = {}

    @classmethod
    def parse(cls, text):
        return cls([s for s in text.split(",") if s.strip()])

    def __iter__(self):
        return iter(self.groups)

    def __len__(self):
        return len(self.groups)

    def __contains__(self, G):
        return any(G is W for W in self.groups)

    def names(self):
        return [G.name for G in self.groups]

    def get(self, G):
        if isinstance(G, str):
            if G in ("e", "1"):
                G = "C1"
            if G not in self.by_name:
                raise WindowMiss(f"{G} is not in the window {self.names()}")
            return self.by_name[G]
        if G not in self:
            raise WindowMiss(f"{G.name} is not in the window {self.names()}")
        return G

    def terms(self, G, K):
        """Canonical basis of A+(G, K): transitive right-free K-G-bisets."""
        return bs.terms(K, G)

    def rep_of(self, H):
        """A window group W and an isomorphism theta: W -> H, as a tuple of parent elements."""
        key = (id(H.parent), H.elements)
        if key not in self._reps:
            P = H.parent
            if P in self and len(H) == P.order:
                self._reps[key] = (P, tuple(range(P.order)))
            else:
                Hg, inc = H.as_group()
                for W in self.groups:
                    f = find_isomorphism(W, Hg)
                    if f is not None:
                        self._reps[key] = (W, tuple(inc.image[f.image[w]] for w in W.elements))
                        break
                else:
                    raise WindowMiss(f"no window group is isomorphic to a subgroup of order {len(H)} of {P.name}")
        return self._reps[key]

    def subgroup_closed(self):
        try:
            for G in self.groups:
                for H in all_subgroups(G):
                    self.rep_of(H)
        except WindowMiss:
            return False
        return True


def transfer_term(window, A, B):
    """tr_A^B for subgroups A <= B of a common group, as (W_A, W_B, term in A+(W_A, W_B))."""
    WA, thA = window.rep_of(A)
    WB, thB = window.rep_of(B)
    backA = {x: w for w, x in enumerate(thA)}
    L = [w for w in WB.elements if thB[w] in A]
    t = bs.canonical_term(WB, WA, L, [backA[thB[l]] for l in L])
    return WA, WB, t


def restriction_term(window, A, B, beta):
    """Restriction along beta: A -> B (a dict on elements), as (W_B, W_A, term in A+(W_B, W_A))."""
    WA, thA = window.rep_of(A)
    WB, thB = window.rep_of(B)
    backB = {x: w for w, x in enumerate(thB)}
    alpha = [backB[beta[thA[w]]] for w in WA.elements]
    t = bs.canonical_term(WA, WB, list(WA.elements), alpha)
    return WB, WA, t


class GlobalFunctor:
    """Atoms per window group plus a cached matrix for every canonical term."""

    def __init__(self, window, atoms, evaluator, name="M", integral=True):
        self.window = window
        self.atoms = {k: list(v) for k, v in atoms.items()}
        self._evaluator = evaluator
        self.name = name
        self.integral = integral
        self._ops = {}
        self._overrides = {}

    def __repr__(self):
        return f"{type(self).__name__}({self.name}, ranks={self.ranks()})"

    def rank(self, G):
        return len(self.atoms[self.window.get(G).name])

    def ranks(self):
        return [len(self.atoms[G.name]) for G in self.window]

    def op(self, G, K, t):
        """The matrix M[t]: M(G) -> M(K) for a canonical term t in A+(G, K)."""
        G, K = self.window.get(G), self.window.get(K)
        key = (G.name, K.name, t)
        if key in self._overrides:
            return self._overrides[key]
        if key not in self._ops:
            m = np.asarray(self._evaluator(G, K, t), dtype=np.int64)
            m = m.reshape(len(self.atoms[K.name]), len(self.atoms[G.name]))
            m.flags.writeable = False
            self._ops[key] = m
        return self._ops[key]

    def matrix(self, S):
        """M[S] for a BisetClass S (a K-G-biset), summed over its terms."""
        G, K = S.G, S.K
        out = np.zeros((self.rank(K), self.rank(G)), dtype=np.int64)
        for t, n in S.terms.items():
            out += n * self.op(G, K, t)
        return out

    def apply(self, S, x):
        return self.matrix(S) @ np.asarray(x, dtype=np.int64)

    def with_override(self, G, K, t, matrix, name=None):
        """A copy whose matrix for one term is replaced (used as a negative control)."""
        M = GlobalFunctor(self.window, self.atoms, self._evaluator, name or self.name + "*", self.integral)
        M._ops = self._ops
        M._overrides = dict(self._overrides)
        M._overrides[(self.window.get(G).name, self.window.get(K).name, t)] = np.asarray(matrix, dtype=np.int64)
        return M

    def all_terms(self):
        for G in self.window:
            for K in self.window:
                for t in self.window.terms(G, K):
                    yield G, K, t

    def materialize(self):
        for G, K, t in self.all_terms():
            self.op(G, K, t)
        return self

    def _sub(self, G, H):
        """Accept a Subgroup, or a group (name) meaning the least subgroup of G isomorphic to it."""
        if isinstance(H, Subgroup):
            return H
        H = by_name(H) if isinstance(H, str) else H
        for S in sorted(all_subgroups(G)):
            if len(S) == H.order and find_isomorphism(S.as_group()[0], H) is not None:
                return S
        raise BadSelector(f"{G.name} has no subgroup isomorphic to {H.name}")

    def res(self, G, H):
        """res^G_H for a subgroup H of a window group G, in window coordinates."""
        G = self.window.get(G)
        H = self._sub(G, H)
        WG, WH, t = restriction_term(self.window, H, G.whole, {h: h for h in H})
        return self.op(WG, WH, t)

    def tr(self, G, H):
        G = self.window.get(G)
        H = self._sub(G, H)
        WH, WG, t = transfer_term(self.window, H, G.whole)
        return self.op(WH, WG, t)

    # ---------------------------------------------------------------- export

    def to_json(self):
        win = self.window
        data = {"schema": 1, "name": self.name, "window": win.names(),
                "values": {G.name: {"rank": self.rank(G), "atoms": self.atoms[G.name]} for G in win},
                "restrictions": {}, "transfers": {}, "operations": []}
        for G in win:
            names = subgroup_class_names(G)
            for i, H in enumerate(conjugacy_classes_of_subgroups(G).representatives):
                try:
                    data["restrictions"][f"{G.name}>{names[i]}"] = self.res(G, H).tolist()
                    data["transfers"][f"{names[i]}<{G.name}"] = self.tr(G, H).tolist()
                except WindowMiss:
                    continue
        for G, K, t in self.all_terms():
            data["operations"].append({"source": G.name, "target": K.name, "L": list(t.L),
                                       "alpha": list(t.alpha), "matrix": self.op(G, K, t).tolist()})
        return data

    def ranks_csv(self):
        lines = ["group,rank"] + [f"{G.name},{self.rank(G)}" for G in self.window]
        return "\n".join(lines) + "\n"


class PreGlobalFunctor(GlobalFunctor):
    """Same data with non-negative coefficients (values are free commutative monoids)."""

    def __init__(self, window, atoms, evaluator, name="M", cancellative=True, diagnostics=None):
        super().__init__(window, atoms, evaluator, name, integral=False)
        self.cancellative = cancellative
        self.diagnostics = diagnostics or []


def group_complete(P):
    if not getattr(P, "cancellative", True):
        raise NonCancellative("; ".join(P.diagnostics) or "value monoid is not cancellative")
    for G, K, t in P.all_terms():
        if (P.op(G, K, t) < 0).any():
            raise ValueError("pre-global functor has negative coefficients")
    M = GlobalFunctor(P.window, P.atoms, P._evaluator, P.name, integral=True)
    M._ops = dict(P._ops)
    return M


# ---------------------------------------------------------------- distinguished functors

def zero_functor(window):
    return GlobalFunctor(window, {G.name: [] for G in window}, lambda G, K, t: np.zeros((0, 0)), "0")


def constant_functor(window, name="Z"):
    """Value Z everywhere, restrictions identity, tr_L^K multiplication by the index."""
    def ev(G, K, t):
        return [[K.order // len(t.L)]]
    return GlobalFunctor(window, {G.name: ["1"] for G in window}, ev, name)


def term_label(K, G, t):
    names = subgroup_class_names(K)
    sc = conjugacy_classes_of_subgroups(K)
    return f"({names[sc.class_of(Subgroup(K, t.L))]},{''.join(map(str, t.alpha))}->{G.name})"


def free_global_functor_A(G, window):
    """A_G: basis at K is the canonical terms of A+(G, K); operations by composition."""
    atoms = {K.name: [term_label(K, G, s) for s in bs.terms(K, G)] for K in window}

    def ev(Ksrc, Ktgt, t):
        basis_t = bs.terms(Ktgt, G)
        idx = {s: i for i, s in enumerate(basis_t)}
        cols = []
        for s in bs.terms(Ksrc, G):
            v = np.zeros(len(basis_t), dtype=np.int64)
            for u, n in bs.compose_terms(Ktgt, Ksrc, G, t, s).terms.items():
                v[idx[u]] += n
            cols.append(v)
        return np.array(cols, dtype=np.int64).T if cols else np.zeros((len(basis_t), 0))

    return GlobalFunctor(window, atoms, ev, f"A_{G.name}")


def universal_element(G, window):
    """The class of _G G_G in A_G(G)."""
    basis = bs.terms(G, G)
    v = np.zeros(len(basis), dtype=np.int64)
    v[basis.index(bs.canonical_term(G, G, list(G.elements), list(G.elements)))] = 1
    return v


def burnside_type_B(Gamma, window):
    """B_Gamma: basis at K is the subgroup classes of K x Gamma; res by restriction, tr by induction."""
    prod = {K.name: bs.product_group(K, Gamma) for K in window}
    atoms = {}
    for K in window:
        P = prod[K.name]
        names = subgroup_class_names(P) if P.order <= 48 else None
        atoms[K.name] = [f"{K.name}x{Gamma.name}/{names[i]}" if names else f"{K.name}x{Gamma.name}/#{i}"
                         for i in range(len(conjugacy_classes_of_subgroups(P)))]
    nG = Gamma.order

    def ev(Ksrc, Ktgt, t):
        Psrc, Ptgt = prod[Ksrc.name], prod[Ktgt.name]
        L = Subgroup(Ktgt, t.L)
        Lg, inc = L.as_group()
        amap = t.alpha_map()
        LG = bs.product_group(Lg, Gamma)
        down = GroupHom(LG, Psrc, [amap[inc.image[x // nG]] * nG + x % nG for x in LG.elements])
        up = GroupHom(LG, Ptgt, [inc.image[x // nG] * nG + x % nG for x in LG.elements])
        cols = []
        for D in conjugacy_classes_of_subgroups(Psrc).representatives:
            Y = restrict_along(down, coset_gset(Psrc, D))
            v = np.zeros(len(atoms[Ktgt.name]), dtype=np.int64)
            for orb, _ in orbits_and_stabilizers(Y):
                v += decompose(induce(up, sub_gset(Y, orb))).vector()
            cols.append(v)
        return np.array(cols, dtype=np.int64).T

    return GlobalFunctor(window, atoms, ev, f"B_{Gamma.name}")


def burnside_by_marks(window):
    """The Burnside functor with operations derived from tables of marks alone."""
    from .gsets import table_of_marks
    atoms = {K.name: [f"{K.name}/{n}" for n in subgroup_class_names(K)] for K in window}

    def fixed_count(G, D, J):
        # |(G/D)^J|
        return sum(1 for x in _cosets(G, D) if all(G.mult[G.mult[G.inv[x]][j]][x] in D for j in J))

    def ev(Ksrc, Ktgt, t):
        sc_t = conjugacy_classes_of_subgroups(Ktgt)
        sc_s = conjugacy_classes_of_subgroups(Ksrc)
        L = Subgroup(Ktgt, t.L)
        amap = t.alpha_map()
        tom = table_of_marks(Ktgt)
        cols = []
        for D in sc_s.representatives:
            phi = []
            for J in sc_t.representatives:
                total = 0
                for k in _cosets(Ktgt, L):
                    Jk = [Ktgt.conj(Ktgt.inv[k], j) for j in J]
                    if all(x in L for x in Jk):
                        total += fixed_count(Ksrc, D, {amap[x] for x in Jk})
                phi.append(total)
            cols.append(_solve_marks(tom, phi, [len(H) for H in sc_t.representatives]))
        return np.array(cols, dtype=np.int64).T

    return GlobalFunctor(window, atoms, ev, "Burnside(marks)")


def _cosets(G, H):
    from .groups import left_coset_reps
    return left_coset_reps(G, H)


def _solve_marks(tom, phi, sizes):
    """Solve phi_H = sum_K c_K tom[K][H], processing larger subgroups first."""
    n = len(phi)
    c = [0] * n
    for h in sorted(range(n), key=lambda i: -sizes[i]):
        rest = phi[h] - sum(c[k] * int(tom[k][h]) for k in range(n) if k != h)
        q, r = divmod(rest, int(tom[h][h]))
        if r:
            raise ArithmeticError("marks vector is not integral")
        c[h] = q
    return c


def direct_sum(functors, name=None):
    window = functors[0].window
    atoms = {G.name: [f"{i}:{a}" for i, F in enumerate(functors) for a in F.atoms[G.name]] for G in window}

    def ev(G, K, t):
        blocks = [F.op(G, K, t) for F in functors]
        rows = sum(b.shape[0] for b in blocks)
        cols = sum(b.shape[1] for b in blocks)
        out = np.zeros((rows, cols), dtype=np.int64)
        r = c = 0
        for b in blocks:
            out[r:r + b.shape[0], c:c + b.shape[1]] = b
            r += b.shape[0]
            c += b.shape[1]
        return out

    return GlobalFunctor(window, atoms, ev, name or " + ".join(F.name for F in functors))


# ---------------------------------------------------------------- reports

@dataclass
class Report:
    name: str
    entries: list = field(default_factory=list)

    def add(self, axiom, where, ok, detail=""):
        self.entries.append((axiom, where, bool(ok), detail))

    @property
    def passed(self):
        return all(e[2] for e in self.entries)

    def failures(self):
        return [e for e in self.entries if not e[2]]

    def counts(self):
        out = {}
        for ax, _, ok, _ in self.entries:
            p, f = out.get(ax, (0, 0))
            out[ax] = (p + ok, f + (not ok))
        return out

    def summary(self):
        lines = [f"{self.name}: {'PASS' if self.passed else 'FAIL'}"]
        for ax, (p, f) in sorted(self.counts().items()):
            lines.append(f"  {ax}: {p} passed, {f} failed")
        for ax, where, _, detail in self.failures()[:5]:
            lines.append(f"  first failure [{ax}] at {where}: {detail}")
        return "\n".join(lines)

    def to_json(self):
        return {"name": self.name, "passed": self.passed,
                "counts": {k: {"passed": p, "failed": f} for k, (p, f) in sorted(self.counts().items())},
                "failures": [{"axiom": a, "where": w, "detail": d} for a, w, _, d in self.failures()]}


def verify_axioms(M, groups=None, composition=False, composition_samples=None, seed=0):
    """Check identity, inner automorphisms, transitivity, additivity and the double coset formula.

    ``groups`` restricts the subgroup sweeps to the named window groups; composition
    against biset composition is optional (sampled when ``composition_samples`` is set).
    """
    W = M.window
    rep = Report(f"axioms[{M.name}]")
    groups = [W.get(g) for g in groups] if groups else list(W)
    for G in groups:
        ident = bs.canonical_term(G, G, list(G.elements), list(G.elements))
        I = np.eye(M.rank(G), dtype=np.int64)
        rep.add("identity", G.name, np.array_equal(M.op(G, G, ident), I))
        for g in G.elements:
            WG, _, t = restriction_term(W, G.whole, G.whole, {x: G.conj(g, x) for x in G.elements})
            rep.add("inner automorphism", f"{G.name} g={g}", np.array_equal(M.op(G, G, t), I))
        subs = all_subgroups(G)
        try:
            for H in subs:
                W.rep_of(H)
        except WindowMiss as exc:
            rep.add("window closed under subgroups", G.name, False, str(exc))
            continue
        for A in subs:
            for B in subs:
                if not A.issubset(B):
                    continue
                for C in subs:
                    if not B.issubset(C):
                        continue
                    lhs = _tr(M, B, C) @ _tr(M, A, B)
                    rep.add("transfer transitivity", f"{G.name} {len(A)}<={len(B)}<={len(C)}",
                            np.array_equal(lhs, _tr(M, A, C)))
                    lhs = _res(M, A, B) @ _res(M, B, C)
                    rep.add("restriction transitivity", f"{G.name} {len(A)}<={len(B)}<={len(C)}",
                            np.array_equal(lhs, _res(M, A, C)))
        for H in subs:
            for K in subs:
                ok, detail = _double_coset(M, G, K, H)
                rep.add("double coset", f"{G.name} K={list(K.elements)} H={list(H.elements)}", ok, detail)
    rng = random.Random(seed)
    for G in groups:
        for K in W:
            ts = W.terms(G, K)
            pairs = list(itertools.combinations_with_replacement(ts, 2))
            for t1, t2 in rng.sample(pairs, min(len(pairs), 10)):
                S = bs.BisetClass(K, G, {t1: 1}) + bs.BisetClass(K, G, {t2: 1})
                rep.add("additivity", f"{G.name}->{K.name}",
                        np.array_equal(M.matrix(S), M.op(G, K, t1) + M.op(G, K, t2)))
    if composition:
        triples = [(A, B, C) for A in W for B in W for C in W]
        cases = [(A, B, C, s, t) for A, B, C in triples for s in W.terms(A, B) for t in W.terms(B, C)]
        if composition_samples is not None and len(cases) > composition_samples:
            cases = rng.sample(cases, composition_samples)
        for A, B, C, s, t in cases:
            comp = bs.compose_terms(C, B, A, t, s)
            rhs = M.matrix(comp)
            rep.add("composition", f"{A.name}->{B.name}->{C.name}",
                    np.array_equal(M.op(B, C, t) @ M.op(A, B, s), rhs))
    return rep


def _tr(M, A, B):
    WA, WB, t = transfer_term(M.window, A, B)
    return M.op(WA, WB, t)


def _res(M, A, B, beta=None):
    beta = beta or {a: a for a in A}
    WB, WA, t = restriction_term(M.window, A, B, beta)
    return M.op(WB, WA, t)


def _double_coset(M, G, K, H):
    lhs = _res(M, K, G.whole) @ _tr(M, H, G.whole)
    rhs = np.zeros_like(lhs)
    for g in double_cosets(G, K, H):
        Hg = conjugate(G, H, g)                       # g H g^-1
        KH = Subgroup(G, [x for x in K if x in Hg])   # K cap gHg^-1
        gi = G.inv[g]
        Kg = conjugate(G, K, gi)                      # g^-1 K g
        KgH = Subgroup(G, [x for x in Kg if x in H])
        cstar = _res(M, KH, KgH, {x: G.conj(gi, x) for x in KH})
        rhs = rhs + _tr(M, KH, K) @ cstar @ _res(M, KgH, H)
    ok = np.array_equal(lhs, rhs)
    return ok, "" if ok else f"lhs={lhs.tolist()} rhs={rhs.tolist()}"


# ---------------------------------------------------------------- morphisms

def represent_to_morphism(M, G, x):
    """The morphism A_G -> M sending the universal class to x: (L, alpha) |-> tr_L^K alpha^*(x)."""
    W = M.window
    G = W.get(G)
    x = np.asarray(x, dtype=np.int64)
    return {K.name: np.array([M.op(G, K, s) @ x for s in bs.terms(K, G)], dtype=np.int64).T.reshape(M.rank(K), -1)
            for K in W}


def check_naturality(A, M, f):
    """f: dict of matrices A(K) -> M(K); returns a Report over all window terms."""
    rep = Report(f"naturality[{A.name}->{M.name}]")
    for G, K, t in A.all_terms():
        ok = np.array_equal(M.op(G, K, t) @ f[G.name], f[K.name] @ A.op(G, K, t))
        rep.add("naturality", f"{G.name}->{K.name} {t}", ok)
    return rep


@dataclass
class IsoReport:
    isomorphic: bool
    bijection: dict = None
    obstruction: str = ""

    def to_json(self):
        return {"isomorphic": self.isomorphic, "bijection": self.bijection, "obstruction": self.obstruction}


def _signature(F, K, a, window):
    sig = []
    for G in window:
        for t in window.terms(K, G):
            sig.append(("out", G.name, t, tuple(sorted(F.op(K, G, t)[:, a].tolist()))))
        for t in window.terms(G, K):
            sig.append(("in", G.name, t, tuple(sorted(F.op(G, K, t)[a, :].tolist()))))
    return tuple(sig)


def compare_functors(M, N, matching=None, cap=math.factorial(10)):
    """Search (or check) per-group atom bijections intertwining every window matrix.

    A bijection maps atom index i of M(K) to atom index bij[K][i] of N(K).
    """
    W = M.window
    if N.window.names() != W.names():
        return IsoReport(False, obstruction="different windows")
    for K in W:
        if M.rank(K) != N.rank(K):
            return IsoReport(False, obstruction=f"rank at {K.name}: {M.rank(K)} vs {N.rank(K)}")
    if matching is not None:
        bij = {k: list(v) for k, v in matching.items()}
        ok, why = _intertwines(M, N, bij, list(W))
        return IsoReport(ok, bij if ok else None, "" if ok else why)
    choices = []
    for K in W:
        sm = [_signature(M, K, a, W) for a in range(M.rank(K))]
        sn = [_signature(N, K, b, W) for b in range(N.rank(K))]
        if sorted(sm) != sorted(sn):
            return IsoReport(False, obstruction=f"atom signatures differ at {K.name}")
        blocks = {}
        for a, s in enumerate(sm):
            blocks.setdefault(s, ([], []))[0].append(a)
        for b, s in enumerate(sn):
            blocks[s][1].append(b)
        count = 1
        for src, dst in blocks.values():
            count *= math.factorial(len(src))
        if count > cap:
            return IsoReport(False, obstruction=f"matching search at {K.name} exceeds cap")
        choices.append(list(_block_bijections(list(blocks.values()), M.rank(K))))
    groups = list(W)
    bij = {}

    def search(i):
        if i == len(groups):
            return True
        for cand in choices[i]:
            bij[groups[i].name] = cand
            if _intertwines(M, N, bij, groups[:i + 1])[0] and search(i + 1):
                return True
        del bij[groups[i].name]
        return False

    if search(0):
        return IsoReport(True, dict(bij))
    return IsoReport(False, obstruction="no atom bijection intertwines all operations")


def _block_bijections(blocks, n):
    per = [list(itertools.permutations(dst)) for src, dst in blocks]
    for combo in itertools.product(*per):
        out = [None] * n
        for (src, _), dst in zip(blocks, combo):
            for a, b in zip(src, dst):
                out[a] = b
        yield out


def _intertwines(M, N, bij, groups):
    W = M.window
    names = {G.name for G in groups}
    for G in groups:
        for K in groups:
            if G.name not in names or K.name not in names:
                continue
            pg = _perm(bij[G.name])
            pk = _perm(bij[K.name])
            for t in W.terms(G, K):
                if not np.array_equal(N.op(G, K, t) @ pg, pk @ M.op(G, K, t)):
                    return False, f"{G.name}->{K.name} term {t}"
    return True, ""


def _perm(p):
    P = np.zeros((len(p), len(p)), dtype=np.int64)
    for a, b in enumerate(p):
        P[b, a] = 1
    return P
