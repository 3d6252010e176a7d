"""Small dense linear algebra over a prime field F_p (numpy int64 arrays)."""

from __future__ import annotations

import itertools
import random

import numpy as np


def mat(rows, p):
    return np.asarray(rows, dtype=np.int64).reshape(len(rows), -1) % p if len(rows) else np.zeros((0, 0), np.int64)


def rref(A, p):
    """Reduced row echelon form; returns (R without zero rows, pivot columns)."""
    R = np.array(A, dtype=np.int64) % p
    rows, cols = R.shape
    piv = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if not len(nz):
            continue
        k = r + nz[0]
        if k != r:
            R[[r, k]] = R[[k, r]]
        R[r] = R[r] * pow(int(R[r, c]), -1, p) % p
        for i in range(rows):
            if i != r and R[i, c]:
                R[i] = (R[i] - R[i, c] * R[r]) % p
        piv.append(c)
        r += 1
    return R[:r], piv


def rank(A, p):
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref(A, p)[1])


def nullspace(A, p):
    """Basis (as rows) of {x : A x = 0}."""
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, piv = rref(A, p)
    free = [c for c in range(n) if c not in piv]
    out = []
    for f in free:
        v = np.zeros(n, dtype=np.int64)
        v[f] = 1
        for i, c in enumerate(piv):
            v[c] = (-R[i, f]) % p
        out.append(v)
    return np.array(out, dtype=np.int64).reshape(len(out), n)


def inverse(A, p):
    A = np.asarray(A, dtype=np.int64) % p
    n = A.shape[0]
    R, piv = rref(np.hstack([A, np.eye(n, dtype=np.int64)]), p)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ArithmeticError("matrix is singular")
    return R[:n, n:] % p


def is_invertible(A, p):
    A = np.asarray(A)
    return A.shape[0] == A.shape[1] and rank(A, p) == A.shape[0]


def intertwiner_space(As, Bs, p, dA=None, dB=None):
    """Basis of {T : T A_i = B_i T for all i}, each T of shape (dB, dA)."""
    dA = As[0].shape[0] if dA is None else dA
    dB = Bs[0].shape[0] if dB is None else dB
    blocks = [np.kron(np.eye(dB, dtype=np.int64), A.T) - np.kron(B, np.eye(dA, dtype=np.int64))
              for A, B in zip(As, Bs)]
    sys = np.vstack(blocks) % p if blocks else np.zeros((0, dA * dB), np.int64)
    N = nullspace(sys, p)
    return [v.reshape(dB, dA) for v in N]


def find_invertible_combination(basis, p, seed=0, tries=64, limit=200000):
    """An invertible matrix in the span of ``basis``, or None if there is none."""
    if not basis:
        return None
    d = basis[0].shape[0]
    if basis[0].shape != (d, d):
        return None
    stack = np.array(basis)
    rng = random.Random(seed)
    for _ in range(tries):
        c = np.array([rng.randrange(p) for _ in basis], dtype=np.int64)
        T = np.tensordot(c, stack, axes=1) % p
        if is_invertible(T, p):
            return T
    if p ** len(basis) > limit:
        return None
    for c in itertools.product(range(p), repeat=len(basis)):
        T = np.tensordot(np.array(c, dtype=np.int64), stack, axes=1) % p
        if is_invertible(T, p):
            return T
    return None


def all_invertible(d, p):
    for entries in itertools.product(range(p), repeat=d * d):
        M = np.array(entries, dtype=np.int64).reshape(d, d)
        if is_invertible(M, p):
            yield M


def subspaces(n, d, p):
    """All d-dimensional subspaces of F_p^n, as RREF row tuples."""
    for piv in itertools.combinations(range(n), d):
        free = [(i, c) for i in range(d) for c in range(piv[i] + 1, n) if c not in piv]
        for vals in itertools.product(range(p), repeat=len(free)):
            R = np.zeros((d, n), dtype=np.int64)
            for i, c in enumerate(piv):
                R[i, c] = 1
            for (i, c), v in zip(free, vals):
                R[i, c] = v
            yield R
