"""Reduced and relative simplicial homology over prime fields.

Everything works with the augmented chain complex: the empty face sits in
degree -1, so the complex ``{∅}`` has one-dimensional reduced homology in
degree -1 while the void complex (no faces at all) has none.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import NotPrimeError
from .lattice import SimplicialComplex

DENSE_COLUMN_LIMIT = 5000

HomologyVector = dict[int, int]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    k = 3
    while k * k <= p:
        if p % k == 0:
            return False
        k += 2
    return True


def require_prime(p: int) -> None:
    if not isinstance(p, (int, np.integer)) or not is_prime(int(p)):
        raise NotPrimeError(f"{p} is not a prime")


def _rank_dense(A: np.ndarray, p: int) -> int:
    A = np.array(A, dtype=np.int64) % p
    m, n = A.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = (A[r] * pow(int(A[r, c]), -1, p)) % p
        below = r + 1 + np.flatnonzero(A[r + 1 :, c])
        if below.size:
            A[below] = (A[below] - np.outer(A[below, c], A[r])) % p
        r += 1
    return r


def rank_mod_p_sparse(rows: Iterable[dict[int, int]], p: int) -> int:
    """Rank over F_p of a matrix given as sparse rows ``{column: value}``."""
    require_prime(p)
    pivots: dict[int, dict[int, int]] = {}
    for raw in rows:
        row = {c: v % p for c, v in raw.items() if v % p}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(row[c], -1, p)
                pivots[c] = {k: v * inv % p for k, v in row.items()}
                break
            f = row[c]
            for k, v in piv.items():
                nv = (row.get(k, 0) - f * v) % p
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return len(pivots)


def rank_mod_p(matrix, p: int) -> int:
    """Exact rank of an integer matrix reduced mod the prime ``p``."""
    require_prime(p)
    A = np.asarray(matrix, dtype=np.int64)
    if A.ndim != 2 or A.size == 0:
        return 0
    if A.shape[1] > DENSE_COLUMN_LIMIT:
        return rank_mod_p_sparse(
            ({int(c): int(A[i, c]) for c in np.flatnonzero(A[i])} for i in range(A.shape[0])), p
        )
    return _rank_dense(A, p)


class _ChainData:
    """Faces grouped by dimension with boundary ranks over one prime."""

    def __init__(self, faces: Iterable[frozenset], vertex_order: Sequence, p: int):
        pos = {v: k for k, v in enumerate(vertex_order)}
        self.by_dim: dict[int, list[tuple]] = {}
        for F in faces:
            key = tuple(sorted(F, key=pos.__getitem__))
            self.by_dim.setdefault(len(F) - 1, []).append(key)
        for k in self.by_dim:
            self.by_dim[k].sort(key=lambda t: [pos[v] for v in t])
        self.p = p

    def count(self, k: int) -> int:
        return len(self.by_dim.get(k, ()))

    def boundary_rank(self, k: int) -> int:
        """Rank of the boundary from dimension k to k-1, faces missing from the basis dropped."""
        src = self.by_dim.get(k, [])
        tgt = self.by_dim.get(k - 1, [])
        if not src or not tgt:
            return 0
        tidx = {t: i for i, t in enumerate(tgt)}
        if len(src) > DENSE_COLUMN_LIMIT:
            rows = []
            for face in src:
                row = {}
                for s in range(len(face)):
                    j = tidx.get(face[:s] + face[s + 1 :])
                    if j is not None:
                        row[j] = 1 if s % 2 == 0 else -1
                rows.append(row)
            # rank(A) = rank(A^T): sparse rows are the source faces
            return rank_mod_p_sparse(rows, self.p)
        M = np.zeros((len(tgt), len(src)), dtype=np.int64)
        for c, face in enumerate(src):
            for s in range(len(face)):
                j = tidx.get(face[:s] + face[s + 1 :])
                if j is not None:
                    M[j, c] = 1 if s % 2 == 0 else -1
        return _rank_dense(M, self.p)

    def homology(self, lo: int, hi: int) -> HomologyVector:
        ranks = {k: self.boundary_rank(k) for k in range(lo, hi + 2)}
        return {k: self.count(k) - ranks[k] - ranks[k + 1] for k in range(lo, hi + 1)}


def reduced_homology_dims(K: SimplicialComplex, p: int) -> HomologyVector:
    """dim of reduced homology of ``K`` over F_p, degrees -1..dim K."""
    require_prime(p)
    if K.is_void():
        return {}
    data = _ChainData(K.faces, K.vertices, p)
    return data.homology(-1, K.dimension)


def relative_homology_dims(K: SimplicialComplex, K0: SimplicialComplex, p: int) -> HomologyVector:
    """dim of H_k(K, K0; F_p) from the quotient of augmented chain complexes."""
    require_prime(p)
    if not K0.is_subcomplex_of(K):
        raise ValueError("K0 is not a subcomplex of K")
    rel = [F for F in K.faces if F not in K0.faces]
    if not rel:
        return {k: 0 for k in range(-1, max(K.dimension, -1) + 1)}
    data = _ChainData(rel, K.vertices, p)
    return data.homology(-1, K.dimension)


def euler_characteristic(K: SimplicialComplex) -> int:
    """Reduced Euler characteristic, counting the empty face in degree -1."""
    return sum((-1) ** k * c for k, c in K.f_vector().items())


def cone(K: SimplicialComplex, apex) -> SimplicialComplex:
    faces = set(K.faces) | {F | {apex} for F in K.faces}
    return SimplicialComplex(K.vertices + (apex,), frozenset(faces))
