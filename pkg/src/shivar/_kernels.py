"""
Batch integer kernels.

Each kernel exists twice: an explicit-loop version compiled with numba
``@njit`` and a vectorised numpy version.  ``SHIVAR_NUMBA=0`` in the
environment forces the numpy path; otherwise numba is used when importable.
Both paths are exact (int64 only) and are compared in the test-suite and in
``benchmarks/bench_kernels.py``.

Row layout of every ``(N, m)`` batch is the global positive-root order of
:func:`shivar.algebra.positive_roots`.
"""

import os
from functools import lru_cache

import numpy as np

from .algebra import positive_roots, root_index

try:
    import numba
    from numba import njit, prange
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("SHIVAR_NUMBA", "1") != "0"
BACKEND = "numba" if USE_NUMBA else "numpy"

if HAVE_NUMBA and "NUMBA_THREADING_LAYER" not in os.environ:
    # the bundled TBB is too old and numba warns on every probe
    numba.config.THREADING_LAYER = "workqueue"

if USE_NUMBA and os.environ.get("SHIVAR_THREADS"):
    numba.set_num_threads(int(os.environ["SHIVAR_THREADS"]))


@lru_cache(maxsize=None)
def root_tables(n):
    """(I, J) endpoint arrays (0-based) and the triple index table.

    ``triples[t] = (idx(i,j), idx(j,k), idx(i,k))`` for every i < j < k.
    """
    roots = positive_roots(n)
    idx = root_index(n)
    I = np.array([i - 1 for i, _ in roots], dtype=np.int64)
    J = np.array([j - 1 for _, j in roots], dtype=np.int64)
    tri = [(idx[i, j], idx[j, k], idx[i, k])
           for i in range(1, n + 2) for j in range(i + 1, n + 2) for k in range(j + 1, n + 2)]
    triples = np.array(tri, dtype=np.int64).reshape(-1, 3)
    simple = np.array([idx[i, i + 1] for i in range(1, n + 1)], dtype=np.int64)
    return I, J, triples, simple


# --- numpy path -------------------------------------------------------------

def _floor_pairings_np(Y, D, I, J):
    return np.floor_divide(Y[:, I] - Y[:, J], D)


def _admitted_part_np(K, I, J, simple):
    # prefix sums of the simple coordinates: S[:, r] = sum_{q < r} x_{q,q+1}
    S = np.zeros((K.shape[0], simple.shape[0] + 1), dtype=np.int64)
    np.cumsum(K[:, simple], axis=1, out=S[:, 1:])
    return K - (S[:, J] - S[:, I])


def _admitted_mask_np(L, triples, simple):
    ok = np.all(L[:, simple] == 0, axis=1)
    if triples.shape[0]:
        s = L[:, triples[:, 0]] + L[:, triples[:, 1]]
        mid = L[:, triples[:, 2]]
        ok &= np.all((s <= mid) & (mid <= s + 1), axis=1)
    return ok


def _apply_signed_np(perm, sign, trans, X):
    return X[:, perm] * sign + trans


# --- numba path -------------------------------------------------------------

if HAVE_NUMBA:
    @njit(cache=True, parallel=True)
    def _floor_pairings_nb(Y, D, I, J):
        N = Y.shape[0]
        m = I.shape[0]
        out = np.empty((N, m), dtype=np.int64)
        for a in prange(N):
            for r in range(m):
                out[a, r] = (Y[a, I[r]] - Y[a, J[r]]) // D
        return out

    @njit(cache=True, parallel=True)
    def _admitted_part_nb(K, I, J, simple):
        N, m = K.shape
        n = simple.shape[0]
        out = np.empty((N, m), dtype=np.int64)
        for a in prange(N):
            S = np.zeros(n + 1, dtype=np.int64)
            for q in range(n):
                S[q + 1] = S[q] + K[a, simple[q]]
            for r in range(m):
                out[a, r] = K[a, r] - (S[J[r]] - S[I[r]])
        return out

    @njit(cache=True, parallel=True)
    def _admitted_mask_nb(L, triples, simple):
        N = L.shape[0]
        out = np.empty(N, dtype=np.bool_)
        for a in prange(N):
            ok = True
            for q in range(simple.shape[0]):
                if L[a, simple[q]] != 0:
                    ok = False
                    break
            if ok:
                for t in range(triples.shape[0]):
                    s = L[a, triples[t, 0]] + L[a, triples[t, 1]]
                    mid = L[a, triples[t, 2]]
                    if mid < s or mid > s + 1:
                        ok = False
                        break
            out[a] = ok
        return out

    @njit(cache=True, parallel=True)
    def _apply_signed_nb(perm, sign, trans, X):
        N, m = X.shape
        out = np.empty((N, m), dtype=np.int64)
        for a in prange(N):
            for r in range(m):
                out[a, r] = sign[r] * X[a, perm[r]] + trans[r]
        return out


def _i64(a):
    return np.ascontiguousarray(a, dtype=np.int64)


def floor_pairings(Y, D, n, backend=None):
    """k[a, (i,j)] = floor((Y[a,i] - Y[a,j]) / D) for scaled points Y."""
    I, J, _, _ = root_tables(n)
    fn = _floor_pairings_nb if _pick(backend) == "numba" else _floor_pairings_np
    return fn(_i64(Y), np.int64(D), I, J)


def admitted_part_batch(K, n, backend=None):
    """lambda = k minus the telescoped simple part, row by row."""
    I, J, _, simple = root_tables(n)
    fn = _admitted_part_nb if _pick(backend) == "numba" else _admitted_part_np
    return fn(_i64(K), I, J, simple)


def admitted_mask(L, n, backend=None):
    """Boolean mask of rows satisfying the type-A admissibility conditions."""
    _, _, triples, simple = root_tables(n)
    fn = _admitted_mask_nb if _pick(backend) == "numba" else _admitted_mask_np
    return fn(_i64(L), triples, simple)


def apply_signed(perm, sign, trans, X, backend=None):
    """out[a, r] = sign[r] * X[a, perm[r]] + trans[r]."""
    fn = _apply_signed_nb if _pick(backend) == "numba" else _apply_signed_np
    return fn(_i64(perm), _i64(sign), _i64(trans), _i64(X))


def _pick(backend):
    if backend is None:
        return BACKEND
    if backend not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba is not installed")
    return backend
