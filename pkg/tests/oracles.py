"""Independent reference computations used to freeze expected values.

Nothing here imports the package's arithmetic: points are Fractions moved by
the reflection formula itself, wedge elements are plain dicts, and affine
maps are dense numpy matrices.
"""

import itertools
from fractions import Fraction

import numpy as np


def reflect(x, alpha, k):
    """s_{alpha,k}(x) = x - ((x, alpha) - k) alpha, alpha = e_i - e_j."""
    i, j = alpha
    c = (x[i - 1] - x[j - 1]) - k
    y = list(x)
    y[i - 1] -= c
    y[j - 1] += c
    return y


def barycenter(n):
    # <p, e_i - e_j> = (j - i)/(n + 1), sum zero
    return [Fraction(n + 2 - 2 * i, 2 * (n + 1)) for i in range(1, n + 2)]


def kvec_of_word(n, word, shift=None):
    """Floors of pairings of (s_{a1,k1} ... s_{ap,kp}) p, optionally translated."""
    x = barycenter(n)
    for alpha, k in reversed(word):
        x = reflect(x, alpha, k)
    if shift is not None:
        x = [a + b for a, b in zip(x, shift)]
    roots = [(i, j) for i in range(1, n + 2) for j in range(i + 1, n + 2)]
    return tuple((x[i - 1] - x[j - 1]).__floor__() for i, j in roots)


def hook_inversion_set(k, l):
    """N(s_{k,l}) = {e_k - e_{k+1}, ..., e_k - e_l, e_{k+1} - e_l, ..., e_{l-1} - e_l}."""
    return {(k, j) for j in range(k + 1, l + 1)} | {(i, l) for i in range(k + 1, l)}


def odot_generator_dict(i, y):
    """Generator formula on {(r, s): coeff} dicts with r < s."""
    swap = {i: i + 1, i + 1: i}
    out = {}
    for (r, s), c in y.items():
        a, b = swap.get(r, r), swap.get(s, s)
        if a > b:
            a, b, c = b, a, -c
        out[a, b] = out.get((a, b), 0) + c
    out[i, i + 1] = out.get((i, i + 1), 0) - 1
    return {key: c for key, c in out.items() if c}


def dense_reflection(n, alpha, p):
    """(L, v) straight from the matrix and translation rules, lex root order."""
    roots = [(i, j) for i in range(1, n + 2) for j in range(i + 1, n + 2)]
    m = len(roots)

    def vec(root, sign=1):
        v = np.zeros(n + 1, dtype=np.int64)
        v[root[0] - 1] += sign
        v[root[1] - 1] -= sign
        return v

    def s_alpha(v):
        a = vec(alpha)
        return v - (v @ a) * a

    L = np.zeros((m, m), dtype=np.int64)
    t = np.zeros(m, dtype=np.int64)
    for ci, ri in enumerate(roots):
        img = s_alpha(vec(ri))
        for rj, root_j in enumerate(roots):
            if np.array_equal(img, vec(root_j)):
                L[rj, ci] = 1
            elif np.array_equal(img, -vec(root_j)):
                L[rj, ci] = -1
    a = vec(alpha)
    for r, gamma in enumerate(roots):
        img = s_alpha(vec(gamma))
        positive = any(np.array_equal(img, vec(b)) for b in roots)
        pairing = int(a @ img)
        t[r] = -p * pairing if positive else -1 - p * pairing
    return L, t


def dense_compose(maps):
    """Left-to-right composite of dense (L, v) maps."""
    m = maps[0][0].shape[0]
    L = np.eye(m, dtype=np.int64)
    t = np.zeros(m, dtype=np.int64)
    for A, b in maps:
        # (L, t) o (A, b) = (L A, L b + t)
        L, t = L @ A, L @ b + t
    return L, t


def is_admitted_dict(n, lam):
    """Admissibility on a {(i, j): value} dict (missing = 0)."""
    get = lambda i, j: lam.get((i, j), 0)
    if any(get(i, i + 1) for i in range(1, n + 1)):
        return False
    return all(get(i, j) + get(j, k) <= get(i, k) <= get(i, j) + get(j, k) + 1
               for i, j, k in itertools.combinations(range(1, n + 2), 3))
