"""
The Phi+-representation F of the affine Weyl group of type A~_n on Z^m.

F(s_{alpha,p}) is the affine map x -> L_alpha x + v_{p,alpha} with

    L_alpha[j, i] = +1 if s_alpha(alpha_i) = alpha_j, -1 if = -alpha_j, 0 otherwise
    v_{p,alpha}(g) = -p (alpha, s_alpha(g))        if s_alpha(g) > 0
                     -1 - p (alpha, s_alpha(g))    if s_alpha(g) < 0

and F extends to the whole group as a morphism.  It intertwines left
multiplication with the Shi coefficients:
``apply(f_element(w), k_vector(u)) == k_vector(compose(w, u))``.

Linear parts are signed permutation matrices, stored compactly as
``out[r] = sign[r] * x[perm[r]] + translation[r]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .algebra import (
    AffineElement, Permutation, PositiveRoot, act_on_root, positive_roots,
    reduced_word, root_index, transposition,
)
from .shi import RootVector

__all__ = [
    "AffineIntegerMap", "f_reflection", "f_word", "f_simple_word",
    "f_permutation", "f_element", "apply", "apply_batch", "factor_element",
]


@dataclass(frozen=True)
class AffineIntegerMap:
    n: int
    perm: tuple[int, ...]
    sign: tuple[int, ...]
    translation: tuple[int, ...]

    @classmethod
    def from_matrix(cls, n: int, matrix, translation: Sequence[int]) -> AffineIntegerMap:
        """Validate a signed permutation matrix and store it compactly."""
        M = np.asarray(matrix, dtype=np.int64)
        m = n * (n + 1) // 2
        if M.shape != (m, m):
            raise ValueError(f"expected a {m}x{m} matrix, got {M.shape}")
        if not (np.all(np.abs(M).sum(axis=0) == 1) and np.all(np.abs(M).sum(axis=1) == 1)
                and np.all(np.isin(M, (-1, 0, 1)))):
            raise ValueError("linear part is not a signed permutation matrix")
        perm = tuple(int(c) for c in np.abs(M).argmax(axis=1))
        sign = tuple(int(M[r, c]) for r, c in enumerate(perm))
        return cls(n, perm, sign, tuple(int(t) for t in translation))

    @classmethod
    def identity(cls, n: int) -> AffineIntegerMap:
        m = n * (n + 1) // 2
        return cls(n, tuple(range(m)), (1,) * m, (0,) * m)

    @property
    def matrix(self) -> np.ndarray:
        m = len(self.perm)
        M = np.zeros((m, m), dtype=np.int64)
        M[np.arange(m), self.perm] = self.sign
        return M

    def __matmul__(self, other: AffineIntegerMap) -> AffineIntegerMap:
        """Composition: (self @ other)(x) = self(other(x))."""
        if self.n != other.n:
            raise ValueError("rank mismatch")
        perm = tuple(other.perm[p] for p in self.perm)
        sign = tuple(s * other.sign[p] for s, p in zip(self.sign, self.perm))
        trans = tuple(s * other.translation[p] + t
                      for s, p, t in zip(self.sign, self.perm, self.translation))
        return AffineIntegerMap(self.n, perm, sign, trans)

    def __call__(self, x: RootVector) -> RootVector:
        return apply(self, x)

    def dump(self) -> dict:
        """Matrix rows in the global root order plus the translation."""
        return {
            "n": self.n,
            "roots": [f"{i},{j}" for i, j in positive_roots(self.n)],
            "matrix": self.matrix.tolist(),
            "translation": list(self.translation),
        }


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _signed_root(n: int, sign: int, root: PositiveRoot) -> list[int]:
    v = [0] * (n + 1)
    v[root[0] - 1] = sign
    v[root[1] - 1] = -sign
    return v


@lru_cache(maxsize=4096)
def f_reflection(n: int, alpha: PositiveRoot, p: int) -> AffineIntegerMap:
    """F(s_{alpha,p}), built entry by entry from the defining rules."""
    roots = positive_roots(n)
    idx = root_index(n)
    s_alpha = transposition(n, *alpha)
    a_vec = _signed_root(n, 1, alpha)
    m = len(roots)
    M = np.zeros((m, m), dtype=np.int64)
    for i, root in enumerate(roots):
        sign, image = act_on_root(s_alpha, root)
        M[idx[image], i] = sign
    v = []
    for gamma in roots:
        sign, image = act_on_root(s_alpha, gamma)
        pairing = _dot(a_vec, _signed_root(n, sign, image))
        v.append(-p * pairing if sign > 0 else -1 - p * pairing)
    return AffineIntegerMap.from_matrix(n, M, v)


def f_word(n: int, word: Iterable[tuple[PositiveRoot, int]]) -> AffineIntegerMap:
    """F(s_{a1,p1} s_{a2,p2} ...) as the left-to-right composite."""
    out = AffineIntegerMap.identity(n)
    for alpha, p in word:
        out = out @ f_reflection(n, tuple(alpha), p)
    return out


def f_simple_word(n: int, word: Iterable[int]) -> AffineIntegerMap:
    """F of a word in the simple reflections s_i = s_{e_i - e_{i+1}, 0}."""
    return f_word(n, (((i, i + 1), 0) for i in word))


@lru_cache(maxsize=65536)
def f_permutation(w: Permutation) -> AffineIntegerMap:
    return f_simple_word(w.n, reduced_word(w))


def factor_element(w: AffineElement) -> list[tuple[PositiveRoot, int]]:
    """A word of affine reflections for w = tau_x wbar.

    tau_x = prod_r tau_{c_r alpha_r} over simple roots with c_r = x_1 + ... + x_r,
    each tau_{c alpha} = s_{alpha,c} s_{alpha,0}; wbar uses a reduced word.
    """
    word = []
    c = 0
    for r in range(1, w.n + 1):
        c += w.translation[r - 1]
        if c:
            word += [((r, r + 1), c), ((r, r + 1), 0)]
    word += [((i, i + 1), 0) for i in reduced_word(w.finite)]
    return word


def f_element(w: AffineElement) -> AffineIntegerMap:
    return f_word(w.n, factor_element(w))


def apply(F: AffineIntegerMap, x: RootVector) -> RootVector:
    if F.n != x.n:
        raise ValueError("rank mismatch")
    v = x.values
    return RootVector(x.n, tuple(s * v[p] + t for p, s, t in zip(F.perm, F.sign, F.translation)))


def apply_batch(F: AffineIntegerMap, X, backend=None) -> np.ndarray:
    """Apply F to every row of an (N, m) integer array."""
    return _kernels.apply_signed(F.perm, F.sign, F.translation,
                                 np.asarray(X, dtype=np.int64).reshape(-1, len(F.perm)),
                                 backend=backend)
