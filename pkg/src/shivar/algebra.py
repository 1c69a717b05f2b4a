"""
Exact algebra of the symmetric group S_{n+1} = W(A_n) and of the affine Weyl
group of type A~_n, realised as the semidirect product of the root lattice
with S_{n+1}.

Everything is 1-based, matching the usual combinatorial notation: a
permutation is stored in one-line notation ``images[i-1] = w(i)`` and the
positive root ``e_i - e_j`` is the pair ``(i, j)`` with ``i < j``.

>>> w = word_to_permutation(2, [1, 2])
>>> w
Permutation(2 3 1)
>>> w == long_cycle(2)
True
>>> sorted(inversion_set(w))
[(1, 2), (1, 3)]
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "PositiveRoot", "Permutation", "AffineElement",
    "positive_roots", "root_index", "simple_root_indices",
    "identity", "transposition", "long_cycle", "circular_permutations",
    "all_permutations", "word_to_permutation", "reduced_word",
    "inversion_set", "act_on_root", "conjugate",
    "compose", "translation", "affine_reflection", "affine_word",
    "parse_permutation", "parse_word",
]

# e_i - e_j, always with i < j
PositiveRoot = tuple[int, int]


@lru_cache(maxsize=None)
def positive_roots(n: int) -> tuple[PositiveRoot, ...]:
    """Positive roots of A_n in the global order (i ascending, then j).

    This is the order obtained by reading the root triangle along its
    diagonals e_i - e_{i+1}, e_i - e_{i+2}, ...; every Phi+-indexed vector in
    the package is laid out this way.
    """
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    return tuple((i, j) for i in range(1, n + 2) for j in range(i + 1, n + 2))


@lru_cache(maxsize=None)
def root_index(n: int) -> dict[PositiveRoot, int]:
    return {root: r for r, root in enumerate(positive_roots(n))}


@lru_cache(maxsize=None)
def simple_root_indices(n: int) -> tuple[int, ...]:
    idx = root_index(n)
    return tuple(idx[(i, i + 1)] for i in range(1, n + 1))


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n+1} in one-line notation."""
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        """Rank: the permutation lives in W(A_n) = S_{n+1}."""
        return len(self.images) - 1

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        # (u * v)(i) = u(v(i))
        if len(self.images) != len(other.images):
            raise ValueError("rank mismatch")
        return Permutation(tuple(self.images[v - 1] for v in other.images))

    def __pow__(self, k: int) -> Permutation:
        result = identity(self.n)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = result * base
        return result

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def length(self) -> int:
        """Coxeter length, i.e. the number of inversions of the one-line word."""
        w = self.images
        return sum(1 for a, b in itertools.combinations(range(len(w)), 2) if w[a] > w[b])

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            out.append(tuple(cyc))
        return out

    def is_circular(self) -> bool:
        return len(self.cycles()) == 1

    def cycle_str(self) -> str:
        parts = [c for c in self.cycles() if len(c) > 1]
        if not parts:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in parts)

    def __str__(self) -> str:
        return " ".join(map(str, self.images))

    def __repr__(self) -> str:
        return f"Permutation({self})"


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 2)))


def transposition(n: int, k: int, l: int) -> Permutation:
    """The reflection s_{k,l}, swapping k and l in S_{n+1}."""
    if not 1 <= k < l <= n + 1:
        raise ValueError(f"need 1 <= k < l <= {n + 1}, got ({k}, {l})")
    images = list(range(1, n + 2))
    images[k - 1], images[l - 1] = l, k
    return Permutation(tuple(images))


def long_cycle(n: int) -> Permutation:
    """The Coxeter element (1 2 ... n+1)."""
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    return Permutation(tuple(range(2, n + 2)) + (1,))


def all_permutations(n: int) -> list[Permutation]:
    """S_{n+1} in lexicographic order of one-line notation."""
    return [Permutation(p) for p in itertools.permutations(range(1, n + 2))]


def circular_permutations(n: int) -> list[Permutation]:
    """All (n+1)-cycles, lexicographic in one-line notation (n! of them)."""
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    out = []
    # an (n+1)-cycle is determined by the order in which it visits 2..n+1 after 1
    for tail in itertools.permutations(range(2, n + 2)):
        seq = (1,) + tail
        images = [0] * (n + 1)
        for a, b in zip(seq, seq[1:] + seq[:1]):
            images[a - 1] = b
        out.append(Permutation(tuple(images)))
    out.sort(key=lambda p: p.images)
    return out


def word_to_permutation(n: int, word: Sequence[int]) -> Permutation:
    """Product s_{i1} s_{i2} ... of adjacent transpositions s_i = (i, i+1)."""
    images = list(range(1, n + 2))
    # right-multiplying by s_i swaps positions i and i+1 of the one-line word
    for i in word:
        if not 1 <= i <= n:
            raise ValueError(f"generator index {i} out of range 1..{n}")
        images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(tuple(images))


def reduced_word(w: Permutation) -> list[int]:
    """A reduced word [i1, ..., ip] with w = s_{i1} ... s_{ip} (bubble sort)."""
    images = list(w.images)
    tail: list[int] = []
    changed = True
    while changed:
        changed = False
        for i in range(len(images) - 1):
            if images[i] > images[i + 1]:
                images[i], images[i + 1] = images[i + 1], images[i]
                tail.append(i + 1)
                changed = True
    return tail[::-1]


def act_on_root(w: Permutation, root: PositiveRoot) -> tuple[int, PositiveRoot]:
    """w(e_i - e_j) = sign * (positive root); returns (sign, root)."""
    a, b = w(root[0]), w(root[1])
    return (1, (a, b)) if a < b else (-1, (b, a))


def inversion_set(w: Permutation) -> frozenset[PositiveRoot]:
    """N(w): positive roots sent to negative roots by w^{-1}."""
    winv = w.inverse().images
    m = len(winv)
    return frozenset(
        (i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)
        if winv[i - 1] > winv[j - 1]
    )


def conjugate(sigma: Permutation, c: Permutation) -> Permutation:
    """sigma c sigma^{-1}."""
    return sigma * c * sigma.inverse()


@dataclass(frozen=True)
class AffineElement:
    """w = tau_x * wbar, acting on sum-zero vectors by v -> wbar(v) + x.

    ``finite`` acts on coordinates by (wbar v)_{wbar(i)} = v_i.
    """
    translation: tuple[int, ...]
    finite: Permutation

    def __post_init__(self):
        t = tuple(int(v) for v in self.translation)
        if len(t) != len(self.finite.images):
            raise ValueError("translation length does not match rank")
        if sum(t) != 0:
            raise ValueError(f"translation {t} is not in the root lattice (sum != 0)")
        object.__setattr__(self, "translation", t)

    @property
    def n(self) -> int:
        return self.finite.n

    def permute(self, v: Sequence) -> list:
        out = [None] * len(v)
        for i, x in enumerate(v, start=1):
            out[self.finite(i) - 1] = x
        return out

    def act(self, v: Sequence) -> list:
        return [a + b for a, b in zip(self.permute(v), self.translation)]

    def __mul__(self, other: AffineElement) -> AffineElement:
        return compose(self, other)

    def inverse(self) -> AffineElement:
        finv = self.finite.inverse()
        back = AffineElement((0,) * len(self.translation), finv).permute(self.translation)
        return AffineElement(tuple(-x for x in back), finv)

    @classmethod
    def identity(cls, n: int) -> AffineElement:
        return cls((0,) * (n + 1), identity(n))

    @classmethod
    def from_permutation(cls, w: Permutation) -> AffineElement:
        return cls((0,) * len(w.images), w)


def compose(u: AffineElement, v: AffineElement) -> AffineElement:
    """Semidirect product law: (x, a)(y, b) = (x + a(y), ab)."""
    if u.n != v.n:
        raise ValueError(f"rank mismatch: {u.n} vs {v.n}")
    t = tuple(a + b for a, b in zip(u.translation, u.permute(v.translation)))
    return AffineElement(t, u.finite * v.finite)


def root_vector(n: int, root: PositiveRoot, k: int = 1) -> tuple[int, ...]:
    v = [0] * (n + 1)
    v[root[0] - 1] += k
    v[root[1] - 1] -= k
    return tuple(v)


def translation(x: Sequence[int]) -> AffineElement:
    """The pure translation tau_x."""
    return AffineElement(tuple(x), identity(len(x) - 1))


def affine_reflection(n: int, root: PositiveRoot, k: int) -> AffineElement:
    """s_{alpha,k}: x -> x - ((x, alpha) - k) alpha, stored as (k alpha, s_alpha)."""
    return AffineElement(root_vector(n, root, k), transposition(n, *root))


def affine_word(n: int, word: Iterable[tuple[PositiveRoot, int]]) -> AffineElement:
    """Left-to-right product of affine reflections s_{alpha,p}."""
    w = AffineElement.identity(n)
    for root, p in word:
        w = compose(w, affine_reflection(n, root, p))
    return w


def parse_permutation(text: str) -> Permutation:
    """Parse one-line notation such as ``"2 3 1"`` (commas also accepted)."""
    return Permutation(tuple(int(t) for t in text.replace(",", " ").split()))


def parse_word(text: str) -> list[int]:
    return [int(t) for t in text.replace(",", " ").split()]
