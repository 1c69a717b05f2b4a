"""
Shi coefficients k(w, alpha) of affine elements and their split into a simple
part plus an admitted part.

The coefficient is read off a point inside the alcove A_w: take a point p of
the fundamental alcove with pairings <p, e_i - e_j> = (j - i)/(n + 1), move it
by w, and floor the pairings.  All arithmetic is on integers scaled by a
common denominator, so nothing is ever rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import _kernels
from .algebra import AffineElement, PositiveRoot, positive_roots, root_index

__all__ = [
    "RootVector", "AlcovePoint",
    "fundamental_barycenter", "k_vector", "k_vectors", "admitted_part",
]


@dataclass(frozen=True)
class RootVector:
    """A Phi+-indexed integer vector, stored in the global root order.

    Reading ``v[j, i]`` with ``j > i`` returns ``-v[i, j]``.
    """
    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        m = self.n * (self.n + 1) // 2
        if len(values) != m:
            raise ValueError(f"rank {self.n} needs {m} coordinates, got {len(values)}")
        object.__setattr__(self, "values", values)

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        if i < j:
            return self.values[root_index(self.n)[i, j]]
        if i > j:
            return -self.values[root_index(self.n)[j, i]]
        raise KeyError(f"({i}, {j}) is not a root")

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __add__(self, other: RootVector) -> RootVector:
        return RootVector(self.n, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: RootVector) -> RootVector:
        return RootVector(self.n, tuple(a - b for a, b in zip(self.values, other.values)))

    def items(self) -> Iterable[tuple[PositiveRoot, int]]:
        return zip(positive_roots(self.n), self.values)

    def simple_part(self) -> tuple[int, ...]:
        return tuple(self[i, i + 1] for i in range(1, self.n + 1))

    def short(self) -> tuple[int, ...]:
        """Non-simple coordinates only, e.g. (l13, l14, l24) for n = 3."""
        return tuple(v for (i, j), v in self.items() if j > i + 1)

    def to_dict(self, skip_simple: bool = False) -> dict[str, int]:
        return {f"{i},{j}": v for (i, j), v in self.items() if not (skip_simple and j == i + 1)}

    @classmethod
    def zero(cls, n: int) -> RootVector:
        return cls(n, (0,) * (n * (n + 1) // 2))

    @classmethod
    def unit(cls, n: int, root: PositiveRoot) -> RootVector:
        v = [0] * (n * (n + 1) // 2)
        v[root_index(n)[root]] = 1
        return cls(n, tuple(v))

    @classmethod
    def from_mapping(cls, n: int, data: Mapping) -> RootVector:
        """Build from {(i, j): v} or {"i,j": v}; missing roots read as 0."""
        vals = dict.fromkeys(positive_roots(n), 0)
        for key, v in data.items():
            if isinstance(key, str):
                key = tuple(int(t) for t in key.split(","))
            if key not in vals:
                raise ValueError(f"{key} is not a positive root of A_{n}")
            vals[key] = int(v)
        return cls(n, tuple(vals.values()))

    @classmethod
    def from_short(cls, n: int, short: Sequence[int]) -> RootVector:
        keys = [(i, j) for i, j in positive_roots(n) if j > i + 1]
        if len(short) != len(keys):
            raise ValueError(f"rank {n} needs {len(keys)} non-simple coordinates, got {len(short)}")
        return cls.from_mapping(n, dict(zip(keys, short)))

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.short())) + "]"


@dataclass(frozen=True)
class AlcovePoint:
    """A point with sum-zero coordinates ``numerators / denominator``."""
    numerators: tuple[int, ...]
    denominator: int

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self.denominator) for a in self.numerators)

    def pairing(self, i: int, j: int) -> Fraction:
        return Fraction(self.numerators[i - 1] - self.numerators[j - 1], self.denominator)


def fundamental_barycenter(n: int) -> AlcovePoint:
    """Point of A_e with <p, e_i - e_j> = (j - i)/(n + 1)."""
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    # p_i = ((n + 2)/2 - i)/(n + 1); doubled to stay integral for odd n
    return AlcovePoint(tuple(n + 2 - 2 * i for i in range(1, n + 2)), 2 * (n + 1))


def _moved_point(w: AffineElement) -> list[int]:
    p = fundamental_barycenter(w.n)
    return [a + p.denominator * x for a, x in zip(w.permute(p.numerators), w.translation)]


def k_vector(w: AffineElement) -> RootVector:
    """Shi coefficients (k(w, alpha))_{alpha in Phi+}."""
    y = _moved_point(w)
    D = 2 * (w.n + 1)
    return RootVector(w.n, tuple((y[i - 1] - y[j - 1]) // D for i, j in positive_roots(w.n)))


def k_vectors(elements: Sequence[AffineElement], n: int, backend=None) -> np.ndarray:
    """Batch version of :func:`k_vector`; returns an (N, m) int64 array."""
    Y = np.array([_moved_point(w) for w in elements], dtype=np.int64).reshape(-1, n + 1)
    return _kernels.floor_pairings(Y, 2 * (n + 1), n, backend=backend)


def admitted_part(k: RootVector) -> RootVector:
    """lambda_{i,j} = k_{i,j} - sum_{r=i}^{j-1} k_{r,r+1}."""
    prefix = [0]
    for s in k.simple_part():
        prefix.append(prefix[-1] + s)
    return RootVector(k.n, tuple(v - (prefix[j - 1] - prefix[i - 1]) for (i, j), v in k.items()))
