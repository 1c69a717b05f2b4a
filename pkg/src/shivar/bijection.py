"""
Bijection between circular permutations (the (n+1)-cycles of S_{n+1}) and
admitted vectors:

    sigma (1 2 ... n+1) sigma^{-1}  ->  sigma . 0

It intertwines conjugation on cycles with the diamond action on components.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import (
    Permutation, all_permutations, circular_permutations, conjugate, long_cycle,
)
from .components import AdmittedVector
from .diamond import diamond_matrix
from .shi import RootVector

__all__ = [
    "NotCircular", "BijectionTable",
    "canonical_conjugator", "to_component", "from_component", "from_component_search",
    "bijection_table", "check_equivariance", "check_equivariance_random",
]


class NotCircular(ValueError):
    pass


def canonical_conjugator(c: Permutation) -> Permutation:
    """sigma: i -> c^{i-1}(1), so that c = sigma (1 2 ... n+1) sigma^{-1}."""
    if not c.is_circular():
        raise NotCircular(f"{c} is not an ({c.n + 1})-cycle")
    images = [1]
    for _ in range(c.n):
        images.append(c(images[-1]))
    return Permutation(tuple(images))


def to_component(c: Permutation) -> AdmittedVector:
    return diamond_matrix(canonical_conjugator(c), RootVector.zero(c.n))


@dataclass(frozen=True)
class BijectionTable:
    n: int
    forward: dict = field(compare=False)
    backward: dict = field(compare=False)

    def rows(self) -> list[tuple[Permutation, AdmittedVector]]:
        return sorted(self.forward.items(), key=lambda kv: kv[0].images)

    def to_json(self) -> list[dict]:
        return [{"cycle": str(c), "lambda": lam.to_dict(skip_simple=True)} for c, lam in self.rows()]


@lru_cache(maxsize=None)
def bijection_table(n: int) -> BijectionTable:
    forward = {c: to_component(c) for c in circular_permutations(n)}
    backward = {lam: c for c, lam in forward.items()}
    if len(backward) != len(forward):
        raise RuntimeError(f"cycle -> component map is not injective for n={n}")
    return BijectionTable(n, forward, backward)


def from_component(lam: AdmittedVector) -> Permutation:
    return bijection_table(lam.n).backward[lam]


def from_component_search(lam: AdmittedVector) -> Permutation:
    """Table-free inverse: find sigma with sigma . 0 = lambda."""
    zero = RootVector.zero(lam.n)
    for sigma in all_permutations(lam.n):
        if diamond_matrix(sigma, zero) == lam:
            return conjugate(sigma, long_cycle(lam.n))
    raise ValueError(f"{lam} is not in the orbit of 0")


def check_equivariance(n: int) -> bool:
    """to_component(s c s^-1) == s . to_component(c) for all s and all cycles c."""
    table = bijection_table(n)
    for sigma in all_permutations(n):
        for c, lam in table.forward.items():
            if table.forward[conjugate(sigma, c)] != diamond_matrix(sigma, lam):
                return False
    return True


def check_equivariance_random(n: int, samples: int, seed: int = 0) -> bool:
    rng = random.Random(seed)
    table = bijection_table(n)
    cycles = list(table.forward)
    points = list(range(1, n + 2))
    for _ in range(samples):
        rng.shuffle(points)
        sigma = Permutation(tuple(points))
        c = rng.choice(cycles)
        if to_component(conjugate(sigma, c)) != diamond_matrix(sigma, table.forward[c]):
            return False
    return True
