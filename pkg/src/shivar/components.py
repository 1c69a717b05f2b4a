"""
Admitted vectors, which index the irreducible components X[lambda] of the Shi
variety, and the passage between integral points and components.

A point x lies on X[lambda] when x_{i,j} = sum_{r=i}^{j-1} x_{r,r+1} + lambda_{i,j}
for all i < j; the simple coordinates are free.
"""

from __future__ import annotations

import itertools

import numpy as np

from . import _kernels
from .algebra import positive_roots, root_index
from .shi import RootVector, admitted_part

__all__ = [
    "AdmittedVector", "NotOnVariety", "NotAdmitted",
    "is_admitted", "check_admitted", "enumerate_admitted", "brute_force_admitted",
    "canonical_point", "component_of", "max_admitted", "point_on_component",
]

# A RootVector with zero simple part satisfying the admissibility conditions.
AdmittedVector = RootVector


class NotAdmitted(ValueError):
    pass


class NotOnVariety(ValueError):
    """The extracted lambda is not admitted, so x is not an integral point."""


def is_admitted(v: RootVector) -> bool:
    n = v.n
    if any(v.simple_part()):
        return False
    for i, j, k in itertools.combinations(range(1, n + 2), 3):
        s = v[i, j] + v[j, k]
        if not s <= v[i, k] <= s + 1:
            return False
    return True


def check_admitted(v: RootVector) -> RootVector:
    if not is_admitted(v):
        raise NotAdmitted(f"{v} is not admitted")
    return v


def enumerate_admitted(n: int) -> list[AdmittedVector]:
    """All admitted vectors of rank n, sorted by their coordinate tuple.

    Depth-first over the diagonals j - i = 2, 3, ..., n; at (i, k) the
    admissible values form the interval
    [max_j (l_ij + l_jk), min_j (l_ij + l_jk) + 1], which has at most two
    integers.
    """
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    idx = root_index(n)
    order = [(i, i + d) for d in range(2, n + 1) for i in range(1, n + 2 - d)]
    vals = [0] * len(idx)
    out: list[tuple[int, ...]] = []

    def descend(pos: int):
        if pos == len(order):
            out.append(tuple(vals))
            return
        i, k = order[pos]
        sums = [vals[idx[i, j]] + vals[idx[j, k]] for j in range(i + 1, k)]
        lo, hi = max(sums), min(sums) + 1
        r = idx[i, k]
        for value in range(lo, hi + 1):
            vals[r] = value
            descend(pos + 1)
        vals[r] = 0

    descend(0)
    out.sort()
    return [RootVector(n, v) for v in out]


def brute_force_admitted(n: int, backend=None) -> list[AdmittedVector]:
    """Filter the whole box prod_{i<j} [0, j-i-1] through the admissibility test."""
    ranges = [range(j - i) for i, j in positive_roots(n)]
    box = np.array(list(itertools.product(*ranges)), dtype=np.int64).reshape(-1, len(ranges))
    mask = _kernels.admitted_mask(box, n, backend=backend)
    return sorted((RootVector(n, tuple(row)) for row in box[mask].tolist()),
                  key=lambda v: v.values)


def max_admitted(n: int) -> AdmittedVector:
    """The vector lambda_{i,j} = j - i - 1."""
    return RootVector(n, tuple(j - i - 1 for i, j in positive_roots(n)))


def canonical_point(lam: AdmittedVector) -> RootVector:
    """The point of X[lambda] whose simple coordinates are all zero."""
    check_admitted(lam)
    return lam


def component_of(x: RootVector) -> AdmittedVector:
    lam = admitted_part(x)
    if not is_admitted(lam):
        raise NotOnVariety(f"{x.values} gives non-admitted lambda {lam.values}")
    return lam


def point_on_component(lam: AdmittedVector, simple) -> RootVector:
    """The integral point of X[lambda] with the given simple coordinates."""
    check_admitted(lam)
    if len(simple) != lam.n:
        raise ValueError(f"need {lam.n} simple coordinates")
    prefix = [0]
    for s in simple:
        prefix.append(prefix[-1] + int(s))
    return RootVector(lam.n, tuple(prefix[j - 1] - prefix[i - 1] + v for (i, j), v in lam.items()))
