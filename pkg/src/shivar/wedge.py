"""
The affine diagonal action of S_{n+1} on the exterior square of R^{n+1}.

On generators, s_i . (sum x_{r,s} e_r ^ e_s) = (sum x_{r,s} e_{s_i(r)} ^ e_{s_i(s)}) - e_i ^ e_{i+1}.
This is an action but it is not linear.  ``theta`` identifies Phi+-vectors
with wedge elements (e_{i,j} -> e_i ^ e_j), turning F(s_i) into this action.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import Permutation, act_on_root, inversion_set, positive_roots, root_index
from .shi import RootVector

__all__ = [
    "WedgeElement", "theta", "theta_inverse", "permute_wedge",
    "odot_generator", "odot_word", "odot_closed_form",
]


@dataclass(frozen=True)
class WedgeElement:
    """sum_{i<j} c_{i,j} e_i ^ e_j; ``y[j, i] == -y[i, j]``."""
    n: int
    coeffs: tuple[int, ...]

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        if i == j:
            return 0
        if i < j:
            return self.coeffs[root_index(self.n)[i, j]]
        return -self.coeffs[root_index(self.n)[j, i]]

    def __add__(self, other: WedgeElement) -> WedgeElement:
        return WedgeElement(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: WedgeElement) -> WedgeElement:
        return WedgeElement(self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    @classmethod
    def zero(cls, n: int) -> WedgeElement:
        return cls(n, (0,) * (n * (n + 1) // 2))

    @classmethod
    def basis(cls, n: int, k: int, l: int) -> WedgeElement:
        """e_k ^ e_l (k > l gives the negated basis vector)."""
        c = [0] * (n * (n + 1) // 2)
        if k < l:
            c[root_index(n)[k, l]] = 1
        else:
            c[root_index(n)[l, k]] = -1
        return cls(n, tuple(c))

    def __str__(self) -> str:
        terms = [f"{c:+d} e{i}^e{j}" for (i, j), c in zip(positive_roots(self.n), self.coeffs) if c]
        return " ".join(terms) if terms else "0"


def theta(x: RootVector) -> WedgeElement:
    return WedgeElement(x.n, x.values)


def theta_inverse(y: WedgeElement) -> RootVector:
    return RootVector(y.n, y.coeffs)


def permute_wedge(w: Permutation, y: WedgeElement) -> WedgeElement:
    """Linear diagonal action e_r ^ e_s -> e_{w(r)} ^ e_{w(s)}."""
    idx = root_index(y.n)
    out = [0] * len(y.coeffs)
    for root, c in zip(positive_roots(y.n), y.coeffs):
        sign, image = act_on_root(w, root)
        out[idx[image]] += sign * c
    return WedgeElement(y.n, tuple(out))


def _subtract_inversions(y: WedgeElement, inversions) -> WedgeElement:
    idx = root_index(y.n)
    c = list(y.coeffs)
    for root in inversions:
        c[idx[root]] -= 1
    return WedgeElement(y.n, tuple(c))


def odot_generator(i: int, y: WedgeElement) -> WedgeElement:
    if not 1 <= i <= y.n:
        raise ValueError(f"generator index {i} out of range 1..{y.n}")
    images = list(range(1, y.n + 2))
    images[i - 1], images[i] = i + 1, i
    return _subtract_inversions(permute_wedge(Permutation(tuple(images)), y), [(i, i + 1)])


def odot_word(word: Sequence[int], y: WedgeElement) -> WedgeElement:
    """(s_{i1} ... s_{ip}) . y, applying the rightmost generator first."""
    for i in reversed(word):
        y = odot_generator(i, y)
    return y


def odot_closed_form(w: Permutation, k: int, l: int) -> WedgeElement:
    """w . (e_k ^ e_l) = e_{w(k)} ^ e_{w(l)} - sum over N(w) of e_r ^ e_s."""
    if not k < l:
        raise ValueError(f"need k < l, got ({k}, {l})")
    return _subtract_inversions(WedgeElement.basis(w.n, w(k), w(l)), sorted(inversion_set(w)))
