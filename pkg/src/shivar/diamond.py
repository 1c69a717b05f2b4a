"""
The induced action w . lambda of S_{n+1} on admitted vectors.

Two independent routes are provided and must agree:

* ``diamond_matrix``: push the canonical point of X[lambda] through F(w) and
  read off which component the image lies on;
* ``diamond_closed_form``: for a transposition t = s_{k,l},

      (t . lambda)_{i,j} = lambda_{t(i),t(j)} - sum_{p=i}^{j-1} lambda_{t(p),t(p+1)}
                           + |B_{i,j}(k,l)| - [e_i - e_j in N(t)]

  where B_{i,j}(k,l) collects the p in {i..j-1} with e_p - e_{p+1} in N(t).

General permutations go through ``diamond_iterated``, which factors into
transpositions and iterates the closed form.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .algebra import (
    AffineElement, Permutation, all_permutations, identity, inversion_set,
    positive_roots, transposition,
)
from .components import AdmittedVector, canonical_point, check_admitted, component_of, is_admitted
from .phi import apply, f_element, f_permutation
from .shi import RootVector

__all__ = [
    "ReflectionWindow", "ResultNotAdmitted",
    "a_set", "b_set", "simple_inversions_count", "gamma_sum",
    "diamond_closed_form", "diamond_matrix", "diamond_affine", "diamond_iterated",
    "transposition_factors", "diamond_orbit", "stabilizer", "simple_reflection_table",
]


class ResultNotAdmitted(RuntimeError):
    """The closed form produced a non-admitted vector (an implementation bug)."""


@dataclass(frozen=True)
class ReflectionWindow:
    """The transposition s_{k,l} viewed against the target root e_i - e_j."""
    k: int
    l: int
    i: int
    j: int

    def __post_init__(self):
        if not (self.k < self.l and self.i < self.j and min(self.k, self.i) >= 1):
            raise ValueError(f"invalid window {self}")


def _n_simple_inversion(k: int, l: int, p: int) -> bool:
    # the simple roots in N(s_{k,l}) are e_k - e_{k+1} and e_{l-1} - e_l
    return p == k or p == l - 1


def a_set(win: ReflectionWindow) -> list[int]:
    return [p for p in range(win.i, win.j) if not _n_simple_inversion(win.k, win.l, p)]


def b_set(win: ReflectionWindow) -> list[int]:
    return [p for p in range(win.i, win.j) if _n_simple_inversion(win.k, win.l, p)]


def simple_inversions_count(win: ReflectionWindow) -> int:
    """|B_{i,j}(k,l)|."""
    return len(b_set(win))


def gamma_sum(t: Permutation, lam: RootVector, i: int, j: int) -> int:
    """sum_{p=i}^{j-1} lam_{t(p), t(p+1)}, with lam_{b,a} = -lam_{a,b}."""
    if not i < j:
        raise ValueError(f"need i < j, got ({i}, {j})")
    return sum(lam[t(p), t(p + 1)] for p in range(i, j))


def diamond_closed_form(k: int, l: int, lam: AdmittedVector) -> AdmittedVector:
    """s_{k,l} . lambda by the explicit coordinate formula."""
    check_admitted(lam)
    n = lam.n
    t = transposition(n, k, l)
    inv = inversion_set(t)
    out = []
    for i, j in positive_roots(n):
        b = simple_inversions_count(ReflectionWindow(k, l, i, j))
        out.append(lam[t(i), t(j)] - gamma_sum(t, lam, i, j) + b - ((i, j) in inv))
    result = RootVector(n, tuple(out))
    if not is_admitted(result):
        raise ResultNotAdmitted(f"s_({k},{l}) . {lam} gave {result.values}")
    return result


def diamond_matrix(w: Permutation, lam: AdmittedVector) -> AdmittedVector:
    """Component containing F(w)(x) for the canonical point x of X[lambda]."""
    return component_of(apply(f_permutation(w), canonical_point(lam)))


def diamond_affine(w: AffineElement, lam: AdmittedVector) -> AdmittedVector:
    """Same as :func:`diamond_matrix` but routed through F of an affine element."""
    return component_of(apply(f_element(w), canonical_point(lam)))


def transposition_factors(w: Permutation) -> list[tuple[int, int]]:
    """w = t_1 t_2 ... t_r as transpositions (k, l), k < l, from its cycles."""
    out = []
    for cyc in w.cycles():
        # (a1 a2 ... ar) = (a1 ar)(a1 a_{r-1}) ... (a1 a2)
        a1 = cyc[0]
        for a in reversed(cyc[1:]):
            out.append((min(a1, a), max(a1, a)))
    return out


def diamond_iterated(w: Permutation, lam: AdmittedVector) -> AdmittedVector:
    for k, l in reversed(transposition_factors(w)):
        lam = diamond_closed_form(k, l, lam)
    return lam


def diamond_orbit(lam: AdmittedVector) -> list[AdmittedVector]:
    """Orbit of lambda under S_{n+1}, by breadth-first search on simple reflections."""
    check_admitted(lam)
    seen = {lam}
    queue = deque([lam])
    while queue:
        cur = queue.popleft()
        for i in range(1, lam.n + 1):
            nxt = diamond_closed_form(i, i + 1, cur)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return sorted(seen, key=lambda v: v.values)


def stabilizer(lam: AdmittedVector, method: str = "matrix") -> list[Permutation]:
    """All sigma in S_{n+1} with sigma . lambda == lambda (brute force)."""
    act = diamond_matrix if method == "matrix" else diamond_iterated
    return [s for s in all_permutations(lam.n) if act(s, lam) == lam]


def simple_reflection_table(vectors: list[AdmittedVector], method: str = "matrix") -> list[list[AdmittedVector]]:
    """rows = s_{1,2}, ..., s_{n,n+1}; columns = ``vectors``."""
    if not vectors:
        return []
    n = vectors[0].n
    rows = []
    for i in range(1, n + 1):
        if method == "matrix":
            s = transposition(n, i, i + 1)
            rows.append([diamond_matrix(s, v) for v in vectors])
        else:
            rows.append([diamond_closed_form(i, i + 1, v) for v in vectors])
    return rows

