"""
Invariant suite run by ``shivar verify``.

Each check takes the rank and a seeded RNG and returns True/False.  Checks
that are exhaustive at small rank fall back to random sampling once the
group gets large.
"""

from __future__ import annotations

import itertools
import math
import random
from typing import Callable

from .algebra import (
    AffineElement, Permutation, affine_reflection, affine_word, all_permutations,
    compose, conjugate, identity, inversion_set, long_cycle, positive_roots,
    reduced_word, transposition, translation, word_to_permutation,
)
from .bijection import bijection_table, canonical_conjugator, check_equivariance, check_equivariance_random, to_component
from .components import (
    brute_force_admitted, component_of, enumerate_admitted, is_admitted, max_admitted,
    point_on_component,
)
from .diamond import (
    ReflectionWindow, diamond_affine, diamond_closed_form, diamond_iterated, diamond_matrix,
    diamond_orbit, gamma_sum, simple_inversions_count, stabilizer,
)
from .phi import AffineIntegerMap, apply, f_element, f_reflection, f_simple_word
from .poset import build_component_poset, build_cycle_poset, check_poset_isomorphism, order_from_covers, product_order
from .shi import RootVector, admitted_part, k_vector
from .wedge import WedgeElement, odot_closed_form, odot_generator, odot_word, theta, theta_inverse

__all__ = ["CHECKS", "run_checks", "random_affine_element", "random_permutation", "group_sample"]

Check = Callable[[int, random.Random], bool]


def random_permutation(n: int, rng: random.Random) -> Permutation:
    pts = list(range(1, n + 2))
    rng.shuffle(pts)
    return Permutation(tuple(pts))


def random_affine_element(n: int, rng: random.Random, max_len: int = 30, kmax: int = 2) -> AffineElement:
    roots = positive_roots(n)
    length = rng.randint(0, max_len)
    return affine_word(n, [(rng.choice(roots), rng.randint(-kmax, kmax)) for _ in range(length)])


def group_sample(n: int, rng: random.Random, limit: int = 150) -> list[Permutation]:
    """All of S_{n+1} when small, otherwise a random sample of ``limit`` elements."""
    if math.factorial(n + 1) <= limit:
        return all_permutations(n)
    return [random_permutation(n, rng) for _ in range(limit)]


def _is_reduced_product(u: Permutation, v: Permutation) -> bool:
    return (u * v).length() == u.length() + v.length()


def inversion_decomposition(n, rng):
    for u in group_sample(n, rng):
        for v in group_sample(n, rng, 40):
            if not _is_reduced_product(u, v):
                continue
            image = set()
            for root in inversion_set(v):
                a, b = u(root[0]), u(root[1])
                if a > b:
                    return False
                image.add((a, b))
            nu = inversion_set(u)
            if image & nu or inversion_set(u * v) != nu | image:
                return False
    return True


def length_is_inversion_count(n, rng):
    return all(len(inversion_set(w)) == w.length() == len(reduced_word(w)) for w in group_sample(n, rng))


def affine_group_axioms(n, rng):
    elems = [random_affine_element(n, rng, 6) for _ in range(12)]
    e = AffineElement.identity(n)
    for a, b, c in itertools.product(elems, repeat=3):
        if compose(compose(a, b), c) != compose(a, compose(b, c)):
            return False
    return all(compose(e, a) == a == compose(a, e) and compose(a, a.inverse()) == e for a in elems)


def reflection_pair_is_translation(n, rng):
    for root in positive_roots(n):
        for k in range(-2, 3):
            lhs = compose(affine_reflection(n, root, k), affine_reflection(n, root, 0))
            x = [0] * (n + 1)
            x[root[0] - 1], x[root[1] - 1] = k, -k
            if lhs != translation(x):
                return False
    return True


def kvec_injective(n, rng):
    elems = {random_affine_element(n, rng, 6) for _ in range(400)}
    return len({k_vector(w) for w in elems}) == len(elems)


def kvec_translation_shift(n, rng):
    for _ in range(100):
        w = random_affine_element(n, rng)
        x = [rng.randint(-3, 3) for _ in range(n)]
        x.append(-sum(x))
        diff = k_vector(compose(translation(x), w)) - k_vector(w)
        if diff.values != tuple(x[i - 1] - x[j - 1] for i, j in positive_roots(n)):
            return False
    return True


def shi_condition(n, rng):
    for _ in range(500):
        k = k_vector(random_affine_element(n, rng))
        lam = admitted_part(k)
        if not is_admitted(lam) or component_of(k) != lam:
            return False
    return True


def enumeration_count(n, rng):
    return len(enumerate_admitted(n)) == math.factorial(n)


def enumeration_bound(n, rng):
    return all(0 <= v <= j - i - 1 for lam in enumerate_admitted(n) for (i, j), v in lam.items())


def enumeration_matches_brute_force(n, rng):
    if n > 5:
        return True
    return enumerate_admitted(n) == brute_force_admitted(n)


def commuting_diagram(n, rng):
    for _ in range(300):
        w, u = random_affine_element(n, rng, 10), random_affine_element(n, rng, 10)
        if apply(f_element(w), k_vector(u)) != k_vector(compose(w, u)):
            return False
    return True


def phi_coxeter_relations(n, rng):
    ident = AffineIntegerMap.identity(n)
    for i in range(1, n + 1):
        if f_simple_word(n, [i, i]) != ident:
            return False
        if i < n and f_simple_word(n, [i, i + 1, i]) != f_simple_word(n, [i + 1, i, i + 1]):
            return False
        for j in range(i + 2, n + 1):
            if f_simple_word(n, [i, j]) != f_simple_word(n, [j, i]):
                return False
    return True


def phi_injective(n, rng):
    elems = {random_affine_element(n, rng, 6) for _ in range(300)}
    return len({f_element(w) for w in elems}) == len(elems)


def _wedge_basis(n):
    return [WedgeElement.basis(n, i, j) for i, j in positive_roots(n)]


def wedge_relations(n, rng):
    for y in _wedge_basis(n):
        for i in range(1, n + 1):
            if odot_word([i, i], y) != y:
                return False
            if i < n and odot_word([i, i + 1, i], y) != odot_word([i + 1, i, i + 1], y):
                return False
            for j in range(i + 2, n + 1):
                if odot_word([i, j], y) != odot_word([j, i], y):
                    return False
    return True


def wedge_closed_form(n, rng):
    for w in group_sample(n, rng):
        word = reduced_word(w)
        for k, l in positive_roots(n):
            if odot_closed_form(w, k, l) != odot_word(word, WedgeElement.basis(n, k, l)):
                return False
    return True


def theta_intertwines(n, rng):
    m = n * (n + 1) // 2
    vectors = [RootVector(n, tuple(int(k == r) for k in range(m))) for r in range(m)]
    vectors += [RootVector(n, tuple(rng.randint(-5, 5) for _ in range(m))) for _ in range(20)]
    for i in range(1, n + 1):
        F = f_reflection(n, (i, i + 1), 0)
        for x in vectors:
            if theta(apply(F, x)) != odot_generator(i, theta(x)) or theta_inverse(theta(x)) != x:
                return False
    return True


def wedge_not_linear(n, rng):
    y = z = WedgeElement.zero(n)
    return odot_generator(1, y + z) != odot_generator(1, y) + odot_generator(1, z)


def closed_form_matches_matrix(n, rng):
    for lam in enumerate_admitted(n):
        for k, l in positive_roots(n):
            if diamond_closed_form(k, l, lam) != diamond_matrix(transposition(n, k, l), lam):
                return False
    return True


def diamond_action_axioms(n, rng):
    vectors = enumerate_admitted(n)
    if len(vectors) > 24:
        vectors = rng.sample(vectors, 24)
    group = group_sample(n, rng, 30)
    for lam in vectors:
        if diamond_matrix(identity(n), lam) != lam:
            return False
        for u in group:
            ul = diamond_matrix(u, lam)
            if diamond_iterated(u, lam) != ul:
                return False
            for v in group[:8]:
                if diamond_matrix(u * v, lam) != diamond_matrix(u, diamond_matrix(v, lam)):
                    return False
    return True


def diamond_translation_invariance(n, rng):
    vectors = enumerate_admitted(n)
    for _ in range(100):
        lam = rng.choice(vectors)
        wbar = random_permutation(n, rng)
        x = [rng.randint(-3, 3) for _ in range(n)]
        x.append(-sum(x))
        if diamond_affine(AffineElement(tuple(x), wbar), lam) != diamond_matrix(wbar, lam):
            return False
    return True


def _signed_integral(x: RootVector, a: int, b: int) -> int:
    # sum of x_{p,p+1} over [a, b), negated when a > b
    if a <= b:
        return sum(x[p, p + 1] for p in range(a, b))
    return -sum(x[p, p + 1] for p in range(b, a))


def gamma_identity(n, rng):
    vectors = enumerate_admitted(n)
    if len(vectors) > 24:
        vectors = rng.sample(vectors, 24)
    for lam in vectors:
        for k, l in positive_roots(n):
            t = transposition(n, k, l)
            x = point_on_component(lam, [rng.randint(-4, 4) for _ in range(n)])
            y = apply(f_reflection(n, (k, l), 0), x)
            for i, j in positive_roots(n):
                lhs = _signed_integral(x, t(i), t(j)) - _signed_integral(y, i, j)
                rhs = -gamma_sum(t, lam, i, j) + simple_inversions_count(ReflectionWindow(k, l, i, j))
                if lhs != rhs:
                    return False
    return True


def orbit_is_everything(n, rng):
    return diamond_orbit(RootVector.zero(n)) == enumerate_admitted(n)


def stabilizer_of_zero(n, rng):
    if n > 5:
        return True
    c = long_cycle(n)
    stab = stabilizer(RootVector.zero(n))
    return sorted(stab, key=lambda p: p.images) == sorted((c ** k for k in range(n + 1)), key=lambda p: p.images)


def long_cycle_fixes_zero(n, rng):
    zero = RootVector.zero(n)
    return diamond_matrix(long_cycle(n), zero) == zero == diamond_matrix(word_to_permutation(n, range(1, n + 1)), zero)


def bijection_is_bijective(n, rng):
    table = bijection_table(n)
    return (len(table.forward) == math.factorial(n)
            and sorted(table.backward, key=lambda v: v.values) == enumerate_admitted(n))


def bijection_well_defined(n, rng):
    c0 = long_cycle(n)
    zero = RootVector.zero(n)
    for c in group_sample_cycles(n, rng):
        sigma = canonical_conjugator(c)
        if diamond_matrix(sigma * c0, zero) != to_component(c):
            return False
    return True


def group_sample_cycles(n, rng, limit=200):
    cycles = list(bijection_table(n).forward)
    return cycles if len(cycles) <= limit else rng.sample(cycles, limit)


def equivariance(n, rng):
    if n <= 4:
        return check_equivariance(n)
    return check_equivariance_random(n, 2000, seed=rng.randrange(2 ** 32))


def poset_extremes(n, rng):
    poset = build_component_poset(n)
    rel = order_from_covers(len(poset.elements), poset.covers)
    size = len(poset.elements)
    minima = [a for a in range(size) if all((a, b) in rel for b in range(size))]
    maxima = [b for b in range(size) if all((a, b) in rel for a in range(size))]
    return ([poset.elements[a] for a in minima] == [RootVector.zero(n)]
            and [poset.elements[b] for b in maxima] == [max_admitted(n)])


def poset_covers_generate_product_order(n, rng):
    if n > 5:
        return True
    poset = build_component_poset(n)
    return order_from_covers(len(poset.elements), poset.covers) == product_order(poset.elements)


def poset_isomorphism(n, rng):
    return check_poset_isomorphism(n) and len(build_cycle_poset(n).covers) == len(build_component_poset(n).covers)


CHECKS: dict[str, Check] = {
    "inversion-set decomposition N(uv) = N(u) + u N(v)": inversion_decomposition,
    "length equals inversion count": length_is_inversion_count,
    "affine group axioms": affine_group_axioms,
    "s_(a,k) s_(a,0) is translation by k a": reflection_pair_is_translation,
    "k-vector injective": kvec_injective,
    "k-vector translation shift": kvec_translation_shift,
    "admitted part of k-vectors is admitted": shi_condition,
    "number of admitted vectors is n!": enumeration_count,
    "admitted bound 0 <= l_ij <= j-i-1": enumeration_bound,
    "enumeration equals brute-force filter": enumeration_matches_brute_force,
    "F intertwines left multiplication with k-vectors": commuting_diagram,
    "F respects Coxeter relations": phi_coxeter_relations,
    "F injective": phi_injective,
    "wedge action relations": wedge_relations,
    "wedge closed form equals generator iteration": wedge_closed_form,
    "theta intertwines F(s_i) with the wedge action": theta_intertwines,
    "wedge action is not linear": wedge_not_linear,
    "closed form equals matrix path on transpositions": closed_form_matches_matrix,
    "diamond action axioms": diamond_action_axioms,
    "diamond ignores translations": diamond_translation_invariance,
    "gamma-sum difference identity": gamma_identity,
    "orbit of 0 is every admitted vector": orbit_is_everything,
    "long cycle fixes 0": long_cycle_fixes_zero,
    "stabilizer of 0 is the long cycle's group": stabilizer_of_zero,
    "cycles <-> components is a bijection": bijection_is_bijective,
    "bijection independent of conjugator": bijection_well_defined,
    "bijection is equivariant": equivariance,
    "poset has min 0 and max (j-i-1)": poset_extremes,
    "covers generate the product order": poset_covers_generate_product_order,
    "cycle poset is isomorphic and transposition-labelled": poset_isomorphism,
}


def run_checks(n: int, seed: int = 0, report: Callable[[str, bool], None] | None = None) -> bool:
    ok = True
    for name, check in CHECKS.items():
        rng = random.Random(f"{seed}:{name}")
        try:
            passed = bool(check(n, rng))
        except Exception as exc:  # a crash is a failed invariant
            passed = False
            name = f"{name} ({type(exc).__name__}: {exc})"
        ok &= passed
        if report:
            report(name, passed)
    return ok
