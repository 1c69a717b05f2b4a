import itertools
import random

import pytest
from hypothesis import given, strategies as st

from shivar.algebra import all_permutations, positive_roots, reduced_word, word_to_permutation
from shivar.phi import apply, f_reflection
from shivar.shi import RootVector
from shivar.wedge import (
    WedgeElement, odot_closed_form, odot_generator, odot_word, permute_wedge, theta, theta_inverse,
)
from oracles import odot_generator_dict


def basis(n):
    return [WedgeElement.basis(n, i, j) for i, j in positive_roots(n)]


def as_dict(y):
    return {r: c for r, c in zip(positive_roots(y.n), y.coeffs) if c}


def coeffs(n):
    m = n * (n + 1) // 2
    return st.lists(st.integers(-4, 4), min_size=m, max_size=m).map(lambda c: WedgeElement(n, tuple(c)))


def test_basis_sign():
    assert WedgeElement.basis(2, 3, 1)[1, 3] == -1
    assert theta(RootVector.unit(2, (1, 3))) == WedgeElement.basis(2, 1, 3)
    assert theta(RootVector.zero(2)) == WedgeElement.zero(2)


@given(coeffs(3))
def test_theta_round_trip(y):
    assert theta(theta_inverse(y)) == y


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@given(data=st.data())
def test_generator_matches_dict_oracle(n, data):
    y = data.draw(coeffs(n))
    i = data.draw(st.integers(1, n))
    assert as_dict(odot_generator(i, y)) == odot_generator_dict(i, as_dict(y))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_coxeter_relations_on_basis(n):
    for y in basis(n):
        for i in range(1, n + 1):
            assert odot_word([i, i], y) == y
            for j in range(1, n + 1):
                if abs(i - j) > 1:
                    assert odot_word([i, j], y) == odot_word([j, i], y)
                elif j == i + 1:
                    assert odot_word([i, j, i], y) == odot_word([j, i, j], y)


def test_action_is_not_linear():
    z = WedgeElement.zero(2)
    assert odot_generator(1, z) != z


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_closed_form_equals_iterated_generators(n):
    for w in all_permutations(n):
        word = reduced_word(w)
        for k, l in itertools.combinations(range(1, n + 2), 2):
            assert odot_closed_form(w, k, l) == odot_word(word, WedgeElement.basis(n, k, l))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_theta_intertwines_generators(n):
    rng = random.Random(n)
    samples = [theta_inverse(y) for y in basis(n)]
    samples += [RootVector(n, tuple(rng.randint(-5, 5) for _ in positive_roots(n))) for _ in range(20)]
    for i in range(1, n + 1):
        F = f_reflection(n, (i, i + 1), 0)
        for x in samples:
            assert theta(apply(F, x)) == odot_generator(i, theta(x))


@given(st.lists(st.integers(1, 3), max_size=6), st.lists(st.integers(1, 3), max_size=6), coeffs(3))
def test_action_axiom(u, v, y):
    assert odot_word(u + v, y) == odot_word(u, odot_word(v, y))
    # the result depends on the permutation only
    w = word_to_permutation(3, u)
    assert odot_word(u, y) == odot_word(reduced_word(w), y)


def test_permute_wedge_is_linear():
    w = word_to_permutation(2, [1, 2])
    a, b = WedgeElement.basis(2, 1, 2), WedgeElement.basis(2, 2, 3)
    assert permute_wedge(w, a + b) == permute_wedge(w, a) + permute_wedge(w, b)
