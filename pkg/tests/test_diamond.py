import itertools

import pytest
from hypothesis import given, settings, strategies as st

from shivar.algebra import AffineElement, Permutation, all_permutations, long_cycle, transposition
from shivar.components import enumerate_admitted
from shivar.diamond import (
    ReflectionWindow, a_set, b_set, diamond_affine, diamond_closed_form, diamond_iterated, diamond_matrix,
    diamond_orbit, gamma_sum, simple_reflection_table, stabilizer, transposition_factors,
)
from shivar.shi import RootVector

V = RootVector.from_short

# columns in sorted order, rows s_{1,2}, s_{2,3}, s_{3,4}
TABLE_COLUMNS = ["0,0,0", "0,1,0", "0,1,1", "1,1,0", "1,1,1", "1,2,1"]
TABLE_ROWS = [
    ["1,1,0", "1,1,1", "1,2,1", "0,0,0", "0,1,0", "0,1,1"],
    ["1,1,1", "1,2,1", "1,1,0", "0,1,1", "0,0,0", "0,1,0"],
    ["0,1,1", "1,1,1", "0,0,0", "1,2,1", "0,1,0", "1,1,0"],
]


def vec(text):
    return V(3, [int(t) for t in text.split(",")])


@pytest.mark.parametrize("method", ["matrix", "closed"])
def test_table_for_n3(method):
    columns = [vec(c) for c in TABLE_COLUMNS]
    assert enumerate_admitted(3) == columns
    rows = simple_reflection_table(columns, method)
    assert rows == [[vec(c) for c in row] for row in TABLE_ROWS]


def test_symbolic_s12_formula():
    for lam in enumerate_admitted(3):
        l13, l14, l24 = lam[1, 3], lam[1, 4], lam[2, 4]
        expect = V(3, [-l13 + 1, -l13 + l24 + 1, -l13 + l14])
        assert diamond_matrix(transposition(3, 1, 2), lam) == expect


def test_window_sets():
    win = ReflectionWindow(2, 5, 1, 6)
    assert b_set(win) == [2, 4]
    assert a_set(win) == [1, 3, 5]
    with pytest.raises(ValueError):
        ReflectionWindow(3, 2, 1, 2)


def test_gamma_sum_telescopes_for_identity():
    lam = V(3, [1, 2, 1])
    e = transposition(3, 1, 2) * transposition(3, 1, 2)
    assert gamma_sum(e, lam, 1, 4) == lam[1, 2] + lam[2, 3] + lam[3, 4] == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_closed_form_equals_matrix_path(n):
    for lam in enumerate_admitted(n):
        for k, l in itertools.combinations(range(1, n + 2), 2):
            assert diamond_closed_form(k, l, lam) == diamond_matrix(transposition(n, k, l), lam)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_iterated_equals_matrix_for_all_permutations(n):
    for w in all_permutations(n):
        prod = transposition(n, 1, 2) * transposition(n, 1, 2)
        for k, l in transposition_factors(w):
            prod = prod * transposition(n, k, l)
        assert prod == w
        for lam in enumerate_admitted(n)[:: max(1, n - 1)]:
            assert diamond_iterated(w, lam) == diamond_matrix(w, lam)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_long_cycle_fixes_zero(n):
    assert diamond_matrix(long_cycle(n), RootVector.zero(n)) == RootVector.zero(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_stabilizer_of_zero_is_cyclic(n):
    c = long_cycle(n)
    assert set(stabilizer(RootVector.zero(n))) == {c ** r for r in range(n + 1)}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_action_is_transitive(n):
    assert diamond_orbit(RootVector.zero(n)) == enumerate_admitted(n)


@settings(max_examples=40, deadline=None)
@given(st.permutations([1, 2, 3, 4]), st.permutations([1, 2, 3, 4]), st.integers(0, 5))
def test_action_axiom(u, v, a):
    u, v = Permutation(tuple(u)), Permutation(tuple(v))
    lam = enumerate_admitted(3)[a]
    assert diamond_matrix(u * v, lam) == diamond_matrix(u, diamond_matrix(v, lam))


def test_translations_act_trivially():
    lam = V(3, [1, 2, 1])
    t = AffineElement((2, -1, 0, -1), transposition(3, 1, 2) * transposition(3, 1, 2))
    assert diamond_affine(t, lam) == lam
    s = AffineElement((1, -1, 0, 0), transposition(3, 2, 3))
    assert diamond_affine(s, lam) == diamond_matrix(transposition(3, 2, 3), lam)
