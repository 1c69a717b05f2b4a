import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from shivar import _kernels

pytestmark = pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba not installed")


def batch(n, lo=-6, hi=6):
    m = n * (n + 1) // 2
    return arrays(np.int64, st.tuples(st.integers(0, 40), st.just(m)), elements=st.integers(lo, hi))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6), st.data())
def test_floor_pairings_agree(n, data):
    Y = data.draw(arrays(np.int64, st.tuples(st.integers(0, 40), st.just(n + 1)),
                         elements=st.integers(-500, 500)))
    D = 2 * (n + 1)
    a = _kernels.floor_pairings(Y, D, n, backend="numba")
    b = _kernels.floor_pairings(Y, D, n, backend="numpy")
    assert np.array_equal(a, b)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6), st.data())
def test_admitted_part_and_mask_agree(n, data):
    K = data.draw(batch(n, -3, 3))
    assert np.array_equal(_kernels.admitted_part_batch(K, n, backend="numba"),
                          _kernels.admitted_part_batch(K, n, backend="numpy"))
    L = data.draw(batch(n, 0, 2))
    assert np.array_equal(_kernels.admitted_mask(L, n, backend="numba"),
                          _kernels.admitted_mask(L, n, backend="numpy"))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6), st.data())
def test_apply_signed_agree(n, data):
    m = n * (n + 1) // 2
    perm = np.array(data.draw(st.permutations(range(m))), dtype=np.int64)
    sign = np.array(data.draw(st.lists(st.sampled_from([-1, 1]), min_size=m, max_size=m)), dtype=np.int64)
    trans = np.array(data.draw(st.lists(st.integers(-3, 3), min_size=m, max_size=m)), dtype=np.int64)
    X = data.draw(batch(n))
    assert np.array_equal(_kernels.apply_signed(perm, sign, trans, X, backend="numba"),
                          _kernels.apply_signed(perm, sign, trans, X, backend="numpy"))


def test_empty_batches():
    empty = np.zeros((0, 6), dtype=np.int64)
    for backend in ("numba", "numpy"):
        assert _kernels.admitted_mask(empty, 3, backend=backend).shape == (0,)


def test_unknown_backend():
    with pytest.raises(ValueError):
        _kernels.admitted_mask(np.zeros((1, 1)), 1, backend="cuda")
