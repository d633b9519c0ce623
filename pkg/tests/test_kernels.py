"""The numba kernels and the numpy/Python reference kernels must agree."""
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from demkit.kernels import _ref

jit = pytest.importorskip("demkit.kernels._jit")

from demkit.enumeration import _edge_maps  # noqa: E402
from demkit.monitoring import _n_words  # noqa: E402
from strategies import graphs  # noqa: E402


def _arrays(G):
    indptr, indices = G.csr()
    eu, ev = G.edge_arrays()
    return indptr, indices, eu, ev


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=14))
def test_distances_and_monitor_words(G):
    indptr, indices, eu, ev = _arrays(G)
    d_ref = _ref.all_pairs_distances(G.n, indptr, indices)
    d_jit = jit.all_pairs_distances(G.n, indptr, indices)
    assert np.array_equal(d_ref, d_jit)
    w = _n_words(G.m)
    assert np.array_equal(_ref.monitor_words(d_ref, indptr, indices, eu, ev, w),
                          jit.monitor_words(d_jit, indptr, indices, eu, ev, w))


def test_many_words():
    from demkit.families import generate
    G = generate("complete:13")  # 78 edges, two words
    indptr, indices, eu, ev = _arrays(G)
    d = _ref.all_pairs_distances(G.n, indptr, indices)
    assert np.array_equal(_ref.monitor_words(d, indptr, indices, eu, ev, 2),
                          jit.monitor_words(d, indptr, indices, eu, ev, 2))


def _random_cover(rng, c, m):
    cover = np.zeros((c, _n_words(m)), dtype=np.uint64)
    for i in range(c):
        for e in range(m):
            if rng.random() < 0.3:
                cover[i, e >> 6] |= np.uint64(1) << np.uint64(e & 63)
    for e in range(m):  # keep it coverable
        i = rng.randrange(c)
        cover[i, e >> 6] |= np.uint64(1) << np.uint64(e & 63)
    target = np.zeros(_n_words(m), dtype=np.uint64)
    for e in range(m):
        target[e >> 6] |= np.uint64(1) << np.uint64(e & 63)
    last = np.full(m, -1, dtype=np.int64)
    for e in range(m):
        for i in range(c):
            if (int(cover[i, e >> 6]) >> (e & 63)) & 1:
                last[e] = i
    return cover, target, last


@settings(max_examples=60, deadline=None)
@given(st.randoms(use_true_random=False), st.integers(1, 10), st.integers(1, 90), st.integers(0, 5))
def test_cover_search(rng, c, m, k):
    cover, target, last = _random_cover(rng, c, m)
    for budget in (10**6, 3):
        a = _ref.cover_search(cover, target, last, k, budget)
        b = jit.cover_search(cover, target, last, k, budget)
        assert a[0] == b[0] and a[2] == b[2]
        if a[0] == 1:
            assert list(a[1]) == list(b[1])


@pytest.mark.parametrize("n", [3, 4, 5])
def test_connected_and_canonical(n):
    m = n * (n - 1) // 2
    masks = np.arange(1 << m, dtype=np.int64)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    eu = np.array([p[0] for p in pairs], dtype=np.int64)
    ev = np.array([p[1] for p in pairs], dtype=np.int64)
    assert np.array_equal(_ref.connected_masks(n, masks, eu, ev), jit.connected_masks(n, masks, eu, ev))
    maps = _edge_maps(n)
    assert np.array_equal(_ref.canonical_masks(masks, maps), jit.canonical_masks(masks, maps))


def test_env_flag_selects_reference_path():
    import os
    import subprocess
    import sys
    code = "from demkit import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, DEMKIT_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"
    env["DEMKIT_DISABLE_NUMBA"] = "0"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numba"
