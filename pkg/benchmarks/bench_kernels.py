"""Time the numba kernels against the numpy/Python reference kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5]

JIT compilation happens in a warm-up call and is not timed.
"""
import argparse
import time

import networkx as nx
import numpy as np

from demkit.enumeration import _edge_maps, _pairs
from demkit.families import generate
from demkit.graph import build_graph
from demkit.kernels import _jit, _ref
from demkit.monitoring import _n_words


def best_of(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def em_case(G):
    indptr, indices = G.csr()
    eu, ev = G.edge_arrays()
    w = _n_words(G.m)

    def run(mod):
        d = mod.all_pairs_distances(G.n, indptr, indices)
        return mod.monitor_words(d, indptr, indices, eu, ev, w)

    return run


def cover_case(G):
    from demkit.monitoring import monitor_words
    words = np.ascontiguousarray(monitor_words(G))
    target = np.zeros(words.shape[1], dtype=np.uint64)
    for e in range(G.m):
        target[e >> 6] |= np.uint64(1) << np.uint64(e & 63)
    hits = [[(int(words[i, e >> 6]) >> (e & 63)) & 1 for e in range(G.m)] for i in range(G.n)]
    last = np.array([max(i for i in range(G.n) if hits[i][e]) for e in range(G.m)], dtype=np.int64)
    from demkit.monitoring import dem_number
    k = dem_number(G).value

    def run(mod):
        return mod.cover_search(words, target, last, k, 10**9)

    return run


def canon_case(n):
    masks = np.arange(1 << len(_pairs(n)), dtype=np.int64)
    maps = _edge_maps(n)

    def run(mod):
        return mod.canonical_masks(masks, maps)

    return run


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    rnd = nx.gnp_random_graph(300, 0.03, seed=1)
    cases = [
        ("EM words, conical(4,12)", em_case(generate("conical:4,12"))),
        ("EM words, G(300, 0.03)", em_case(build_graph(300, rnd.edges()))),
        ("exact cover, conical(2,9)", cover_case(generate("conical:2,9"))),
        ("exact cover, g8_star", cover_case(generate("g8_star"))),
        ("canonical forms, n = 6", canon_case(6)),
    ]
    print(f"{'case':32s} {'numpy (s)':>11s} {'numba (s)':>11s} {'speed-up':>9s}")
    for name, run in cases:
        ref = best_of(lambda: run(_ref), args.repeat)
        jit = best_of(lambda: run(_jit), args.repeat)
        print(f"{name:32s} {ref:11.5f} {jit:11.5f} {ref / jit:8.1f}x")


if __name__ == "__main__":
    main()
