"""numba-compiled kernels; same contracts as ``_ref``."""
import os

import numba
import numpy as np
from numba import njit, prange

# skip the TBB probe, which warns when the installed TBB is too old
if "NUMBA_THREADING_LAYER" not in os.environ:
    numba.config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]


@njit(cache=True)
def all_pairs_distances(n, indptr, indices):
    dist = np.full((n, n), -1, dtype=np.int32)
    queue = np.empty(max(n, 1), dtype=np.int64)
    for s in range(n):
        d = dist[s]
        d[s] = 0
        queue[0] = s
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            for p in range(indptr[u], indptr[u + 1]):
                w = indices[p]
                if d[w] < 0:
                    d[w] = d[u] + 1
                    queue[tail] = w
                    tail += 1
    return dist


@njit(cache=True)
def monitor_words(dist, indptr, indices, eu, ev, n_words):
    n = dist.shape[0]
    m = eu.shape[0]
    out = np.zeros((n, n_words), dtype=np.uint64)
    parents = np.zeros(n, dtype=np.int64)
    for x in range(n):
        d = dist[x]
        for v in range(n):
            cnt = 0
            if d[v] > 0:
                for p in range(indptr[v], indptr[v + 1]):
                    if d[indices[p]] == d[v] - 1:
                        cnt += 1
            parents[v] = cnt
        for e in range(m):
            u = eu[e]
            v = ev[e]
            if d[u] < 0:
                continue
            hit = False
            if d[v] == d[u] + 1 and parents[v] == 1:
                hit = True
            elif d[u] == d[v] + 1 and parents[u] == 1:
                hit = True
            if hit:
                out[x, e >> 6] |= np.uint64(1) << np.uint64(e & 63)
    return out


@njit(cache=True)
def _popcount(x):
    cnt = 0
    while x:
        x &= x - np.uint64(1)
        cnt += 1
    return cnt


@njit(cache=True)
def _lowest_bit(x):
    i = 0
    while (x & np.uint64(1)) == 0:
        x >>= np.uint64(1)
        i += 1
    return i


@njit(cache=True)
def cover_search(cover, target, last_cover, k, budget):
    c = cover.shape[0]
    n_words = target.shape[0]
    chosen = np.full(k, -1, dtype=np.int64)
    if k == 0:
        for w in range(n_words):
            if target[w] != 0:
                return 0, chosen, 0
        return 1, chosen, 0
    widest = 0
    for i in range(c):
        cnt = 0
        for w in range(n_words):
            cnt += _popcount(cover[i, w] & target[w])
        if cnt > widest:
            widest = cnt

    nodes = 0
    acc = np.zeros((k + 1, n_words), dtype=np.uint64)
    pos = np.full(k, -1, dtype=np.int64)
    depth = 0
    while depth >= 0:
        low = -1
        n_unc = 0
        for w in range(n_words):
            unc = target[w] & ~acc[depth, w]
            if unc != 0:
                if low < 0:
                    low = 64 * w + _lowest_bit(unc)
                n_unc += _popcount(unc)
        if low < 0:
            q = pos[depth - 1] + 1 if depth > 0 else 0
            if c - q < k - depth:
                return 0, chosen, nodes
            for d in range(depth):
                chosen[d] = pos[d]
            for d in range(depth, k):
                chosen[d] = q
                q += 1
            return 1, chosen, nodes
        if n_unc > (k - depth) * widest:
            depth -= 1
            continue
        q = pos[depth] + 1
        qmax = min(c - (k - depth), last_cover[low])
        if q > qmax:
            depth -= 1
            continue
        pos[depth] = q
        nodes += 1
        if nodes > budget:
            return -1, chosen, nodes
        for w in range(n_words):
            acc[depth + 1, w] = acc[depth, w] | cover[q, w]
        if depth + 1 == k:
            full = True
            for w in range(n_words):
                if target[w] & ~acc[k, w]:
                    full = False
                    break
            if full:
                for d in range(k):
                    chosen[d] = pos[d]
                return 1, chosen, nodes
            continue
        depth += 1
        pos[depth] = q
    return 0, chosen, nodes


@njit(cache=True)
def _connected(n, mask, eu, ev, parent):
    for i in range(n):
        parent[i] = i
    comps = n
    for e in range(eu.shape[0]):
        if (mask >> e) & 1:
            a = eu[e]
            while parent[a] != a:
                a = parent[a]
            b = ev[e]
            while parent[b] != b:
                b = parent[b]
            if a != b:
                parent[max(a, b)] = min(a, b)
                comps -= 1
    return comps == 1


@njit(cache=True)
def connected_masks(n, masks, eu, ev):
    out = np.ones(masks.shape[0], dtype=np.bool_)
    if n <= 1:
        return out
    parent = np.empty(n, dtype=np.int64)
    for i in range(masks.shape[0]):
        out[i] = _connected(n, masks[i], eu, ev, parent)
    return out


@njit(cache=True, parallel=True)
def canonical_masks(masks, edge_maps):
    n_perm, m = edge_maps.shape
    best = np.empty(masks.shape[0], dtype=np.int64)
    for i in prange(masks.shape[0]):
        mask = masks[i]
        lo = np.iinfo(np.int64).max
        for p in range(n_perm):
            img = np.int64(0)
            for e in range(m):
                if (mask >> e) & 1:
                    img |= np.int64(1) << edge_maps[p, e]
            if img < lo:
                lo = img
        best[i] = lo
    return best
