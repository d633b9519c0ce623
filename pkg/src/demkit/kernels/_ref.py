"""Reference kernels: vectorised numpy where the work is array-shaped,
plain Python integers where it is a branching search.

Every function here has a numba twin in ``_jit`` with the same signature and
the same results.
"""
import numpy as np


def all_pairs_distances(n, indptr, indices):
    """Hop distances between all vertex pairs, -1 where unreachable.

    Level-synchronous BFS from every source at once via boolean matrix
    products.
    """
    dist = np.full((n, n), -1, dtype=np.int32)
    if n == 0:
        return dist
    adj = np.zeros((n, n), dtype=np.int32)
    rows = np.repeat(np.arange(n), np.diff(indptr))
    adj[rows, indices] = 1
    reached = np.eye(n, dtype=bool)
    frontier = reached.copy()
    np.fill_diagonal(dist, 0)
    level = 0
    while frontier.any():
        level += 1
        nxt = (frontier.astype(np.int32) @ adj > 0) & ~reached
        dist[nxt] = level
        reached |= nxt
        frontier = nxt
    return dist


def _pack_bits(flags, n_words):
    # flags: (rows, m) bool -> (rows, n_words) uint64
    rows, m = flags.shape
    out = np.zeros((rows, n_words), dtype=np.uint64)
    for w in range(n_words):
        chunk = flags[:, 64 * w:64 * (w + 1)].astype(np.uint64)
        shifts = np.arange(chunk.shape[1], dtype=np.uint64)
        out[:, w] = np.bitwise_or.reduce(chunk << shifts, axis=1) if chunk.shape[1] else 0
    return out


def monitor_words(dist, indptr, indices, eu, ev, n_words):
    """EM(x) for every source x, packed as uint64 words over edge ids.

    Edge uv (d(v) = d(u) + 1 from x) is monitored by x exactly when u is the
    only neighbour of v one level closer to x.
    """
    n = dist.shape[0]
    if n == 0 or len(eu) == 0:
        return np.zeros((n, n_words), dtype=np.uint64)
    adj = np.zeros((n, n), dtype=bool)
    rows = np.repeat(np.arange(n), np.diff(indptr))
    adj[rows, indices] = True
    # parents[x, v] = #{w in N(v): d(x, w) = d(x, v) - 1}
    closer = dist[:, None, :] == (dist[:, :, None] - 1)
    parents = (closer & adj[None, :, :]).sum(axis=2)
    du = dist[:, eu]
    dv = dist[:, ev]
    down = (dv == du + 1) & (parents[:, ev] == 1)
    up = (du == dv + 1) & (parents[:, eu] == 1)
    flags = (down | up) & (du >= 0)
    return _pack_bits(flags, n_words)


def _words_to_int(words):
    value = 0
    for i, w in enumerate(words):
        value |= int(w) << (64 * i)
    return value


def cover_search(cover, target, last_cover, k, budget):
    """Lexicographically first k-subset of rows of ``cover`` whose union
    contains ``target``.

    Returns ``(status, chosen, nodes)`` with status 1 found, 0 none exists,
    -1 budget exhausted. ``last_cover[e]`` is the largest row index covering
    edge e (or -1); combinations are built in increasing row order, so once
    the row cursor passes ``last_cover`` of the lowest uncovered edge the
    branch is dead.
    """
    c = cover.shape[0]
    rows = [_words_to_int(cover[i]) for i in range(c)]
    goal = _words_to_int(target)
    chosen = np.full(k, -1, dtype=np.int64)
    if k == 0:
        return (1 if goal == 0 else 0), chosen, 0
    widest = max(((r & goal).bit_count() for r in rows), default=0)

    nodes = 0
    acc = [0] * (k + 1)
    pos = [-1] * k
    depth = 0
    while depth >= 0:
        uncovered = goal & ~acc[depth]
        if uncovered == 0:
            # remaining slots take the smallest unused rows
            q = pos[depth - 1] + 1 if depth > 0 else 0
            if c - q < k - depth:
                return 0, chosen, nodes
            for d in range(depth, k):
                chosen[d] = q
                q += 1
            chosen[:depth] = pos[:depth]
            return 1, chosen, nodes
        if uncovered.bit_count() > (k - depth) * widest:
            depth -= 1
            continue
        low = (uncovered & -uncovered).bit_length() - 1
        q = pos[depth] + 1
        qmax = min(c - (k - depth), last_cover[low])
        if q > qmax:
            depth -= 1
            continue
        pos[depth] = q
        nodes += 1
        if nodes > budget:
            return -1, chosen, nodes
        acc[depth + 1] = acc[depth] | rows[q]
        if depth + 1 == k:
            if goal & ~acc[k] == 0:
                chosen[:] = pos
                return 1, chosen, nodes
            continue
        depth += 1
        pos[depth] = q
    return 0, chosen, nodes


def connected_masks(n, masks, eu, ev):
    """Boolean array: is the graph on n vertices with edge bitmask connected."""
    masks = np.asarray(masks, dtype=np.int64)
    if n <= 1:
        return np.ones(len(masks), dtype=bool)
    labels = np.tile(np.arange(n), (len(masks), 1))
    bits = [((masks >> e) & 1).astype(bool) for e in range(len(eu))]
    changed = True
    while changed:
        changed = False
        for e, (u, v) in enumerate(zip(eu, ev)):
            sel = bits[e]
            lo = np.minimum(labels[:, u], labels[:, v])
            upd = sel & ((labels[:, u] != lo) | (labels[:, v] != lo))
            if upd.any():
                changed = True
                labels[upd, u] = lo[upd]
                labels[upd, v] = lo[upd]
    return (labels == 0).all(axis=1)


def canonical_masks(masks, edge_maps):
    """Minimum relabelled edge bitmask over all vertex permutations.

    ``edge_maps[p, e]`` is the index of edge e after permutation p.
    """
    masks = np.asarray(masks, dtype=np.int64)
    n_perm, m = edge_maps.shape
    best = np.full(len(masks), np.iinfo(np.int64).max, dtype=np.int64)
    bit_sets = [((masks >> e) & 1) for e in range(m)]
    for p in range(n_perm):
        img = np.zeros(len(masks), dtype=np.int64)
        for e in range(m):
            img |= bit_sets[e] << edge_maps[p, e]
        np.minimum(best, img, out=best)
    return best
