"""Compiled subset-DP kernels.

All kernels share one table layout.  For a root ``r`` the vertices
``r..n-1`` are relabelled ``0..k-1`` (``k = n - r``) and ``reach[S]`` holds,
for every vertex subset ``S`` containing local vertex 0, the bit set of
endpoints ``e`` such that some path starts at 0, visits exactly ``S`` and ends
at ``e``.  A subset of size >= 3 whose reach row meets ``N(0)`` closes a cycle
of length ``|S|`` whose smallest vertex is ``r``.
"""

import numpy as np
from numba import njit

ONE = np.int64(1)


@njit(cache=True)
def popcount_table(k):
    size = 1 << k
    pc = np.zeros(size, np.int8)
    for i in range(1, size):
        pc[i] = pc[i >> 1] + (i & 1)
    return pc


@njit(cache=True)
def local_rows(adj, n, r):
    k = n - r
    full = (ONE << k) - 1
    out = np.zeros(k, np.int64)
    for j in range(k):
        out[j] = (adj[r + j] >> r) & full
    return out


@njit(cache=True)
def fill_reach(ladj, k, reach):
    size = ONE << k
    full = size - 1
    for i in range(size):
        reach[i] = 0
    reach[1] = 1
    for mask in range(1, size, 2):
        r = reach[mask]
        if r == 0:
            continue
        free = full & ~mask
        e = 0
        while r:
            if r & 1:
                nb = ladj[e] & free
                w = 0
                while nb:
                    if nb & 1:
                        bit = ONE << w
                        reach[mask | bit] |= bit
                    nb >>= 1
                    w += 1
            r >>= 1
            e += 1


@njit(cache=True)
def spectrum_bits(adj, n, reach, pc):
    """Bit ``l`` of the result is set iff the graph has a cycle of length ``l``."""
    spec = np.int64(0)
    for r in range(n - 2):
        k = n - r
        want = ((ONE << (k + 1)) - 1) & ~np.int64(7)
        if spec & want == want:
            continue
        ladj = local_rows(adj, n, r)
        root_nb = ladj[0]
        c = 0
        x = root_nb
        while x:
            c += x & 1
            x >>= 1
        if c < 2:
            continue
        fill_reach(ladj, k, reach)
        size = ONE << k
        for mask in range(7, size, 2):
            if pc[mask] >= 3 and reach[mask] & root_nb:
                spec |= ONE << pc[mask]
    return spec


@njit(cache=True)
def _trace_back(ladj, reach, mask, end):
    """Vertex sequence (local labels) of a path from 0 covering ``mask`` ending at ``end``."""
    count = 0
    x = mask
    while x:
        count += x & 1
        x >>= 1
    out = np.zeros(count, np.int64)
    pos = count - 1
    cur = end
    while True:
        out[pos] = cur
        pos -= 1
        if cur == 0:
            break
        prev_mask = mask ^ (ONE << cur)
        cand = reach[prev_mask] & ladj[cur]
        p = 0
        while not (cand >> p) & 1:
            p += 1
        mask = prev_mask
        cur = p
    return out


@njit(cache=True)
def ham_cycle(adj, n, reach):
    """A hamiltonian cycle starting at vertex 0, or an empty array."""
    empty = np.zeros(0, np.int64)
    if n < 3:
        return empty
    fill_reach(adj, n, reach)
    full = (ONE << n) - 1
    ends = reach[full] & adj[0]
    if ends == 0:
        return empty
    e = 0
    while not (ends >> e) & 1:
        e += 1
    return _trace_back(adj, reach, full, e)


@njit(cache=True)
def cycle_of_length(adj, n, length, reach, pc):
    """A cycle with exactly ``length`` vertices, or an empty array."""
    for r in range(n - length + 1):
        k = n - r
        ladj = local_rows(adj, n, r)
        root_nb = ladj[0]
        fill_reach(ladj, k, reach)
        size = ONE << k
        for mask in range(1, size, 2):
            if pc[mask] == length:
                ends = reach[mask] & root_nb
                if ends:
                    e = 0
                    while not (ends >> e) & 1:
                        e += 1
                    seq = _trace_back(ladj, reach, mask, e)
                    for i in range(seq.shape[0]):
                        seq[i] += r
                    return seq
    return np.zeros(0, np.int64)


@njit(cache=True)
def rows_from_mask(n, mask):
    adj = np.zeros(n, np.int64)
    t = 0
    for j in range(1, n):
        for i in range(j):
            if (mask >> t) & 1:
                adj[i] |= ONE << j
                adj[j] |= ONE << i
            t += 1
    return adj


@njit(cache=True)
def is_bipartite_rows(adj, n):
    color = np.full(n, -1, np.int64)
    queue = np.zeros(n, np.int64)
    for s in range(n):
        if color[s] >= 0:
            continue
        color[s] = 0
        head = 0
        tail = 1
        queue[0] = s
        while head < tail:
            u = queue[head]
            head += 1
            nb = adj[u]
            w = 0
            while nb:
                if nb & 1:
                    if color[w] < 0:
                        color[w] = 1 - color[u]
                        queue[tail] = w
                        tail += 1
                    elif color[w] == color[u]:
                        return False
                nb >>= 1
                w += 1
    return True


@njit(cache=True)
def sweep_block(n, lo, hi):
    """Evaluate every labelled graph with edge mask in ``[lo, hi)``.

    Returns per-mask arrays: cycle-spectrum bits, maximum degree, the largest
    degree sum of two consecutive vertices on the hamiltonian cycle found by
    :func:`ham_cycle` (``-1`` when the graph is not hamiltonian) and a
    bipartiteness flag.
    """
    count = hi - lo
    spec = np.zeros(count, np.int64)
    delta = np.zeros(count, np.int64)
    pair = np.full(count, -1, np.int64)
    bip = np.zeros(count, np.bool_)
    reach = np.zeros(ONE << n, np.int64)
    pc = popcount_table(n)
    deg = np.zeros(n, np.int64)
    for idx in range(count):
        adj = rows_from_mask(n, lo + idx)
        dmax = 0
        for v in range(n):
            c = 0
            x = adj[v]
            while x:
                c += x & 1
                x >>= 1
            deg[v] = c
            if c > dmax:
                dmax = c
        delta[idx] = dmax
        s = spectrum_bits(adj, n, reach, pc)
        spec[idx] = s
        bip[idx] = is_bipartite_rows(adj, n)
        if n >= 3 and (s >> n) & 1:
            cyc = ham_cycle(adj, n, reach)
            best = 0
            for i in range(n):
                t = deg[cyc[i]] + deg[cyc[(i + 1) % n]]
                if t > best:
                    best = t
            pair[idx] = best
    return spec, delta, pair, bip
