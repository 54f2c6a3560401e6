"""Hot numeric kernels over bitset adjacency rows.

Every kernel is written as plain numpy/int64 code and compiled with numba's
``@njit``.  Setting ``CLIQUECOVER_NO_NUMBA=1`` in the environment (or running
without numba installed) makes the same functions run interpreted: slow, but
bit-for-bit identical, which is what the benchmark in ``benchmarks/`` compares.

Conventions shared by all kernels:

* vertices are 0..n-1, adjacency rows are int64 bitmasks; edge-subset masks
  need C(n,2) bits in one int64, and callers cap n well below that
  (exhaustive searches at 8, canonical forms at 10);
* edge *slots* are upper-triangle pairs in column-major order
  (0,1),(0,2),(1,2),(0,3),...; the slot index of (i,j) with i<j is j(j-1)/2 + i;
* an edge-subset mask has slot s at bit s, except ``canonical_mask`` output,
  which stores slot 0 as the MOST significant bit so that integer order equals
  lexicographic order of the adjacency bit string.
"""

from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("CLIQUECOVER_NO_NUMBA", "").lower() in ("1", "true", "yes")

try:
    if _DISABLED:
        raise ImportError("numba disabled via CLIQUECOVER_NO_NUMBA")
    from numba import njit as _njit

    NUMBA_ENABLED = True
except ImportError:

    def _njit(*args, **kwargs):
        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap

    NUMBA_ENABLED = False


def using_numba():
    """True when kernels in this process are numba-compiled."""
    return NUMBA_ENABLED


@_njit(cache=True, nogil=True)
def _popcount(x):
    # shift-add fold (no multiply): identical on int64 and Python ints
    x = x - ((x >> 1) & 0x5555555555555555)
    x = (x & 0x3333333333333333) + ((x >> 2) & 0x3333333333333333)
    x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0F
    x = x + (x >> 8)
    x = x + (x >> 16)
    x = x + (x >> 32)
    return x & 0x7F


@_njit(cache=True, nogil=True)
def _component_count(adj, n):
    if n == 0:
        return 0
    seen = 0
    comps = 0
    for v in range(n):
        if (seen >> v) & 1:
            continue
        comps += 1
        frontier = 1 << v
        seen |= frontier
        while frontier != 0:
            nxt = 0
            for w in range(n):
                if (frontier >> w) & 1:
                    nxt |= adj[w]
            frontier = nxt & ~seen
            seen |= frontier
    return comps


@_njit(cache=True, nogil=True)
def _count_cliques_in(adj, cand0, n, need, limit, cands, wpos):
    """Count `need`-vertex cliques inside the candidate mask, capped at limit.

    Candidates are consumed in increasing vertex order so each clique is
    counted once.  `cands`/`wpos` are caller-owned scratch of length >= need.
    """
    if need <= 0:
        return 1
    if need == 1:
        c = _popcount(cand0)
        if c > limit:
            return limit
        return c
    count = 0
    level = 0
    cands[0] = cand0
    wpos[0] = 0
    while level >= 0:
        if level == need - 1:
            count += _popcount(cands[level])
            if count >= limit:
                return limit
            level -= 1
            continue
        advanced = False
        w = wpos[level]
        while w < n:
            if (cands[level] >> w) & 1:
                wpos[level] = w + 1
                above = (cands[level] >> (w + 1)) << (w + 1)
                cands[level + 1] = adj[w] & above
                wpos[level + 1] = w + 1
                level += 1
                advanced = True
                break
            w += 1
        if not advanced:
            level -= 1
    return count


@_njit(cache=True, nogil=True)
def _edge_clique_count(adj, n, u, v, k, limit, cands, wpos):
    """Number of K_k containing edge uv, capped at limit."""
    cand = adj[u] & adj[v]
    if k == 3:
        c = _popcount(cand)
        if c > limit:
            return limit
        return c
    return _count_cliques_in(adj, cand, n, k - 2, limit, cands, wpos)


@_njit(cache=True, nogil=True)
def _mask_ok(mask, n, n_slots, edge_u, edge_v, k, l, vertex_cond,
             require_connected, ncomp, adj, deg, cands, wpos):
    for i in range(n):
        adj[i] = 0
        deg[i] = 0
    for s in range(n_slots):
        if (mask >> s) & 1:
            u = edge_u[s]
            v = edge_v[s]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            deg[u] += 1
            deg[v] += 1
    # cheap degree rejections (necessary conditions, see module docs)
    if vertex_cond:
        for i in range(n):
            if deg[i] < k - 1:
                return False
    else:
        for i in range(n):
            d = deg[i]
            if d == 0:
                if require_connected and n > 1:
                    return False
            elif d < k - 1:
                return False
    if vertex_cond:
        for i in range(n):
            if _count_cliques_in(adj, adj[i], n, k - 1, 1, cands, wpos) < 1:
                return False
    else:
        for s in range(n_slots):
            if (mask >> s) & 1:
                if _edge_clique_count(adj, n, edge_u[s], edge_v[s], k, l,
                                      cands, wpos) < l:
                    return False
    if require_connected:
        if _component_count(adj, n) != 1:
            return False
    elif ncomp > 0:
        if _component_count(adj, n) != ncomp:
            return False
    return True


@_njit(cache=True, nogil=True)
def sweep_subsets(n, k, l, m_low, lo_slots, fixed_mask, edge_u, edge_v,
                  vertex_cond, require_connected, ncomp, collect, out_masks):
    """Test every (m_low-subset of slots [0, lo_slots)) | fixed_mask.

    Subsets are visited in ascending mask order (Gosper), so the first hit is
    deterministic.  Existence mode (collect=0) stops at the first hit;
    collect mode stores hit masks into out_masks (over-capacity hits are
    still counted).  Returns (hits, subsets_examined, first_hit_mask) with
    first_hit_mask = -1 when there was no hit.
    """
    n_slots = edge_u.shape[0]
    adj = np.zeros(n, np.int64)
    deg = np.zeros(n, np.int64)
    cands = np.empty(8, np.int64)
    wpos = np.empty(8, np.int64)
    found = 0
    examined = 0
    first = -1
    if m_low == 0:
        examined = 1
        if _mask_ok(fixed_mask, n, n_slots, edge_u, edge_v, k, l, vertex_cond,
                    require_connected, ncomp, adj, deg, cands, wpos):
            found = 1
            first = fixed_mask
            if collect and out_masks.shape[0] > 0:
                out_masks[0] = fixed_mask
        return found, examined, first
    mask_lo = (1 << m_low) - 1
    end = 1 << lo_slots
    while mask_lo < end:
        mask = mask_lo | fixed_mask
        examined += 1
        if _mask_ok(mask, n, n_slots, edge_u, edge_v, k, l, vertex_cond,
                    require_connected, ncomp, adj, deg, cands, wpos):
            if first < 0:
                first = mask
            if collect:
                if found < out_masks.shape[0]:
                    out_masks[found] = mask
                found += 1
            else:
                found += 1
                break
        c = mask_lo & (-mask_lo)
        r = mask_lo + c
        mask_lo = (((r ^ mask_lo) >> 2) // c) | r
    return found, examined, first


@_njit(cache=True, nogil=True)
def scan_cover_implication(n, k, edge_u, edge_v, bad_out):
    """Over ALL labeled graphs on n vertices: count those where every edge is
    in a K_k, and among them count failures of the every-edge-in-(k-2)-
    triangles condition.  First few failing masks go into bad_out.

    Masks are walked in Gray-code order so each step flips a single edge:
    adjacency, degrees, and the count of degree-infeasible vertices (degree
    in 1..k-2, which rules the cover out) update in O(1), and only the
    surviving masks pay for a full cover check.

    Returns (covered_count, violation_count).
    """
    n_slots = edge_u.shape[0]
    adj = np.zeros(n, np.int64)
    deg = np.zeros(n, np.int64)
    cands = np.empty(8, np.int64)
    wpos = np.empty(8, np.int64)
    covered = 0
    bad = 0
    mask = 0
    m_edges = 0
    n_infeasible = 0
    total = 1 << n_slots
    for i in range(1, total):
        low = i & (-i)
        t = _popcount(low - 1)
        u = edge_u[t]
        v = edge_v[t]
        bit = 1 << t
        if mask & bit:
            mask ^= bit
            m_edges -= 1
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
            delta = -1
        else:
            mask ^= bit
            m_edges += 1
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            delta = 1
        for w in (u, v):
            d_old = deg[w]
            d_new = d_old + delta
            deg[w] = d_new
            if 0 < d_old < k - 1:
                n_infeasible -= 1
            if 0 < d_new < k - 1:
                n_infeasible += 1
        if n_infeasible != 0 or m_edges == 0:
            continue
        ok = True
        rest = mask
        while rest != 0:
            lo = rest & (-rest)
            s = _popcount(lo - 1)
            rest ^= lo
            if _edge_clique_count(adj, n, edge_u[s], edge_v[s], k, 1,
                                  cands, wpos) < 1:
                ok = False
                break
        if not ok:
            continue
        covered += 1
        lp = k - 2
        rest = mask
        while rest != 0:
            lo = rest & (-rest)
            s = _popcount(lo - 1)
            rest ^= lo
            if _popcount(adj[edge_u[s]] & adj[edge_v[s]]) < lp:
                if bad < bad_out.shape[0]:
                    bad_out[bad] = mask
                bad += 1
                break
    return covered, bad


@_njit(cache=True, nogil=True)
def canonical_mask(adj, n):
    """Lexicographically least adjacency bit string over all vertex
    permutations, packed with slot (0,1) as the most significant bit.

    Permutations are generated in place (lexicographic successor), so there
    is no n!-sized table; early aborts keep the typical cost far below
    n! * n(n-1)/2 bit probes.
    """
    n_slots = (n * (n - 1)) // 2
    if n_slots == 0:
        return 0
    perm = np.empty(n, np.int64)
    for i in range(n):
        perm[i] = i
    best = (1 << n_slots) - 1
    while True:
        cur = 0
        bits_done = 0
        smaller = False
        dead = False
        for j in range(1, n):
            pj = perm[j]
            for i in range(j):
                bit = (adj[perm[i]] >> pj) & 1
                cur = (cur << 1) | bit
                bits_done += 1
                if not smaller:
                    bbit = (best >> (n_slots - bits_done)) & 1
                    if bit > bbit:
                        dead = True
                        break
                    if bit < bbit:
                        smaller = True
            if dead:
                break
        if not dead and cur < best:
            best = cur
        # lexicographic next permutation
        i = n - 2
        while i >= 0 and perm[i] >= perm[i + 1]:
            i -= 1
        if i < 0:
            break
        j = n - 1
        while perm[j] <= perm[i]:
            j -= 1
        perm[i], perm[j] = perm[j], perm[i]
        lo = i + 1
        hi = n - 1
        while lo < hi:
            perm[lo], perm[hi] = perm[hi], perm[lo]
            lo += 1
            hi -= 1
    return best
