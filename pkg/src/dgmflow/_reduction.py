"""Compiled kernels for persistence pairing.

Degree-0 pairs come from a union-find sweep over edges in filtration order
(elder rule: the younger component minimum dies).  Degree-1 pairs come from
column reduction of the anti-transposed boundary matrix: edge columns hold
their cofacet triangles and are processed in decreasing filtration order with
``low = smallest rank``; this yields the same unique pairing as left-to-right
homology reduction and avoids its fill-in on Rips complexes.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def union_find_pairs(edge_u, edge_v, edge_pos, n_vertices):
    """Pair vertices with the edges that merge their components.

    ``edge_u/edge_v`` are vertex ids of all edges; ``edge_pos`` lists edge
    indices in increasing filtration rank.  Vertex rank equals vertex id.
    Returns (birth vertex ids, death edge indices, negative mask over edges).
    """
    n_edges = len(edge_pos)
    parent = np.arange(n_vertices)
    oldest = np.arange(n_vertices)
    births = np.empty(n_edges, np.int64)
    deaths = np.empty(n_edges, np.int64)
    negative = np.zeros(len(edge_u), np.bool_)
    n_pairs = 0
    for idx in range(n_edges):
        e = edge_pos[idx]
        u = edge_u[e]
        v = edge_v[e]
        ru = u
        while parent[ru] != ru:
            parent[ru] = parent[parent[ru]]
            ru = parent[ru]
        rv = v
        while parent[rv] != rv:
            parent[rv] = parent[parent[rv]]
            rv = parent[rv]
        if ru == rv:
            continue
        a = oldest[ru]
        b = oldest[rv]
        younger = a if a > b else b
        older = b if a > b else a
        parent[ru] = rv
        oldest[rv] = older
        births[n_pairs] = younger
        deaths[n_pairs] = e
        negative[e] = True
        n_pairs += 1
    return births[:n_pairs], deaths[:n_pairs], negative


@njit(cache=True)
def _sym_diff(a, la, pool, ps, pl, out):
    i = 0
    j = 0
    k = 0
    while i < la and j < pl:
        x = a[i]
        y = pool[ps + j]
        if x < y:
            out[k] = x
            i += 1
            k += 1
        elif y < x:
            out[k] = y
            j += 1
            k += 1
        else:
            i += 1
            j += 1
    while i < la:
        out[k] = a[i]
        i += 1
        k += 1
    while j < pl:
        out[k] = pool[ps + j]
        j += 1
        k += 1
    return k


@njit(cache=True)
def reduce_edge_cochains(proc_ids, cof_start, cof_flat, tri_ranks, n_total):
    """Reduce edge columns (cofacet triangles) in the given order.

    ``proc_ids`` are edge indices (0-based within the edge block) ordered by
    decreasing edge rank, cleared columns already removed.  ``tri_ranks`` maps
    triangle index to its global rank.  Returns (paired edge indices, low
    triangle ranks, unpaired edge indices).
    """
    n_cols = len(proc_ids)
    claim = np.full(n_total, -1, np.int64)
    col_start = np.empty(n_cols, np.int64)
    col_len = np.empty(n_cols, np.int64)
    pool = np.empty(max(16, 4 * len(cof_flat)), np.int64)
    pool_used = 0
    n_stored = 0
    cap = len(tri_ranks) + 1
    cur = np.empty(cap, np.int64)
    tmp = np.empty(cap, np.int64)
    out_edge = np.empty(n_cols, np.int64)
    out_low = np.empty(n_cols, np.int64)
    n_pairs = 0
    zero_edges = np.empty(n_cols, np.int64)
    n_zero = 0
    for idx in range(n_cols):
        e = proc_ids[idx]
        s = cof_start[e]
        length = cof_start[e + 1] - s
        for q in range(length):
            cur[q] = tri_ranks[cof_flat[s + q]]
        cur[:length].sort()
        while length > 0:
            low = cur[0]
            k = claim[low]
            if k == -1:
                claim[low] = n_stored
                while pool_used + length > len(pool):
                    bigger = np.empty(2 * len(pool), np.int64)
                    bigger[:pool_used] = pool[:pool_used]
                    pool = bigger
                pool[pool_used : pool_used + length] = cur[:length]
                col_start[n_stored] = pool_used
                col_len[n_stored] = length
                pool_used += length
                n_stored += 1
                out_edge[n_pairs] = e
                out_low[n_pairs] = low
                n_pairs += 1
                break
            length = _sym_diff(cur, length, pool, col_start[k], col_len[k], tmp)
            swap = cur
            cur = tmp
            tmp = swap
        if length == 0:
            zero_edges[n_zero] = e
            n_zero += 1
    return out_edge[:n_pairs], out_low[:n_pairs], zero_edges[:n_zero]
