"""Exact node centralities: degree, betweenness, closeness, clustering.

Conventions:

* Degree centrality is ``d_i / (n - 1)``.
* Betweenness sums, over unordered node pairs ``{h, k}`` with ``i`` not an
  endpoint, the fraction of shortest h-k paths that pass through ``i``.
  Unreachable pairs contribute 0 and no normalization is applied. Computed
  with Brandes' single-source accumulation (level-synchronous, array-based),
  O(nm) on unweighted graphs.
* Closeness is ``n / sum_j d_ij`` with the network size in the numerator.
  The constant factor relative to the common ``(n-1)`` variant is irrelevant
  to any correlation analysis, which is this library's use case.
* The clustering coefficient is ``2 T_i / (d_i (d_i - 1))``, defined as 0
  for degree <= 1 where the ratio would be 0/0.

Distances are unweighted hop counts. ``oracle_betweenness`` recomputes
betweenness from scratch by all-pairs BFS path counting and exists purely as
an independent test oracle for the Brandes implementation.
"""
from __future__ import annotations

from collections import deque

import numpy as np

from .graph import Graph, frontier_neighbors


class DisconnectedGraphError(ValueError):
    """An operation requiring a connected graph saw an unreachable pair."""


def degree_centrality(g: Graph) -> np.ndarray:
    if g.n < 2:
        raise ValueError(f"degree centrality needs n >= 2, got n={g.n}")
    return g.degrees / (g.n - 1)


def _bfs_levels(g: Graph, source: int):
    """Level-synchronous BFS: distances, path counts, per-level node arrays."""
    n = g.n
    dist = np.full(n, -1, dtype=np.int64)
    sigma = np.zeros(n, dtype=np.float64)
    dist[source] = 0
    sigma[source] = 1.0
    levels = [np.asarray([source], dtype=np.int64)]
    lev = 0
    while True:
        nbrs, srcs = frontier_neighbors(g, levels[-1])
        if nbrs.size == 0:
            break
        unseen = dist[nbrs] == -1
        fresh = np.unique(nbrs[unseen]) if unseen.any() else None
        if fresh is not None:
            dist[fresh] = lev + 1
        advance = dist[nbrs] == lev + 1
        if advance.any():
            sigma += np.bincount(nbrs[advance], weights=sigma[srcs[advance]],
                                 minlength=n)
        if fresh is None or fresh.size == 0:
            break
        levels.append(fresh)
        lev += 1
    return dist, sigma, levels


def betweenness_centrality(g: Graph) -> np.ndarray:
    """Unnormalized betweenness over unordered pairs, endpoints excluded."""
    n = g.n
    bc = np.zeros(n, dtype=np.float64)
    if n < 3 or g.m == 0:
        return bc
    for s in range(n):
        if g.degrees[s] == 0:
            continue
        dist, sigma, levels = _bfs_levels(g, s)
        delta = np.zeros(n, dtype=np.float64)
        for lev in range(len(levels) - 1, 0, -1):
            nodes = levels[lev]
            nbrs, srcs = frontier_neighbors(g, nodes)
            pred = dist[nbrs] == lev - 1
            if pred.any():
                contrib = (sigma[nbrs[pred]] / sigma[srcs[pred]]
                           * (1.0 + delta[srcs[pred]]))
                delta += np.bincount(nbrs[pred], weights=contrib, minlength=n)
        delta[s] = 0.0
        bc += delta
    # each unordered pair was accumulated from both endpoints
    return bc / 2.0


def closeness_centrality(g: Graph) -> np.ndarray:
    """Closeness ``n / sum_j d_ij`` on a connected graph.

    Raises:
        DisconnectedGraphError: naming the first unreachable pair found.
        ValueError: if n < 2 (the distance sum would be empty).
    """
    n = g.n
    if n < 2:
        raise ValueError(f"closeness needs n >= 2, got n={g.n}")
    out = np.empty(n, dtype=np.float64)
    for s in range(n):
        dist = np.full(n, -1, dtype=np.int64)
        dist[s] = 0
        frontier = np.asarray([s], dtype=np.int64)
        lev = 0
        total = 0
        reached = 1
        while frontier.size:
            nbrs, _ = frontier_neighbors(g, frontier)
            if nbrs.size == 0:
                break
            fresh = np.unique(nbrs[dist[nbrs] == -1])
            if fresh.size == 0:
                break
            dist[fresh] = lev + 1
            total += (lev + 1) * int(fresh.size)
            reached += int(fresh.size)
            frontier = fresh
            lev += 1
        if reached < n:
            missing = int(np.flatnonzero(dist == -1)[0])
            raise DisconnectedGraphError(
                f"node {missing} is unreachable from node {s}")
        out[s] = n / total
    return out


def triangle_counts(g: Graph, dense_threshold: int = 3000) -> np.ndarray:
    """Number of triangles through each node.

    Dense matrix product up to ``dense_threshold`` nodes, sorted-adjacency
    intersection beyond it; both are exact.
    """
    n = g.n
    t = np.zeros(n, dtype=np.int64)
    if g.m == 0:
        return t
    if n <= dense_threshold:
        a = np.zeros((n, n), dtype=np.float64)
        a[g.edge_u, g.edge_v] = 1.0
        a[g.edge_v, g.edge_u] = 1.0
        paths2 = a @ a
        # closed 3-walks through i, each triangle counted twice (two orders)
        t = np.rint((paths2 * a).sum(axis=1) / 2.0).astype(np.int64)
        return t
    adj_rows = [g.neighbors(u).tolist() for u in range(n)]
    for u, v in g.edge_list():
        ru, rv = adj_rows[u], adj_rows[v]
        i = j = 0
        while i < len(ru) and j < len(rv):
            x, y = ru[i], rv[j]
            if x == y:
                # count each triangle once, at its lexicographically
                # smallest edge with the largest third vertex
                if x > v:
                    t[u] += 1
                    t[v] += 1
                    t[x] += 1
                i += 1
                j += 1
            elif x < y:
                i += 1
            else:
                j += 1
    return t


def clustering_coefficient(g: Graph) -> np.ndarray:
    """Local clustering: triangles through i over d_i(d_i-1)/2; 0 if d_i <= 1."""
    tri = triangle_counts(g)
    d = g.degrees.astype(np.float64)
    denom = d * (d - 1.0)
    out = np.zeros(g.n, dtype=np.float64)
    mask = g.degrees >= 2
    out[mask] = 2.0 * tri[mask] / denom[mask]
    return out


def oracle_betweenness(g: Graph, max_n: int = 200) -> np.ndarray:
    """Betweenness by explicit all-pairs BFS path counting (test oracle).

    Contract matches ``betweenness_centrality`` exactly but the computation
    is independent: plain deque BFS per source, then the pairwise identity
    that the shortest h-k paths through i number sigma(h,i) * sigma(i,k)
    whenever d(h,i) + d(i,k) = d(h,k). Guarded to small graphs so it is not
    used by accident where Brandes is intended.
    """
    n = g.n
    if n > max_n:
        raise ValueError(f"oracle limited to n <= {max_n}, got n={n}")
    if n < 3 or g.m == 0:
        return np.zeros(n, dtype=np.float64)
    rows = [g.neighbors(u).tolist() for u in range(n)]
    dist_m = np.full((n, n), np.inf, dtype=np.float64)
    sigma_m = np.zeros((n, n), dtype=np.float64)
    for s in range(n):
        dist = [-1] * n
        sigma = [0] * n
        dist[s] = 0
        sigma[s] = 1
        queue = deque([s])
        while queue:
            v = queue.popleft()
            dv = dist[v]
            sv = sigma[v]
            for w in rows[v]:
                if dist[w] == -1:
                    dist[w] = dv + 1
                    queue.append(w)
                if dist[w] == dv + 1:
                    sigma[w] += sv
        for v in range(n):
            if dist[v] >= 0:
                dist_m[s, v] = dist[v]
                sigma_m[s, v] = sigma[v]
    bc = np.zeros(n, dtype=np.float64)
    finite = np.isfinite(dist_m)
    for i in range(n):
        through = dist_m[:, i:i + 1] + dist_m[i:i + 1, :]
        on_path = finite & (through == dist_m)
        counts = sigma_m[:, i:i + 1] * sigma_m[i:i + 1, :]
        frac = np.zeros((n, n), dtype=np.float64)
        np.divide(counts, sigma_m, out=frac, where=on_path)
        frac[i, :] = 0.0
        frac[:, i] = 0.0
        bc[i] = np.triu(frac, 1).sum()
    return bc
