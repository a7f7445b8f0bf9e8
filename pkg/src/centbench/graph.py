"""Immutable undirected simple graph with dense integer node and edge ids.

Nodes are ``0..n-1``. Every undirected edge ``{u, v}`` gets a dense edge id
in ``0..m-1``, assigned in the order the edges were supplied, so seeded
experiments produce identical edge ids run after run. Adjacency is stored in
CSR form (``indptr`` / ``adj``) with each neighbor row sorted ascending, and
``adj_eids`` carries the edge id of each adjacency slot.

Graphs are frozen after construction; every algorithm in the package treats
them as read-only, which makes them safe to share across threads.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class GraphError(ValueError):
    """Invalid graph construction input (self-loop, bad id, duplicate edge)."""


@dataclass(frozen=True, repr=False)
class Graph:
    n: int
    m: int
    indptr: np.ndarray    # int64, length n+1
    adj: np.ndarray       # int64, length 2m, neighbors, sorted within each row
    adj_eids: np.ndarray  # int64, length 2m, edge id of each adjacency slot
    edge_u: np.ndarray    # int64, length m, smaller endpoint of each edge id
    edge_v: np.ndarray    # int64, length m, larger endpoint of each edge id
    degrees: np.ndarray   # int64, length n

    def neighbors(self, u: int) -> np.ndarray:
        """Sorted neighbor ids of ``u`` (a read-only view)."""
        return self.adj[self.indptr[u]:self.indptr[u + 1]]

    def degree(self, u: int) -> int:
        return int(self.degrees[u])

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        i = int(np.searchsorted(row, v))
        return i < row.size and row[i] == v

    def edge_id(self, u: int, v: int) -> int:
        """Dense id of edge ``{u, v}``; raises GraphError if absent."""
        row = self.neighbors(u)
        i = int(np.searchsorted(row, v))
        if i >= row.size or row[i] != v:
            raise GraphError(f"no edge between {u} and {v}")
        return int(self.adj_eids[self.indptr[u] + i])

    def edge_endpoints(self, eid: int) -> tuple[int, int]:
        return int(self.edge_u[eid]), int(self.edge_v[eid])

    def edge_list(self) -> list[tuple[int, int]]:
        """Edges as (u, v) pairs with u < v, ordered by edge id."""
        return list(zip(self.edge_u.tolist(), self.edge_v.tolist()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(edges, n: int) -> Graph:
    """Build an immutable simple graph from an edge list.

    Args:
        edges: iterable of unordered node-id pairs; ids must lie in 0..n-1.
        n: node count.

    Raises:
        GraphError: on a self-loop, an out-of-range id, or a duplicate edge
            (the same unordered pair supplied twice).
    """
    if n < 0:
        raise GraphError(f"node count must be non-negative, got {n}")
    eu: list[int] = []
    ev: list[int] = []
    seen: set[tuple[int, int]] = set()
    for a, b in edges:
        a = int(a)
        b = int(b)
        if a == b:
            raise GraphError(f"self-loop at node {a}")
        if not (0 <= a < n) or not (0 <= b < n):
            raise GraphError(f"edge ({a}, {b}) outside node range 0..{n - 1}")
        key = (a, b) if a < b else (b, a)
        if key in seen:
            raise GraphError(f"duplicate edge {key}")
        seen.add(key)
        eu.append(key[0])
        ev.append(key[1])

    m = len(eu)
    edge_u = np.asarray(eu, dtype=np.int64)
    edge_v = np.asarray(ev, dtype=np.int64)
    src = np.concatenate([edge_u, edge_v])
    dst = np.concatenate([edge_v, edge_u])
    eids = np.tile(np.arange(m, dtype=np.int64), 2)
    order = np.lexsort((dst, src))
    adj = dst[order]
    adj_eids = eids[order]
    degrees = np.bincount(src, minlength=n).astype(np.int64)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(degrees, out=indptr[1:])
    return Graph(n=n, m=m, indptr=indptr, adj=adj, adj_eids=adj_eids,
                 edge_u=edge_u, edge_v=edge_v, degrees=degrees)


def frontier_neighbors(g: Graph, frontier: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """All adjacency entries of the frontier nodes, flattened.

    Returns ``(nbrs, srcs)`` where ``nbrs[i]`` is a neighbor of ``srcs[i]``;
    each frontier node contributes its whole (sorted) neighbor row. This is
    the inner step shared by all BFS-style passes.
    """
    starts = g.indptr[frontier]
    cnts = g.degrees[frontier]
    total = int(cnts.sum())
    if total == 0:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty
    csum = np.cumsum(cnts)
    slots = np.repeat(starts - (csum - cnts), cnts) + np.arange(total, dtype=np.int64)
    return g.adj[slots], np.repeat(frontier, cnts)


def _component_of(g: Graph, start: int, visited: np.ndarray) -> np.ndarray:
    """Nodes of the connected component containing ``start`` (sorted)."""
    visited[start] = True
    parts = [np.asarray([start], dtype=np.int64)]
    frontier = parts[0]
    while frontier.size:
        nbrs, _ = frontier_neighbors(g, frontier)
        if nbrs.size == 0:
            break
        fresh = np.unique(nbrs[~visited[nbrs]])
        visited[fresh] = True
        if fresh.size == 0:
            break
        parts.append(fresh)
        frontier = fresh
    return np.sort(np.concatenate(parts))


def connected_components(g: Graph) -> list[np.ndarray]:
    """All connected components, in order of their smallest node id."""
    visited = np.zeros(g.n, dtype=bool)
    comps = []
    for s in range(g.n):
        if not visited[s]:
            comps.append(_component_of(g, s, visited))
    return comps


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    visited = np.zeros(g.n, dtype=bool)
    return _component_of(g, 0, visited).size == g.n


def largest_connected_component(g: Graph) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the largest component, densely relabeled.

    Ties between equal-sized components go to the one containing the
    smallest node id. Returns the subgraph and the injective old-id to
    new-id mapping. Edge ids keep their relative order from the parent
    graph, so subgraph construction is deterministic.

    Raises:
        GraphError: if the graph has no nodes.
    """
    if g.n == 0:
        raise GraphError("empty graph has no components")
    best: np.ndarray | None = None
    for comp in connected_components(g):
        if best is None or comp.size > best.size:
            best = comp
    assert best is not None
    relabel = np.full(g.n, -1, dtype=np.int64)
    relabel[best] = np.arange(best.size, dtype=np.int64)
    keep = relabel[g.edge_u] >= 0
    new_edges = zip(relabel[g.edge_u[keep]].tolist(),
                    relabel[g.edge_v[keep]].tolist())
    sub = build_graph(new_edges, int(best.size))
    mapping = {int(old): int(new) for new, old in enumerate(best.tolist())}
    return sub, mapping


def parse_edge_list(text: str, n: int | None = None) -> Graph:
    """Parse the edge-list text format.

    One edge per line: two whitespace-separated non-negative integers.
    Lines starting with ``#`` and blank lines are ignored. The node count is
    inferred as ``max id + 1`` unless given explicitly.
    """
    edges = []
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected two node ids, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphError(f"line {lineno}: non-integer node id in {line!r}") from exc
        if u < 0 or v < 0:
            raise GraphError(f"line {lineno}: negative node id in {line!r}")
        edges.append((u, v))
        max_id = max(max_id, u, v)
    if n is None:
        n = max_id + 1
    return build_graph(edges, n)


def read_edge_list(path, n: int | None = None) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read(), n=n)


def write_edge_list(g: Graph, path) -> None:
    """Write a graph in the edge-list text format (edge-id order)."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"# nodes: {g.n} edges: {g.m}\n")
        for u, v in g.edge_list():
            fh.write(f"{u} {v}\n")
