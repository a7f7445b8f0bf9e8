"""Seeded random-graph generators: Erdős–Rényi, Newman–Watts small-world,
and Holme–Kim scale-free.

Every generator consumes exactly one PCG64 stream seeded by its ``seed``
argument, draws in a fixed order, and assigns edge ids in deterministic
first-appearance order, so a fixed seed reproduces the edge list bit for
bit. Outputs are always simple undirected graphs.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import Graph, build_graph
from .rng import make_rng

FAMILIES = ("SF", "SW", "ER")


@dataclass(frozen=True)
class GeneratorSpec:
    """One generator invocation.

    ``param`` is the family parameter: edges per new node for SF, ring
    neighbors for SW, edge probability for ER. ``aux_prob`` is the triangle
    probability for SF and the shortcut probability for SW; unused for ER.
    """
    family: str
    n: int
    param: float
    aux_prob: float = 0.0
    seed: int = 0

    def generate(self) -> Graph:
        if self.family == "ER":
            return gen_erdos_renyi(self.n, float(self.param), self.seed)
        if self.family == "SW":
            return gen_nws_small_world(self.n, int(self.param), self.aux_prob,
                                       self.seed)
        if self.family == "SF":
            return gen_holme_kim(self.n, int(self.param), self.aux_prob,
                                 self.seed)
        raise ValueError(f"unknown family {self.family!r}, expected one of {FAMILIES}")


def gen_erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p): each of the C(n, 2) pairs appears independently with prob p.

    Pairs are scanned in lexicographic order with geometric gap sampling, so
    the run time is O(n + m) in expectation rather than O(n^2).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    if p == 0.0 or n < 2:
        return build_graph([], n)
    if p == 1.0:
        return build_graph([(u, v) for u in range(n) for v in range(u + 1, n)], n)
    rng = make_rng(seed)
    log_q = math.log1p(-p)
    edges: list[tuple[int, int]] = []
    u, v = 0, 0  # current pair; (0, 0) is the position before (0, 1)
    while True:
        gap = int(math.log(1.0 - rng.random()) / log_q) + 1
        v += gap
        while v >= n:
            u += 1
            v = u + 1 + (v - n)
            if u >= n - 1:
                return build_graph(edges, n)
        edges.append((u, v))


def gen_nws_small_world(n: int, k: int, p: float, seed: int) -> Graph:
    """Newman–Watts small world: ring lattice plus random shortcuts.

    Start from the ring lattice where every node connects to its k nearest
    ring neighbors. For each lattice edge, with probability p add one
    shortcut between a uniformly random pair that is not identical and not
    already adjacent. Lattice edges are never removed, so the minimum degree
    stays >= k.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if k % 2 != 0 or k < 2:
        raise ValueError(f"k must be even and >= 2, got {k}")
    if k >= n:
        raise ValueError(f"k must be < n, got k={k}, n={n}")
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"shortcut probability must be in [0, 1], got {p}")
    rng = make_rng(seed)
    edges: list[tuple[int, int]] = []
    present: set[tuple[int, int]] = set()
    half = k // 2
    for i in range(n):
        for j in range(1, half + 1):
            w = (i + j) % n
            key = (i, w) if i < w else (w, i)
            edges.append(key)
            present.add(key)
    n_lattice = len(edges)
    for _ in range(n_lattice):
        if rng.random() >= p:
            continue
        while True:
            a = int(rng.integers(n))
            b = int(rng.integers(n))
            if a == b:
                continue
            key = (a, b) if a < b else (b, a)
            if key not in present:
                break
        edges.append(key)
        present.add(key)
    return build_graph(edges, n)


def gen_holme_kim(n: int, m: int, p: float, seed: int) -> Graph:
    """Holme–Kim growing scale-free graph with tunable clustering.

    Start with m isolated seed nodes. Each subsequent node attaches m edges:
    the first by preferential attachment (target drawn from the repeated
    endpoint list, i.e. proportional to current degree), and each further
    edge with probability p by triad formation (a random eligible neighbor
    of the previous target), falling back to preferential attachment when no
    neighbor is eligible. Every new node contributes exactly m distinct
    edges, so the total is (n - m) * m.
    """
    if m < 1 or m >= n:
        raise ValueError(f"need 1 <= m < n, got m={m}, n={n}")
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"triangle probability must be in [0, 1], got {p}")
    rng = make_rng(seed)
    edges: list[tuple[int, int]] = []
    present: set[tuple[int, int]] = set()
    adj: list[list[int]] = [[] for _ in range(n)]
    endpoints: list[int] = []  # one entry per edge endpoint, drives PA draws

    def eligible(new: int, t: int) -> bool:
        if t == new:
            return False
        key = (t, new) if t < new else (new, t)
        return key not in present

    def pa_target(new: int) -> int:
        if endpoints:
            # rejection sampling stays exactly degree-proportional; the cap
            # only guards against adversarial saturation and then falls back
            # to a uniform eligible draw
            for _ in range(1000):
                t = endpoints[int(rng.integers(len(endpoints)))]
                if eligible(new, t):
                    return t
        pool = [t for t in range(new) if eligible(new, t)]
        return pool[int(rng.integers(len(pool)))]

    def connect(new: int, t: int) -> None:
        key = (t, new) if t < new else (new, t)
        edges.append(key)
        present.add(key)
        adj[new].append(t)
        adj[t].append(new)
        endpoints.append(new)
        endpoints.append(t)

    for new in range(m, n):
        prev = pa_target(new)
        connect(new, prev)
        for _ in range(m - 1):
            target = None
            if rng.random() < p:
                friends = [w for w in adj[prev] if eligible(new, w)]
                if friends:
                    target = friends[int(rng.integers(len(friends)))]
            if target is None:
                target = pa_target(new)
            connect(new, target)
            prev = target
    return build_graph(edges, n)
