"""Game of Thieves: epoch-based multi-agent centrality simulation.

Each node hosts a fixed number of thieves and starts with a stock of
virtual diamonds (vdiamonds). In every epoch each thief makes one hop.
An empty-handed thief walks to a uniformly random neighbor and, if that
node is not its home and holds at least one vdiamond, picks one up. A
loaded thief retraces its outbound trail one hop per epoch and deposits
the vdiamond when it reaches home. Central nodes are drained fastest, so
a LOW time-averaged stock (phi) means HIGH centrality; the edge score
(psi) is the time-averaged count of loaded thieves crossing each edge.

Epoch semantics are sequential: thieves act in ascending thief-id order
with immediate stock updates, so a later thief sees an earlier thief's
pickup within the same epoch. ``epoch_step`` implements that reference
semantics directly; ``run_got`` uses an array kernel that is equivalent
to it, draw for draw (the test suite asserts this), but runs orders of
magnitude faster.

Score accumulation: with ``mean_convention="per-epoch"`` the sums over
epochs 0..T (T+1 addends, where epoch 0 is the initial state) are divided
by the epoch count T; ``"arithmetic"`` divides by T+1 instead. The epoch count defaults to
ceil(log(n)^3) with a configurable logarithm base.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .graph import Graph, is_connected
from .rng import make_rng

LOG_BASES = ("e", "2", "10")
MEAN_CONVENTIONS = ("per-epoch", "arithmetic")


def default_epochs(n: int, log_base: str = "e") -> int:
    """Default epoch count ceil(log(n)^3) for the given logarithm base."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if log_base == "e":
        x = math.log(n)
    elif log_base == "2":
        x = math.log2(n)
    elif log_base == "10":
        x = math.log10(n)
    else:
        raise ValueError(f"log_base must be one of {LOG_BASES}, got {log_base!r}")
    return max(1, math.ceil(x ** 3))


@dataclass(frozen=True)
class GotConfig:
    """Simulation parameters.

    ``vdiamonds_per_node=None`` resolves to the node count and
    ``epochs=None`` to ``default_epochs(n, log_base)`` when the simulation
    starts, matching the customary settings for this game.
    """
    thieves_per_node: int = 1
    vdiamonds_per_node: int | None = None
    epochs: int | None = None
    log_base: str = "e"
    mean_convention: str = "per-epoch"
    seed: int = 0

    def resolve(self, n: int) -> tuple[int, int, int]:
        """Concrete (thieves_per_node, vdiamonds_per_node, epochs) for n nodes."""
        if self.log_base not in LOG_BASES:
            raise ValueError(f"log_base must be one of {LOG_BASES}")
        if self.mean_convention not in MEAN_CONVENTIONS:
            raise ValueError(f"mean_convention must be one of {MEAN_CONVENTIONS}")
        tpn = self.thieves_per_node
        vd = self.vdiamonds_per_node if self.vdiamonds_per_node is not None else n
        epochs = self.epochs if self.epochs is not None else default_epochs(n, self.log_base)
        if tpn < 1 or vd < 1 or epochs < 1:
            raise ValueError(
                f"thieves_per_node, vdiamonds_per_node and epochs must be >= 1, "
                f"got {tpn}, {vd}, {epochs}")
        return tpn, vd, epochs


@dataclass
class ThiefState:
    """One thief: home node, current position, cargo flag, outbound trail.

    ``path_stack`` always starts at the home node and ends at the current
    position. While carrying, the thief retraces the stack toward home.
    """
    home: int
    position: int
    carrying: bool = False
    path_stack: list[int] = field(default_factory=list)


@dataclass
class GotState:
    """Full mutable simulation state between epochs."""
    vdiamonds_at_node: np.ndarray        # int64 per node
    thieves: list[ThiefState]
    epoch: int
    edge_loaded_crossings: np.ndarray    # int64 per edge, current epoch only

    def carried_total(self) -> int:
        return sum(1 for t in self.thieves if t.carrying)


class TraceRecord(NamedTuple):
    epoch: int
    vdiamonds_held: int
    thieves_carrying: int


@dataclass(frozen=True)
class GotResult:
    phi: np.ndarray                      # node score, length n
    psi: np.ndarray                      # edge score, length m
    trace: list[TraceRecord] | None


def initial_state(g: Graph, cfg: GotConfig) -> GotState:
    tpn, vd, _ = cfg.resolve(g.n)
    thieves = [ThiefState(home=node, position=node, path_stack=[node])
               for node in range(g.n) for _ in range(tpn)]
    return GotState(
        vdiamonds_at_node=np.full(g.n, vd, dtype=np.int64),
        thieves=thieves,
        epoch=0,
        edge_loaded_crossings=np.zeros(g.m, dtype=np.int64),
    )


def epoch_step(g: Graph, state: GotState, rng: np.random.Generator) -> GotState:
    """Advance the simulation one epoch, in place (reference semantics).

    Thieves act in ascending id order with immediate vdiamond updates. One
    uniform draw is consumed per thief that starts the epoch empty-handed,
    batched in a single generator call so that any implementation making the
    same batched draws sees the identical stream.
    """
    counts = state.vdiamonds_at_node
    state.edge_loaded_crossings[:] = 0
    draws = rng.random(sum(1 for t in state.thieves if not t.carrying))
    di = 0
    for thief in state.thieves:
        if thief.carrying:
            stack = thief.path_stack
            frm = stack.pop()
            to = stack[-1]
            state.edge_loaded_crossings[g.edge_id(frm, to)] += 1
            thief.position = to
            if to == thief.home:
                counts[to] += 1
                thief.carrying = False
        else:
            pos = thief.position
            u = draws[di]
            di += 1
            deg = int(g.degrees[pos])
            if deg == 0:
                raise ValueError(f"thief stranded on isolated node {pos}")
            slot = int(g.indptr[pos]) + int(u * deg)
            to = int(g.adj[slot])
            thief.position = to
            if to == thief.home:
                # back at base empty-handed: the outbound trail restarts
                thief.path_stack = [to]
            else:
                thief.path_stack.append(to)
                if counts[to] >= 1:
                    counts[to] -= 1
                    thief.carrying = True
    state.epoch += 1
    return state


def run_got(g: Graph, cfg: GotConfig, collect_trace: bool = False) -> GotResult:
    """Run the full simulation and return time-averaged node and edge scores.

    Requires a connected graph with at least two nodes. Deterministic for a
    fixed (graph, config, seed); equivalent to iterating ``epoch_step`` from
    ``initial_state`` with the same generator.
    """
    n, m = g.n, g.m
    if n < 2:
        raise ValueError(f"simulation needs n >= 2, got n={n}")
    if not is_connected(g):
        raise ValueError("simulation requires a connected graph")
    tpn, vd, epochs = cfg.resolve(n)
    rng = make_rng(cfg.seed)

    nt = n * tpn
    home = np.repeat(np.arange(n, dtype=np.int64), tpn)
    counts = np.full(n, vd, dtype=np.int64)
    carrying = np.zeros(nt, dtype=bool)
    cap = 16
    stack = np.zeros((nt, cap), dtype=np.int64)
    stack[:, 0] = home
    estack = np.zeros((nt, cap), dtype=np.int64)
    depth = np.zeros(nt, dtype=np.int64)

    phi_sum = np.full(n, vd, dtype=np.int64)  # epoch-0 snapshot
    psi_sum = np.zeros(m, dtype=np.int64)
    trace = [TraceRecord(0, n * vd, 0)] if collect_trace else None

    tids = np.arange(nt, dtype=np.int64)
    indptr, adj, adj_eids, deg = g.indptr, g.adj, g.adj_eids, g.degrees

    for epoch in range(1, epochs + 1):
        walk_ids = tids[~carrying]
        carr_ids = tids[carrying]
        draws = rng.random(walk_ids.size)

        # loaded thieves retrace one hop; some arrive home and deposit
        dep_ids = dep_nodes = None
        if carr_ids.size:
            d0 = depth[carr_ids]
            psi_sum += np.bincount(estack[carr_ids, d0 - 1], minlength=m)
            depth[carr_ids] = d0 - 1
            arrived = d0 == 1
            if arrived.any():
                dep_ids = carr_ids[arrived]
                dep_nodes = home[dep_ids]
                carrying[dep_ids] = False

        # empty-handed thieves hop to a uniform random neighbor
        att_ids = att_nodes = None
        if walk_ids.size:
            pos = stack[walk_ids, depth[walk_ids]]
            slots = indptr[pos] + (draws * deg[pos]).astype(np.int64)
            to = adj[slots]
            newd = depth[walk_ids] + 1
            if int(newd.max()) >= cap:
                cap = max(cap * 2, int(newd.max()) + 1)
                grown = np.zeros((nt, cap), dtype=np.int64)
                grown[:, :stack.shape[1]] = stack
                stack = grown
                grown_e = np.zeros((nt, cap), dtype=np.int64)
                grown_e[:, :estack.shape[1]] = estack
                estack = grown_e
            stack[walk_ids, newd] = to
            estack[walk_ids, newd - 1] = adj_eids[slots]
            depth[walk_ids] = newd
            homeback = to == home[walk_ids]
            if homeback.any():
                depth[walk_ids[homeback]] = 0  # trail restarts at home
            away = ~homeback
            if away.any():
                att_ids = walk_ids[away]
                att_nodes = to[away]

        _resolve_pickups(counts, carrying, att_ids, att_nodes, dep_ids,
                         dep_nodes, n)

        phi_sum += counts
        if collect_trace:
            trace.append(TraceRecord(epoch, int(counts.sum()),
                                     int(carrying.sum())))

    denom = float(epochs if cfg.mean_convention == "per-epoch" else epochs + 1)
    return GotResult(phi=phi_sum / denom, psi=psi_sum / denom, trace=trace)


def _resolve_pickups(counts, carrying, att_ids, att_nodes, dep_ids, dep_nodes, n):
    """Apply one epoch's deposits and pickup attempts in thief-id order.

    An attempt succeeds when the node still holds a vdiamond at the moment
    the attempting thief acts. Per-node this only depends on the start-of-
    epoch stock and the id-interleaving of that node's deposits and
    attempts, so nodes resolve independently. The common case (stock covers
    all attempts everywhere) needs no sorting at all; genuinely contended
    nodes fall back to an exact id-ordered replay.
    """
    if att_ids is None:
        if dep_nodes is not None:
            counts += np.bincount(dep_nodes, minlength=n)
        return
    att_per_node = np.bincount(att_nodes, minlength=n)
    if not (counts[att_nodes] < att_per_node[att_nodes]).any():
        counts -= att_per_node
        if dep_nodes is not None:
            counts += np.bincount(dep_nodes, minlength=n)
        carrying[att_ids] = True
        return

    # scarce stock somewhere: group attempts by node, keep id order inside
    order = np.argsort(att_nodes, kind="stable")
    sn = att_nodes[order]
    st = att_ids[order]
    first = np.empty(sn.size, dtype=bool)
    first[0] = True
    first[1:] = sn[1:] != sn[:-1]
    starts = np.flatnonzero(first)
    runs = np.diff(np.append(starts, sn.size))
    rank_in_node = np.arange(sn.size, dtype=np.int64) - np.repeat(starts, runs)
    succ = rank_in_node < counts[sn]

    if dep_nodes is not None:
        # a node whose stock runs short AND that also receives deposits this
        # epoch needs the exact interleaving; replay those few by id
        short_nodes = np.unique(sn[~succ])
        dep_cnt = np.bincount(dep_nodes, minlength=n)
        replay = short_nodes[dep_cnt[short_nodes] > 0]
        if replay.size:
            dorder = np.argsort(dep_nodes, kind="stable")
            dn = dep_nodes[dorder]
            dt = dep_ids[dorder]
            for u in replay.tolist():
                alo, ahi = np.searchsorted(sn, [u, u + 1])
                dlo, dhi = np.searchsorted(dn, [u, u + 1])
                a_ids = st[alo:ahi].tolist()
                d_ids = dt[dlo:dhi].tolist()
                stock = int(counts[u])
                di = 0
                for idx, tid in enumerate(a_ids):
                    while di < len(d_ids) and d_ids[di] < tid:
                        stock += 1
                        di += 1
                    if stock > 0:
                        stock -= 1
                        succ[alo + idx] = True
                    else:
                        succ[alo + idx] = False

    taken = sn[succ]
    if taken.size:
        counts -= np.bincount(taken, minlength=n)
    if dep_nodes is not None:
        counts += np.bincount(dep_nodes, minlength=n)
    carrying[st[succ]] = True
