import numpy as np
import pytest

from centbench import (GotConfig, build_graph, default_epochs, epoch_step,
                       initial_state, run_got)
from centbench.rng import make_rng

from conftest import cycle_graph, random_connected_graph, star_graph


def run_via_epoch_steps(g, cfg):
    """Reference result: iterate the sequential epoch_step and average."""
    tpn, vd, epochs = cfg.resolve(g.n)
    state = initial_state(g, cfg)
    rng = make_rng(cfg.seed)
    phi_sum = np.full(g.n, vd, dtype=np.int64)
    psi_sum = np.zeros(g.m, dtype=np.int64)
    for _ in range(epochs):
        epoch_step(g, state, rng)
        phi_sum += state.vdiamonds_at_node
        psi_sum += state.edge_loaded_crossings
    denom = epochs if cfg.mean_convention == "per-epoch" else epochs + 1
    return phi_sum / denom, psi_sum / denom, state


class TestTwoNodeHandSimulation:
    """One edge, one thief per node, two vdiamonds each, two epochs.

    Epoch 1: both thieves swap ends and pick up; epoch 2: both walk home
    loaded and deposit. Per-node stock snapshots are [2, 1, 2], loaded
    crossings per epoch are [0, 0, 2].
    """

    def test_scores(self):
        g = build_graph([(0, 1)], 2)
        cfg = GotConfig(thieves_per_node=1, vdiamonds_per_node=2, epochs=2,
                        seed=123)
        res = run_got(g, cfg, collect_trace=True)
        assert np.allclose(res.phi, [2.5, 2.5])
        assert np.allclose(res.psi, [1.0])
        held = [t.vdiamonds_held for t in res.trace]
        carrying = [t.thieves_carrying for t in res.trace]
        assert held == [4, 2, 4]
        assert carrying == [0, 2, 0]

    def test_epoch1_state(self):
        g = build_graph([(0, 1)], 2)
        cfg = GotConfig(vdiamonds_per_node=2, epochs=2, seed=123)
        state = initial_state(g, cfg)
        epoch_step(g, state, make_rng(cfg.seed))
        assert state.vdiamonds_at_node.tolist() == [1, 1]
        assert all(t.carrying for t in state.thieves)
        assert state.thieves[0].position == 1
        assert state.thieves[1].position == 0

    def test_arithmetic_mean_convention(self):
        g = build_graph([(0, 1)], 2)
        cfg = GotConfig(vdiamonds_per_node=2, epochs=2, seed=123,
                        mean_convention="arithmetic")
        res = run_got(g, cfg)
        assert np.allclose(res.phi, [5 / 3, 5 / 3])


class TestEpochStep:
    def test_carrying_thief_one_hop_from_home_deposits(self):
        g = build_graph([(0, 1)], 2)
        state = initial_state(g, GotConfig(vdiamonds_per_node=1, epochs=1))
        thief = state.thieves[0]
        thief.carrying = True
        thief.position = 1
        thief.path_stack = [0, 1]
        epoch_step(g, state, make_rng(0))
        assert not thief.carrying
        assert thief.position == 0
        assert thief.path_stack == [0]
        # thief 0 deposited at node 0, then thief 1 walked over and took one
        assert state.vdiamonds_at_node.tolist() == [1, 1]
        assert state.thieves[1].carrying

    def test_no_pickup_on_empty_node(self):
        g = build_graph([(0, 1)], 2)
        state = initial_state(g, GotConfig(vdiamonds_per_node=1, epochs=1))
        state.vdiamonds_at_node[:] = 0
        epoch_step(g, state, make_rng(0))
        assert not any(t.carrying for t in state.thieves)
        assert state.vdiamonds_at_node.tolist() == [0, 0]

    def test_no_pickup_at_own_home_and_trail_reset(self):
        # thief 1 wanders back onto its own stocked home: no pickup, and the
        # outbound trail restarts at the home node
        g = build_graph([(0, 1)], 2)
        cfg = GotConfig(thieves_per_node=1, vdiamonds_per_node=1, epochs=1)
        state = initial_state(g, cfg)
        state.vdiamonds_at_node[:] = [0, 2]
        state.thieves[1].position = 0
        state.thieves[1].path_stack = [1, 0]
        epoch_step(g, state, make_rng(0))
        # thief 0 took one vdiamond at node 1 first (id order)
        assert state.thieves[0].carrying
        # thief 1 arrived at its own home and left the remaining one alone
        assert not state.thieves[1].carrying
        assert state.thieves[1].path_stack == [1]
        assert state.vdiamonds_at_node.tolist() == [0, 1]

    def test_sequential_priority_within_epoch(self):
        # single vdiamond at the middle of a path; both end thieves arrive
        # in the same epoch; the lower id wins
        g = build_graph([(0, 1), (1, 2)], 3)
        cfg = GotConfig(vdiamonds_per_node=1, epochs=1)
        state = initial_state(g, cfg)
        state.vdiamonds_at_node[:] = [0, 1, 0]
        epoch_step(g, state, make_rng(7))
        assert state.thieves[0].carrying  # id 0 acts before id 2
        assert not state.thieves[2].carrying


class TestRunGot:
    def test_requires_connected(self):
        g = build_graph([(0, 1)], 3)
        with pytest.raises(ValueError, match="connected"):
            run_got(g, GotConfig(epochs=1))

    def test_requires_two_nodes(self):
        with pytest.raises(ValueError):
            run_got(build_graph([], 1), GotConfig(epochs=1))

    def test_determinism(self, np_rng):
        g = random_connected_graph(20, 0.2, np_rng)
        cfg = GotConfig(vdiamonds_per_node=4, epochs=30, seed=555)
        a = run_got(g, cfg)
        b = run_got(g, cfg)
        assert np.array_equal(a.phi, b.phi)
        assert np.array_equal(a.psi, b.psi)
        c = run_got(g, GotConfig(vdiamonds_per_node=4, epochs=30, seed=556))
        assert not np.array_equal(a.phi, c.phi)

    def test_matches_sequential_reference(self, np_rng):
        for trial in range(12):
            n = int(np_rng.integers(2, 18))
            g = random_connected_graph(n, 0.35, np_rng)
            cfg = GotConfig(
                thieves_per_node=int(np_rng.integers(1, 4)),
                vdiamonds_per_node=int(np_rng.integers(1, 5)),
                epochs=int(np_rng.integers(1, 35)),
                seed=int(np_rng.integers(0, 2**32)),
            )
            res = run_got(g, cfg)
            phi_ref, psi_ref, _ = run_via_epoch_steps(g, cfg)
            assert np.array_equal(res.phi, phi_ref)
            assert np.array_equal(res.psi, psi_ref)

    def test_conservation_every_epoch(self, np_rng):
        for trial in range(8):
            g = random_connected_graph(int(np_rng.integers(2, 25)), 0.3, np_rng)
            vd = int(np_rng.integers(1, 6))
            tpn = int(np_rng.integers(1, 3))
            cfg = GotConfig(thieves_per_node=tpn, vdiamonds_per_node=vd,
                            epochs=25, seed=trial)
            res = run_got(g, cfg, collect_trace=True)
            assert len(res.trace) == 26
            for rec in res.trace:
                assert rec.vdiamonds_held + rec.thieves_carrying == g.n * vd

    def test_score_bounds(self, np_rng):
        g = random_connected_graph(15, 0.3, np_rng)
        cfg = GotConfig(vdiamonds_per_node=2, epochs=20, seed=3)
        res = run_got(g, cfg)
        assert np.all(res.phi >= 0)
        assert np.all(res.psi >= 0)
        thieves_total = g.n
        assert np.all(res.psi <= thieves_total * (20 + 1) / 20)

    def test_star_center_depletes_fastest(self):
        g = star_graph(10)
        rank_sum = np.zeros(g.n)
        for seed in range(10):
            res = run_got(g, GotConfig(seed=seed))
            order = np.argsort(np.argsort(res.phi))
            rank_sum += order
        assert np.argmin(rank_sum) == 0

    def test_cycle_symmetry(self):
        # vertex-transitive graph: per-node mean stock within 5% of global
        g = cycle_graph(10)
        acc = np.zeros(g.n)
        seeds = range(50)
        for seed in seeds:
            acc += run_got(g, GotConfig(seed=seed)).phi
        means = acc / len(list(seeds))
        global_mean = means.mean()
        assert np.all(np.abs(means - global_mean) <= 0.05 * global_mean)

    def test_retrace_returns_home_in_stack_length_epochs(self, np_rng):
        g = random_connected_graph(12, 0.3, np_rng)
        cfg = GotConfig(vdiamonds_per_node=1, epochs=1, seed=9)
        state = initial_state(g, cfg)
        rng = make_rng(cfg.seed)
        for _ in range(15):
            epoch_step(g, state, rng)
            for t in state.thieves:
                assert t.path_stack[0] == t.home
                assert t.path_stack[-1] == t.position
                if t.carrying:
                    # retracing: every consecutive stack pair is an edge
                    for a, b in zip(t.path_stack, t.path_stack[1:]):
                        assert g.has_edge(a, b)


class TestConfig:
    def test_default_epochs_bases(self):
        assert default_epochs(1000) == 330          # ceil(ln(1000)^3)
        assert default_epochs(1000, "2") == 990     # ceil(log2(1000)^3)
        assert default_epochs(1000, "10") == 27
        assert default_epochs(2) == 1

    def test_resolve_defaults_to_network_size(self):
        cfg = GotConfig()
        tpn, vd, epochs = cfg.resolve(50)
        assert (tpn, vd) == (1, 50)
        assert epochs == default_epochs(50)

    def test_invalid_fields(self):
        with pytest.raises(ValueError):
            GotConfig(epochs=0).resolve(10)
        with pytest.raises(ValueError):
            GotConfig(thieves_per_node=0).resolve(10)
        with pytest.raises(ValueError):
            GotConfig(log_base="3").resolve(10)
        with pytest.raises(ValueError):
            GotConfig(mean_convention="median").resolve(10)
