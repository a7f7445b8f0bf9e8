import math

import numpy as np
import pytest

from centbench import (GeneratorSpec, clustering_coefficient, gen_erdos_renyi,
                       gen_holme_kim, gen_nws_small_world, is_connected)


class TestErdosRenyi:
    def test_p_zero_empty(self):
        assert gen_erdos_renyi(5, 0.0, seed=1).m == 0

    def test_p_one_complete(self):
        g = gen_erdos_renyi(5, 1.0, seed=1)
        assert g.m == 10

    def test_invalid_p(self):
        with pytest.raises(ValueError):
            gen_erdos_renyi(5, 1.5, seed=1)
        with pytest.raises(ValueError):
            gen_erdos_renyi(5, -0.1, seed=1)

    def test_edge_count_within_4_sigma(self):
        # Binomial(C(1000,2), 0.01): mean 4995, sigma ~ 70.3
        mean = math.comb(1000, 2) * 0.01
        sigma = math.sqrt(mean * 0.99)
        for seed in (0, 1, 2, 3, 4):
            m = gen_erdos_renyi(1000, 0.01, seed=seed).m
            assert abs(m - mean) <= 4 * sigma

    def test_deterministic(self):
        a = gen_erdos_renyi(300, 0.02, seed=99)
        b = gen_erdos_renyi(300, 0.02, seed=99)
        assert a.edge_list() == b.edge_list()
        c = gen_erdos_renyi(300, 0.02, seed=100)
        assert c.edge_list() != a.edge_list()

    def test_simple_graph_invariants(self):
        g = gen_erdos_renyi(200, 0.05, seed=7)
        assert int(g.degrees.sum()) == 2 * g.m
        seen = set()
        for u, v in g.edge_list():
            assert u < v
            assert (u, v) not in seen
            seen.add((u, v))


class TestNewmanWatts:
    def test_p_zero_is_ring(self):
        g = gen_nws_small_world(6, 2, 0.0, seed=1)
        assert g.m == 6
        assert np.all(g.degrees == 2)

    def test_min_degree_at_least_k(self):
        g = gen_nws_small_world(200, 6, 0.6, seed=3)
        assert int(g.degrees.min()) >= 6

    def test_validation(self):
        with pytest.raises(ValueError):
            gen_nws_small_world(10, 3, 0.5, seed=1)  # odd k
        with pytest.raises(ValueError):
            gen_nws_small_world(6, 6, 0.5, seed=1)  # k >= n

    def test_shortcut_count_within_4_sigma(self):
        # lattice has 3000 edges; shortcuts ~ Binomial(3000, 0.6)
        sigma = math.sqrt(3000 * 0.6 * 0.4)
        for seed in (0, 1, 2):
            m = gen_nws_small_world(1000, 6, 0.6, seed=seed).m
            assert abs(m - 4800) <= 4 * sigma

    def test_deterministic(self):
        a = gen_nws_small_world(150, 4, 0.5, seed=11)
        b = gen_nws_small_world(150, 4, 0.5, seed=11)
        assert a.edge_list() == b.edge_list()


class TestHolmeKim:
    def test_minimal(self):
        g = gen_holme_kim(2, 1, 0.3, seed=1)
        assert g.m == 1

    def test_edge_total_and_min_degree(self):
        g = gen_holme_kim(400, 5, 0.3, seed=2)
        assert g.m == (400 - 5) * 5
        assert int(g.degrees[5:].min()) >= 5
        assert is_connected(g)

    def test_validation(self):
        with pytest.raises(ValueError):
            gen_holme_kim(5, 0, 0.3, seed=1)
        with pytest.raises(ValueError):
            gen_holme_kim(5, 5, 0.3, seed=1)

    def test_heavy_tail_over_seeds(self):
        # scale-free signature: max degree well above the mean
        for seed in range(10):
            g = gen_holme_kim(1000, 5, 0.3, seed=seed)
            mean_deg = g.degrees.mean()
            assert g.degrees.max() >= 5 * mean_deg

    def test_clustering_beats_degree_matched_er(self):
        hk_mean = np.mean([
            clustering_coefficient(gen_holme_kim(500, 5, 0.3, seed=s)).mean()
            for s in range(10)])
        m_expected = (500 - 5) * 5
        p_matched = 2 * m_expected / (500 * 499)
        er_mean = np.mean([
            clustering_coefficient(gen_erdos_renyi(500, p_matched, seed=s)).mean()
            for s in range(10)])
        assert hk_mean > er_mean

    def test_deterministic(self):
        a = gen_holme_kim(200, 3, 0.3, seed=42)
        b = gen_holme_kim(200, 3, 0.3, seed=42)
        assert a.edge_list() == b.edge_list()


class TestGeneratorSpec:
    def test_dispatch(self):
        assert GeneratorSpec("ER", 10, 0.0, seed=1).generate().m == 0
        assert GeneratorSpec("SW", 8, 2, 0.0, seed=1).generate().m == 8
        assert GeneratorSpec("SF", 10, 2, 0.3, seed=1).generate().m == 16

    def test_unknown_family(self):
        with pytest.raises(ValueError, match="unknown family"):
            GeneratorSpec("XX", 10, 1, seed=1).generate()
