from __future__ import annotations

import pytest

from sccd.generators import (
    gen_barabasi_albert,
    gen_erdos_renyi,
    gen_uniform_digraph,
    gen_watts_strogatz,
)


def test_er_exact_edge_count():
    g = gen_erdos_renyi(100, round(100 ** (2 / 3)), seed=5)
    assert g.n == 100
    assert g.m == 22
    assert gen_erdos_renyi(5, 0, seed=0).m == 0
    assert gen_erdos_renyi(500, 500, seed=1).m == 500


def test_er_no_self_loops_and_range():
    g = gen_erdos_renyi(30, 200, seed=3)
    assert all(u != v for u, v in g.edges)
    assert all(0 <= u < 30 and 0 <= v < 30 for u, v in g.edges)


def test_er_full_capacity_is_complete():
    g = gen_erdos_renyi(5, 20, seed=9)
    assert g.m == 20


def test_er_rejects_overflow():
    with pytest.raises(ValueError):
        gen_erdos_renyi(5, 21, seed=0)
    with pytest.raises(ValueError):
        gen_erdos_renyi(5, -1, seed=0)


def test_ba_minimal_growth():
    g = gen_barabasi_albert(2, 1, seed=0)
    assert g.n == 2
    assert g.m == 1


def test_ba_edge_count_formula():
    # clique(m) plus m attachments per later vertex
    n, m = 100, 20
    g = gen_barabasi_albert(n, m, seed=4)
    assert g.m == m * (m - 1) // 2 + (n - m) * m


def test_ba_rejects_bad_m():
    with pytest.raises(ValueError):
        gen_barabasi_albert(5, 5, seed=0)
    with pytest.raises(ValueError):
        gen_barabasi_albert(5, 0, seed=0)


def test_ws_lattice_orientation_preserves_incidence():
    g = gen_watts_strogatz(10, 4, 0.0, seed=1)
    assert g.m == 10 * 4 // 2
    for v in range(10):
        assert len(g.in_adj[v]) + len(g.out_adj[v]) == 4


def test_ws_pure_ring():
    g = gen_watts_strogatz(10, 2, 0.0, seed=0)
    assert g.m == 10
    undirected = {frozenset(e) for e in g.edges}
    assert undirected == {frozenset({i, (i + 1) % 10}) for i in range(10)}


def test_ws_rewired_keeps_edge_count():
    for p in (0.2, 0.8, 1.0):
        g = gen_watts_strogatz(24, 4, p, seed=7)
        assert g.m == 24 * 4 // 2
        assert all(u != v for u, v in g.edges)


def test_ws_rejects_bad_parameters():
    with pytest.raises(ValueError):
        gen_watts_strogatz(10, 3, 0.2, seed=0)  # odd K
    with pytest.raises(ValueError):
        gen_watts_strogatz(4, 4, 0.2, seed=0)  # K >= n
    with pytest.raises(ValueError):
        gen_watts_strogatz(10, 4, 1.5, seed=0)


@pytest.mark.parametrize(
    "make",
    [
        lambda s: gen_erdos_renyi(40, 80, s),
        lambda s: gen_barabasi_albert(40, 4, s),
        lambda s: gen_watts_strogatz(40, 4, 0.3, s),
        lambda s: gen_uniform_digraph(40, 0.1, s),
    ],
)
def test_generators_deterministic_and_seed_sensitive(make):
    assert make(123).edges == make(123).edges
    differing = sum(1 for s in range(10) if make(s).edges != make(s + 1000).edges)
    assert differing == 10


def test_uniform_digraph_density():
    g = gen_uniform_digraph(50, 0.0, seed=0)
    assert g.m == 0
    g = gen_uniform_digraph(50, 1.0, seed=0)
    assert g.m == 50 * 49
