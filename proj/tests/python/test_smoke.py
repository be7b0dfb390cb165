import math

import pytest

import geotsp


def make_graph(n=60, p=0.5, seed=7):
    cloud = geotsp.generate_uniform_cloud(n, 2, seed)
    return geotsp.attach_bernoulli_edges(cloud, p, seed)


def test_generation_is_deterministic():
    a = make_graph()
    b = make_graph()
    assert geotsp.serialize_graph(a) == geotsp.serialize_graph(b)
    assert a.size() == 60
    assert a.edge_count() > 0


def test_shortest_path_dominates_euclidean():
    g = make_graph(n=80, p=0.3, seed=11)
    r = geotsp.shortest_path(g, 0, 1)
    assert r.reachable()
    assert r.graph_distance >= r.euclidean_distance - 1e-9
    assert r.path[0] == 0 and r.path[-1] == 1


def test_held_karp_square():
    cloud = geotsp.PointCloud()
    cloud.dimension = 2
    cloud.scale = 1.0
    cloud.coords = [0, 0, 1, 0, 1, 1, 0, 1]
    g = geotsp.attach_bernoulli_edges(cloud, 1.0, 0)
    t = geotsp.held_karp(g)
    assert t is not None
    assert t.total_length == pytest.approx(4.0, abs=1e-9)


def test_karp_partition_tour_is_valid():
    g = make_graph(n=500, p=0.5, seed=3)
    out = geotsp.karp_partition_tour(g)
    assert out["success"]
    tour = out["tour"]
    assert geotsp.validate_tour(g, tour) is None
    assert geotsp.nn_lower_bound(g) <= tour.total_length + 1e-9


def test_permutation_lemma_holds():
    report = geotsp.verify_permutation_lemma(6)
    assert report["aggregates"]["total_violations"] == 0
    m = geotsp.permutation_metrics([3, 1, 2])
    assert m.length == 3 and m.inversions == 2 and m.last == 2


def test_graph_roundtrip_and_components():
    g = make_graph(n=40, p=0.2, seed=9)
    h = geotsp.parse_graph(geotsp.serialize_graph(g))
    assert h.size() == g.size()
    assert h.edge_count() == g.edge_count()
    c = geotsp.components(g)
    assert sum(c.sizes) == g.size()
    value, approx_flag = geotsp.hop_diameter(g, c, c.giant_id)
    assert value >= 0 and isinstance(approx_flag, bool)


def test_excess_sampling_p1_zero():
    g = make_graph(n=50, p=1.0, seed=5)
    for s in geotsp.excess_sample(g, 20, 0.1, 2):
        assert s["reachable"]
        assert abs(s["excess"]) < 1e-9


def test_decomposition_and_snake():
    dec = geotsp.near_cube_decomposition([7], 3)
    assert [dec.breakpoint(0, a) for a in range(4)] == [0, 2, 4, 7]
    order = geotsp.snake_order(2, 2)
    assert len(order) == 4
    assert geotsp.unit_ball_volume(2) == pytest.approx(math.pi)
