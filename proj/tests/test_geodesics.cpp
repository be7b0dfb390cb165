#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "geotsp/geodesics.hpp"
#include "test_util.hpp"

using namespace geotsp;
using namespace geotsp::testutil;

namespace {

// Independent oracle: Bellman-Ford relaxation until fixpoint.
std::vector<double> bellman_ford(const EmbeddedGraph& g, int source) {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(g.size(), inf);
    dist[source] = 0.0;
    std::vector<std::pair<int, int>> edges;
    g.for_each_edge([&](int u, int v) { edges.emplace_back(u, v); });
    for (int round = 0; round < g.size(); ++round) {
        bool changed = false;
        for (const auto& [u, v] : edges) {
            const double w = g.distance(u, v);
            if (dist[u] + w < dist[v]) {
                dist[v] = dist[u] + w;
                changed = true;
            }
            if (dist[v] + w < dist[u]) {
                dist[u] = dist[v] + w;
                changed = true;
            }
        }
        if (!changed) break;
    }
    return dist;
}

EmbeddedGraph cycle_graph(int n) {
    std::vector<std::pair<double, double>> pts;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        const double a = 2.0 * M_PI * i / n;
        pts.push_back({0.5 + 0.4 * std::cos(a), 0.5 + 0.4 * std::sin(a)});
        edges.emplace_back(i, (i + 1) % n);
    }
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    return graph_from(pts, edges);
}

}  // namespace

TEST_CASE("shortest path on the complete graph is the direct edge") {
    const RngSeed seed{11, ""};
    const auto g = attach_bernoulli_edges(generate_uniform_cloud(12, 2, seed), 1.0, seed);
    for (int u = 0; u < g.size(); ++u)
        for (int v = 0; v < g.size(); ++v) {
            const auto r = shortest_path(g, u, v);
            REQUIRE(r.reachable());
            CHECK(*r.graph_distance == doctest::Approx(r.euclidean_distance).epsilon(1e-12));
            if (u != v) CHECK(*r.hop_count == 1);
        }
}

TEST_CASE("shortest path routes around a missing edge") {
    const auto g = line_graph({0.0, 1.0, 2.0}, {{0, 1}, {1, 2}}, 2.0);
    const auto r = shortest_path(g, 0, 2);
    REQUIRE(r.reachable());
    CHECK(*r.graph_distance == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.path == std::vector<int>{0, 1, 2});
    CHECK(*r.hop_count == 2);
}

TEST_CASE("dijkstra agrees with the Bellman-Ford oracle on a random instance") {
    const RngSeed seed{123, ""};
    const auto g = attach_bernoulli_edges(generate_uniform_cloud(50, 2, seed), 0.15, seed);
    const auto oracle = bellman_ford(g, 7);
    for (int v = 0; v < g.size(); ++v) {
        const auto r = shortest_path(g, 7, v);
        if (std::isinf(oracle[v])) {
            CHECK_FALSE(r.reachable());
        } else {
            REQUIRE(r.reachable());
            CHECK(*r.graph_distance == doctest::Approx(oracle[v]).epsilon(1e-12));
        }
    }
}

TEST_CASE("geodesic result invariants") {
    const RngSeed seed{321, ""};
    const auto g = attach_bernoulli_edges(generate_uniform_cloud(60, 2, seed), 0.1, seed);
    for (int u = 0; u < 10; ++u)
        for (int v = 0; v < 10; ++v) {
            const auto r = shortest_path(g, u, v);
            CHECK(r.euclidean_distance == g.distance(u, v));
            const auto back = shortest_path(g, v, u);
            CHECK(r.reachable() == back.reachable());
            if (!r.reachable()) continue;
            CHECK(*r.graph_distance == *back.graph_distance);  // exact symmetry
            CHECK(*r.graph_distance >= r.euclidean_distance - 1e-9);
            REQUIRE(!r.path.empty());
            CHECK(r.path.front() == u);
            CHECK(r.path.back() == v);
            double along = 0.0;
            for (std::size_t i = 0; i + 1 < r.path.size(); ++i) {
                CHECK(g.has_edge(r.path[i], r.path[i + 1]));
                along += g.distance(r.path[i], r.path[i + 1]);
            }
            CHECK(along == doctest::Approx(*r.graph_distance).epsilon(1e-12));
            const auto hops = min_hop_path(g, u, v);
            REQUIRE(hops.has_value());
            CHECK(*r.hop_count >= *hops);
        }
}

TEST_CASE("metric property on reachable triples") {
    const RngSeed seed{55, ""};
    const auto g = attach_bernoulli_edges(generate_uniform_cloud(30, 2, seed), 0.3, seed);
    for (int u = 0; u < 8; ++u)
        for (int v = 0; v < 8; ++v)
            for (int w = 0; w < 8; ++w) {
                const auto uv = graph_distance(g, u, v);
                const auto vw = graph_distance(g, v, w);
                const auto uw = graph_distance(g, u, w);
                if (uv && vw) {
                    REQUIRE(uw.has_value());
                    CHECK(*uw <= *uv + *vw + 1e-9);
                }
            }
}

TEST_CASE("adding edges never increases the graph distance") {
    const RngSeed seed{77, ""};
    const auto cloud = generate_uniform_cloud(40, 2, seed);
    const auto sparse = attach_bernoulli_edges(cloud, 0.08, seed);
    std::vector<std::pair<int, int>> edges;
    sparse.for_each_edge([&](int u, int v) { edges.emplace_back(u, v); });
    RngStream extra(9, "extra-edges");
    for (int k = 0; k < 80; ++k) {
        const int u = static_cast<int>(extra.uniform_below(40));
        const int v = static_cast<int>(extra.uniform_below(40));
        if (u != v) edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    const auto super = EmbeddedGraph::from_edges(cloud, edges, 0.2, std::nullopt, 0);
    for (int u = 0; u < 12; ++u)
        for (int v = 0; v < 12; ++v) {
            const auto before = graph_distance(sparse, u, v);
            const auto after = graph_distance(super, u, v);
            if (before) {
                REQUIRE(after.has_value());
                CHECK(*after <= *before + 1e-9);
            }
        }
}

TEST_CASE("min hop path") {
    const auto hex = cycle_graph(6);
    CHECK(min_hop_path(hex, 2, 2) == 0);
    CHECK(min_hop_path(hex, 2, 3) == 1);
    CHECK(min_hop_path(hex, 0, 3) == 3);  // antipodal on a 6-cycle
    const auto g = line_graph({0.0, 1.0, 2.0}, {{0, 1}}, 2.0);
    CHECK_FALSE(min_hop_path(g, 0, 2).has_value());
}

TEST_CASE("components") {
    SUBCASE("complete graph is one component") {
        const RngSeed seed{3, ""};
        const auto g = attach_bernoulli_edges(generate_uniform_cloud(9, 2, seed), 1.0, seed);
        const auto c = components(g);
        CHECK(c.count() == 1);
        CHECK(c.sizes[0] == 9);
        CHECK(c.giant_id == 0);
    }
    SUBCASE("empty edge set gives singletons") {
        PointCloud cloud = generate_uniform_cloud(5, 2, RngSeed{4, ""});
        const auto g = EmbeddedGraph::from_edges(cloud, {}, 0.5, std::nullopt, 0);
        const auto c = components(g);
        CHECK(c.count() == 5);
        for (int s : c.sizes) CHECK(s == 1);
        CHECK(c.giant_id == 0);  // ties break to the smallest id
    }
    SUBCASE("two disjoint triangles") {
        const auto g = graph_from({{0, 0}, {0.1, 0}, {0, 0.1}, {1, 1}, {0.9, 1}, {1, 0.9}},
                                  {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
        const auto c = components(g);
        CHECK(c.count() == 2);
        CHECK(c.sizes == std::vector<int>{3, 3});
        CHECK(c.giant_id == 0);
        CHECK(c.members(1) == std::vector<int>{3, 4, 5});
    }
}

TEST_CASE("hop diameter") {
    SUBCASE("single vertex") {
        PointCloud cloud = generate_uniform_cloud(1, 2, RngSeed{4, ""});
        const auto g = EmbeddedGraph::from_edges(cloud, {}, 0.5, std::nullopt, 0);
        const auto c = components(g);
        const auto d = hop_diameter(g, c, 0);
        CHECK(d.value == 0);
        CHECK_FALSE(d.approximate);
    }
    SUBCASE("6-cycle") {
        const auto g = cycle_graph(6);
        const auto c = components(g);
        CHECK(hop_diameter(g, c, 0).value == 3);
    }
    SUBCASE("double sweep matches exact on most sparse random giants") {
        int matches = 0;
        for (int s = 0; s < 50; ++s) {
            const RngSeed seed{static_cast<std::uint64_t>(1000 + s), ""};
            const auto g =
                attach_bernoulli_edges(generate_uniform_cloud(1000, 2, seed), 0.02, seed);
            const auto c = components(g);
            const auto members = c.members(c.giant_id);
            if (exact_hop_diameter(g, members) == double_sweep_lower_bound(g, members))
                ++matches;
        }
        CHECK(matches >= 40);  // >= 80% of 50 seeds
    }
}

TEST_CASE("excess sampling") {
    const RngSeed seed{8, ""};
    SUBCASE("p = 1 has zero excess everywhere") {
        const auto g = attach_bernoulli_edges(generate_uniform_cloud(30, 2, seed), 1.0, seed);
        const auto samples = excess_sample(g, 50, 0.1, seed, 1);
        CHECK(samples.size() == 50);
        for (const auto& s : samples) {
            REQUIRE(s.reachable());
            CHECK(s.excess() == doctest::Approx(0.0).epsilon(1e-12));
        }
    }
    SUBCASE("isolated vertex shows up as infinite excess") {
        const auto g = line_graph({0.0, 0.9, 1.0}, {{1, 2}}, 1.0);
        bool saw_infinite = false;
        const auto samples = excess_sample(g, 40, 0.0, seed, 1);
        for (const auto& s : samples)
            if ((s.u == 0 || s.v == 0) && !s.reachable()) saw_infinite = true;
        CHECK(saw_infinite);
        for (const auto& s : samples)
            if (!s.reachable()) CHECK(std::isinf(s.excess()));
    }
    SUBCASE("unattainable separation raises") {
        const auto g = complete_graph({{0.4, 0.4}, {0.4, 0.41}, {0.41, 0.4}});
        CHECK_THROWS_WITH_AS((void)excess_sample(g, 5, 1.2, seed, 1),
                             "separation unattainable", std::runtime_error);
    }
    SUBCASE("pre-validation of the separation range") {
        const auto g = complete_graph({{0, 0}, {1, 1}});
        CHECK_THROWS_AS((void)excess_sample(g, 1, 2.0, seed, 1), std::invalid_argument);
    }
}

TEST_CASE("stretch sampling") {
    const RngSeed seed{18, ""};
    SUBCASE("p = 1 has all ratios 1") {
        const auto g = attach_bernoulli_edges(generate_uniform_cloud(25, 2, seed), 1.0, seed);
        const auto s = stretch_sample(g, 60, seed, 1);
        CHECK(s.unreachable_count == 0);
        CHECK(s.max_ratio == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("hand-computed detour ratio") {
        // a=(0,0), b=(1,0.5), c=(2,0): a-c missing, ratio = 2 sqrt(1.25) / 2.
        const auto g = graph_from({{0, 0}, {1, 0.5}, {2, 0}}, {{0, 1}, {1, 2}}, 2.0);
        const auto r = shortest_path(g, 0, 2);
        REQUIRE(r.reachable());
        const double expect = 2.0 * std::sqrt(1.25) / 2.0;
        CHECK(*r.graph_distance / r.euclidean_distance ==
              doctest::Approx(expect).epsilon(1e-12));
        CHECK(expect == doctest::Approx(1.118).epsilon(1e-3));
    }
    SUBCASE("disconnected pair reports an infinite ratio") {
        const auto g = line_graph({0.0, 0.5, 1.0}, {{0, 1}}, 1.0);
        const auto s = stretch_sample(g, 30, seed, 1);
        CHECK(s.unreachable_count > 0);
        CHECK(std::isinf(s.max_ratio));
    }
}

TEST_CASE("pair sample csv rows") {
    const auto g = line_graph({0.0, 0.5, 1.0}, {{0, 1}}, 1.0);
    const auto samples = excess_sample(g, 10, 0.0, RngSeed{2, ""}, 1);
    std::ostringstream out;
    write_pair_samples_csv(samples, out);
    const auto text = out.str();
    CHECK(text.rfind("d_E,d_X,excess,ratio,reachable\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 11);
}
