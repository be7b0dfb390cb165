#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "geotsp/partition_tour.hpp"
#include "geotsp/posa.hpp"
#include "geotsp/tsp_exact.hpp"
#include "test_util.hpp"

using namespace geotsp;
using namespace geotsp::testutil;

TEST_CASE("unit ball volume") {
    CHECK(unit_ball_volume(1) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(unit_ball_volume(2) == doctest::Approx(M_PI).epsilon(1e-12));
    CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-12));
}

TEST_CASE("two-opt") {
    SUBCASE("improves a crossing tour on the complete graph") {
        const auto g = complete_graph({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
        Tour bad{{0, 2, 1, 3}, tour_length(g, {0, 2, 1, 3})};  // the crossed order
        const double before = bad.total_length;
        two_opt_present_edges(g, bad);
        CHECK(bad.total_length < before - 0.1);
        CHECK(bad.total_length == doctest::Approx(4.0).epsilon(1e-12));
        CHECK_FALSE(validate_tour(g, bad).has_value());
    }
    SUBCASE("leaves the tour alone when the shortcut edges are missing") {
        // Square without the perimeter edges 0-1 and 2-3: the crossed order
        // cannot be uncrossed using present edges only.
        auto g = graph_from({{0, 0}, {1, 0}, {1, 1}, {0, 1}},
                            {{0, 2}, {1, 2}, {1, 3}, {0, 3}});
        Tour t{{0, 2, 1, 3}, tour_length(g, {0, 2, 1, 3})};
        two_opt_present_edges(g, t);
        CHECK(t.order == std::vector<int>{0, 2, 1, 3});
        CHECK_FALSE(validate_tour(g, t).has_value());
    }
}

TEST_CASE("karp partition with m = 1 equals the direct solver") {
    const RngSeed seed{21, ""};
    const auto g = attach_bernoulli_edges(generate_uniform_cloud(14, 2, seed), 1.0, seed);
    const auto direct = held_karp(g);
    REQUIRE(direct.has_value());
    const auto karp = karp_partition_tour(g);
    REQUIRE(karp.success());
    CHECK(karp.cells_per_axis == 1);
    CHECK(karp.tour->order == direct->order);
    CHECK(karp.tour->total_length == direct->total_length);
}

TEST_CASE("karp partition on a mid-size dense instance") {
    const RngSeed seed{31, ""};
    const auto g = attach_bernoulli_edges(generate_uniform_cloud(4096, 2, seed), 0.5, seed);
    KarpOptions options;
    options.density_constant = 2.0;
    const auto r = karp_partition_tour(g, options);
    REQUIRE(r.success());
    CHECK(r.cells_per_axis > 1);
    CHECK_FALSE(validate_tour(g, *r.tour).has_value());
    const double bound = nn_lower_bound(g);
    CHECK(bound <= r.tour->total_length + 1e-9);
    CHECK(std::isfinite(r.tour->total_length / std::sqrt(4096.0)));
}

TEST_CASE("karp tour is competitive with whole-instance rotation tours") {
    const RngSeed seed{32, ""};
    const auto g = attach_bernoulli_edges(generate_uniform_cloud(4096, 2, seed), 0.5, seed);
    const auto karp = karp_partition_tour(g);
    REQUIRE(karp.success());
    double best = std::numeric_limits<double>::infinity();
    for (int s = 0; s < 20; ++s) {
        auto posa = posa_hamilton(g, posa_default_budget(g.size()),
                                  RngSeed{static_cast<std::uint64_t>(700 + s), ""});
        REQUIRE(posa.success());
        two_opt_present_edges(g, *posa.cycle, 12);  // baseline quality is enough
        best = std::min(best, posa.cycle->total_length);
    }
    CHECK(karp.tour->total_length <= 1.5 * best);
}

TEST_CASE("karp failure diagnostics carry the cell") {
    // n large enough for m >= 2, with vertex 0 stripped of all edges.
    const RngSeed seed{33, ""};
    const auto cloud = generate_uniform_cloud(512, 2, seed);
    const auto base = attach_bernoulli_edges(cloud, 0.3, seed);
    std::vector<std::pair<int, int>> edges;
    base.for_each_edge([&](int u, int v) {
        if (u != 0 && v != 0) edges.emplace_back(u, v);
    });
    const auto g = EmbeddedGraph::from_edges(cloud, edges, 0.3, std::nullopt, 77);
    const auto r = karp_partition_tour(g);
    CHECK_FALSE(r.success());
    CHECK(r.failed_cell >= 0);
    CHECK(r.failed_cell_size > 0);
    CHECK(!r.diagnostic.empty());
}

TEST_CASE("posa-reduce whole-instance heuristic") {
    const RngSeed seed{34, ""};
    const auto g = attach_bernoulli_edges(generate_uniform_cloud(600, 2, seed), 0.2, seed);
    const auto r = posa_reduce_tour(g);
    REQUIRE(r.success());
    CHECK_FALSE(validate_tour(g, *r.tour).has_value());
    CHECK(nn_lower_bound(g) <= r.tour->total_length + 1e-9);
}

TEST_CASE("karp rejects bad inputs") {
    const RngSeed seed{35, ""};
    PointCloud one;
    one.dimension = 2;
    one.coords = {0.5, 0.5};
    const auto g1 = EmbeddedGraph::from_edges(std::move(one), {}, 1.0, std::nullopt, 0);
    CHECK_THROWS_AS((void)karp_partition_tour(g1), std::invalid_argument);

    auto scaled = generate_uniform_cloud(16, 2, seed);
    scaled.scale = 2.0;
    const auto g2 = EmbeddedGraph::from_edges(std::move(scaled), {}, 1.0, std::nullopt, 0);
    CHECK_THROWS_AS((void)karp_partition_tour(g2), std::invalid_argument);
}
