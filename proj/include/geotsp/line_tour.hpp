#pragma once

#include <optional>

#include "geotsp/rng.hpp"
#include "geotsp/tour.hpp"

namespace geotsp {

enum class LineStage { None, Greedy, Insertion, Closure };

const char* line_stage_name(LineStage stage);

struct LineTourResult {
    std::optional<Tour> tour;
    LineStage failed_stage = LineStage::None;
    bool uncoupled = false;
    // Faithful mode: the union G1|G2|G3 the tour lives on.
    std::optional<EmbeddedGraph> union_graph;
};

// Three-stage 1-D tour builder: a greedy lowest-unvisited-neighbor walk on
// G1, insertion of skipped vertices via G2 host edges, and closure of the
// Hamilton path into a cycle with two G3 edges.
//
// Faithful mode: three independent Bernoulli(p1) layers with
// 1-p = (1-p1)^3 are generated here, reproducing the coupling of the
// three-stage analysis; the returned tour lives on their union.
LineTourResult line_greedy_tour(const PointCloud& cloud, double p, const RngSeed& seed);

// Explicit layers sharing one cloud (the faithful constructor calls this
// after generating them).
LineTourResult line_greedy_tour(const EmbeddedGraph& g1, const EmbeddedGraph& g2,
                                const EmbeddedGraph& g3);

// Uncoupled mode: one pre-existing graph serves as all three layers.
LineTourResult line_greedy_tour_uncoupled(const EmbeddedGraph& graph);

}  // namespace geotsp
