#pragma once

#include <iosfwd>
#include <limits>
#include <optional>
#include <vector>

#include "geotsp/graph.hpp"

namespace geotsp {

// Result of a single-pair geodesic query. Unreachable pairs carry empty
// optionals; there is no sentinel distance.
struct GeodesicResult {
    int source = 0;
    int target = 0;
    std::vector<int> path;  // source..target when reachable, else empty
    std::optional<double> graph_distance;
    double euclidean_distance = 0.0;
    std::optional<int> hop_count;

    bool reachable() const { return graph_distance.has_value(); }
};

// Exact minimum-total-Euclidean-length path over present edges (Dijkstra;
// among equal tentative distances the lower vertex index settles first).
GeodesicResult shortest_path(const EmbeddedGraph& graph, int source, int target);

// Distance-only variant with early exit once the target settles.
std::optional<double> graph_distance(const EmbeddedGraph& graph, int source, int target);

// BFS edge-count distance.
std::optional<int> min_hop_path(const EmbeddedGraph& graph, int source, int target);

struct ComponentSummary {
    std::vector<int> component_of;  // per vertex
    std::vector<int> sizes;         // per component, discovery order
    int giant_id = -1;              // largest component, ties to the smallest id

    int count() const { return static_cast<int>(sizes.size()); }
    std::vector<int> members(int component_id) const;
};

ComponentSummary components(const EmbeddedGraph& graph);

struct HopDiameter {
    int value = 0;
    bool approximate = false;  // true when only the double-sweep lower bound ran
};

// Exact all-pairs BFS up to 2000 vertices; beyond that a certified
// double-sweep lower bound with approximate=true.
HopDiameter hop_diameter(const EmbeddedGraph& graph, const ComponentSummary& summary,
                         int component_id);
int exact_hop_diameter(const EmbeddedGraph& graph, const std::vector<int>& members);
int double_sweep_lower_bound(const EmbeddedGraph& graph, const std::vector<int>& members);

struct PairSample {
    int u = 0;
    int v = 0;
    double euclidean = 0.0;
    std::optional<double> graph_dist;

    bool reachable() const { return graph_dist.has_value(); }
    double excess() const {
        return reachable() ? *graph_dist - euclidean : std::numeric_limits<double>::infinity();
    }
    double ratio() const {
        return reachable() ? *graph_dist / euclidean : std::numeric_limits<double>::infinity();
    }
};

// Uniform random pairs at Euclidean separation >= min_separation (rejection,
// capped); unreachable pairs are recorded, not skipped.
std::vector<PairSample> excess_sample(const EmbeddedGraph& graph, int pair_count,
                                      double min_separation, const RngSeed& seed,
                                      int workers = 0);

struct StretchSample {
    std::vector<PairSample> samples;
    double max_ratio = 0.0;  // +inf when any sampled pair is unreachable
    int unreachable_count = 0;
};

// Ratios d_X/d_E over random distinct non-coincident pairs.
StretchSample stretch_sample(const EmbeddedGraph& graph, int pair_count, const RngSeed& seed,
                             int workers = 0);

// CSV rows `d_E,d_X,excess,ratio,reachable` (header included).
void write_pair_samples_csv(const std::vector<PairSample>& samples, std::ostream& out);

}  // namespace geotsp
