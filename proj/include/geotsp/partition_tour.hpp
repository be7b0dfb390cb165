#pragma once

#include <map>
#include <optional>
#include <string>

#include "geotsp/decomposition.hpp"
#include "geotsp/rng.hpp"
#include "geotsp/tour.hpp"

namespace geotsp {

// Volume of the d-dimensional unit ball, pi^(d/2) / Gamma(d/2 + 1).
double unit_ball_volume(int d);

// Sum over vertices of the distance to the nearest graph-neighbor; +infinity
// when an isolated vertex exists. A lower bound on any Hamilton tour: each of
// the two tour edges at a vertex is at least its nearest-neighbor distance,
// and each tour edge is counted at both endpoints.
double nn_lower_bound(const EmbeddedGraph& graph);

struct PatchResult {
    std::optional<Tour> tour;
    long long blocked_from = -1;  // cell pair that could not be patched
    long long blocked_to = -1;
};

// Merges per-cell tours into one tour along the given cell sequence. At each
// merge an edge (u,v) of the current cycle and an edge (x,y) of the incoming
// tour are deleted and the cross edges {u,x},{v,y} inserted; both cross edges
// must be present in the graph. Host candidates are taken from the previously
// merged cell's surviving edges first (the whole cycle as fallback), and the
// feasible pair minimizing added length wins, degrading to first-found past a
// 2000-edge quadratic-scan cap.
PatchResult patch_cycles(const EmbeddedGraph& graph,
                         const std::map<long long, Tour>& cell_tours,
                         const std::vector<long long>& order);

// In-place 2-opt restricted to present edges; returns passes used.
int two_opt_present_edges(const EmbeddedGraph& graph, Tour& tour, int max_passes = 500);

struct KarpOptions {
    double density_constant = 2.0;  // K in m = (n / (K nu_d ln n))^(1/d)
    int workers = 0;                // 0 = hardware concurrency
    int two_opt_passes = 500;
    int posa_attempts = 3;
};

struct KarpResult {
    std::optional<Tour> tour;
    std::string diagnostic;
    long long failed_cell = -1;
    int failed_cell_size = 0;
    int cells_per_axis = 1;

    bool success() const { return tour.has_value(); }
};

// Karp-style partition heuristic: subdivide the unit cube into m^d cells with
// m = max(1, floor((n / (K nu_d ln n))^(1/d))), solve each nonempty cell
// exactly (Held-Karp, size <= 24) or by rotation-extension plus 2-opt, and
// patch the cell tours together along a snake order. With m = 1 the output
// equals the direct cell solver's.
KarpResult karp_partition_tour(const EmbeddedGraph& graph, const KarpOptions& options = {});

// Direct whole-instance heuristic: rotation-extension plus edge-restricted
// 2-opt (the large-cell solver applied to the full graph).
KarpResult posa_reduce_tour(const EmbeddedGraph& graph, const KarpOptions& options = {});

}  // namespace geotsp
