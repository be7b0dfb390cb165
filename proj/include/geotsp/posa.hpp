#pragma once

#include <cstdint>
#include <optional>

#include "geotsp/rng.hpp"
#include "geotsp/tour.hpp"

namespace geotsp {

struct PosaResult {
    std::optional<Tour> cycle;
    std::vector<int> longest_path;      // best simple path seen, on failure
    std::uint64_t rotations_used = 0;

    bool success() const { return cycle.has_value(); }
};

// Engineering margin over the log-depth rotation analysis.
std::uint64_t posa_default_budget(int n);

// Rotation-extension search for a Hamilton cycle: grow a path from a random
// start; when the head is stuck, rotate (keeping the fixed endpoint) to expose
// a new endpoint; close the cycle when the head is adjacent to the tail, and
// re-open a non-spanning cycle at a vertex with outside neighbors. Fails once
// the rotation budget is exhausted, returning the longest path found.
PosaResult posa_hamilton(const EmbeddedGraph& graph, std::uint64_t max_rotations,
                         const RngSeed& seed);

}  // namespace geotsp
