#pragma once

#include <optional>

#include "geotsp/tour.hpp"

namespace geotsp {

// Hard cap for the Held-Karp dynamic program (2^n * n state table).
inline constexpr int kHeldKarpMaxVertices = 24;
inline constexpr int kBruteForceMaxVertices = 10;

// Minimum-length Hamilton cycle over present edges, or nullopt when none
// exists. Absent edges are excluded, never padded with large weights.
// Throws for n < 1 or n > 24 ("instance too large for exact solver").
std::optional<Tour> held_karp(const EmbeddedGraph& graph);

// Exhaustive minimum over all (n-1)!/2 cyclic orders; the oracle held_karp is
// judged against. n <= 10.
std::optional<Tour> brute_force_tour(const EmbeddedGraph& graph);

}  // namespace geotsp
