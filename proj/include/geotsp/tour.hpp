#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "geotsp/graph.hpp"

namespace geotsp {

// A cyclic vertex sequence using only present edges. n=1 is the degenerate
// zero-length tour; n=2 traverses its single edge twice.
struct Tour {
    std::vector<int> order;
    double total_length = 0.0;
};

double tour_length(const EmbeddedGraph& graph, const std::vector<int>& order);

// Empty result means valid; otherwise a description of the first violation
// (visits-once, edges-present, stored length consistent within 1e-9).
std::optional<std::string> validate_tour(const EmbeddedGraph& graph, const Tour& tour);

// Newline-separated vertex indices with a trailing `# length <decimal>` line.
std::string serialize_tour(const Tour& tour);
void serialize_tour(const Tour& tour, std::ostream& out);
Tour parse_tour(std::string_view text);

}  // namespace geotsp
