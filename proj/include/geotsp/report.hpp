#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace geotsp {

// Cloud + highlighted path payload for path-overlay plots.
struct PlotOverlay {
    std::vector<std::array<double, 2>> points;
    std::vector<int> polyline;  // indices into points
    double extent = 1.0;
};

// Tabular experiment output: per-trial rows (each carrying the seed that
// reproduces it), a parameter echo, and aggregates recomputable from the
// rows. Serialized as CSV rows plus a JSON sidecar.
struct ExperimentReport {
    std::string id;
    nlohmann::json parameters = nlohmann::json::object();
    std::vector<std::string> columns;
    std::vector<std::uint64_t> row_seeds;
    std::vector<std::vector<double>> rows;
    nlohmann::json aggregates = nlohmann::json::object();
    nlohmann::json fits = nlohmann::json::object();
    std::optional<PlotOverlay> overlay;

    void add_row(std::uint64_t seed, std::vector<double> values);
    void sort_rows_by_seed();
    std::size_t column_index(const std::string& name) const;  // throws if absent
    std::vector<double> column(const std::string& name) const;

    void write_csv(std::ostream& out) const;
    nlohmann::json sidecar() const;
    // Writes <dir>/<id>.csv and <dir>/<id>.json.
    void write(const std::string& dir) const;
};

}  // namespace geotsp
