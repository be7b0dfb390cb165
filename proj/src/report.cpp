#include "geotsp/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "geotsp/graph.hpp"

namespace geotsp {

void ExperimentReport::add_row(std::uint64_t seed, std::vector<double> values) {
    if (values.size() != columns.size())
        throw std::invalid_argument("row width does not match column count");
    row_seeds.push_back(seed);
    rows.push_back(std::move(values));
}

void ExperimentReport::sort_rows_by_seed() {
    std::vector<std::size_t> idx(rows.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return row_seeds[a] < row_seeds[b]; });
    std::vector<std::uint64_t> seeds(rows.size());
    std::vector<std::vector<double>> sorted(rows.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        seeds[i] = row_seeds[idx[i]];
        sorted[i] = std::move(rows[idx[i]]);
    }
    row_seeds = std::move(seeds);
    rows = std::move(sorted);
}

std::size_t ExperimentReport::column_index(const std::string& name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) throw std::invalid_argument("no such column: " + name);
    return static_cast<std::size_t>(it - columns.begin());
}

std::vector<double> ExperimentReport::column(const std::string& name) const {
    const std::size_t c = column_index(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& row : rows) out.push_back(row[c]);
    return out;
}

void ExperimentReport::write_csv(std::ostream& out) const {
    out << "seed";
    for (const auto& c : columns) out << ',' << c;
    out << "\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out << row_seeds[i];
        for (double v : rows[i]) out << ',' << format_double(v);
        out << "\n";
    }
}

nlohmann::json ExperimentReport::sidecar() const {
    nlohmann::json j;
    j["experiment"] = id;
    j["parameters"] = parameters;
    j["rows"] = rows.size();
    j["aggregates"] = aggregates;
    if (!fits.empty()) j["fits"] = fits;
    return j;
}

void ExperimentReport::write(const std::string& dir) const {
    std::filesystem::create_directories(dir);
    const auto base = std::filesystem::path(dir) / id;
    std::ofstream csv(base.string() + ".csv", std::ios::binary);
    if (!csv) throw std::runtime_error("cannot write " + base.string() + ".csv");
    write_csv(csv);
    std::ofstream js(base.string() + ".json", std::ios::binary);
    if (!js) throw std::runtime_error("cannot write " + base.string() + ".json");
    js << sidecar().dump(2) << "\n";
}

}  // namespace geotsp
