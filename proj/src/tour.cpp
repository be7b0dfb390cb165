#include "geotsp/tour.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace geotsp {

double tour_length(const EmbeddedGraph& graph, const std::vector<int>& order) {
    const int n = static_cast<int>(order.size());
    if (n <= 1) return 0.0;
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += graph.distance(order[i], order[(i + 1) % n]);
    return total;
}

std::optional<std::string> validate_tour(const EmbeddedGraph& graph, const Tour& tour) {
    const int n = static_cast<int>(tour.order.size());
    if (n == 0) return "tour is empty";
    std::vector<char> seen(graph.size(), 0);
    for (int v : tour.order) {
        if (v < 0 || v >= graph.size()) return "vertex index out of range";
        if (seen[v]) return "vertex visited twice: " + std::to_string(v);
        seen[v] = 1;
    }
    if (n >= 2) {
        for (int i = 0; i < n; ++i) {
            const int a = tour.order[i], b = tour.order[(i + 1) % n];
            if (!graph.has_edge(a, b))
                return "missing edge " + std::to_string(a) + "-" + std::to_string(b);
        }
    }
    const double recomputed = tour_length(graph, tour.order);
    if (std::abs(recomputed - tour.total_length) > 1e-9)
        return "stored length inconsistent with recomputation";
    return std::nullopt;
}

void serialize_tour(const Tour& tour, std::ostream& out) {
    for (int v : tour.order) out << v << "\n";
    out << "# length " << format_double(tour.total_length) << "\n";
}

std::string serialize_tour(const Tour& tour) {
    std::ostringstream out;
    serialize_tour(tour, out);
    return out.str();
}

Tour parse_tour(std::string_view text) {
    Tour tour;
    std::size_t pos = 0;
    bool saw_length = false;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        if (line.empty()) continue;
        if (line[0] == '#') {
            constexpr std::string_view prefix = "# length ";
            if (line.substr(0, prefix.size()) != prefix)
                throw std::runtime_error("malformed tour trailer");
            const auto tok = line.substr(prefix.size());
            double value = 0.0;
            auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (res.ec != std::errc()) throw std::runtime_error("malformed tour length");
            tour.total_length = value;
            saw_length = true;
            continue;
        }
        int v = 0;
        auto res = std::from_chars(line.data(), line.data() + line.size(), v);
        if (res.ec != std::errc() || res.ptr != line.data() + line.size())
            throw std::runtime_error("malformed tour vertex line");
        tour.order.push_back(v);
    }
    if (!saw_length) throw std::runtime_error("unexpected end of input");
    return tour;
}

}  // namespace geotsp
