#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "geotsp/graph.hpp"

namespace geotsp {

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

namespace {

class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    // Throws the spec'd truncation diagnostic when input runs out.
    std::string_view next_line() {
        if (pos_ >= text_.size()) throw std::runtime_error("unexpected end of input");
        const auto nl = text_.find('\n', pos_);
        std::string_view line;
        if (nl == std::string_view::npos) {
            line = text_.substr(pos_);
            pos_ = text_.size();
        } else {
            line = text_.substr(pos_, nl - pos_);
            pos_ = nl + 1;
        }
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        return line;
    }

    bool at_end() {
        while (pos_ < text_.size() && (text_[pos_] == '\n' || text_[pos_] == '\r')) ++pos_;
        return pos_ >= text_.size();
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

double parse_number(std::string_view token, const char* what) {
    double value = 0.0;
    auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (res.ec != std::errc() || res.ptr != token.data() + token.size())
        throw std::runtime_error(std::string("malformed ") + what);
    return value;
}

long long parse_int(std::string_view token, const char* what) {
    long long value = 0;
    auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (res.ec != std::errc() || res.ptr != token.data() + token.size())
        throw std::runtime_error(std::string("malformed ") + what);
    return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ') ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::string_view expect_field(std::string_view token, std::string_view key) {
    if (token.size() < key.size() + 1 || token.substr(0, key.size()) != key ||
        token[key.size()] != '=')
        throw std::runtime_error("malformed header");
    return token.substr(key.size() + 1);
}

}  // namespace

void serialize_graph(const EmbeddedGraph& graph, std::ostream& out) {
    out << "geograph v1 d=" << graph.dimension() << " t=" << format_double(graph.cloud().scale)
        << " n=" << graph.size() << " p=" << format_double(graph.edge_probability()) << " r=";
    if (graph.geometric_radius())
        out << format_double(*graph.geometric_radius());
    else
        out << "none";
    out << " seed=" << graph.seed() << "\n";
    const auto& cloud = graph.cloud();
    for (int i = 0; i < graph.size(); ++i) {
        const auto pt = cloud.point(i);
        for (int b = 0; b < graph.dimension(); ++b) {
            if (b) out << ' ';
            out << format_double(pt[b]);
        }
        out << "\n";
    }
    graph.for_each_edge([&](int u, int v) { out << u << ' ' << v << "\n"; });
}

std::string serialize_graph(const EmbeddedGraph& graph) {
    std::ostringstream out;
    serialize_graph(graph, out);
    return out.str();
}

EmbeddedGraph parse_graph(std::string_view text) {
    LineReader reader(text);
    const auto header = split_ws(reader.next_line());
    if (header.size() != 8 || header[0] != "geograph" || header[1] != "v1")
        throw std::runtime_error("malformed header");
    const int d = static_cast<int>(parse_int(expect_field(header[2], "d"), "header dimension"));
    const double t = parse_number(expect_field(header[3], "t"), "header scale");
    const long long n = parse_int(expect_field(header[4], "n"), "header vertex count");
    const double p = parse_number(expect_field(header[5], "p"), "header edge probability");
    const auto rfield = expect_field(header[6], "r");
    std::optional<double> radius;
    if (rfield != "none") radius = parse_number(rfield, "header radius");
    const long long seed_raw = [&] {
        const auto tok = expect_field(header[7], "seed");
        unsigned long long value = 0;
        auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
            throw std::runtime_error("malformed header seed");
        return static_cast<long long>(value);
    }();
    if (d < 1 || n < 0 || !(t > 0.0)) throw std::runtime_error("malformed header");
    if (!(p > 0.0 && p <= 1.0)) throw std::runtime_error("malformed header edge probability");

    PointCloud cloud;
    cloud.dimension = d;
    cloud.scale = t;
    cloud.coords.reserve(static_cast<std::size_t>(n) * d);
    for (long long i = 0; i < n; ++i) {
        const auto fields = split_ws(reader.next_line());
        if (static_cast<int>(fields.size()) != d)
            throw std::runtime_error("wrong coordinate count on point line");
        for (const auto& f : fields) {
            const double c = parse_number(f, "coordinate");
            if (!(c >= 0.0 && c <= t)) throw std::runtime_error("coordinate out of range");
            cloud.coords.push_back(c);
        }
    }

    std::vector<std::pair<int, int>> edges;
    while (!reader.at_end()) {
        const auto fields = split_ws(reader.next_line());
        if (fields.empty()) continue;
        if (fields.size() != 2) throw std::runtime_error("malformed edge line");
        const long long u = parse_int(fields[0], "edge endpoint");
        const long long v = parse_int(fields[1], "edge endpoint");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::runtime_error("edge index out of range");
        if (u >= v) throw std::runtime_error("non-symmetric adjacency: edge endpoints not in u < v order");
        if (!edges.empty() && edges.back() == std::make_pair(static_cast<int>(u), static_cast<int>(v)))
            throw std::runtime_error("duplicate edge");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::runtime_error("duplicate edge");

    try {
        return EmbeddedGraph::from_edges(std::move(cloud), std::move(edges), p, radius,
                                         static_cast<std::uint64_t>(seed_raw));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(e.what());
    }
}

EmbeddedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

void save_graph_file(const EmbeddedGraph& graph, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    serialize_graph(graph, out);
}

}  // namespace geotsp
