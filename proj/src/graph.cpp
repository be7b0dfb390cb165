#include "geotsp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace geotsp {

namespace {
constexpr double kDenseDensityThreshold = 0.1;
constexpr int kDenseMinVertices = 2048;
}  // namespace

void EmbeddedGraph::check_vertex(int v) const {
    if (v < 0 || v >= size()) throw std::out_of_range("vertex index out of range");
}

EmbeddedGraph EmbeddedGraph::from_edges(PointCloud cloud,
                                        std::vector<std::pair<int, int>> edges,
                                        double edge_probability,
                                        std::optional<double> radius,
                                        std::uint64_t seed) {
    cloud.validate();
    EmbeddedGraph g;
    g.cloud_ = std::move(cloud);
    g.p_ = edge_probability;
    g.radius_ = radius;
    g.seed_ = seed;
    const int n = g.size();
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self-loop rejected");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (radius) {
        for (const auto& [u, v] : edges)
            if (g.cloud_.distance(u, v) > *radius)
                throw std::invalid_argument("edge longer than geometric radius");
    }
    g.build(std::move(edges));
    return g;
}

void EmbeddedGraph::build(std::vector<std::pair<int, int>>&& edges) {
    const int n = size();
    edge_count_ = static_cast<std::int64_t>(edges.size());
    degree_.assign(n, 0);
    for (const auto& [u, v] : edges) {
        ++degree_[u];
        ++degree_[v];
    }
    const double pairs = 0.5 * static_cast<double>(n) * (n - 1);
    const double density = pairs > 0 ? static_cast<double>(edge_count_) / pairs : 0.0;
    dense_ = n >= kDenseMinVertices && density >= kDenseDensityThreshold;
    if (dense_) {
        words_ = (n + 63) / 64;
        bits_.assign(static_cast<std::size_t>(n) * words_, 0);
        for (const auto& [u, v] : edges) {
            bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= 1ULL << (v % 64);
            bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= 1ULL << (u % 64);
        }
    } else {
        offsets_.assign(n + 1, 0);
        for (const auto& [u, v] : edges) {
            ++offsets_[u + 1];
            ++offsets_[v + 1];
        }
        for (int i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
        adjacency_.resize(static_cast<std::size_t>(2) * edges.size());
        std::vector<std::int64_t> cursor(offsets_.begin(), offsets_.end() - 1);
        for (const auto& [u, v] : edges) {
            adjacency_[cursor[u]++] = static_cast<std::uint32_t>(v);
            adjacency_[cursor[v]++] = static_cast<std::uint32_t>(u);
        }
        // Input edges are sorted lexicographically, so each row is already
        // sorted by neighbor index.
    }
}

bool EmbeddedGraph::has_edge(int u, int v) const {
    if (u == v) return false;
    if (dense_)
        return bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64) & 1;
    const auto begin = adjacency_.begin() + offsets_[u];
    const auto end = adjacency_.begin() + offsets_[u + 1];
    return std::binary_search(begin, end, static_cast<std::uint32_t>(v));
}

double EmbeddedGraph::edge_length(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return cloud_.distance(u, v);
}

std::vector<int> EmbeddedGraph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    out.reserve(degree_[v]);
    for_each_neighbor(v, [&](int w) { out.push_back(w); });
    return out;
}

EmbeddedGraph attach_bernoulli_edges(PointCloud cloud, double p, const RngSeed& seed) {
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must be in (0,1]");
    const int n = cloud.size();
    RngStream rng(seed.derive("edges"));
    std::vector<std::pair<int, int>> edges;
    if (p >= 0.1) {
        edges.reserve(static_cast<std::size_t>(p * 0.5 * n * (n - 1)) + 16);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.bernoulli(p)) edges.emplace_back(u, v);
    } else {
        // Geometric skips over the linear pair index; only O(#edges) draws.
        const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
        std::uint64_t k = rng.geometric_skip(p);
        std::uint64_t row_start = 0;
        int u = 0;
        while (k < total) {
            while (k >= row_start + static_cast<std::uint64_t>(n - 1 - u)) {
                row_start += n - 1 - u;
                ++u;
            }
            const int v = u + 1 + static_cast<int>(k - row_start);
            edges.emplace_back(u, v);
            k += 1 + rng.geometric_skip(p);
        }
    }
    return EmbeddedGraph::from_edges(std::move(cloud), std::move(edges), p, std::nullopt,
                                     seed.master);
}

EmbeddedGraph apply_geometric_filter(const EmbeddedGraph& graph, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("geometric radius must be > 0");
    std::vector<std::pair<int, int>> kept;
    graph.for_each_edge([&](int u, int v) {
        if (graph.distance(u, v) <= r) kept.emplace_back(u, v);
    });
    return EmbeddedGraph::from_edges(graph.cloud(), std::move(kept), graph.edge_probability(),
                                     r, graph.seed());
}

double euclidean_edge_length(const EmbeddedGraph& graph, int u, int v) {
    return graph.edge_length(u, v);
}

}  // namespace geotsp
