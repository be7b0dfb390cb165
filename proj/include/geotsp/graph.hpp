#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "geotsp/point_cloud.hpp"
#include "geotsp/rng.hpp"

namespace geotsp {

// A point cloud with an undirected edge set; edge weight is always the
// Euclidean distance between endpoints. Immutable after construction.
//
// Storage is adjacency lists sorted by neighbor index while the graph is
// sparse, and a row bitmap once density crosses 0.1 (Dijkstra, the rotation
// machinery and 2-opt all need fast neighbor iteration and O(1)/O(log deg)
// membership tests).
class EmbeddedGraph {
public:
    EmbeddedGraph() = default;

    // Edges are unordered pairs; self-loops are rejected, duplicates merged.
    // If radius is set, every edge must satisfy length <= radius.
    static EmbeddedGraph from_edges(PointCloud cloud,
                                    std::vector<std::pair<int, int>> edges,
                                    double edge_probability,
                                    std::optional<double> radius,
                                    std::uint64_t seed);

    int size() const { return cloud_.size(); }
    int dimension() const { return cloud_.dimension; }
    const PointCloud& cloud() const { return cloud_; }
    double edge_probability() const { return p_; }
    std::optional<double> geometric_radius() const { return radius_; }
    std::uint64_t seed() const { return seed_; }

    std::int64_t edge_count() const { return edge_count_; }
    int degree(int v) const { return degree_[v]; }
    bool has_edge(int u, int v) const;
    double edge_length(int u, int v) const;  // throws on bad index
    double distance(int u, int v) const { return cloud_.distance(u, v); }

    template <typename F>
    void for_each_neighbor(int v, F&& fn) const {
        if (dense_) {
            const std::uint64_t* row = bits_.data() + static_cast<std::size_t>(v) * words_;
            for (int w = 0; w < words_; ++w) {
                std::uint64_t word = row[w];
                while (word) {
                    const int bit = __builtin_ctzll(word);
                    fn(w * 64 + bit);
                    word &= word - 1;
                }
            }
        } else {
            const auto begin = offsets_[v], end = offsets_[v + 1];
            for (auto i = begin; i < end; ++i) fn(static_cast<int>(adjacency_[i]));
        }
    }

    std::vector<int> neighbors(int v) const;

    // Canonical (u < v, lexicographic) edge enumeration.
    template <typename F>
    void for_each_edge(F&& fn) const {
        for (int u = 0; u < size(); ++u)
            for_each_neighbor(u, [&](int v) {
                if (u < v) fn(u, v);
            });
    }

    bool is_dense() const { return dense_; }
    void check_vertex(int v) const;

private:
    PointCloud cloud_;
    double p_ = 1.0;
    std::optional<double> radius_;
    std::uint64_t seed_ = 0;

    bool dense_ = false;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;       // dense: n rows of ceil(n/64) words
    std::vector<std::int64_t> offsets_;     // sparse CSR
    std::vector<std::uint32_t> adjacency_;  // sparse, sorted per row
    std::vector<std::int32_t> degree_;
    std::int64_t edge_count_ = 0;

    void build(std::vector<std::pair<int, int>>&& edges);
};

// Each unordered pair becomes an edge independently with probability p.
EmbeddedGraph attach_bernoulli_edges(PointCloud cloud, double p, const RngSeed& seed);

// Keeps exactly the edges of Euclidean length <= r; sets the radius metadata.
EmbeddedGraph apply_geometric_filter(const EmbeddedGraph& graph, double r);

double euclidean_edge_length(const EmbeddedGraph& graph, int u, int v);

// Text format, round-trip exact:
//   geograph v1 d=<d> t=<t> n=<n> p=<p> r=<r|none> seed=<u64>
//   n coordinate lines, then one "u v" line per edge with u < v.
std::string serialize_graph(const EmbeddedGraph& graph);
void serialize_graph(const EmbeddedGraph& graph, std::ostream& out);
EmbeddedGraph parse_graph(std::string_view text);
EmbeddedGraph load_graph_file(const std::string& path);
void save_graph_file(const EmbeddedGraph& graph, const std::string& path);

// Shortest float formatting that parses back to the identical double.
std::string format_double(double x);

}  // namespace geotsp
