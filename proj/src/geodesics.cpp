#include "geotsp/geodesics.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <queue>
#include <stdexcept>

#include "geotsp/parallel.hpp"

namespace geotsp {

namespace {

using HeapEntry = std::pair<double, int>;  // (tentative distance, vertex)

constexpr double kInf = std::numeric_limits<double>::infinity();

// Dijkstra from source; stops once `target` settles (pass -1 to settle all).
// parents is optional.
void dijkstra(const EmbeddedGraph& g, int source, int target, std::vector<double>& dist,
              std::vector<int>* parent) {
    const int n = g.size();
    dist.assign(n, kInf);
    if (parent) parent->assign(n, -1);
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>> heap;
    dist[source] = 0.0;
    heap.emplace(0.0, source);
    while (!heap.empty()) {
        const auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[u]) continue;
        if (u == target) return;
        g.for_each_neighbor(u, [&](int v) {
            const double nd = d + g.distance(u, v);
            if (nd < dist[v]) {
                dist[v] = nd;
                if (parent) (*parent)[v] = u;
                heap.emplace(nd, v);
            }
        });
    }
}

}  // namespace

GeodesicResult shortest_path(const EmbeddedGraph& graph, int source, int target) {
    graph.check_vertex(source);
    graph.check_vertex(target);
    GeodesicResult res;
    res.source = source;
    res.target = target;
    res.euclidean_distance = graph.distance(source, target);
    if (source == target) {
        res.graph_distance = 0.0;
        res.hop_count = 0;
        res.path = {source};
        return res;
    }
    // Run from the lower index so the two query directions share one
    // accumulation order: d_X(u,v) equals d_X(v,u) bit for bit.
    const int from = std::min(source, target), to = std::max(source, target);
    std::vector<double> dist;
    std::vector<int> parent;
    dijkstra(graph, from, to, dist, &parent);
    if (dist[to] == kInf) return res;
    res.graph_distance = dist[to];
    for (int v = to; v != -1; v = parent[v]) res.path.push_back(v);
    std::reverse(res.path.begin(), res.path.end());
    if (source != from) std::reverse(res.path.begin(), res.path.end());
    res.hop_count = static_cast<int>(res.path.size()) - 1;
    return res;
}

std::optional<double> graph_distance(const EmbeddedGraph& graph, int source, int target) {
    graph.check_vertex(source);
    graph.check_vertex(target);
    if (source == target) return 0.0;
    const int from = std::min(source, target), to = std::max(source, target);
    std::vector<double> dist;
    dijkstra(graph, from, to, dist, nullptr);
    if (dist[to] == kInf) return std::nullopt;
    return dist[to];
}

std::optional<int> min_hop_path(const EmbeddedGraph& graph, int source, int target) {
    graph.check_vertex(source);
    graph.check_vertex(target);
    if (source == target) return 0;
    std::vector<int> hops(graph.size(), -1);
    std::vector<int> frontier{source}, next;
    hops[source] = 0;
    int level = 0;
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (int u : frontier) {
            bool done = false;
            graph.for_each_neighbor(u, [&](int v) {
                if (hops[v] == -1) {
                    hops[v] = level;
                    next.push_back(v);
                    if (v == target) done = true;
                }
            });
            if (done) return level;
        }
        frontier.swap(next);
    }
    return std::nullopt;
}

std::vector<int> ComponentSummary::members(int component_id) const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(component_of.size()); ++v)
        if (component_of[v] == component_id) out.push_back(v);
    return out;
}

ComponentSummary components(const EmbeddedGraph& graph) {
    const int n = graph.size();
    ComponentSummary summary;
    summary.component_of.assign(n, -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (summary.component_of[s] != -1) continue;
        const int id = summary.count();
        summary.sizes.push_back(0);
        stack.push_back(s);
        summary.component_of[s] = id;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            ++summary.sizes[id];
            graph.for_each_neighbor(u, [&](int v) {
                if (summary.component_of[v] == -1) {
                    summary.component_of[v] = id;
                    stack.push_back(v);
                }
            });
        }
    }
    for (int id = 0; id < summary.count(); ++id)
        if (summary.giant_id == -1 || summary.sizes[id] > summary.sizes[summary.giant_id])
            summary.giant_id = id;
    return summary;
}

namespace {

// BFS eccentricity of `start` within the component; also reports the farthest
// vertex (smallest index among ties).
std::pair<int, int> bfs_eccentricity(const EmbeddedGraph& g, int start,
                                     std::vector<int>& scratch) {
    scratch.assign(g.size(), -1);
    std::vector<int> frontier{start}, next;
    scratch[start] = 0;
    int level = 0;
    int far = start;
    while (!frontier.empty()) {
        next.clear();
        for (int u : frontier)
            g.for_each_neighbor(u, [&](int v) {
                if (scratch[v] == -1) {
                    scratch[v] = level + 1;
                    next.push_back(v);
                }
            });
        if (next.empty()) break;
        ++level;
        far = *std::min_element(next.begin(), next.end());
        frontier.swap(next);
    }
    return {level, far};
}

}  // namespace

int exact_hop_diameter(const EmbeddedGraph& graph, const std::vector<int>& members) {
    std::vector<int> scratch;
    int best = 0;
    for (int v : members) best = std::max(best, bfs_eccentricity(graph, v, scratch).first);
    return best;
}

int double_sweep_lower_bound(const EmbeddedGraph& graph, const std::vector<int>& members) {
    if (members.empty()) throw std::invalid_argument("component is empty");
    std::vector<int> scratch;
    const auto first = bfs_eccentricity(graph, members.front(), scratch);
    const auto second = bfs_eccentricity(graph, first.second, scratch);
    return second.first;
}

HopDiameter hop_diameter(const EmbeddedGraph& graph, const ComponentSummary& summary,
                         int component_id) {
    if (component_id < 0 || component_id >= summary.count())
        throw std::invalid_argument("component id out of range");
    const auto members = summary.members(component_id);
    if (members.empty()) throw std::invalid_argument("component is empty");
    HopDiameter result;
    if (summary.sizes[component_id] <= 2000) {
        result.value = exact_hop_diameter(graph, members);
    } else {
        result.value = double_sweep_lower_bound(graph, members);
        result.approximate = true;
    }
    return result;
}

namespace {

std::vector<PairSample> sample_pairs(const EmbeddedGraph& graph, int pair_count,
                                     double min_separation, bool reject_coincident,
                                     const RngSeed& seed, int workers) {
    if (pair_count < 1) throw std::invalid_argument("pair count must be >= 1");
    const int n = graph.size();
    if (n < 2) throw std::invalid_argument("graph has fewer than two vertices");
    RngStream rng(seed.derive("pairs"));
    constexpr int kMaxRejections = 1000000;
    std::vector<PairSample> samples(pair_count);
    for (auto& s : samples) {
        int attempts = 0;
        for (;;) {
            if (++attempts > kMaxRejections) throw std::runtime_error("separation unattainable");
            const int u = static_cast<int>(rng.uniform_below(n));
            const int v = static_cast<int>(rng.uniform_below(n));
            if (u == v) continue;
            const double d = graph.distance(u, v);
            if (d < min_separation) continue;
            if (reject_coincident && d == 0.0) continue;
            s.u = std::min(u, v);
            s.v = std::max(u, v);
            s.euclidean = d;
            break;
        }
    }
    parallel_for(samples.size(), workers, [&](std::size_t i) {
        samples[i].graph_dist = graph_distance(graph, samples[i].u, samples[i].v);
    });
    return samples;
}

}  // namespace

std::vector<PairSample> excess_sample(const EmbeddedGraph& graph, int pair_count,
                                      double min_separation, const RngSeed& seed, int workers) {
    const double diameter = std::sqrt(graph.dimension()) * graph.cloud().scale;
    if (min_separation < 0.0 || min_separation >= diameter)
        throw std::invalid_argument("min separation must lie in [0, sqrt(d)*t)");
    return sample_pairs(graph, pair_count, min_separation, false, seed, workers);
}

StretchSample stretch_sample(const EmbeddedGraph& graph, int pair_count, const RngSeed& seed,
                             int workers) {
    StretchSample out;
    out.samples = sample_pairs(graph, pair_count, 0.0, true, seed, workers);
    for (const auto& s : out.samples) {
        if (!s.reachable()) ++out.unreachable_count;
        out.max_ratio = std::max(out.max_ratio, s.ratio());
    }
    return out;
}

void write_pair_samples_csv(const std::vector<PairSample>& samples, std::ostream& out) {
    out << "d_E,d_X,excess,ratio,reachable\n";
    for (const auto& s : samples) {
        out << format_double(s.euclidean) << ',';
        if (s.reachable())
            out << format_double(*s.graph_dist) << ',' << format_double(s.excess()) << ','
                << format_double(s.ratio()) << ",1\n";
        else
            out << "inf,inf,inf,0\n";
    }
}

}  // namespace geotsp
