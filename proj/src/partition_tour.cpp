#include "geotsp/partition_tour.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "geotsp/parallel.hpp"
#include "geotsp/posa.hpp"
#include "geotsp/tsp_exact.hpp"

namespace geotsp {

double unit_ball_volume(int d) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    return std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0 + 1.0);
}

double nn_lower_bound(const EmbeddedGraph& graph) {
    double total = 0.0;
    for (int v = 0; v < graph.size(); ++v) {
        if (graph.degree(v) == 0) return std::numeric_limits<double>::infinity();
        double nearest = std::numeric_limits<double>::infinity();
        graph.for_each_neighbor(v, [&](int w) {
            nearest = std::min(nearest, graph.distance(v, w));
        });
        total += nearest;
    }
    return total;
}

namespace {

constexpr int kQuadraticScanCap = 2000;

// All directed traversal edges of a cyclic order (both directions of the
// single edge for 2-tours, none for singletons).
std::vector<std::pair<int, int>> cycle_edges(const std::vector<int>& order) {
    std::vector<std::pair<int, int>> edges;
    const int k = static_cast<int>(order.size());
    if (k < 2) return edges;
    edges.reserve(k);
    for (int i = 0; i < k; ++i) edges.emplace_back(order[i], order[(i + 1) % k]);
    return edges;
}

struct Splice {
    int cycle_pos = -1;   // i: delete (cycle[i], cycle[i+1])
    int tour_pos = -1;    // j: delete (tour[j], tour[j+1])
    bool reversed = false;  // false: u-x / v-y, true: u-y / v-x
    double added = std::numeric_limits<double>::infinity();
};

// cycle rotated to end at cycle[i], then the incoming tour traversed from the
// chosen endpoint of its deleted edge.
std::vector<int> apply_splice(const std::vector<int>& cycle, const std::vector<int>& tour,
                              const Splice& s) {
    const int kc = static_cast<int>(cycle.size());
    const int kt = static_cast<int>(tour.size());
    std::vector<int> merged;
    merged.reserve(kc + kt);
    for (int a = 1; a <= kc; ++a) merged.push_back(cycle[(s.cycle_pos + a) % kc]);
    if (!s.reversed) {
        // enter at x = tour[j], walk backwards to y = tour[j+1]
        for (int a = 0; a < kt; ++a) merged.push_back(tour[((s.tour_pos - a) % kt + kt) % kt]);
    } else {
        // enter at y = tour[j+1], walk forwards to x = tour[j]
        for (int a = 1; a <= kt; ++a) merged.push_back(tour[(s.tour_pos + a) % kt]);
    }
    return merged;
}

// Insert a single vertex into some cycle edge, cheapest feasible first.
bool splice_singleton(const EmbeddedGraph& g, std::vector<int>& cycle, int vertex) {
    const auto edges = cycle_edges(cycle);
    double best = std::numeric_limits<double>::infinity();
    int best_i = -1;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        const auto [u, v] = edges[i];
        if (!g.has_edge(u, vertex) || !g.has_edge(vertex, v)) continue;
        const double added = g.distance(u, vertex) + g.distance(vertex, v) - g.distance(u, v);
        if (added < best) {
            best = added;
            best_i = i;
        }
    }
    if (best_i < 0) return false;
    cycle.insert(cycle.begin() + best_i + 1, vertex);
    return true;
}

bool find_splice(const EmbeddedGraph& g, const std::vector<int>& cycle,
                 const std::vector<std::pair<int, int>>& host_edges,
                 const std::vector<int>& host_positions, const std::vector<int>& tour,
                 Splice& out) {
    const auto incoming = cycle_edges(tour);
    const bool first_found = static_cast<long long>(host_edges.size()) > kQuadraticScanCap ||
                             static_cast<long long>(incoming.size()) > kQuadraticScanCap;
    Splice best;
    for (std::size_t h = 0; h < host_edges.size(); ++h) {
        const auto [u, v] = host_edges[h];
        const double removed_host = g.distance(u, v);
        for (std::size_t j = 0; j < incoming.size(); ++j) {
            const auto [x, y] = incoming[j];
            const double removed = removed_host + g.distance(x, y);
            if (g.has_edge(u, x) && g.has_edge(v, y)) {
                const double added = g.distance(u, x) + g.distance(v, y) - removed;
                if (added < best.added) {
                    best = {host_positions[h], static_cast<int>(j), false, added};
                    if (first_found) {
                        out = best;
                        return true;
                    }
                }
            }
            if (g.has_edge(u, y) && g.has_edge(v, x)) {
                const double added = g.distance(u, y) + g.distance(v, x) - removed;
                if (added < best.added) {
                    best = {host_positions[h], static_cast<int>(j), true, added};
                    if (first_found) {
                        out = best;
                        return true;
                    }
                }
            }
        }
    }
    if (best.cycle_pos < 0) return false;
    out = best;
    return true;
}

}  // namespace

PatchResult patch_cycles(const EmbeddedGraph& graph,
                         const std::map<long long, Tour>& cell_tours,
                         const std::vector<long long>& order) {
    PatchResult result;
    if (order.empty()) return result;
    for (long long cell : order)
        if (!cell_tours.count(cell))
            throw std::invalid_argument("order references a cell without a tour");
    if (order.size() != cell_tours.size())
        throw std::invalid_argument("order must cover every nonempty cell exactly once");

    std::vector<int> cycle = cell_tours.at(order.front()).order;
    long long previous_cell = order.front();

    std::vector<int> pos(graph.size(), -1);
    for (std::size_t step = 1; step < order.size(); ++step) {
        const long long next_cell = order[step];
        const std::vector<int>& incoming = cell_tours.at(next_cell).order;

        bool merged_ok = false;
        if (static_cast<int>(incoming.size()) == 1) {
            merged_ok = splice_singleton(graph, cycle, incoming.front());
        } else if (static_cast<int>(cycle.size()) == 1) {
            std::vector<int> grown = incoming;
            merged_ok = splice_singleton(graph, grown, cycle.front());
            if (merged_ok) cycle = std::move(grown);
        } else {
            for (std::size_t i = 0; i < cycle.size(); ++i) pos[cycle[i]] = static_cast<int>(i);

            // Host edges: the previously merged cell's tour edges that are
            // still consecutive in the cycle (in either direction, since a
            // splice may reverse the segment), falling back to every edge.
            std::vector<std::pair<int, int>> hosts;
            std::vector<int> host_pos;
            const int kc = static_cast<int>(cycle.size());
            for (const auto& [a, b] : cycle_edges(cell_tours.at(previous_cell).order)) {
                const int ia = pos[a], ib = pos[b];
                if (ia < 0 || ib < 0) continue;
                if (cycle[(ia + 1) % kc] == b) {
                    hosts.emplace_back(a, b);
                    host_pos.push_back(ia);
                } else if (cycle[(ib + 1) % kc] == a) {
                    hosts.emplace_back(b, a);
                    host_pos.push_back(ib);
                }
            }
            Splice splice;
            bool found = !hosts.empty() &&
                         find_splice(graph, cycle, hosts, host_pos, incoming, splice);
            if (!found) {
                hosts.clear();
                host_pos.clear();
                for (int i = 0; i < kc; ++i) {
                    hosts.emplace_back(cycle[i], cycle[(i + 1) % kc]);
                    host_pos.push_back(i);
                }
                found = find_splice(graph, cycle, hosts, host_pos, incoming, splice);
            }
            for (int v : cycle) pos[v] = -1;
            if (found) {
                cycle = apply_splice(cycle, incoming, splice);
                merged_ok = true;
            }
        }
        if (!merged_ok) {
            result.blocked_from = previous_cell;
            result.blocked_to = next_cell;
            return result;
        }
        previous_cell = next_cell;
    }

    Tour tour;
    tour.order = std::move(cycle);
    tour.total_length = tour_length(graph, tour.order);
    result.tour = std::move(tour);
    return result;
}

namespace {

// One pass of 2-opt: replace (a,b),(c,d) by (a,c),(b,d) when both new edges
// are present and the exchange shortens the tour.
bool two_opt_pass(const EmbeddedGraph& graph, std::vector<int>& t, std::vector<int>& pos) {
    const int n = static_cast<int>(t.size());
    bool improved = false;
    for (int i = 0; i < n; ++i) {
        const int a = t[i], b = t[(i + 1) % n];
        const double dab = graph.distance(a, b);
        double best_delta = -1e-12;
        int best_j = -1;
        graph.for_each_neighbor(a, [&](int c) {
            const int j = pos[c];
            if (j == i || j == (i + 1) % n) return;
            const int d = t[(j + 1) % n];
            if (d == a) return;
            if (!graph.has_edge(b, d)) return;
            const double delta =
                graph.distance(a, c) + graph.distance(b, d) - dab - graph.distance(c, d);
            if (delta < best_delta) {
                best_delta = delta;
                best_j = j;
            }
        });
        if (best_j >= 0) {
            int lo = (i + 1) % n, hi = best_j;
            int len = hi - lo;
            if (len < 0) len += n;
            ++len;
            for (int s2 = 0; s2 < len / 2; ++s2) {
                const int x = (lo + s2) % n, y = ((hi - s2) % n + n) % n;
                std::swap(t[x], t[y]);
                pos[t[x]] = x;
                pos[t[y]] = y;
            }
            improved = true;
        }
    }
    return improved;
}

// One pass of segment relocation (or-opt, segments of length 1..3): move
// t[i..i+L-1] between some edge (a,b), provided the three new edges exist.
bool or_opt_pass(const EmbeddedGraph& graph, std::vector<int>& t, std::vector<int>& pos) {
    const int n = static_cast<int>(t.size());
    bool improved = false;
    for (int i = 0; i < n; ++i) {
        for (int len = 1; len <= 3 && len + 2 < n; ++len) {
            const int prev = t[(i - 1 + n) % n];
            const int front = t[i];
            const int back = t[(i + len - 1) % n];
            const int next = t[(i + len) % n];
            if (!graph.has_edge(prev, next)) continue;
            const double removed = graph.distance(prev, front) + graph.distance(back, next);
            const double bridge = graph.distance(prev, next);
            double best_delta = -1e-12;
            int best_j = -1;
            bool best_flip = false;
            graph.for_each_neighbor(front, [&](int a) {
                const int j = pos[a];
                // (a, b) must be a tour edge outside the segment
                int off = j - i;
                if (off < 0) off += n;
                if (off < len) return;
                const int b = t[(j + 1) % n];
                int offb = pos[b] - i;
                if (offb < 0) offb += n;
                if (offb < len) return;
                // forward: a -> front .. back -> b
                if (graph.has_edge(back, b)) {
                    const double delta = bridge + graph.distance(a, front) +
                                         graph.distance(back, b) - removed -
                                         graph.distance(a, b);
                    if (delta < best_delta) {
                        best_delta = delta;
                        best_j = j;
                        best_flip = false;
                    }
                }
            });
            // reversed: a -> back .. front -> b
            graph.for_each_neighbor(back, [&](int a) {
                const int j = pos[a];
                int off = j - i;
                if (off < 0) off += n;
                if (off < len) return;
                const int b = t[(j + 1) % n];
                int offb = pos[b] - i;
                if (offb < 0) offb += n;
                if (offb < len) return;
                if (graph.has_edge(front, b)) {
                    const double delta = bridge + graph.distance(a, back) +
                                         graph.distance(front, b) - removed -
                                         graph.distance(a, b);
                    if (delta < best_delta) {
                        best_delta = delta;
                        best_j = j;
                        best_flip = true;
                    }
                }
            });
            if (best_j < 0) continue;
            // rebuild the order with the segment spliced after t[best_j]
            std::vector<int> segment(len);
            for (int s2 = 0; s2 < len; ++s2) segment[s2] = t[(i + s2) % n];
            if (best_flip) std::reverse(segment.begin(), segment.end());
            std::vector<int> rest;
            rest.reserve(n);
            const int anchor = t[best_j];
            for (int s2 = len; s2 < n; ++s2) rest.push_back(t[(i + s2) % n]);
            std::vector<int> rebuilt;
            rebuilt.reserve(n);
            for (int v : rest) {
                rebuilt.push_back(v);
                if (v == anchor) rebuilt.insert(rebuilt.end(), segment.begin(), segment.end());
            }
            t = std::move(rebuilt);
            for (int s2 = 0; s2 < n; ++s2) pos[t[s2]] = s2;
            improved = true;
            break;
        }
    }
    return improved;
}

}  // namespace

int two_opt_present_edges(const EmbeddedGraph& graph, Tour& tour, int max_passes) {
    const int n = static_cast<int>(tour.order.size());
    if (n < 4) return 0;
    std::vector<int>& t = tour.order;
    std::vector<int> pos(graph.size(), -1);
    for (int i = 0; i < n; ++i) pos[t[i]] = i;

    int passes = 0;
    bool improved = true;
    while (improved && passes < max_passes) {
        ++passes;
        improved = two_opt_pass(graph, t, pos);
        if (or_opt_pass(graph, t, pos)) improved = true;
    }
    tour.total_length = tour_length(graph, t);
    return passes;
}

namespace {

// Induced subgraph on `members` (ascending); returns the local-index graph.
EmbeddedGraph induced_subgraph(const EmbeddedGraph& graph, const std::vector<int>& members) {
    PointCloud sub;
    sub.dimension = graph.dimension();
    sub.scale = graph.cloud().scale;
    sub.coords.reserve(members.size() * graph.dimension());
    for (int v : members) {
        const auto pt = graph.cloud().point(v);
        sub.coords.insert(sub.coords.end(), pt.begin(), pt.end());
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (graph.has_edge(members[i], members[j]))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return EmbeddedGraph::from_edges(std::move(sub), std::move(edges),
                                     graph.edge_probability(), std::nullopt, graph.seed());
}

// Cell solver: exact below the Held-Karp cap, rotation-extension + 2-opt
// above it.
std::optional<Tour> solve_cell(const EmbeddedGraph& sub, std::uint64_t seed_master,
                               const std::string& label, const KarpOptions& options) {
    if (sub.size() <= kHeldKarpMaxVertices) return held_karp(sub);
    for (int attempt = 0; attempt < options.posa_attempts; ++attempt) {
        RngSeed seed{seed_master, label + "/try" + std::to_string(attempt)};
        auto res = posa_hamilton(sub, posa_default_budget(sub.size()), seed);
        if (res.success()) {
            Tour tour = std::move(*res.cycle);
            two_opt_present_edges(sub, tour, options.two_opt_passes);
            return tour;
        }
    }
    return std::nullopt;
}

}  // namespace

KarpResult posa_reduce_tour(const EmbeddedGraph& graph, const KarpOptions& options) {
    KarpResult result;
    if (graph.size() < 1) {
        result.diagnostic = "instance is empty";
        return result;
    }
    auto tour = solve_cell(graph, graph.seed(), "posa-reduce", options);
    if (!tour) {
        result.diagnostic = "rotation-extension failed on the full instance";
        return result;
    }
    result.tour = std::move(tour);
    return result;
}

KarpResult karp_partition_tour(const EmbeddedGraph& graph, const KarpOptions& options) {
    const int n = graph.size();
    const int d = graph.dimension();
    if (n < 2) throw std::invalid_argument("instance must have at least two vertices");
    if (std::abs(graph.cloud().scale - 1.0) > 1e-12)
        throw std::invalid_argument("partition heuristic expects the unit cube");

    KarpResult result;
    const double denom = options.density_constant * unit_ball_volume(d) *
                         std::log(static_cast<double>(n));
    int m = 1;
    if (denom > 0.0)
        m = std::max(1, static_cast<int>(std::floor(std::pow(n / denom, 1.0 / d))));
    result.cells_per_axis = m;

    if (m == 1) {
        auto tour = n <= kHeldKarpMaxVertices
                        ? held_karp(graph)
                        : solve_cell(graph, graph.seed(), "karp-cell-0", options);
        if (!tour) {
            result.diagnostic = "single-cell solve failed";
            result.failed_cell = 0;
            result.failed_cell_size = n;
            return result;
        }
        result.tour = std::move(tour);
        return result;
    }

    const std::vector<int> extents(d, m);
    const Decomposition dec = near_cube_decomposition(extents, m);
    std::vector<double> scaled(graph.cloud().coords);
    for (double& c : scaled) c *= m;
    const auto cell_of = assign_cells(scaled, d, dec);

    std::map<long long, std::vector<int>> cells;
    for (int v = 0; v < n; ++v) cells[cell_of[v]].push_back(v);

    std::vector<std::pair<long long, const std::vector<int>*>> work;
    work.reserve(cells.size());
    for (const auto& [cell, members] : cells) work.emplace_back(cell, &members);

    std::map<long long, Tour> tours;
    std::mutex mu;
    std::vector<char> failed(work.size(), 0);
    parallel_for(work.size(), options.workers, [&](std::size_t i) {
        const auto& [cell, members] = work[i];
        const EmbeddedGraph sub = induced_subgraph(graph, *members);
        auto tour = solve_cell(sub, graph.seed(), "karp-cell-" + std::to_string(cell), options);
        if (!tour) {
            failed[i] = 1;
            return;
        }
        for (int& v : tour->order) v = (*members)[v];
        tour->total_length = tour_length(graph, tour->order);
        std::lock_guard<std::mutex> lock(mu);
        tours.emplace(cell, std::move(*tour));
    });
    for (std::size_t i = 0; i < work.size(); ++i) {
        if (failed[i]) {
            result.diagnostic = "cell solver failed";
            result.failed_cell = work[i].first;
            result.failed_cell_size = static_cast<int>(work[i].second->size());
            return result;
        }
    }

    std::vector<long long> order;
    for (long long cell : snake_order(m, d))
        if (tours.count(cell)) order.push_back(cell);

    auto patched = patch_cycles(graph, tours, order);
    if (!patched.tour) {
        result.diagnostic = "patching failed between cells " +
                            std::to_string(patched.blocked_from) + " and " +
                            std::to_string(patched.blocked_to);
        result.failed_cell = patched.blocked_to;
        result.failed_cell_size =
            static_cast<int>(tours.at(patched.blocked_to).order.size());
        return result;
    }
    result.tour = std::move(*patched.tour);
    return result;
}

}  // namespace geotsp
