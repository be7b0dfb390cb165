#include "geotsp/posa.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "geotsp/geodesics.hpp"

namespace geotsp {

std::uint64_t posa_default_budget(int n) {
    if (n < 2) return 1;
    return static_cast<std::uint64_t>(20.0 * n * std::log(static_cast<double>(n))) + 1;
}

PosaResult posa_hamilton(const EmbeddedGraph& graph, std::uint64_t max_rotations,
                         const RngSeed& seed) {
    if (max_rotations < 1) throw std::invalid_argument("rotation budget must be >= 1");
    const int n = graph.size();
    PosaResult result;
    if (n == 0) return result;
    if (n == 1) {
        result.cycle = Tour{{0}, 0.0};
        return result;
    }

    const auto comp = components(graph);
    if (comp.count() != 1) return result;  // no Hamilton cycle exists

    RngStream rng(seed.derive("posa"));
    std::vector<int> path, pos(n, -1), scratch;
    path.reserve(n);

    auto reset = [&](int start) {
        for (int v : path) pos[v] = -1;
        path.clear();
        path.push_back(start);
        pos[start] = 0;
    };
    auto note_best = [&] {
        if (path.size() > result.longest_path.size()) result.longest_path = path;
    };

    reset(static_cast<int>(rng.uniform_below(n)));
    while (result.rotations_used <= max_rotations) {
        const int head = path.back();
        const int k = static_cast<int>(path.size()) - 1;

        // Extend to the nearest unvisited neighbor; extension order does not
        // affect completeness but keeps the cycle short.
        int nearest = -1;
        double nearest_dist = 0.0;
        graph.for_each_neighbor(head, [&](int v) {
            if (pos[v] != -1) return;
            const double dist = graph.distance(head, v);
            if (nearest == -1 || dist < nearest_dist) {
                nearest = v;
                nearest_dist = dist;
            }
        });
        if (nearest != -1) {
            path.push_back(nearest);
            pos[nearest] = k + 1;
            continue;
        }

        if (graph.has_edge(head, path.front())) {
            if (static_cast<int>(path.size()) == n) {
                note_best();
                Tour tour;
                tour.order = path;
                tour.total_length = tour_length(graph, path);
                result.cycle = std::move(tour);
                return result;
            }
            // Non-spanning cycle: connectivity guarantees a vertex outside
            // with a neighbor inside; re-open the cycle there and extend.
            int outside = -1, attach = -1;
            for (int y = 0; y < n && outside == -1; ++y) {
                if (pos[y] != -1) continue;
                graph.for_each_neighbor(y, [&](int w) {
                    if (outside == -1 && pos[w] != -1) {
                        outside = y;
                        attach = pos[w];
                    }
                });
            }
            if (outside == -1) {
                note_best();
                return result;
            }
            std::rotate(path.begin(), path.begin() + attach + 1, path.end());
            path.push_back(outside);
            for (std::size_t i = 0; i < path.size(); ++i) pos[path[i]] = static_cast<int>(i);
            ++result.rotations_used;
            continue;
        }

        // Rotation chords: head -> path[i] with i <= k-2 exposes path[i+1].
        scratch.clear();
        graph.for_each_neighbor(head, [&](int v) {
            const int i = pos[v];
            if (i != -1 && i <= k - 2) scratch.push_back(i);
        });
        note_best();
        ++result.rotations_used;
        if (scratch.empty()) {
            reset(static_cast<int>(rng.uniform_below(n)));  // dead end, restart
            continue;
        }
        const int i = scratch[rng.uniform_below(scratch.size())];
        std::reverse(path.begin() + i + 1, path.end());
        for (int j = i + 1; j <= k; ++j) pos[path[j]] = j;
    }

    note_best();
    return result;
}

}  // namespace geotsp
