#include "geotsp/tsp_exact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace geotsp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Degenerate cases shared by both solvers: n=1 is a zero-length tour, n=2
// traverses its single edge twice if present.
std::optional<std::optional<Tour>> tiny_instance(const EmbeddedGraph& g) {
    const int n = g.size();
    if (n == 1) return std::optional<Tour>(Tour{{0}, 0.0});
    if (n == 2) {
        if (!g.has_edge(0, 1)) return std::optional<Tour>(std::nullopt);
        return std::optional<Tour>(Tour{{0, 1}, 2.0 * g.distance(0, 1)});
    }
    return std::nullopt;
}

}  // namespace

std::optional<Tour> held_karp(const EmbeddedGraph& graph) {
    const int n = graph.size();
    if (n < 1) throw std::invalid_argument("instance is empty");
    if (n > kHeldKarpMaxVertices)
        throw std::invalid_argument("instance too large for exact solver");
    if (auto tiny = tiny_instance(graph)) return *tiny;

    // Paths start at vertex 0; dp state is (subset of 1..n-1, endpoint).
    const int m = n - 1;
    const std::size_t masks = std::size_t{1} << m;
    std::vector<double> dp(masks * m, kInf);
    std::vector<std::uint8_t> parent(masks * m, 0xff);

    for (int j = 0; j < m; ++j)
        if (graph.has_edge(0, j + 1)) dp[(std::size_t{1} << j) * m + j] = graph.distance(0, j + 1);

    for (std::size_t mask = 1; mask < masks; ++mask) {
        const double* row = dp.data() + mask * m;
        for (int j = 0; j < m; ++j) {
            const double base = row[j];
            if (base == kInf) continue;
            const int vj = j + 1;
            for (int k = 0; k < m; ++k) {
                if (mask >> k & 1) continue;
                if (!graph.has_edge(vj, k + 1)) continue;
                const std::size_t next = mask | (std::size_t{1} << k);
                const double cand = base + graph.distance(vj, k + 1);
                if (cand < dp[next * m + k]) {
                    dp[next * m + k] = cand;
                    parent[next * m + k] = static_cast<std::uint8_t>(j);
                }
            }
        }
    }

    const std::size_t full = masks - 1;
    double best = kInf;
    int best_end = -1;
    for (int j = 0; j < m; ++j) {
        if (dp[full * m + j] == kInf || !graph.has_edge(j + 1, 0)) continue;
        const double total = dp[full * m + j] + graph.distance(j + 1, 0);
        if (total < best) {
            best = total;
            best_end = j;
        }
    }
    if (best_end < 0) return std::nullopt;

    Tour tour;
    tour.total_length = best;
    std::vector<int> rev;
    std::size_t mask = full;
    int j = best_end;
    while (j != 0xff) {
        rev.push_back(j + 1);
        const int pj = parent[mask * m + j];
        mask ^= std::size_t{1} << j;
        j = pj;
    }
    tour.order.push_back(0);
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) tour.order.push_back(*it);
    return tour;
}

std::optional<Tour> brute_force_tour(const EmbeddedGraph& graph) {
    const int n = graph.size();
    if (n < 1) throw std::invalid_argument("instance is empty");
    if (n > kBruteForceMaxVertices)
        throw std::invalid_argument("instance too large for brute force");
    if (auto tiny = tiny_instance(graph)) return *tiny;

    std::vector<int> perm(n - 1);
    std::iota(perm.begin(), perm.end(), 1);
    double best = kInf;
    std::vector<int> best_order;
    do {
        // Fix orientation: first interior vertex below last kills reflections.
        if (perm.front() > perm.back()) continue;
        double total = 0.0;
        bool ok = graph.has_edge(0, perm.front());
        if (ok) total += graph.distance(0, perm.front());
        for (std::size_t i = 0; ok && i + 1 < perm.size(); ++i) {
            ok = graph.has_edge(perm[i], perm[i + 1]);
            if (ok) total += graph.distance(perm[i], perm[i + 1]);
        }
        if (ok && graph.has_edge(perm.back(), 0)) {
            total += graph.distance(perm.back(), 0);
            if (total < best) {
                best = total;
                best_order = perm;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (best_order.empty()) return std::nullopt;

    Tour tour;
    tour.total_length = best;
    tour.order.push_back(0);
    tour.order.insert(tour.order.end(), best_order.begin(), best_order.end());
    return tour;
}

}  // namespace geotsp
