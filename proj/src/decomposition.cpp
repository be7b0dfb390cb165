#include "geotsp/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace geotsp {

long long Decomposition::linear_index(std::span<const int> alpha) const {
    long long idx = 0;
    for (int b = dimension - 1; b >= 0; --b) idx = idx * cells_per_axis + alpha[b];
    return idx;
}

std::vector<int> Decomposition::multi_index(long long linear) const {
    std::vector<int> alpha(dimension);
    for (int b = 0; b < dimension; ++b) {
        alpha[b] = static_cast<int>(linear % cells_per_axis);
        linear /= cells_per_axis;
    }
    return alpha;
}

Decomposition near_cube_decomposition(std::span<const int> extents_per_axis, int m) {
    if (m < 1) throw std::invalid_argument("cells per axis must be >= 1");
    if (extents_per_axis.empty()) throw std::invalid_argument("no axes given");
    Decomposition dec;
    dec.dimension = static_cast<int>(extents_per_axis.size());
    dec.cells_per_axis = m;
    dec.extents.assign(extents_per_axis.begin(), extents_per_axis.end());

    int u = 0;
    for (int b = 0; b < dec.dimension; ++b) {
        const int extent = dec.extents[b];
        if (extent < m)
            throw std::invalid_argument("axis " + std::to_string(b) +
                                        ": extent smaller than cell count");
        const int ub = extent / m;
        u = b == 0 ? ub : std::min(u, ub);
    }
    dec.base_side = u;
    dec.thresholds.resize(dec.dimension);
    for (int b = 0; b < dec.dimension; ++b) {
        const int slack = dec.extents[b] - m * u;  // number of side-(u+1) cells
        if (slack < 0 || slack > m)
            throw std::invalid_argument("axis " + std::to_string(b) +
                                        ": extent not tileable with sides in {u, u+1}");
        dec.thresholds[b] = m - slack;
    }
    const int max_extent = *std::max_element(dec.extents.begin(), dec.extents.end());
    dec.sqrt_side_bound = static_cast<double>(u) < std::sqrt(static_cast<double>(max_extent));
    return dec;
}

std::vector<long long> assign_cells(std::span<const double> coords, int dimension,
                                    const Decomposition& dec) {
    if (dimension != dec.dimension)
        throw std::invalid_argument("cloud/decomposition dimension mismatch");
    const std::size_t n = coords.size() / dimension;
    std::vector<long long> cell(n);
    const int m = dec.cells_per_axis;
    std::vector<int> alpha(dimension);
    for (std::size_t i = 0; i < n; ++i) {
        for (int b = 0; b < dimension; ++b) {
            const double x = coords[i * dimension + b];
            const int extent = dec.extents[b];
            if (!(x >= 0.0 && x <= extent)) {
                std::string msg = "point outside region: (";
                for (int k = 0; k < dimension; ++k) {
                    if (k) msg += ", ";
                    msg += std::to_string(coords[i * dimension + k]);
                }
                throw std::invalid_argument(msg + ")");
            }
            // Half-open cells [f(a-1), f(a)); the far boundary folds inward.
            int lo = 0, hi = m;  // invariant: f(lo) <= x, f(hi) > x or hi == m
            while (lo + 1 < hi) {
                const int mid = (lo + hi) / 2;
                if (dec.breakpoint(b, mid) <= x)
                    lo = mid;
                else
                    hi = mid;
            }
            alpha[b] = std::min(lo, m - 1);
        }
        cell[i] = dec.linear_index(alpha);
    }
    return cell;
}

std::vector<long long> assign_cells(const PointCloud& cloud, const Decomposition& dec) {
    return assign_cells(cloud.coords, cloud.dimension, dec);
}

std::vector<long long> snake_order(int m, int dimension) {
    if (m < 1 || dimension < 1) throw std::invalid_argument("snake order needs m, d >= 1");
    long long total = 1;
    for (int b = 0; b < dimension; ++b) total *= m;
    std::vector<long long> order;
    order.reserve(total);
    std::vector<int> alpha(dimension, 0);
    Decomposition shape;
    shape.dimension = dimension;
    shape.cells_per_axis = m;
    for (long long step = 0;; ++step) {
        order.push_back(shape.linear_index(alpha));
        if (step + 1 == total) break;
        // Advance axis 0 in the direction set by the parity of higher digits;
        // on hitting a wall, carry to the next axis.
        int b = 0;
        for (; b < dimension; ++b) {
            int parity = 0;
            for (int c = b + 1; c < dimension; ++c) parity ^= alpha[c] & 1;
            const int dir = parity ? -1 : +1;
            const int next = alpha[b] + dir;
            if (next >= 0 && next < m) {
                alpha[b] = next;
                break;
            }
        }
        if (b == dimension) break;  // exhausted (defends against m=1 loops)
    }
    return order;
}

}  // namespace geotsp
