#pragma once

#include <span>
#include <vector>

#include "geotsp/point_cloud.hpp"

namespace geotsp {

// Exact tiling of an integer-sided box into m^d near-cube cells with side
// lengths in {u, u+1} via per-axis breakpoint functions:
//   f_b(a) = a*u               for a <  M_b
//   f_b(a) = a*u + (a - M_b)   for a >= M_b
struct Decomposition {
    int dimension = 1;
    int cells_per_axis = 1;  // m
    int base_side = 1;       // u
    std::vector<int> extents;     // per axis
    std::vector<int> thresholds;  // M_b per axis
    bool sqrt_side_bound = true;  // u < sqrt(max extent)

    int breakpoint(int axis, int a) const {
        const int m_b = thresholds[axis];
        return a < m_b ? a * base_side : a * base_side + (a - m_b);
    }

    long long cell_count() const {
        long long c = 1;
        for (int b = 0; b < dimension; ++b) c *= cells_per_axis;
        return c;
    }

    // Row-major linear cell index, axis 0 fastest.
    long long linear_index(std::span<const int> alpha) const;
    std::vector<int> multi_index(long long linear) const;
};

// Splits each axis of the box with the given integer extents into m pieces.
// Throws naming the offending axis when some extent cannot be tiled with
// sides in {u, u+1} for the common base side u = min_b floor(extent_b / m).
Decomposition near_cube_decomposition(std::span<const int> extents_per_axis, int m);

// Cell of each point under the half-open rule; coordinates exactly on the
// outer boundary fold into the last cell. Throws (with the coordinates) for
// points outside the region.
std::vector<long long> assign_cells(const PointCloud& cloud, const Decomposition& dec);
std::vector<long long> assign_cells(std::span<const double> coords, int dimension,
                                    const Decomposition& dec);

// Boustrophedon visit order of all m^d cells; consecutive cells differ in
// exactly one axis by exactly one step.
std::vector<long long> snake_order(int m, int dimension);

}  // namespace geotsp
