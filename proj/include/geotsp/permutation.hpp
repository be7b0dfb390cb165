#pragma once

#include <cstdint>
#include <span>

namespace geotsp {

// ell(sigma) = sum |sigma_{i+1} - sigma_i|; the strict bound
// ell(sigma) < sigma_n + 3*inv(sigma) holds for every permutation.
struct PermutationMetrics {
    std::int64_t length = 0;      // ell(sigma)
    std::int64_t inversions = 0;  // inv(sigma)
    int last = 0;                 // sigma_n

    std::int64_t bound_slack() const { return length - last - 3 * inversions; }
};

// sigma must be a bijection on 1..n (throws otherwise). Inversions counted in
// O(n log n) with a Fenwick tree.
PermutationMetrics permutation_metrics(std::span<const int> sigma);

}  // namespace geotsp
