#include "geotsp/permutation.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace geotsp {

PermutationMetrics permutation_metrics(std::span<const int> sigma) {
    const int n = static_cast<int>(sigma.size());
    if (n == 0) throw std::invalid_argument("permutation is empty");
    std::vector<char> seen(n + 1, 0);
    for (int v : sigma) {
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation of 1..n");
        seen[v] = 1;
    }

    PermutationMetrics m;
    m.last = sigma[n - 1];
    for (int i = 0; i + 1 < n; ++i) m.length += std::abs(sigma[i + 1] - sigma[i]);

    // inv = pairs i < j with sigma_i > sigma_j; count smaller values already
    // seen while scanning right to left.
    std::vector<int> fenwick(n + 1, 0);
    auto add = [&](int i) {
        for (; i <= n; i += i & -i) ++fenwick[i];
    };
    auto prefix = [&](int i) {
        int s = 0;
        for (; i > 0; i -= i & -i) s += fenwick[i];
        return s;
    };
    for (int j = n - 1; j >= 0; --j) {
        m.inversions += prefix(sigma[j] - 1);
        add(sigma[j]);
    }
    return m;
}

}  // namespace geotsp
