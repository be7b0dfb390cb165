#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "geotsp/rng.hpp"

namespace geotsp {

// Absolute tolerance for all length comparisons against oracles.
inline constexpr double kLengthTol = 1e-9;

// n points in [0, scale]^d, row-major coordinates.
struct PointCloud {
    int dimension = 1;
    double scale = 1.0;
    std::vector<double> coords;

    int size() const { return static_cast<int>(coords.size()) / dimension; }

    std::span<const double> point(int v) const {
        return {coords.data() + static_cast<std::size_t>(v) * dimension,
                static_cast<std::size_t>(dimension)};
    }

    double distance(int u, int v) const;

    // Throws std::invalid_argument if a coordinate falls outside [0, scale].
    void validate() const;
};

enum class BlockKind { Poisson, BernoulliCenter, FixedGrid };

// Per-block point process. The paper only requires an exponential tail on the
// per-block count; these three kinds are representative choices satisfying it.
struct BlockProcess {
    BlockKind kind = BlockKind::Poisson;
    double intensity = 1.0;  // Poisson mean
    double rho = 1.0;        // Bernoulli retention probability

    double mean_count() const;
    int sample_count(RngStream& rng) const;
    // Appends sampled points of one block, coordinates in [0,1)^d.
    void sample_block(RngStream& rng, int dimension, std::vector<double>& out) const;
};

PointCloud generate_uniform_cloud(int n, int dimension, const RngSeed& seed);

// Union over x in {0..t-1}^d of independent copies of the process translated
// by x; scale t.
PointCloud generate_block_cloud(int t, int dimension, const BlockProcess& proc,
                                const RngSeed& seed);

}  // namespace geotsp
