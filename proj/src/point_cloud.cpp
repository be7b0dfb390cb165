#include "geotsp/point_cloud.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace geotsp {

double PointCloud::distance(int u, int v) const {
    const double* a = coords.data() + static_cast<std::size_t>(u) * dimension;
    const double* b = coords.data() + static_cast<std::size_t>(v) * dimension;
    double s = 0.0;
    for (int k = 0; k < dimension; ++k) {
        const double diff = a[k] - b[k];
        s += diff * diff;
    }
    return std::sqrt(s);
}

void PointCloud::validate() const {
    if (dimension < 1) throw std::invalid_argument("point cloud dimension must be >= 1");
    if (scale <= 0.0) throw std::invalid_argument("point cloud scale must be > 0");
    if (coords.size() % dimension != 0)
        throw std::invalid_argument("coordinate array length not a multiple of dimension");
    for (double c : coords) {
        if (!(c >= 0.0 && c <= scale))
            throw std::invalid_argument("coordinate outside [0, scale]: " + std::to_string(c));
    }
}

double BlockProcess::mean_count() const {
    switch (kind) {
        case BlockKind::Poisson: return intensity;
        case BlockKind::BernoulliCenter: return rho;
        case BlockKind::FixedGrid: return 1.0;
    }
    return 0.0;
}

int BlockProcess::sample_count(RngStream& rng) const {
    switch (kind) {
        case BlockKind::Poisson: return rng.poisson(intensity);
        case BlockKind::BernoulliCenter: return rng.bernoulli(rho) ? 1 : 0;
        case BlockKind::FixedGrid: return 1;
    }
    return 0;
}

void BlockProcess::sample_block(RngStream& rng, int dimension, std::vector<double>& out) const {
    switch (kind) {
        case BlockKind::Poisson: {
            const int k = rng.poisson(intensity);
            for (int i = 0; i < k; ++i)
                for (int b = 0; b < dimension; ++b) out.push_back(rng.uniform01());
            break;
        }
        case BlockKind::BernoulliCenter:
            if (rng.bernoulli(rho))
                for (int b = 0; b < dimension; ++b) out.push_back(0.5);
            break;
        case BlockKind::FixedGrid:
            for (int b = 0; b < dimension; ++b) out.push_back(0.5);
            break;
    }
}

PointCloud generate_uniform_cloud(int n, int dimension, const RngSeed& seed) {
    if (n < 0) throw std::invalid_argument("point count must be >= 0");
    if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
    PointCloud cloud;
    cloud.dimension = dimension;
    cloud.scale = 1.0;
    cloud.coords.reserve(static_cast<std::size_t>(n) * dimension);
    RngStream rng(seed.derive("points"));
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < dimension; ++b) cloud.coords.push_back(rng.uniform01());
    return cloud;
}

PointCloud generate_block_cloud(int t, int dimension, const BlockProcess& proc,
                                const RngSeed& seed) {
    if (t < 1) throw std::invalid_argument("block cloud side length must be >= 1");
    if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
    PointCloud cloud;
    cloud.dimension = dimension;
    cloud.scale = static_cast<double>(t);
    RngStream rng(seed.derive("blocks"));

    // Blocks enumerated in row-major order over {0..t-1}^d; each block draws
    // from the shared stream, so the whole cloud is one deterministic sequence.
    std::vector<int> corner(dimension, 0);
    std::vector<double> local;
    const long long total = [&] {
        long long m = 1;
        for (int b = 0; b < dimension; ++b) m *= t;
        return m;
    }();
    for (long long blk = 0; blk < total; ++blk) {
        local.clear();
        proc.sample_block(rng, dimension, local);
        for (std::size_t i = 0; i < local.size(); i += dimension)
            for (int b = 0; b < dimension; ++b)
                cloud.coords.push_back(local[i + b] + corner[b]);
        for (int b = 0; b < dimension; ++b) {
            if (++corner[b] < t) break;
            corner[b] = 0;
        }
    }
    return cloud;
}

}  // namespace geotsp
