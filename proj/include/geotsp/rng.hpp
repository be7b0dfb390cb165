#pragma once

#include <cstdint>
#include <cmath>
#include <string>
#include <string_view>

namespace geotsp {

// Identifies a reproducible random stream. Identical (master, streamLabel)
// pairs yield identical output bit-for-bit across runs.
struct RngSeed {
    std::uint64_t master = 0;
    std::string stream_label;

    RngSeed derive(std::string_view suffix) const {
        RngSeed s;
        s.master = master;
        s.stream_label = stream_label.empty() ? std::string(suffix)
                                              : stream_label + "/" + std::string(suffix);
        return s;
    }
};

// Counter-based generator (SplitMix64). Streams are decorrelated by folding
// an FNV-1a hash of the label into the master seed, so geometry and edge
// coin-flips can be re-randomized independently.
class RngStream {
public:
    explicit RngStream(const RngSeed& seed)
        : state_(mix(seed.master ^ fnv1a(seed.stream_label))) {}

    RngStream(std::uint64_t master, std::string_view label)
        : RngStream(RngSeed{master, std::string(label)}) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    // Uniform in [0,1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, bound), bound > 0. Rejection keeps it unbiased.
    std::uint64_t uniform_below(std::uint64_t bound) {
        const std::uint64_t threshold = -bound % bound;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    bool bernoulli(double p) { return uniform01() < p; }

    // Knuth's product method; fine for the small intensities used here.
    int poisson(double mu) {
        const double limit = std::exp(-mu);
        int k = 0;
        double prod = uniform01();
        while (prod > limit) {
            ++k;
            prod *= uniform01();
        }
        return k;
    }

    // Number of failures before enumerating the next success when scanning a
    // Bernoulli(p) sequence; used for sparse edge sampling.
    std::uint64_t geometric_skip(double p) {
        double u = uniform01();
        if (u <= 0.0) u = 0x1.0p-53;
        return static_cast<std::uint64_t>(std::floor(std::log(u) / std::log1p(-p)));
    }

    static std::uint64_t fnv1a(std::string_view s) {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        return h;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

}  // namespace geotsp
