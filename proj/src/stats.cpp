#include "geotsp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace geotsp {

double mean(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("mean of empty sample");
    double s = 0.0;
    for (double v : values) s += v;
    return s / static_cast<double>(values.size());
}

double median(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median of empty sample");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

LinearFit least_squares(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("x/y size mismatch");
    const int n = static_cast<int>(x.size());
    bool distinct = false;
    for (int i = 1; i < n; ++i)
        if (x[i] != x[0]) distinct = true;
    if (n < 2 || !distinct) throw std::runtime_error("degenerate fit");

    const double mx = mean(x), my = mean(y);
    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    LinearFit fit;
    fit.points = n;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    for (int i = 0; i < n; ++i) {
        const double r = y[i] - fit.intercept - fit.slope * x[i];
        fit.residual_ss += r * r;
    }
    fit.slope_stderr = n > 2 ? std::sqrt(fit.residual_ss / (n - 2) / sxx) : 0.0;
    return fit;
}

BootstrapCI bootstrap_mean_ci(std::span<const double> values, int resamples, double alpha,
                              RngStream& rng) {
    if (values.empty()) throw std::invalid_argument("bootstrap of empty sample");
    BootstrapCI ci;
    ci.point = mean(values);
    std::vector<double> stats(resamples);
    const std::size_t n = values.size();
    for (int r = 0; r < resamples; ++r) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += values[rng.uniform_below(n)];
        stats[r] = s / static_cast<double>(n);
    }
    std::sort(stats.begin(), stats.end());
    const auto pick = [&](double q) {
        const int i = std::clamp(static_cast<int>(q * (resamples - 1)), 0, resamples - 1);
        return stats[i];
    };
    ci.lo = pick(alpha / 2.0);
    ci.hi = pick(1.0 - alpha / 2.0);
    return ci;
}

}  // namespace geotsp
