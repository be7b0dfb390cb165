#pragma once

#include <span>
#include <vector>

#include "geotsp/rng.hpp"

namespace geotsp {

double mean(std::span<const double> values);
double median(std::vector<double> values);  // by value: sorts a copy

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
    double residual_ss = 0.0;
    int points = 0;
};

// Ordinary least squares y = a + b x. Throws std::runtime_error("degenerate
// fit") with fewer than two distinct x values.
LinearFit least_squares(std::span<const double> x, std::span<const double> y);

struct BootstrapCI {
    double point = 0.0;
    double lo = 0.0;
    double hi = 0.0;
};

// Percentile bootstrap CI for the mean; distribution-free at small trial
// counts.
BootstrapCI bootstrap_mean_ci(std::span<const double> values, int resamples, double alpha,
                              RngStream& rng);

}  // namespace geotsp
