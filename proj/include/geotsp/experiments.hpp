#pragma once

#include <vector>

#include "geotsp/partition_tour.hpp"
#include "geotsp/point_cloud.hpp"
#include "geotsp/report.hpp"

namespace geotsp {

enum class TourHeuristic { KarpPartition, PosaReduce };
const char* heuristic_name(TourHeuristic h);

// Tour length charged to non-Hamiltonian instances under the paper-convention
// aggregate mode (t^{d+1} sqrt(d) with t = n^{1/d}).
double paper_tour_sentinel(int n, int dimension);

struct PermutationLemmaConfig {
    int n_max = 8;  // 1..9
};

// Exhaustive check of ell(sigma) < sigma_n + 3 inv(sigma) over all
// permutations of [n] for n <= n_max. max_slack must stay <= -1.
ExperimentReport verify_permutation_lemma(const PermutationLemmaConfig& config);

struct ThresholdScanConfig {
    int dimension = 2;
    int n = 20000;  // >= 1000
    std::vector<double> omega_grid;
    int pairs_per_trial = 100;
    int trials = 3;
    std::uint64_t master_seed = 0;
    int workers = 0;
};

// For each omega sets p = omega ln^d n / n (clipped to 1 with a warning) and
// records the median additive excess and unreachable fraction over far pairs
// (separation >= 0.25 sqrt(d)).
ExperimentReport threshold_scan(const ThresholdScanConfig& config);

struct ScalingFitConfig {
    int dimension = 2;
    TourHeuristic heuristic = TourHeuristic::KarpPartition;
    double density_constant = 2.0;
    // Divide the density constant by p, keeping the expected intra-cell
    // degree p-independent (cells must stay Hamiltonian as p falls).
    bool scale_density_with_p = false;
    std::vector<int> n_grid;  // vary-n mode: n_grid plus p_fixed
    double p_fixed = 0.1;
    std::vector<double> p_grid;  // vary-p mode: p_grid plus n_fixed
    int n_fixed = 0;
    int trials_per_point = 3;
    std::uint64_t master_seed = 0;
    int workers = 0;
    bool paper_sentinel = false;
};

// Fits log T against log n (p fixed) or log p (n fixed). Failed instances are
// excluded and counted; grid points with > 20% failures are flagged unusable.
ExperimentReport scaling_fit(const ScalingFitConfig& config);

struct EstimateBetaConfig {
    int dimension = 2;
    double p = 0.5;
    std::vector<int> n_grid;
    int trials_per_point = 5;
    TourHeuristic heuristic = TourHeuristic::KarpPartition;
    double density_constant = 2.0;
    // When positive, choose K per grid point so the expected cell occupancy
    // K nu_d ln n stays at this value; the convergence statistic then sees a
    // single cell regime across sizes.
    double fixed_cell_occupancy = 0.0;
    std::uint64_t master_seed = 0;
    int workers = 0;
    int bootstrap_resamples = 1000;
};

// Reports T / n^{(d-1)/d} per grid point with bootstrap CIs; the convergence
// statistic compares the two largest n values.
ExperimentReport estimate_beta(const EstimateBetaConfig& config);

struct ContinuityConfig {
    int dimension = 2;
    double p = 0.5;
    int n = 1024;
    std::vector<double> delta_grid;
    int trials = 5;
    TourHeuristic heuristic = TourHeuristic::KarpPartition;
    double density_constant = 2.0;
    std::uint64_t master_seed = 0;
    int workers = 0;
};

// Nested-prefix experiment: one cloud of size n(1+max delta) per trial; the
// excess T(n+k) - T(n), normalized by n^{(d-1)/d}, is reported per delta.
ExperimentReport continuity_check(const ContinuityConfig& config);

struct ConcentrationConfig {
    BlockProcess process;
    std::vector<int> block_grid;
    int trials = 10000;
    std::uint64_t master_seed = 0;
    int workers = 0;
};

// Empirical Pr(|T_N - mu N| > 0.5 mu N) per block count N; the smoothed log
// tail probability should fall linearly in N.
ExperimentReport concentration_check(const ConcentrationConfig& config);

}  // namespace geotsp
