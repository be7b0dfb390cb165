#include <doctest.h>

#include <cmath>

#include "geotsp/experiments.hpp"
#include "geotsp/stats.hpp"
#include "test_util.hpp"

using namespace geotsp;

TEST_CASE("permutation lemma experiment") {
    SUBCASE("n_max = 3 covers 9 permutations with no violations") {
        const auto r = verify_permutation_lemma({3});
        CHECK(r.aggregates["total_permutations"] == 9);
        CHECK(r.aggregates["total_violations"] == 0);
        CHECK(r.aggregates["overall_max_slack"].get<long long>() <= -1);
    }
    SUBCASE("n_max = 8 covers 46233 permutations with no violations") {
        const auto r = verify_permutation_lemma({8});
        CHECK(r.aggregates["total_permutations"] == 46233);
        CHECK(r.aggregates["total_violations"] == 0);
    }
    SUBCASE("bad n_max rejected") {
        CHECK_THROWS_AS((void)verify_permutation_lemma({0}), std::invalid_argument);
        CHECK_THROWS_AS((void)verify_permutation_lemma({10}), std::invalid_argument);
    }
}

TEST_CASE("threshold scan") {
    ThresholdScanConfig config;
    config.n = 2000;
    config.omega_grid = {0.25, 1.0, 8.0};
    config.pairs_per_trial = 40;
    config.trials = 2;
    config.master_seed = 11;
    const auto r = threshold_scan(config);
    CHECK(r.rows.size() == 6);

    SUBCASE("median excess falls from the sparse to the dense end") {
        const auto agg = r.aggregates["per_omega"];
        const double sparse = agg[0]["median_excess"].get<double>();
        const double dense = agg[2]["median_excess"].get<double>();
        CHECK(sparse > dense);
        CHECK(dense < 0.25);
    }
    SUBCASE("aggregates recompute from rows") {
        const auto med = r.column("median_excess");
        const auto omegas = r.column("omega");
        std::vector<double> first;
        for (std::size_t i = 0; i < med.size(); ++i)
            if (omegas[i] == 0.25) first.push_back(med[i]);
        CHECK(median(first) ==
              doctest::Approx(r.aggregates["per_omega"][0]["median_excess"].get<double>()));
    }
    SUBCASE("rerunning reproduces every row exactly") {
        const auto again = threshold_scan(config);
        CHECK(again.rows == r.rows);
        CHECK(again.row_seeds == r.row_seeds);
    }
    SUBCASE("p above 1 is clipped with a warning") {
        ThresholdScanConfig clip = config;
        clip.omega_grid = {80.0};
        clip.trials = 1;
        clip.pairs_per_trial = 5;
        const auto c = threshold_scan(clip);
        CHECK(c.parameters.contains("clipped_omegas"));
        CHECK(c.column("p")[0] == 1.0);
    }
    SUBCASE("preconditions") {
        ThresholdScanConfig bad = config;
        bad.n = 100;
        CHECK_THROWS_AS((void)threshold_scan(bad), std::invalid_argument);
    }
}

TEST_CASE("scaling fit") {
    SUBCASE("slope in n is near one half at fixed p") {
        ScalingFitConfig config;
        config.n_grid = {256, 512, 1024, 2048};
        config.p_fixed = 0.3;
        config.trials_per_point = 2;
        config.master_seed = 4;
        const auto r = scaling_fit(config);
        const double slope = r.fits["slope"].get<double>();
        CHECK(slope > 0.3);
        CHECK(slope < 0.7);
        CHECK(r.aggregates["nn_bound_violations"] == 0);
        CHECK(r.aggregates["invalid_tours"] == 0);
        CHECK(r.fits["unusable_points"].empty());
    }
    SUBCASE("slope in p is negative at fixed n") {
        ScalingFitConfig config;
        config.p_grid = {0.1, 0.2, 0.4, 0.8};
        config.n_fixed = 1024;
        config.trials_per_point = 2;
        config.master_seed = 5;
        const auto r = scaling_fit(config);
        const double slope = r.fits["slope"].get<double>();
        CHECK(slope < -0.1);
        CHECK(slope > -0.9);
    }
    SUBCASE("degenerate and malformed grids") {
        ScalingFitConfig one;
        one.n_grid = {1024};
        CHECK_THROWS_WITH_AS((void)scaling_fit(one), "degenerate fit", std::runtime_error);
        ScalingFitConfig three;
        three.n_grid = {256, 512, 1024};
        CHECK_THROWS_AS((void)scaling_fit(three), std::invalid_argument);
        ScalingFitConfig skewed;
        skewed.n_grid = {256, 512, 1024, 5000};
        CHECK_THROWS_AS((void)scaling_fit(skewed), std::invalid_argument);
    }
    SUBCASE("reproducible") {
        ScalingFitConfig config;
        config.n_grid = {128, 256, 512, 1024};
        config.p_fixed = 0.5;
        config.trials_per_point = 1;
        config.master_seed = 6;
        const auto a = scaling_fit(config);
        const auto b = scaling_fit(config);
        CHECK(a.rows == b.rows);
        CHECK(a.fits["slope"] == b.fits["slope"]);
    }
}

TEST_CASE("beta estimate") {
    EstimateBetaConfig config;
    config.n_grid = {256, 512, 1024, 2048};
    config.p = 0.5;
    config.trials_per_point = 3;
    config.master_seed = 12;
    const auto r = estimate_beta(config);
    REQUIRE(r.aggregates.contains("beta_hat"));
    const double beta = r.aggregates["beta_hat"].get<double>();
    CHECK(beta > 0.0);
    CHECK(std::isfinite(beta));
    REQUIRE(r.aggregates.contains("convergence"));
    CHECK(r.aggregates["convergence"].contains("rel_diff"));
    CHECK(r.aggregates["convergence"].contains("ci_overlap"));

    SUBCASE("fewer edges cannot shorten the heuristic optimum") {
        EstimateBetaConfig full = config;
        full.p = 1.0;
        const auto rf = estimate_beta(full);
        const double beta_half = beta;
        const double beta_full = rf.aggregates["beta_hat"].get<double>();
        const auto& pt = r.aggregates["per_point"].back();
        const double width = pt["ci_hi"].get<double>() - pt["ci_lo"].get<double>();
        CHECK(beta_half >= beta_full - width);
    }
    SUBCASE("bootstrap intervals shrink with more trials") {
        EstimateBetaConfig more = config;
        more.trials_per_point = 9;
        const auto rm = estimate_beta(more);
        const auto& narrow = rm.aggregates["per_point"].back();
        const auto& wide = r.aggregates["per_point"].back();
        const double w_narrow = narrow["ci_hi"].get<double>() - narrow["ci_lo"].get<double>();
        const double w_wide = wide["ci_hi"].get<double>() - wide["ci_lo"].get<double>();
        CHECK(w_narrow < w_wide + 1e-12);
    }
}

TEST_CASE("continuity of the tour length in n") {
    ContinuityConfig config;
    config.n = 512;
    config.p = 0.5;
    config.delta_grid = {0.0, 0.02, 0.08};
    config.trials = 3;
    config.master_seed = 9;
    const auto r = continuity_check(config);
    CHECK(r.rows.size() == 9);

    SUBCASE("zero delta has exactly zero excess") {
        const auto deltas = r.column("delta");
        const auto excess = r.column("normalized_excess");
        for (std::size_t i = 0; i < deltas.size(); ++i)
            if (deltas[i] == 0.0) CHECK(excess[i] == 0.0);
    }
    SUBCASE("median excess is nondecreasing in delta") {
        const auto agg = r.aggregates["per_delta"];
        REQUIRE(agg.size() == 3);
        const double e0 = agg[0]["median_excess"].get<double>();
        const double e1 = agg[1]["median_excess"].get<double>();
        const double e2 = agg[2]["median_excess"].get<double>();
        CHECK(e0 <= e1 + 0.05);
        CHECK(e1 <= e2 + 0.05);
        CHECK(e0 == 0.0);
    }
    SUBCASE("small growth stays below half the normalization") {
        const auto agg = r.aggregates["per_delta"];
        CHECK(agg[1]["frac_below_half"].get<double>() >= 0.9);
    }
}

TEST_CASE("concentration of block-process counts") {
    SUBCASE("fixed grid never deviates") {
        ConcentrationConfig config;
        config.process = {BlockKind::FixedGrid, 1.0, 1.0};
        config.block_grid = {4, 16, 64};
        config.trials = 200;
        const auto r = concentration_check(config);
        for (const auto& pt : r.aggregates["per_blocks"])
            CHECK(pt["probability"].get<double>() == 0.0);
    }
    SUBCASE("poisson tail falls with the block count") {
        ConcentrationConfig config;
        config.process = {BlockKind::Poisson, 1.0, 1.0};
        config.block_grid = {4, 16, 64};
        config.trials = 2000;
        config.master_seed = 31;
        const auto r = concentration_check(config);
        CHECK(r.aggregates["strictly_decreasing"] == true);
        CHECK(r.fits["slope"].get<double>() < 0.0);
        const auto again = concentration_check(config);
        CHECK(again.rows == r.rows);
    }
    SUBCASE("mean rescaling moves the deviation threshold accordingly") {
        ConcentrationConfig config;
        config.process = {BlockKind::Poisson, 2.0, 1.0};
        config.block_grid = {4, 16, 64};
        config.trials = 100;
        const auto r = concentration_check(config);
        CHECK(r.aggregates["mu"] == 2.0);
        CHECK(r.aggregates["per_blocks"][0]["threshold"].get<double>() == 4.0);
    }
}

TEST_CASE("paper-convention sentinel") {
    CHECK(paper_tour_sentinel(16, 2) ==
          doctest::Approx(std::pow(16.0, 1.5) * std::sqrt(2.0)).epsilon(1e-12));
    ScalingFitConfig config;
    config.n_grid = {128, 256, 512, 1024};
    config.p_fixed = 1.0;
    config.trials_per_point = 1;
    config.paper_sentinel = true;
    const auto r = scaling_fit(config);
    for (const auto& pt : r.aggregates["per_point"]) {
        REQUIRE(pt.contains("sentinel_mean_length"));
        // no failures here, so the sentinel aggregate matches the honest one
        CHECK(pt["sentinel_mean_length"].get<double>() ==
              doctest::Approx(pt["mean_length"].get<double>()));
    }
}

TEST_CASE("least squares agrees with explicit normal equations on a fixture") {
    const std::vector<double> x{1.0, 2.0, 3.0, 4.0, 5.0};
    const std::vector<double> y{2.1, 3.9, 6.2, 7.8, 10.1};
    const auto fit = least_squares(x, y);
    const int n = 5;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / n;
    CHECK(fit.slope == doctest::Approx(slope).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(intercept).epsilon(1e-12));
    double ssr = 0;
    for (int i = 0; i < n; ++i) {
        const double r = y[i] - intercept - slope * x[i];
        ssr += r * r;
    }
    CHECK(fit.slope_stderr ==
          doctest::Approx(std::sqrt(ssr / (n - 2) / (sxx - sx * sx / n))).epsilon(1e-12));
}
