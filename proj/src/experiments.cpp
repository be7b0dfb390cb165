#include "geotsp/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "geotsp/geodesics.hpp"
#include "geotsp/parallel.hpp"
#include "geotsp/permutation.hpp"
#include "geotsp/stats.hpp"

namespace geotsp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t trial_seed(std::uint64_t master, const std::string& label) {
    return RngStream(master, label).next_u64();
}

// Geometric grid guard shared by the fitting experiments.
template <typename T>
void validate_geometric_grid(const std::vector<T>& grid, const char* what) {
    if (grid.size() < 2) throw std::runtime_error("degenerate fit");
    if (grid.size() < 4)
        throw std::invalid_argument(std::string(what) + " grid needs at least 4 points");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(static_cast<double>(grid[i]) > static_cast<double>(grid[i - 1])))
            throw std::invalid_argument(std::string(what) + " grid must be increasing");
    const double first_ratio = static_cast<double>(grid[1]) / static_cast<double>(grid[0]);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double ratio = static_cast<double>(grid[i]) / static_cast<double>(grid[i - 1]);
        if (std::abs(ratio / first_ratio - 1.0) > 0.25)
            throw std::invalid_argument(std::string(what) + " grid must be geometric");
    }
}

KarpResult run_tour_heuristic(const EmbeddedGraph& graph, TourHeuristic heuristic,
                              const KarpOptions& options) {
    return heuristic == TourHeuristic::KarpPartition ? karp_partition_tour(graph, options)
                                                     : posa_reduce_tour(graph, options);
}

// Validity and lower-bound accounting applied to every tour an experiment
// produces.
struct TourAudit {
    long long invalid_tours = 0;
    long long nn_violations = 0;

    void check(const EmbeddedGraph& graph, const Tour& tour) {
        check(graph, tour, nn_lower_bound(graph));
    }
    void check(const EmbeddedGraph& graph, const Tour& tour, double bound) {
        if (validate_tour(graph, tour)) ++invalid_tours;
        if (bound > tour.total_length + 1e-9) ++nn_violations;
    }
    void merge(const TourAudit& other) {
        invalid_tours += other.invalid_tours;
        nn_violations += other.nn_violations;
    }
    void emit(nlohmann::json& aggregates) const {
        aggregates["invalid_tours"] = invalid_tours;
        aggregates["nn_bound_violations"] = nn_violations;
    }
};

EmbeddedGraph induced_prefix(const EmbeddedGraph& graph, int s) {
    PointCloud sub;
    sub.dimension = graph.dimension();
    sub.scale = graph.cloud().scale;
    sub.coords.assign(graph.cloud().coords.begin(),
                      graph.cloud().coords.begin() +
                          static_cast<std::size_t>(s) * graph.dimension());
    std::vector<std::pair<int, int>> edges;
    graph.for_each_edge([&](int u, int v) {
        if (u < s && v < s) edges.emplace_back(u, v);
    });
    return EmbeddedGraph::from_edges(std::move(sub), std::move(edges),
                                     graph.edge_probability(), std::nullopt, graph.seed());
}

}  // namespace

const char* heuristic_name(TourHeuristic h) {
    return h == TourHeuristic::KarpPartition ? "karp_partition" : "posa_reduce";
}

double paper_tour_sentinel(int n, int dimension) {
    return std::pow(static_cast<double>(n), (dimension + 1.0) / dimension) *
           std::sqrt(static_cast<double>(dimension));
}

ExperimentReport verify_permutation_lemma(const PermutationLemmaConfig& config) {
    if (config.n_max < 1 || config.n_max > 9)
        throw std::invalid_argument("n_max must lie in 1..9");
    ExperimentReport report;
    report.id = "verify-lemmas";
    report.parameters = {{"n_max", config.n_max}};
    report.columns = {"n", "permutations", "violations", "max_slack"};

    long long total = 0, violations = 0;
    std::int64_t overall_slack = std::numeric_limits<std::int64_t>::min();
    for (int n = 1; n <= config.n_max; ++n) {
        std::vector<int> sigma(n);
        for (int i = 0; i < n; ++i) sigma[i] = i + 1;
        long long count = 0, bad = 0;
        std::int64_t max_slack = std::numeric_limits<std::int64_t>::min();
        do {
            const auto m = permutation_metrics(sigma);
            ++count;
            max_slack = std::max(max_slack, m.bound_slack());
            if (m.bound_slack() >= 0) ++bad;
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        total += count;
        violations += bad;
        overall_slack = std::max(overall_slack, max_slack);
        report.add_row(0, {static_cast<double>(n), static_cast<double>(count),
                           static_cast<double>(bad), static_cast<double>(max_slack)});
    }
    report.aggregates["total_permutations"] = total;
    report.aggregates["total_violations"] = violations;
    report.aggregates["overall_max_slack"] = overall_slack;
    return report;
}

ExperimentReport threshold_scan(const ThresholdScanConfig& config) {
    if (config.n < 1000) throw std::invalid_argument("threshold scan requires n >= 1000");
    if (config.omega_grid.empty()) throw std::invalid_argument("omega grid is empty");
    if (config.trials < 1 || config.pairs_per_trial < 1)
        throw std::invalid_argument("trials and pairs must be >= 1");

    ExperimentReport report;
    report.id = "scan-threshold";
    report.parameters = {{"d", config.dimension},
                         {"n", config.n},
                         {"omega_grid", config.omega_grid},
                         {"pairs_per_trial", config.pairs_per_trial},
                         {"trials", config.trials},
                         {"master_seed", config.master_seed}};
    report.columns = {"omega", "p", "median_excess", "frac_unreachable"};

    const double logd =
        std::pow(std::log(static_cast<double>(config.n)), config.dimension);
    const double min_sep = 0.25 * std::sqrt(static_cast<double>(config.dimension));
    std::vector<double> clipped;

    struct Task {
        double omega;
        double p;
        std::uint64_t seed;
        double median_excess = 0.0;
        double frac_unreachable = 0.0;
    };
    std::vector<Task> tasks;
    for (std::size_t wi = 0; wi < config.omega_grid.size(); ++wi) {
        const double omega = config.omega_grid[wi];
        double p = omega * logd / config.n;
        if (p > 1.0) {
            clipped.push_back(omega);
            p = 1.0;
        }
        if (!(p > 0.0)) throw std::invalid_argument("omega must be positive");
        for (int t = 0; t < config.trials; ++t) {
            const auto label =
                "scan/omega" + std::to_string(wi) + "/trial" + std::to_string(t);
            tasks.push_back({omega, p, trial_seed(config.master_seed, label)});
        }
    }
    if (!clipped.empty()) report.parameters["clipped_omegas"] = clipped;

    parallel_for(tasks.size(), config.workers, [&](std::size_t i) {
        Task& task = tasks[i];
        const RngSeed seed{task.seed, ""};
        auto cloud = generate_uniform_cloud(config.n, config.dimension, seed);
        auto graph = attach_bernoulli_edges(std::move(cloud), task.p, seed);
        const auto samples =
            excess_sample(graph, config.pairs_per_trial, min_sep, seed, 1);
        std::vector<double> excesses;
        int unreachable = 0;
        for (const auto& s : samples) {
            excesses.push_back(s.excess());
            if (!s.reachable()) ++unreachable;
        }
        task.median_excess = median(std::move(excesses));
        task.frac_unreachable = static_cast<double>(unreachable) / samples.size();
    });

    for (const auto& task : tasks)
        report.add_row(task.seed,
                       {task.omega, task.p, task.median_excess, task.frac_unreachable});
    report.sort_rows_by_seed();

    auto per_omega = nlohmann::json::array();
    for (const double omega : config.omega_grid) {
        std::vector<double> med, unr;
        for (const auto& task : tasks) {
            if (task.omega != omega) continue;
            med.push_back(task.median_excess);
            unr.push_back(task.frac_unreachable);
        }
        per_omega.push_back({{"omega", omega},
                             {"median_excess", median(med)},
                             {"mean_unreachable", mean(unr)}});
    }
    report.aggregates["per_omega"] = per_omega;
    return report;
}

namespace {

struct TourTrial {
    double grid_x = 0.0;  // n or p
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    double length = kInf;
    bool success = false;
    double nn_bound = 0.0;
    TourAudit audit;
};

void run_tour_trials(std::vector<TourTrial>& trials, int dimension, TourHeuristic heuristic,
                     double density_constant, bool scale_density_with_p,
                     double fixed_cell_occupancy, int workers) {
    parallel_for(trials.size(), workers, [&](std::size_t i) {
        TourTrial& trial = trials[i];
        KarpOptions options;
        options.density_constant =
            scale_density_with_p ? density_constant / trial.p : density_constant;
        if (fixed_cell_occupancy > 0.0)
            options.density_constant = fixed_cell_occupancy /
                                       (unit_ball_volume(dimension) *
                                        std::log(static_cast<double>(trial.n)));
        options.workers = 1;
        const RngSeed seed{trial.seed, ""};
        auto cloud = generate_uniform_cloud(trial.n, dimension, seed);
        auto graph = attach_bernoulli_edges(std::move(cloud), trial.p, seed);
        trial.nn_bound = nn_lower_bound(graph);
        auto result = run_tour_heuristic(graph, heuristic, options);
        if (result.success()) {
            trial.success = true;
            trial.length = result.tour->total_length;
            trial.audit.check(graph, *result.tour, trial.nn_bound);
        }
    });
}

}  // namespace

ExperimentReport scaling_fit(const ScalingFitConfig& config) {
    const bool vary_n = !config.n_grid.empty();
    if (vary_n && !config.p_grid.empty())
        throw std::invalid_argument("choose exactly one of n_grid / p_grid");
    if (vary_n)
        validate_geometric_grid(config.n_grid, "n");
    else
        validate_geometric_grid(config.p_grid, "p");
    if (config.trials_per_point < 1) throw std::invalid_argument("trials must be >= 1");

    ExperimentReport report;
    report.id = "fit-scaling";
    report.parameters = {{"d", config.dimension},
                         {"heuristic", heuristic_name(config.heuristic)},
                         {"K", config.density_constant},
                         {"trials_per_point", config.trials_per_point},
                         {"master_seed", config.master_seed},
                         {"mode", vary_n ? "n" : "p"},
                         {"scale_K_with_p", config.scale_density_with_p},
                         {"paper_sentinel", config.paper_sentinel}};
    if (vary_n) {
        report.parameters["n_grid"] = config.n_grid;
        report.parameters["p"] = config.p_fixed;
    } else {
        report.parameters["p_grid"] = config.p_grid;
        report.parameters["n"] = config.n_fixed;
    }
    report.columns = {"grid_x", "n", "p", "tour_length", "success", "nn_bound"};

    std::vector<TourTrial> trials;
    const std::size_t points = vary_n ? config.n_grid.size() : config.p_grid.size();
    for (std::size_t gi = 0; gi < points; ++gi) {
        const int n = vary_n ? config.n_grid[gi] : config.n_fixed;
        const double p = vary_n ? config.p_fixed : config.p_grid[gi];
        if (n < 2) throw std::invalid_argument("grid n must be >= 2");
        if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("grid p must be in (0,1]");
        for (int t = 0; t < config.trials_per_point; ++t) {
            TourTrial trial;
            trial.grid_x = vary_n ? static_cast<double>(n) : p;
            trial.n = n;
            trial.p = p;
            trial.seed = trial_seed(config.master_seed, "fit/point" + std::to_string(gi) +
                                                            "/trial" + std::to_string(t));
            trials.push_back(trial);
        }
    }
    run_tour_trials(trials, config.dimension, config.heuristic, config.density_constant,
                    config.scale_density_with_p, 0.0, config.workers);

    TourAudit audit;
    for (auto& trial : trials) {
        audit.merge(trial.audit);
        report.add_row(trial.seed, {trial.grid_x, static_cast<double>(trial.n), trial.p,
                                    trial.success ? trial.length : kInf,
                                    trial.success ? 1.0 : 0.0, trial.nn_bound});
    }
    report.sort_rows_by_seed();

    // Per-point usability, then the log-log fit over usable successes.
    std::vector<double> xs, ys;
    auto per_point = nlohmann::json::array();
    auto unusable = nlohmann::json::array();
    for (std::size_t gi = 0; gi < points; ++gi) {
        const double gx = vary_n ? static_cast<double>(config.n_grid[gi]) : config.p_grid[gi];
        std::vector<double> lengths, sentinel_lengths;
        int failures = 0;
        for (const auto& trial : trials) {
            if (trial.grid_x != gx) continue;
            if (trial.success) {
                lengths.push_back(trial.length);
                sentinel_lengths.push_back(trial.length);
            } else {
                ++failures;
                sentinel_lengths.push_back(
                    paper_tour_sentinel(trial.n, config.dimension));
            }
        }
        const bool usable =
            failures * 5 <= config.trials_per_point && !lengths.empty();
        nlohmann::json point = {{"grid_x", gx},
                                {"failures", failures},
                                {"usable", usable}};
        if (!lengths.empty()) point["mean_length"] = mean(lengths);
        if (config.paper_sentinel) point["sentinel_mean_length"] = mean(sentinel_lengths);
        per_point.push_back(point);
        if (!usable) {
            unusable.push_back(gx);
            continue;
        }
        for (double len : lengths) {
            xs.push_back(std::log(gx));
            ys.push_back(std::log(len));
        }
    }
    report.aggregates["per_point"] = per_point;
    audit.emit(report.aggregates);

    const auto fit = least_squares(xs, ys);
    report.fits = {{"mode", vary_n ? "n" : "p"},
                   {"slope", fit.slope},
                   {"slope_stderr", fit.slope_stderr},
                   {"intercept", fit.intercept},
                   {"residual_ss", fit.residual_ss},
                   {"points_used", fit.points},
                   {"unusable_points", unusable}};
    return report;
}

ExperimentReport estimate_beta(const EstimateBetaConfig& config) {
    validate_geometric_grid(config.n_grid, "n");
    if (config.trials_per_point < 1) throw std::invalid_argument("trials must be >= 1");

    ExperimentReport report;
    report.id = "estimate-beta";
    report.parameters = {{"d", config.dimension},
                         {"p", config.p},
                         {"n_grid", config.n_grid},
                         {"heuristic", heuristic_name(config.heuristic)},
                         {"K", config.density_constant},
                         {"fixed_cell_occupancy", config.fixed_cell_occupancy},
                         {"trials_per_point", config.trials_per_point},
                         {"bootstrap_resamples", config.bootstrap_resamples},
                         {"master_seed", config.master_seed}};
    report.columns = {"n", "tour_length", "ratio", "success"};

    std::vector<TourTrial> trials;
    for (std::size_t gi = 0; gi < config.n_grid.size(); ++gi) {
        for (int t = 0; t < config.trials_per_point; ++t) {
            TourTrial trial;
            trial.n = config.n_grid[gi];
            trial.grid_x = static_cast<double>(trial.n);
            trial.p = config.p;
            trial.seed = trial_seed(config.master_seed, "beta/point" + std::to_string(gi) +
                                                            "/trial" + std::to_string(t));
            trials.push_back(trial);
        }
    }
    run_tour_trials(trials, config.dimension, config.heuristic, config.density_constant,
                    false, config.fixed_cell_occupancy, config.workers);

    const double exponent = (config.dimension - 1.0) / config.dimension;
    TourAudit audit;
    for (auto& trial : trials) {
        audit.merge(trial.audit);
        const double ratio =
            trial.success ? trial.length / std::pow(trial.n, exponent) : kInf;
        report.add_row(trial.seed, {static_cast<double>(trial.n),
                                    trial.success ? trial.length : kInf, ratio,
                                    trial.success ? 1.0 : 0.0});
    }
    report.sort_rows_by_seed();

    RngStream boot_rng(config.master_seed, "beta/bootstrap");
    auto per_point = nlohmann::json::array();
    std::vector<std::array<double, 3>> cis;  // point, lo, hi per grid point
    for (int n : config.n_grid) {
        std::vector<double> ratios;
        int failures = 0;
        for (const auto& trial : trials) {
            if (trial.n != n) continue;
            if (trial.success)
                ratios.push_back(trial.length / std::pow(trial.n, exponent));
            else
                ++failures;
        }
        if (ratios.empty()) {
            per_point.push_back({{"n", n}, {"failures", failures}, {"usable", false}});
            cis.push_back({kInf, kInf, kInf});
            continue;
        }
        const auto ci =
            bootstrap_mean_ci(ratios, config.bootstrap_resamples, 0.05, boot_rng);
        per_point.push_back({{"n", n},
                             {"failures", failures},
                             {"usable", true},
                             {"mean_ratio", ci.point},
                             {"ci_lo", ci.lo},
                             {"ci_hi", ci.hi}});
        cis.push_back({ci.point, ci.lo, ci.hi});
    }
    report.aggregates["per_point"] = per_point;
    audit.emit(report.aggregates);

    const auto& last = cis[cis.size() - 1];
    const auto& prev = cis[cis.size() - 2];
    if (std::isfinite(last[0]) && std::isfinite(prev[0])) {
        report.aggregates["beta_hat"] = last[0];
        report.aggregates["convergence"] = {
            {"rel_diff", std::abs(last[0] - prev[0]) / last[0]},
            {"ci_overlap", last[1] <= prev[2] && prev[1] <= last[2]}};
    }
    return report;
}

ExperimentReport continuity_check(const ContinuityConfig& config) {
    if (config.n < 2) throw std::invalid_argument("n must be >= 2");
    if (config.delta_grid.empty()) throw std::invalid_argument("delta grid is empty");
    for (double d : config.delta_grid)
        if (d < 0.0 || d > 1.0) throw std::invalid_argument("deltas must lie in [0,1]");

    ExperimentReport report;
    report.id = "continuity";
    report.parameters = {{"d", config.dimension},
                         {"p", config.p},
                         {"n", config.n},
                         {"delta_grid", config.delta_grid},
                         {"trials", config.trials},
                         {"heuristic", heuristic_name(config.heuristic)},
                         {"K", config.density_constant},
                         {"master_seed", config.master_seed}};
    report.columns = {"delta", "k", "t_base", "t_ext", "normalized_excess", "success"};

    const double norm =
        std::pow(static_cast<double>(config.n), (config.dimension - 1.0) / config.dimension);
    double max_delta = 0.0;
    for (double d : config.delta_grid) max_delta = std::max(max_delta, d);
    const int n_top = config.n + static_cast<int>(std::lround(max_delta * config.n));

    struct Row {
        double delta;
        int k;
        std::uint64_t seed;
        double t_base = kInf, t_ext = kInf;
        bool ok = false;
        TourAudit audit;
    };
    std::vector<Row> out;
    for (int t = 0; t < config.trials; ++t) {
        const auto seed =
            trial_seed(config.master_seed, "continuity/trial" + std::to_string(t));
        for (double delta : config.delta_grid)
            out.push_back({delta, static_cast<int>(std::lround(delta * config.n)), seed});
    }

    KarpOptions options;
    options.density_constant = config.density_constant;
    options.workers = 1;
    const std::size_t deltas = config.delta_grid.size();
    parallel_for(static_cast<std::size_t>(config.trials), config.workers, [&](std::size_t t) {
        Row& first = out[t * deltas];
        const RngSeed seed{first.seed, ""};
        auto cloud = generate_uniform_cloud(n_top, config.dimension, seed);
        const auto full = attach_bernoulli_edges(std::move(cloud), config.p, seed);
        const auto base_graph = induced_prefix(full, config.n);
        const auto base = run_tour_heuristic(base_graph, config.heuristic, options);
        if (base.success()) first.audit.check(base_graph, *base.tour);
        for (std::size_t di = 0; di < deltas; ++di) {
            Row& row = out[t * deltas + di];
            if (!base.success()) break;
            row.t_base = base.tour->total_length;
            if (row.k == 0) {
                row.t_ext = row.t_base;
                row.ok = true;
                continue;
            }
            const auto ext_graph = induced_prefix(full, config.n + row.k);
            const auto ext = run_tour_heuristic(ext_graph, config.heuristic, options);
            if (!ext.success()) continue;
            row.audit.check(ext_graph, *ext.tour);
            row.t_ext = ext.tour->total_length;
            row.ok = true;
        }
    });

    TourAudit audit;
    for (const auto& row : out) {
        audit.merge(row.audit);
        report.add_row(row.seed,
                       {row.delta, static_cast<double>(row.k), row.t_base, row.t_ext,
                        row.ok ? (row.t_ext - row.t_base) / norm : kInf,
                        row.ok ? 1.0 : 0.0});
    }
    report.sort_rows_by_seed();

    auto per_delta = nlohmann::json::array();
    for (double delta : config.delta_grid) {
        std::vector<double> excesses;
        int failures = 0, below = 0;
        for (const auto& row : out) {
            if (row.delta != delta) continue;
            if (!row.ok) {
                ++failures;
                continue;
            }
            const double e = (row.t_ext - row.t_base) / norm;
            excesses.push_back(e);
            if (e < 0.5) ++below;
        }
        nlohmann::json entry = {{"delta", delta}, {"failures", failures}};
        if (!excesses.empty()) {
            entry["median_excess"] = median(excesses);
            entry["frac_below_half"] =
                static_cast<double>(below) / static_cast<double>(excesses.size());
        }
        per_delta.push_back(entry);
    }
    report.aggregates["per_delta"] = per_delta;
    audit.emit(report.aggregates);
    return report;
}

ExperimentReport concentration_check(const ConcentrationConfig& config) {
    if (config.block_grid.empty()) throw std::invalid_argument("block grid is empty");
    if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");

    ExperimentReport report;
    report.id = "concentration";
    const char* kind = config.process.kind == BlockKind::Poisson ? "poisson"
                       : config.process.kind == BlockKind::BernoulliCenter ? "bernoulli"
                                                                           : "grid";
    report.parameters = {{"process", kind},
                         {"intensity", config.process.intensity},
                         {"rho", config.process.rho},
                         {"block_grid", config.block_grid},
                         {"trials", config.trials},
                         {"master_seed", config.master_seed}};
    report.columns = {"blocks", "count", "deviation"};

    const double mu = config.process.mean_count();
    struct Cell {
        std::uint64_t seed;
        long long count;
        bool deviant;
    };
    std::vector<std::vector<Cell>> results(config.block_grid.size());
    parallel_for(config.block_grid.size(), config.workers, [&](std::size_t gi) {
        const int blocks = config.block_grid[gi];
        auto& slot = results[gi];
        slot.resize(config.trials);
        for (int t = 0; t < config.trials; ++t) {
            const auto seed = trial_seed(config.master_seed, "conc/N" + std::to_string(gi) +
                                                                 "/trial" + std::to_string(t));
            RngStream rng(seed, "counts");
            long long total = 0;
            for (int b = 0; b < blocks; ++b) total += config.process.sample_count(rng);
            const double dev = std::abs(static_cast<double>(total) - mu * blocks);
            slot[t] = {seed, total, dev > 0.5 * mu * blocks};
        }
    });

    auto per_blocks = nlohmann::json::array();
    std::vector<double> xs, ys;
    std::vector<double> smoothed_logs;
    for (std::size_t gi = 0; gi < config.block_grid.size(); ++gi) {
        const int blocks = config.block_grid[gi];
        long long hits = 0;
        for (const auto& cell : results[gi]) {
            report.add_row(cell.seed, {static_cast<double>(blocks),
                                       static_cast<double>(cell.count),
                                       cell.deviant ? 1.0 : 0.0});
            if (cell.deviant) ++hits;
        }
        const double prob = static_cast<double>(hits) / config.trials;
        const double log_smoothed =
            std::log((hits + 1.0) / (config.trials + 1.0));
        smoothed_logs.push_back(log_smoothed);
        per_blocks.push_back({{"blocks", blocks},
                              {"hits", hits},
                              {"probability", prob},
                              {"log_smoothed", log_smoothed},
                              {"threshold", 0.5 * mu * blocks}});
        xs.push_back(static_cast<double>(blocks));
        ys.push_back(log_smoothed);
    }
    report.sort_rows_by_seed();
    report.aggregates["per_blocks"] = per_blocks;
    report.aggregates["mu"] = mu;

    bool strictly_decreasing = true;
    for (std::size_t i = 1; i < smoothed_logs.size(); ++i)
        if (!(smoothed_logs[i] < smoothed_logs[i - 1])) strictly_decreasing = false;
    report.aggregates["strictly_decreasing"] = strictly_decreasing;

    if (xs.size() >= 2 && xs.front() != xs.back()) {
        const auto fit = least_squares(xs, ys);
        report.fits = {{"mode", "log_tail_vs_blocks"},
                       {"slope", fit.slope},
                       {"slope_stderr", fit.slope_stderr},
                       {"intercept", fit.intercept}};
    }
    return report;
}

}  // namespace geotsp
