#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "geotsp/experiments.hpp"
#include "geotsp/geodesics.hpp"
#include "geotsp/line_tour.hpp"
#include "geotsp/parallel.hpp"
#include "geotsp/svg.hpp"
#include "geotsp/tsp_exact.hpp"

namespace geotsp::cli {

namespace {

using nlohmann::json;

struct GlobalOptions {
    std::uint64_t seed = 0;
    std::string out_dir = ".";
    std::string format = "csv";
    int workers = 0;
    bool plot = false;
};

void echo_config(const std::string& command, const json& config) {
    std::cout << "config " << command << " " << config.dump() << "\n";
}

// Summary printed per --format; reports are always written as CSV + JSON.
void print_summary(const GlobalOptions& global, const ExperimentReport& report) {
    if (global.format == "json") {
        std::cout << report.sidecar().dump(2) << "\n";
    } else {
        std::cout << "experiment," << report.id << "\n";
        std::cout << "rows," << report.rows.size() << "\n";
        for (const auto& [key, value] : report.aggregates.items())
            std::cout << key << "," << value.dump() << "\n";
        if (!report.fits.empty())
            for (const auto& [key, value] : report.fits.items())
                std::cout << "fit." << key << "," << value.dump() << "\n";
    }
}

void write_report(const GlobalOptions& global, const ExperimentReport& report,
                  PlotKind plot_kind) {
    report.write(global.out_dir);
    if (global.plot) {
        const auto path =
            (std::filesystem::path(global.out_dir) / (report.id + ".svg")).string();
        emit_plot(report, plot_kind, path);
        std::cout << "plot " << path << "\n";
    }
    print_summary(global, report);
}

PlotOverlay overlay_for(const EmbeddedGraph& graph, const std::vector<int>& path) {
    PlotOverlay overlay;
    overlay.extent = graph.cloud().scale;
    overlay.points.reserve(graph.size());
    for (int i = 0; i < graph.size(); ++i) {
        const auto pt = graph.cloud().point(i);
        overlay.points.push_back({pt[0], graph.dimension() > 1 ? pt[1] : 0.0});
    }
    overlay.polyline = path;
    return overlay;
}

std::vector<int> parse_int_list(const std::vector<std::string>& raw) {
    std::vector<int> out;
    for (const auto& tok : raw) out.push_back(std::stoi(tok));
    return out;
}

std::vector<double> parse_double_list(const std::vector<std::string>& raw) {
    std::vector<double> out;
    for (const auto& tok : raw) out.push_back(std::stod(tok));
    return out;
}

BlockProcess make_process(const std::string& kind, double intensity, double rho) {
    BlockProcess proc;
    proc.intensity = intensity;
    proc.rho = rho;
    if (kind == "poisson")
        proc.kind = BlockKind::Poisson;
    else if (kind == "bernoulli")
        proc.kind = BlockKind::BernoulliCenter;
    else if (kind == "grid")
        proc.kind = BlockKind::FixedGrid;
    else
        throw CLI::ValidationError("--process must be poisson|bernoulli|grid");
    return proc;
}

TourHeuristic parse_heuristic(const std::string& name) {
    if (name == "karp") return TourHeuristic::KarpPartition;
    if (name == "posa") return TourHeuristic::PosaReduce;
    throw CLI::ValidationError("--heuristic must be karp|posa");
}

int run_generate(const GlobalOptions& global, const std::string& cloud_kind, int n, int d,
                 double p, int t, const std::string& process, double intensity, double rho,
                 double radius, const std::string& out) {
    const RngSeed seed{global.seed, ""};
    PointCloud cloud;
    if (cloud_kind == "uniform") {
        cloud = generate_uniform_cloud(n, d, seed);
    } else if (cloud_kind == "block") {
        cloud = generate_block_cloud(t, d, make_process(process, intensity, rho), seed);
    } else {
        throw CLI::ValidationError("--cloud must be uniform|block");
    }
    auto graph = attach_bernoulli_edges(std::move(cloud), p, seed);
    if (radius > 0.0) graph = apply_geometric_filter(graph, radius);
    save_graph_file(graph, out);
    echo_config("generate", json{{"cloud", cloud_kind},
                                 {"n", graph.size()},
                                 {"d", d},
                                 {"p", p},
                                 {"t", t},
                                 {"radius", radius},
                                 {"seed", global.seed},
                                 {"out", out}});
    std::cout << "generated " << out << " n=" << graph.size()
              << " edges=" << graph.edge_count() << "\n";
    return 0;
}

int run_geodesic(const GlobalOptions& global, const std::string& input,
                 const std::string& mode, int source, int target, int pairs,
                 double min_sep) {
    const auto graph = load_graph_file(input);
    const RngSeed seed{global.seed, ""};
    echo_config("geodesic", json{{"input", input},
                                 {"mode", mode},
                                 {"source", source},
                                 {"target", target},
                                 {"pairs", pairs},
                                 {"min_separation", min_sep},
                                 {"seed", global.seed}});
    std::filesystem::create_directories(global.out_dir);
    if (mode == "pair") {
        const auto r = shortest_path(graph, source, target);
        if (!r.reachable()) {
            std::cout << "UNREACHABLE d_E=" << format_double(r.euclidean_distance) << "\n";
            return 1;
        }
        std::cout << "d_E=" << format_double(r.euclidean_distance)
                  << " d_X=" << format_double(*r.graph_distance) << " hops=" << *r.hop_count
                  << "\n";
        if (global.plot) {
            ExperimentReport report;
            report.id = "geodesic";
            report.columns = {"d_E", "d_X"};
            report.add_row(global.seed, {r.euclidean_distance, *r.graph_distance});
            report.overlay = overlay_for(graph, r.path);
            const auto path =
                (std::filesystem::path(global.out_dir) / "geodesic.svg").string();
            emit_plot(report, PlotKind::PathOverlay, path);
            std::cout << "plot " << path << "\n";
        }
        return 0;
    }
    std::vector<PairSample> samples;
    if (mode == "excess") {
        samples = excess_sample(graph, pairs, min_sep, seed, global.workers);
    } else if (mode == "stretch") {
        const auto s = stretch_sample(graph, pairs, seed, global.workers);
        samples = s.samples;
        std::cout << "max_ratio="
                  << (std::isinf(s.max_ratio) ? "inf" : format_double(s.max_ratio))
                  << " unreachable=" << s.unreachable_count << "\n";
    } else if (mode == "components") {
        const auto c = components(graph);
        const auto diam = hop_diameter(graph, c, c.giant_id);
        std::cout << "components=" << c.count() << " giant_size=" << c.sizes[c.giant_id]
                  << " giant_hop_diameter=" << diam.value
                  << (diam.approximate ? " (lower bound)" : "") << "\n";
        return 0;
    } else {
        throw CLI::ValidationError("--mode must be pair|excess|stretch|components");
    }
    const auto csv_path =
        (std::filesystem::path(global.out_dir) / ("geodesic-" + mode + ".csv")).string();
    std::ofstream csv(csv_path, std::ios::binary);
    write_pair_samples_csv(samples, csv);
    std::cout << "wrote " << csv_path << " rows=" << samples.size() << "\n";
    return 0;
}

int run_tour(const GlobalOptions& global, const std::string& input,
             const std::string& heuristic, double density_constant,
             const std::string& out) {
    auto graph = load_graph_file(input);
    echo_config("tour", json{{"input", input},
                             {"heuristic", heuristic},
                             {"K", density_constant},
                             {"seed", global.seed},
                             {"workers", global.workers}});
    KarpOptions options;
    options.density_constant = density_constant;
    options.workers = global.workers;
    const auto result = parse_heuristic(heuristic) == TourHeuristic::KarpPartition
                            ? karp_partition_tour(graph, options)
                            : posa_reduce_tour(graph, options);
    if (!result.success()) {
        std::cerr << "FAILURE: " << result.diagnostic;
        if (result.failed_cell >= 0)
            std::cerr << " (cell " << result.failed_cell << ", size "
                      << result.failed_cell_size << ")";
        std::cerr << "\n";
        return 1;
    }
    if (const auto err = validate_tour(graph, *result.tour)) {
        std::cerr << "internal error: produced tour invalid: " << *err << "\n";
        return 1;
    }
    std::cout << "tour length=" << format_double(result.tour->total_length)
              << " vertices=" << result.tour->order.size()
              << " nn_lower_bound=" << format_double(nn_lower_bound(graph)) << "\n";
    if (!out.empty()) {
        std::ofstream f(out, std::ios::binary);
        serialize_tour(*result.tour, f);
        std::cout << "wrote " << out << "\n";
    }
    if (global.plot) {
        ExperimentReport report;
        report.id = "tour";
        report.columns = {"length"};
        report.add_row(global.seed, {result.tour->total_length});
        auto closed = result.tour->order;
        closed.push_back(result.tour->order.front());
        report.overlay = overlay_for(graph, closed);
        const auto path = (std::filesystem::path(global.out_dir) / "tour.svg").string();
        std::filesystem::create_directories(global.out_dir);
        emit_plot(report, PlotKind::PathOverlay, path);
        std::cout << "plot " << path << "\n";
    }
    return 0;
}

int run_exact(const GlobalOptions& global, const std::string& input, const std::string& out) {
    const auto graph = load_graph_file(input);
    echo_config("exact", json{{"input", input}});
    const auto tour = held_karp(graph);
    if (!tour) {
        std::cout << "INFEASIBLE\n";
        return 1;
    }
    std::cout << "optimal length=" << format_double(tour->total_length) << "\n";
    if (!out.empty()) {
        std::ofstream f(out, std::ios::binary);
        serialize_tour(*tour, f);
        std::cout << "wrote " << out << "\n";
    }
    (void)global;
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"random-embedding geodesics and TSP experiments"};
    app.require_subcommand(1);
    app.fallthrough(true);
    app.set_config("--config");

    GlobalOptions global;
    app.add_option("--seed", global.seed, "master seed")->envname("GEOTSP_SEED");
    app.add_option("--out-dir", global.out_dir, "artifact directory");
    app.add_option("--format", global.format, "stdout summary format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--workers", global.workers, "worker pool size (0 = logical cores)");
    app.add_flag("--plot", global.plot, "emit an SVG plot per artifact");

    int exit_code = 0;

    // generate
    auto* generate = app.add_subcommand("generate", "write a random embedded graph");
    struct {
        std::string cloud = "uniform";
        int n = 100;
        int d = 2;
        double p = 0.5;
        int t = 1;
        std::string process = "poisson";
        double intensity = 1.0;
        double rho = 0.5;
        double radius = 0.0;
        std::string out;
    } gen;
    generate->add_option("--cloud", gen.cloud, "uniform|block");
    generate->add_option("--n", gen.n, "point count (uniform cloud)");
    generate->add_option("--d", gen.d, "dimension");
    generate->add_option("--p", gen.p, "edge probability");
    generate->add_option("--t", gen.t, "cube side (block cloud)");
    generate->add_option("--process", gen.process, "poisson|bernoulli|grid");
    generate->add_option("--intensity", gen.intensity, "poisson intensity");
    generate->add_option("--rho", gen.rho, "bernoulli retention probability");
    generate->add_option("--radius", gen.radius, "geometric filter radius (0 = off)");
    generate->add_option("--out", gen.out, "output graph file")->required();
    generate->callback([&] {
        exit_code = run_generate(global, gen.cloud, gen.n, gen.d, gen.p, gen.t, gen.process,
                                 gen.intensity, gen.rho, gen.radius, gen.out);
    });

    // geodesic
    auto* geodesic = app.add_subcommand("geodesic", "shortest-path queries and samples");
    struct {
        std::string input;
        std::string mode = "pair";
        int source = 0;
        int target = 1;
        int pairs = 100;
        double min_sep = 0.0;
    } geo;
    geodesic->add_option("--input", geo.input, "graph file")->required();
    geodesic->add_option("--mode", geo.mode, "pair|excess|stretch|components");
    geodesic->add_option("--source", geo.source, "source vertex");
    geodesic->add_option("--target", geo.target, "target vertex");
    geodesic->add_option("--pairs", geo.pairs, "sample size");
    geodesic->add_option("--min-sep", geo.min_sep, "minimum Euclidean separation");
    geodesic->callback([&] {
        exit_code = run_geodesic(global, geo.input, geo.mode, geo.source, geo.target,
                                 geo.pairs, geo.min_sep);
    });

    // tour
    auto* tour = app.add_subcommand("tour", "heuristic TSP tour");
    struct {
        std::string input;
        std::string heuristic = "karp";
        double K = 2.0;
        std::string out;
    } tr;
    tour->add_option("--input", tr.input, "graph file")->required();
    tour->add_option("--heuristic", tr.heuristic, "karp|posa");
    tour->add_option("--K", tr.K, "density constant in the cell-count formula");
    tour->add_option("--out", tr.out, "tour output file");
    tour->callback(
        [&] { exit_code = run_tour(global, tr.input, tr.heuristic, tr.K, tr.out); });

    // exact
    auto* exact = app.add_subcommand("exact", "exact optimal tour (n <= 24)");
    struct {
        std::string input;
        std::string out;
    } ex;
    exact->add_option("--input", ex.input, "graph file")->required();
    exact->add_option("--out", ex.out, "tour output file");
    exact->callback([&] { exit_code = run_exact(global, ex.input, ex.out); });

    // scan-threshold
    auto* scan = app.add_subcommand("scan-threshold", "additive-excess scan over omega");
    struct {
        int n = 20000;
        int d = 2;
        std::vector<std::string> omegas{"0.25", "0.5", "1", "2", "4", "8"};
        int pairs = 100;
        int trials = 3;
    } sc;
    scan->add_option("--n", sc.n, "vertex count");
    scan->add_option("--d", sc.d, "dimension");
    scan->add_option("--omega-grid", sc.omegas, "omega values")->delimiter(',');
    scan->add_option("--pairs", sc.pairs, "pairs per trial");
    scan->add_option("--trials", sc.trials, "trials per omega");
    scan->callback([&] {
        ThresholdScanConfig config;
        config.dimension = sc.d;
        config.n = sc.n;
        config.omega_grid = parse_double_list(sc.omegas);
        config.pairs_per_trial = sc.pairs;
        config.trials = sc.trials;
        config.master_seed = global.seed;
        config.workers = global.workers;
        auto report = threshold_scan(config);
        report.parameters["cli_format"] = global.format;
        write_report(global, report, PlotKind::Scatter);
    });

    // fit-scaling
    auto* fit = app.add_subcommand("fit-scaling", "log-log scaling exponents");
    struct {
        std::string mode = "n";
        std::vector<std::string> n_grid{"2048", "4096", "8192", "16384", "32768"};
        std::vector<std::string> p_grid{"0.05", "0.1", "0.2", "0.4"};
        double p = 0.1;
        int n = 16384;
        int trials = 3;
        std::string heuristic = "karp";
        double K = 2.0;
        bool adapt_K = false;
        bool sentinel = false;
    } ft;
    fit->add_option("--mode", ft.mode, "n|p: which variable the grid runs over");
    fit->add_option("--n-grid", ft.n_grid, "n grid")->delimiter(',');
    fit->add_option("--p-grid", ft.p_grid, "p grid")->delimiter(',');
    fit->add_option("--p", ft.p, "fixed p (mode n)");
    fit->add_option("--n", ft.n, "fixed n (mode p)");
    fit->add_option("--trials", ft.trials, "trials per grid point");
    fit->add_option("--heuristic", ft.heuristic, "karp|posa");
    fit->add_option("--K", ft.K, "density constant");
    fit->add_flag("--adapt-K", ft.adapt_K, "divide K by p so cells keep their edge budget");
    fit->add_flag("--paper-sentinel", ft.sentinel, "add paper-convention aggregates");
    fit->callback([&] {
        ScalingFitConfig config;
        config.heuristic = parse_heuristic(ft.heuristic);
        config.density_constant = ft.K;
        config.scale_density_with_p = ft.adapt_K;
        config.trials_per_point = ft.trials;
        config.master_seed = global.seed;
        config.workers = global.workers;
        config.paper_sentinel = ft.sentinel;
        if (ft.mode == "n") {
            config.n_grid = parse_int_list(ft.n_grid);
            config.p_fixed = ft.p;
        } else if (ft.mode == "p") {
            config.p_grid = parse_double_list(ft.p_grid);
            config.n_fixed = ft.n;
        } else {
            throw CLI::ValidationError("--mode must be n|p");
        }
        auto report = scaling_fit(config);
        write_report(global, report, PlotKind::LogLog);
    });

    // estimate-beta
    auto* beta = app.add_subcommand("estimate-beta", "normalized tour-length convergence");
    struct {
        std::vector<std::string> n_grid{"2048", "4096", "8192", "16384"};
        double p = 0.5;
        int trials = 5;
        int resamples = 1000;
        std::string heuristic = "karp";
        double K = 2.0;
        double occupancy = 0.0;
    } bt;
    beta->add_option("--n-grid", bt.n_grid, "n grid")->delimiter(',');
    beta->add_option("--p", bt.p, "edge probability");
    beta->add_option("--trials", bt.trials, "trials per grid point");
    beta->add_option("--resamples", bt.resamples, "bootstrap resamples");
    beta->add_option("--heuristic", bt.heuristic, "karp|posa");
    beta->add_option("--K", bt.K, "density constant");
    beta->add_option("--cell-occupancy", bt.occupancy,
                     "fix the expected cell occupancy across grid points (0 = off)");
    beta->callback([&] {
        EstimateBetaConfig config;
        config.n_grid = parse_int_list(bt.n_grid);
        config.p = bt.p;
        config.trials_per_point = bt.trials;
        config.bootstrap_resamples = bt.resamples;
        config.heuristic = parse_heuristic(bt.heuristic);
        config.density_constant = bt.K;
        config.fixed_cell_occupancy = bt.occupancy;
        config.master_seed = global.seed;
        config.workers = global.workers;
        auto report = estimate_beta(config);
        write_report(global, report, PlotKind::LogLog);
    });

    // verify-lemmas
    auto* lemmas = app.add_subcommand("verify-lemmas", "exhaustive permutation-bound check");
    struct {
        int n_max = 8;
    } lm;
    lemmas->add_option("--n-max", lm.n_max, "largest permutation size (<= 9)");
    lemmas->callback([&] {
        auto report = verify_permutation_lemma({lm.n_max});
        report.write(global.out_dir);
        print_summary(global, report);
        if (report.aggregates["total_violations"].get<long long>() != 0) exit_code = 1;
    });

    // concentration
    auto* conc = app.add_subcommand("concentration", "block-count tail probabilities");
    struct {
        std::string process = "poisson";
        double intensity = 1.0;
        double rho = 0.5;
        std::vector<std::string> grid{"16", "64", "256"};
        int trials = 10000;
    } cc;
    conc->add_option("--process", cc.process, "poisson|bernoulli|grid");
    conc->add_option("--intensity", cc.intensity, "poisson intensity");
    conc->add_option("--rho", cc.rho, "bernoulli retention probability");
    conc->add_option("--grid", cc.grid, "block counts")->delimiter(',');
    conc->add_option("--trials", cc.trials, "trials per block count");
    conc->callback([&] {
        ConcentrationConfig config;
        config.process = make_process(cc.process, cc.intensity, cc.rho);
        config.block_grid = parse_int_list(cc.grid);
        config.trials = cc.trials;
        config.master_seed = global.seed;
        config.workers = global.workers;
        auto report = concentration_check(config);
        write_report(global, report, PlotKind::Scatter);
    });

    // continuity
    auto* cont = app.add_subcommand("continuity", "nested-prefix tour-length growth");
    struct {
        int n = 4096;
        int d = 2;
        double p = 0.5;
        std::vector<std::string> deltas{"0", "0.01", "0.05"};
        int trials = 5;
        std::string heuristic = "karp";
        double K = 2.0;
    } ct;
    cont->add_option("--n", ct.n, "base size");
    cont->add_option("--d", ct.d, "dimension");
    cont->add_option("--p", ct.p, "edge probability");
    cont->add_option("--delta-grid", ct.deltas, "relative growth values")->delimiter(',');
    cont->add_option("--trials", ct.trials, "trials");
    cont->add_option("--heuristic", ct.heuristic, "karp|posa");
    cont->add_option("--K", ct.K, "density constant");
    cont->callback([&] {
        ContinuityConfig config;
        config.n = ct.n;
        config.dimension = ct.d;
        config.p = ct.p;
        config.delta_grid = parse_double_list(ct.deltas);
        config.trials = ct.trials;
        config.heuristic = parse_heuristic(ct.heuristic);
        config.density_constant = ct.K;
        config.master_seed = global.seed;
        config.workers = global.workers;
        auto report = continuity_check(config);
        write_report(global, report, PlotKind::Scatter);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help() << std::flush;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

}  // namespace geotsp::cli
