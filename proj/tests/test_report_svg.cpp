#include <doctest.h>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "geotsp/experiments.hpp"
#include "geotsp/geodesics.hpp"
#include "geotsp/report.hpp"
#include "geotsp/svg.hpp"
#include "test_util.hpp"

using namespace geotsp;

namespace {

using geotsp::testutil::xml_well_formed;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

int count_occurrences(const std::string& text, const std::string& needle) {
    int n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("report tables") {
    ExperimentReport r;
    r.id = "demo";
    r.columns = {"x", "y"};
    r.add_row(30, {1.0, 2.0});
    r.add_row(10, {3.0, 4.0});
    r.add_row(20, {5.0, 6.0});
    CHECK_THROWS_AS(r.add_row(1, {7.0}), std::invalid_argument);

    r.sort_rows_by_seed();
    CHECK(r.row_seeds == std::vector<std::uint64_t>{10, 20, 30});
    CHECK(r.column("x") == std::vector<double>{3.0, 5.0, 1.0});
    CHECK_THROWS_AS((void)r.column("nope"), std::invalid_argument);

    std::ostringstream csv;
    r.write_csv(csv);
    CHECK(csv.str() == "seed,x,y\n10,3,4\n20,5,6\n30,1,2\n");

    r.parameters["alpha"] = 1;
    r.aggregates["mean_x"] = 3.0;
    const auto side = r.sidecar();
    CHECK(side["experiment"] == "demo");
    CHECK(side["rows"] == 3);
    CHECK(side["parameters"]["alpha"] == 1);

    const auto dir = std::filesystem::temp_directory_path() / "geotsp-report-test";
    std::filesystem::remove_all(dir);
    r.write(dir.string());
    CHECK(std::filesystem::exists(dir / "demo.csv"));
    CHECK(std::filesystem::exists(dir / "demo.json"));
}

TEST_CASE("svg plots") {
    const auto dir = std::filesystem::temp_directory_path() / "geotsp-svg-test";
    std::filesystem::create_directories(dir);

    SUBCASE("loglog of a scaling report carries the fitted slope") {
        ScalingFitConfig config;
        config.n_grid = {128, 256, 512, 1024};
        config.p_fixed = 1.0;
        config.trials_per_point = 1;
        config.master_seed = 2;
        const auto report = scaling_fit(config);
        const auto path = (dir / "loglog.svg").string();
        emit_plot(report, PlotKind::LogLog, path);
        const auto text = slurp(path);
        CHECK(xml_well_formed(text));
        CHECK(text.find("fit slope") != std::string::npos);
        CHECK(text.find("fit-scaling") != std::string::npos);
    }

    SUBCASE("scatter of a threshold report draws one series per omega") {
        ThresholdScanConfig config;
        config.n = 1000;
        config.omega_grid = {0.5, 2.0, 8.0};
        config.pairs_per_trial = 10;
        config.trials = 2;
        config.master_seed = 3;
        const auto report = threshold_scan(config);
        const auto path = (dir / "scatter.svg").string();
        emit_plot(report, PlotKind::Scatter, path);
        const auto text = slurp(path);
        CHECK(xml_well_formed(text));
        CHECK(count_occurrences(text, "omega=") == 3);
    }

    SUBCASE("path overlay has hop_count + 1 polyline vertices") {
        const RngSeed seed{17, ""};
        const auto g =
            attach_bernoulli_edges(generate_uniform_cloud(200, 2, seed), 0.03, seed);
        int u = -1, v = -1;
        GeodesicResult best;
        for (int a = 0; a < 50 && u < 0; ++a)
            for (int b = 50; b < 100; ++b) {
                const auto r = shortest_path(g, a, b);
                if (r.reachable() && *r.hop_count >= 3) {
                    best = r;
                    u = a;
                    v = b;
                    break;
                }
            }
        REQUIRE(u >= 0);
        ExperimentReport report;
        report.id = "geodesic";
        report.columns = {"d_E", "d_X"};
        report.add_row(17, {best.euclidean_distance, *best.graph_distance});
        PlotOverlay overlay;
        overlay.extent = 1.0;
        for (int i = 0; i < g.size(); ++i)
            overlay.points.push_back({g.cloud().point(i)[0], g.cloud().point(i)[1]});
        overlay.polyline = best.path;
        report.overlay = overlay;
        const auto path = (dir / "overlay.svg").string();
        emit_plot(report, PlotKind::PathOverlay, path);
        const auto text = slurp(path);
        CHECK(xml_well_formed(text));
        const auto start = text.find("<polyline");
        REQUIRE(start != std::string::npos);
        const auto pts_at = text.find("points=\"", start);
        REQUIRE(pts_at != std::string::npos);
        const auto end = text.find('"', pts_at + 8);
        const std::string pts = text.substr(pts_at + 8, end - pts_at - 8);
        CHECK(count_occurrences(pts, ",") == *best.hop_count + 1);
    }

    SUBCASE("empty report is rejected") {
        ExperimentReport empty;
        empty.id = "fit-scaling";
        empty.columns = {"grid_x", "tour_length"};
        CHECK_THROWS_WITH_AS(
            emit_plot(empty, PlotKind::Scatter, (dir / "none.svg").string()),
            "empty report", std::invalid_argument);
        CHECK_THROWS_WITH_AS(
            emit_plot(empty, PlotKind::PathOverlay, (dir / "none.svg").string()),
            "empty report", std::invalid_argument);
    }
}
