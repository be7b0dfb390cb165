#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "geotsp/decomposition.hpp"
#include "geotsp/experiments.hpp"
#include "geotsp/geodesics.hpp"
#include "geotsp/line_tour.hpp"
#include "geotsp/partition_tour.hpp"
#include "geotsp/permutation.hpp"
#include "geotsp/posa.hpp"
#include "geotsp/svg.hpp"
#include "geotsp/tsp_exact.hpp"

namespace py = pybind11;
using namespace geotsp;

namespace {

RngSeed make_seed(std::uint64_t master, const std::string& label) {
    return RngSeed{master, label};
}

py::dict report_to_dict(const ExperimentReport& report) {
    py::dict out;
    out["id"] = report.id;
    out["parameters"] = py::module_::import("json").attr("loads")(report.parameters.dump());
    out["columns"] = report.columns;
    out["row_seeds"] = report.row_seeds;
    out["rows"] = report.rows;
    out["aggregates"] = py::module_::import("json").attr("loads")(report.aggregates.dump());
    if (!report.fits.empty())
        out["fits"] = py::module_::import("json").attr("loads")(report.fits.dump());
    return out;
}

}  // namespace

PYBIND11_MODULE(_geotsp, m) {
    m.doc() = "Geodesics and TSP heuristics on randomly embedded random graphs";

    py::class_<PointCloud>(m, "PointCloud")
        .def(py::init<>())
        .def_readwrite("dimension", &PointCloud::dimension)
        .def_readwrite("scale", &PointCloud::scale)
        .def_readwrite("coords", &PointCloud::coords)
        .def("size", &PointCloud::size)
        .def("distance", &PointCloud::distance)
        .def("point", [](const PointCloud& c, int v) {
            const auto pt = c.point(v);
            return std::vector<double>(pt.begin(), pt.end());
        });

    py::class_<EmbeddedGraph>(m, "EmbeddedGraph")
        .def("size", &EmbeddedGraph::size)
        .def("dimension", &EmbeddedGraph::dimension)
        .def("edge_count", &EmbeddedGraph::edge_count)
        .def("degree", &EmbeddedGraph::degree)
        .def("has_edge", &EmbeddedGraph::has_edge)
        .def("neighbors", &EmbeddedGraph::neighbors)
        .def("edge_probability", &EmbeddedGraph::edge_probability)
        .def("seed", &EmbeddedGraph::seed)
        .def("distance", &EmbeddedGraph::distance)
        .def_property_readonly("cloud", &EmbeddedGraph::cloud)
        .def("geometric_radius", [](const EmbeddedGraph& g) {
            return g.geometric_radius();
        });

    py::class_<Tour>(m, "Tour")
        .def_readonly("order", &Tour::order)
        .def_readonly("total_length", &Tour::total_length);

    py::class_<GeodesicResult>(m, "GeodesicResult")
        .def_readonly("source", &GeodesicResult::source)
        .def_readonly("target", &GeodesicResult::target)
        .def_readonly("path", &GeodesicResult::path)
        .def_readonly("graph_distance", &GeodesicResult::graph_distance)
        .def_readonly("euclidean_distance", &GeodesicResult::euclidean_distance)
        .def_readonly("hop_count", &GeodesicResult::hop_count)
        .def("reachable", &GeodesicResult::reachable);

    py::class_<ComponentSummary>(m, "ComponentSummary")
        .def_readonly("component_of", &ComponentSummary::component_of)
        .def_readonly("sizes", &ComponentSummary::sizes)
        .def_readonly("giant_id", &ComponentSummary::giant_id)
        .def("count", &ComponentSummary::count)
        .def("members", &ComponentSummary::members);

    py::class_<Decomposition>(m, "Decomposition")
        .def_readonly("dimension", &Decomposition::dimension)
        .def_readonly("cells_per_axis", &Decomposition::cells_per_axis)
        .def_readonly("base_side", &Decomposition::base_side)
        .def_readonly("thresholds", &Decomposition::thresholds)
        .def_readonly("sqrt_side_bound", &Decomposition::sqrt_side_bound)
        .def("breakpoint", &Decomposition::breakpoint)
        .def("cell_count", &Decomposition::cell_count);

    py::class_<PermutationMetrics>(m, "PermutationMetrics")
        .def_readonly("length", &PermutationMetrics::length)
        .def_readonly("inversions", &PermutationMetrics::inversions)
        .def_readonly("last", &PermutationMetrics::last)
        .def("bound_slack", &PermutationMetrics::bound_slack);

    m.def(
        "generate_uniform_cloud",
        [](int n, int d, std::uint64_t master, const std::string& label) {
            return generate_uniform_cloud(n, d, make_seed(master, label));
        },
        py::arg("n"), py::arg("d"), py::arg("seed"), py::arg("stream") = "");

    m.def(
        "attach_bernoulli_edges",
        [](const PointCloud& cloud, double p, std::uint64_t master, const std::string& label) {
            return attach_bernoulli_edges(cloud, p, make_seed(master, label));
        },
        py::arg("cloud"), py::arg("p"), py::arg("seed"), py::arg("stream") = "");

    m.def("apply_geometric_filter", &apply_geometric_filter, py::arg("graph"), py::arg("r"));
    m.def("euclidean_edge_length", &euclidean_edge_length);
    m.def("serialize_graph", [](const EmbeddedGraph& g) { return serialize_graph(g); });
    m.def("parse_graph", [](const std::string& text) { return parse_graph(text); });
    m.def("load_graph_file", &load_graph_file);
    m.def("save_graph_file", &save_graph_file);

    m.def("shortest_path", &shortest_path);
    m.def("min_hop_path", &min_hop_path);
    m.def("components", &components);
    m.def("hop_diameter", [](const EmbeddedGraph& g, const ComponentSummary& c, int id) {
        const auto d = hop_diameter(g, c, id);
        return py::make_tuple(d.value, d.approximate);
    });

    m.def("held_karp", &held_karp);
    m.def("brute_force_tour", &brute_force_tour);
    m.def("tour_length", &tour_length);
    m.def("validate_tour", [](const EmbeddedGraph& g, const Tour& t) {
        return validate_tour(g, t);
    });

    m.def("near_cube_decomposition", [](const std::vector<int>& extents, int m) {
        return near_cube_decomposition(extents, m);
    });
    m.def("assign_cells",
          [](const PointCloud& cloud, const Decomposition& dec) {
              return assign_cells(cloud, dec);
          });
    m.def("snake_order", &snake_order);
    m.def("permutation_metrics", [](const std::vector<int>& sigma) {
        return permutation_metrics(sigma);
    });
    m.def("nn_lower_bound", &nn_lower_bound);
    m.def("unit_ball_volume", &unit_ball_volume);

    m.def(
        "posa_hamilton",
        [](const EmbeddedGraph& g, std::uint64_t max_rotations, std::uint64_t master,
           const std::string& label) -> std::optional<Tour> {
            const auto r = posa_hamilton(
                g, max_rotations == 0 ? posa_default_budget(g.size()) : max_rotations,
                make_seed(master, label));
            return r.cycle;
        },
        py::arg("graph"), py::arg("max_rotations") = 0, py::arg("seed") = 0,
        py::arg("stream") = "");

    m.def(
        "karp_partition_tour",
        [](const EmbeddedGraph& g, double K, int workers) {
            KarpOptions options;
            options.density_constant = K;
            options.workers = workers;
            const auto r = karp_partition_tour(g, options);
            py::dict out;
            out["success"] = r.success();
            if (r.success())
                out["tour"] = *r.tour;
            else {
                out["diagnostic"] = r.diagnostic;
                out["failed_cell"] = r.failed_cell;
            }
            out["cells_per_axis"] = r.cells_per_axis;
            return out;
        },
        py::arg("graph"), py::arg("K") = 2.0, py::arg("workers") = 0);

    m.def(
        "line_greedy_tour",
        [](const PointCloud& cloud, double p, std::uint64_t master,
           const std::string& label) -> std::optional<Tour> {
            return line_greedy_tour(cloud, p, make_seed(master, label)).tour;
        },
        py::arg("cloud"), py::arg("p"), py::arg("seed"), py::arg("stream") = "");

    m.def(
        "excess_sample",
        [](const EmbeddedGraph& g, int pairs, double min_sep, std::uint64_t master) {
            const auto samples = excess_sample(g, pairs, min_sep, RngSeed{master, ""}, 0);
            std::vector<py::dict> out;
            for (const auto& s : samples) {
                py::dict d;
                d["u"] = s.u;
                d["v"] = s.v;
                d["d_E"] = s.euclidean;
                d["reachable"] = s.reachable();
                d["excess"] = s.excess();
                out.push_back(d);
            }
            return out;
        },
        py::arg("graph"), py::arg("pairs"), py::arg("min_separation"), py::arg("seed"));

    m.def("verify_permutation_lemma", [](int n_max) {
        return report_to_dict(verify_permutation_lemma({n_max}));
    });
}
