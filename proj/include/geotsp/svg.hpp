#pragma once

#include <string>

#include "geotsp/report.hpp"

namespace geotsp {

enum class PlotKind { Scatter, LogLog, PathOverlay };

PlotKind plot_kind_from_name(const std::string& name);  // scatter|loglog|path-overlay

struct PlotSpec {
    std::string x_column;
    std::string y_column;
    std::string series_column;  // empty = single series
};

// Column choices keyed on the experiment id; explicit specs override.
PlotSpec default_plot_spec(const ExperimentReport& report);

// Self-contained SVG with axes, labels and a configuration stamp. Scatter and
// loglog read report rows (loglog overlays the fitted line from report.fits);
// path-overlay renders report.overlay. Throws on an empty report.
void emit_plot(const ExperimentReport& report, PlotKind kind, const std::string& path);
void emit_plot(const ExperimentReport& report, PlotKind kind, const PlotSpec& spec,
               const std::string& path);

}  // namespace geotsp
