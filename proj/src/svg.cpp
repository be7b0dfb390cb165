#include "geotsp/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "geotsp/graph.hpp"

namespace geotsp {

namespace {

constexpr double kWidth = 860, kHeight = 620;
constexpr double kLeft = 70, kRight = 40, kTop = 40, kBottom = 70;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string fixed(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

struct Axis {
    double lo = 0.0, hi = 1.0;
    bool log10 = false;

    double place(double v, double pixel_lo, double pixel_hi) const {
        double t = log10 ? std::log10(v) : v;
        double a = log10 ? std::log10(lo) : lo;
        double b = log10 ? std::log10(hi) : hi;
        if (b == a) b = a + 1.0;
        return pixel_lo + (t - a) / (b - a) * (pixel_hi - pixel_lo);
    }

    std::vector<double> ticks() const {
        std::vector<double> out;
        if (log10) {
            const int alo = static_cast<int>(std::floor(std::log10(lo)));
            const int ahi = static_cast<int>(std::ceil(std::log10(hi)));
            for (int e = alo; e <= ahi; ++e) out.push_back(std::pow(10.0, e));
        } else {
            const double span = hi - lo;
            const double step = std::pow(10.0, std::floor(std::log10(span / 4)));
            const double mult = span / step > 8 ? 2.0 : 1.0;
            for (double v = std::ceil(lo / (step * mult)) * step * mult; v <= hi + 1e-12;
                 v += step * mult)
                out.push_back(v);
        }
        return out;
    }
};

class SvgCanvas {
public:
    void open(const std::string& title) {
        body_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
              << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
              << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight
              << "\">\n"
              << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
              << "\" fill=\"white\"/>\n"
              << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
                 "font-family=\"monospace\" font-size=\"15\">"
              << xml_escape(title) << "</text>\n";
    }

    void axes(const Axis& x, const Axis& y, const std::string& xlabel,
              const std::string& ylabel) {
        body_ << "<line x1=\"" << kLeft << "\" y1=\"" << kHeight - kBottom << "\" x2=\""
              << kWidth - kRight << "\" y2=\"" << kHeight - kBottom
              << "\" stroke=\"black\"/>\n"
              << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
              << "\" y2=\"" << kHeight - kBottom << "\" stroke=\"black\"/>\n";
        for (double t : x.ticks()) {
            const double px = x.place(t, kLeft, kWidth - kRight);
            if (px < kLeft - 0.5 || px > kWidth - kRight + 0.5) continue;
            body_ << "<line x1=\"" << fixed(px) << "\" y1=\"" << kHeight - kBottom
                  << "\" x2=\"" << fixed(px) << "\" y2=\"" << kHeight - kBottom + 6
                  << "\" stroke=\"black\"/>\n"
                  << "<text x=\"" << fixed(px) << "\" y=\"" << kHeight - kBottom + 22
                  << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"11\">"
                  << xml_escape(format_double(t)) << "</text>\n";
        }
        for (double t : y.ticks()) {
            const double py = y.place(t, kHeight - kBottom, kTop);
            if (py < kTop - 0.5 || py > kHeight - kBottom + 0.5) continue;
            body_ << "<line x1=\"" << kLeft - 6 << "\" y1=\"" << fixed(py) << "\" x2=\""
                  << kLeft << "\" y2=\"" << fixed(py) << "\" stroke=\"black\"/>\n"
                  << "<text x=\"" << kLeft - 10 << "\" y=\"" << fixed(py + 4)
                  << "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"11\">"
                  << xml_escape(format_double(t)) << "</text>\n";
        }
        body_ << "<text x=\"" << (kLeft + kWidth - kRight) / 2 << "\" y=\"" << kHeight - 26
              << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"13\">"
              << xml_escape(xlabel) << "</text>\n"
              << "<text x=\"20\" y=\"" << (kTop + kHeight - kBottom) / 2
              << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"13\" "
                 "transform=\"rotate(-90 20 "
              << (kTop + kHeight - kBottom) / 2 << ")\">" << xml_escape(ylabel)
              << "</text>\n";
    }

    void circle(double px, double py, const char* color) {
        body_ << "<circle cx=\"" << fixed(px) << "\" cy=\"" << fixed(py)
              << "\" r=\"3\" fill=\"" << color << "\" fill-opacity=\"0.75\"/>\n";
    }

    void line(double x1, double y1, double x2, double y2, const char* color, double width) {
        body_ << "<line x1=\"" << fixed(x1) << "\" y1=\"" << fixed(y1) << "\" x2=\""
              << fixed(x2) << "\" y2=\"" << fixed(y2) << "\" stroke=\"" << color
              << "\" stroke-width=\"" << width << "\"/>\n";
    }

    void polyline(const std::vector<std::pair<double, double>>& pts, const char* color) {
        body_ << "<polyline fill=\"none\" stroke=\"" << color
              << "\" stroke-width=\"1.6\" points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) body_ << ' ';
            body_ << fixed(pts[i].first) << ',' << fixed(pts[i].second);
        }
        body_ << "\"/>\n";
    }

    void legend(const std::vector<std::pair<std::string, const char*>>& entries) {
        double y = kTop + 8;
        for (const auto& [label, color] : entries) {
            body_ << "<rect x=\"" << kWidth - kRight - 180 << "\" y=\"" << fixed(y - 9)
                  << "\" width=\"12\" height=\"12\" fill=\"" << color << "\"/>\n"
                  << "<text x=\"" << kWidth - kRight - 162 << "\" y=\"" << fixed(y + 2)
                  << "\" font-family=\"monospace\" font-size=\"12\">" << xml_escape(label)
                  << "</text>\n";
            y += 18;
        }
    }

    void stamp(const std::string& config) {
        body_ << "<text x=\"8\" y=\"" << kHeight - 8
              << "\" font-family=\"monospace\" font-size=\"9\" fill=\"#555555\">"
              << xml_escape(config) << "</text>\n";
    }

    void save(const std::string& path) {
        body_ << "</svg>\n";
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + path);
        out << body_.str();
    }

private:
    std::ostringstream body_;
};

std::string config_stamp(const ExperimentReport& report) {
    std::string s = report.id + " " + report.parameters.dump();
    if (s.size() > 190) s = s.substr(0, 187) + "...";
    return s;
}

void emit_xy(const ExperimentReport& report, const PlotSpec& spec, bool loglog,
             const std::string& path) {
    if (report.rows.empty()) throw std::invalid_argument("empty report");
    const auto xs = report.column(spec.x_column);
    const auto ys = report.column(spec.y_column);

    std::vector<double> series_keys;
    std::vector<int> series_of(xs.size(), 0);
    if (!spec.series_column.empty()) {
        const auto sv = report.column(spec.series_column);
        for (std::size_t i = 0; i < sv.size(); ++i) {
            auto it = std::find(series_keys.begin(), series_keys.end(), sv[i]);
            if (it == series_keys.end()) {
                series_keys.push_back(sv[i]);
                series_of[i] = static_cast<int>(series_keys.size()) - 1;
            } else {
                series_of[i] = static_cast<int>(it - series_keys.begin());
            }
        }
    } else {
        series_keys.push_back(0.0);
    }

    Axis ax{0, 1, loglog}, ay{0, 1, loglog};
    bool any = false;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) continue;
        if (loglog && (xs[i] <= 0 || ys[i] <= 0)) continue;
        if (!any) {
            ax.lo = ax.hi = xs[i];
            ay.lo = ay.hi = ys[i];
            any = true;
        }
        ax.lo = std::min(ax.lo, xs[i]);
        ax.hi = std::max(ax.hi, xs[i]);
        ay.lo = std::min(ay.lo, ys[i]);
        ay.hi = std::max(ay.hi, ys[i]);
    }
    if (!any) throw std::invalid_argument("no finite data to plot");
    if (!loglog) {
        const double padx = 0.05 * (ax.hi - ax.lo + 1e-12);
        const double pady = 0.05 * (ay.hi - ay.lo + 1e-12);
        ax.lo -= padx; ax.hi += padx;
        ay.lo -= pady; ay.hi += pady;
    } else {
        ax.lo /= 1.15; ax.hi *= 1.15;
        ay.lo /= 1.15; ay.hi *= 1.15;
    }

    SvgCanvas canvas;
    canvas.open(report.id);
    canvas.axes(ax, ay, spec.x_column + (loglog ? " (log)" : ""),
                spec.y_column + (loglog ? " (log)" : ""));
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) continue;
        if (loglog && (xs[i] <= 0 || ys[i] <= 0)) continue;
        canvas.circle(ax.place(xs[i], kLeft, kWidth - kRight),
                      ay.place(ys[i], kHeight - kBottom, kTop),
                      kPalette[series_of[i] % 8]);
    }

    std::vector<std::pair<std::string, const char*>> legend;
    for (std::size_t s = 0; s < series_keys.size(); ++s) {
        const std::string label = spec.series_column.empty()
                                      ? spec.y_column
                                      : spec.series_column + "=" + format_double(series_keys[s]);
        legend.emplace_back(label, kPalette[s % 8]);
    }

    if (loglog && report.fits.contains("slope")) {
        const double slope = report.fits["slope"].get<double>();
        const double intercept = report.fits["intercept"].get<double>();
        // fitted line in natural-log space: ln y = intercept + slope ln x
        const double y1 = std::exp(intercept + slope * std::log(ax.lo * 1.15));
        const double y2 = std::exp(intercept + slope * std::log(ax.hi / 1.15));
        canvas.line(ax.place(ax.lo * 1.15, kLeft, kWidth - kRight),
                    ay.place(std::clamp(y1, ay.lo, ay.hi), kHeight - kBottom, kTop),
                    ax.place(ax.hi / 1.15, kLeft, kWidth - kRight),
                    ay.place(std::clamp(y2, ay.lo, ay.hi), kHeight - kBottom, kTop),
                    "#333333", 1.5);
        char label[64];
        std::snprintf(label, sizeof(label), "fit slope %.4f", slope);
        legend.emplace_back(label, "#333333");
    }
    canvas.legend(legend);
    canvas.stamp(config_stamp(report));
    canvas.save(path);
}

void emit_overlay(const ExperimentReport& report, const std::string& path) {
    if (!report.overlay || report.overlay->points.empty())
        throw std::invalid_argument("empty report");
    const auto& overlay = *report.overlay;
    const double extent = overlay.extent > 0 ? overlay.extent : 1.0;
    const double side = std::min(kWidth - kLeft - kRight, kHeight - kTop - kBottom);
    const auto px = [&](double x) { return kLeft + x / extent * side; };
    const auto py = [&](double y) { return kHeight - kBottom - y / extent * side; };

    SvgCanvas canvas;
    canvas.open(report.id);
    Axis ax{0, extent, false}, ay{0, extent, false};
    canvas.axes(ax, ay, "x", "y");
    for (const auto& pt : overlay.points) canvas.circle(px(pt[0]), py(pt[1]), kPalette[0]);
    if (overlay.polyline.size() >= 2) {
        std::vector<std::pair<double, double>> line;
        line.reserve(overlay.polyline.size());
        for (int idx : overlay.polyline)
            line.emplace_back(px(overlay.points[idx][0]), py(overlay.points[idx][1]));
        canvas.polyline(line, kPalette[1]);
    }
    canvas.legend({{"points", kPalette[0]}, {"highlighted path", kPalette[1]}});
    canvas.stamp(config_stamp(report));
    canvas.save(path);
}

}  // namespace

PlotKind plot_kind_from_name(const std::string& name) {
    if (name == "scatter") return PlotKind::Scatter;
    if (name == "loglog") return PlotKind::LogLog;
    if (name == "path-overlay") return PlotKind::PathOverlay;
    throw std::invalid_argument("unknown plot kind: " + name);
}

PlotSpec default_plot_spec(const ExperimentReport& report) {
    if (report.id == "scan-threshold") return {"p", "median_excess", "omega"};
    if (report.id == "fit-scaling") return {"grid_x", "tour_length", ""};
    if (report.id == "estimate-beta") return {"n", "ratio", ""};
    if (report.id == "continuity") return {"delta", "normalized_excess", ""};
    if (report.id == "concentration") return {"blocks", "count", ""};
    if (report.columns.size() >= 2) return {report.columns[0], report.columns[1], ""};
    throw std::invalid_argument("report has no plottable columns");
}

void emit_plot(const ExperimentReport& report, PlotKind kind, const PlotSpec& spec,
               const std::string& path) {
    switch (kind) {
        case PlotKind::Scatter: emit_xy(report, spec, false, path); return;
        case PlotKind::LogLog: emit_xy(report, spec, true, path); return;
        case PlotKind::PathOverlay: emit_overlay(report, path); return;
    }
}

void emit_plot(const ExperimentReport& report, PlotKind kind, const std::string& path) {
    if (kind == PlotKind::PathOverlay) {
        emit_overlay(report, path);
        return;
    }
    emit_plot(report, kind, default_plot_spec(report), path);
}

}  // namespace geotsp
