#include "fishswarm/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fishswarm {

namespace {

// Declared floor for non-positive values on the log axis.
constexpr double kLogFloor = 1e-320;

constexpr int kWidth = 880;
constexpr int kHeight = 520;
constexpr int kMarginLeft = 80;
constexpr int kMarginRight = 180; // legend column
constexpr int kMarginTop = 24;
constexpr int kMarginBottom = 48;

const char* series_color(std::size_t index) {
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#ff7f0e", "#9467bd", "#8c564b",
                                    "#17becf", "#e377c2"};
    return palette[index % (sizeof(palette) / sizeof(palette[0]))];
}

std::string fmt_tick(double v) {
    std::ostringstream out;
    out.precision(4);
    out << v;
    return out.str();
}

} // namespace

void render_convergence_svg(const std::vector<TraceSeries>& series,
                            const std::string& path, bool log_scale) {
    if (series.empty()) {
        throw std::invalid_argument("render_convergence_svg: no series");
    }
    std::size_t max_len = 0;
    for (const auto& s : series) {
        max_len = std::max(max_len, s.values.size());
    }
    if (max_len == 0) {
        throw std::invalid_argument("render_convergence_svg: empty series");
    }

    const auto transform = [log_scale](double v) {
        if (!log_scale) return v;
        return std::log10(std::max(v, kLogFloor));
    };

    std::vector<bool> floored(series.size(), false);
    double y_min = std::numeric_limits<double>::infinity();
    double y_max = -std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < series.size(); ++s) {
        for (double v : series[s].values) {
            if (log_scale && v <= kLogFloor) floored[s] = true;
            const double t = transform(v);
            y_min = std::min(y_min, t);
            y_max = std::max(y_max, t);
        }
    }
    if (y_min == y_max) { // flat data still gets a visible band
        y_min -= 1.0;
        y_max += 1.0;
    }

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    const double x_max = static_cast<double>(max_len > 1 ? max_len - 1 : 1);

    const auto px = [&](double iteration) {
        return kMarginLeft + plot_w * (iteration / x_max);
    };
    const auto py = [&](double value) {
        return kMarginTop + plot_h * (1.0 - (value - y_min) / (y_max - y_min));
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
        << kHeight << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axes
    svg << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop + plot_h
        << "\" x2=\"" << kMarginLeft + plot_w << "\" y2=\"" << kMarginTop + plot_h
        << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\""
        << kMarginLeft << "\" y2=\"" << kMarginTop + plot_h
        << "\" stroke=\"black\"/>\n";

    const int ticks = 5;
    for (int t = 0; t <= ticks; ++t) {
        const double frac = static_cast<double>(t) / ticks;
        const double x = kMarginLeft + plot_w * frac;
        const double iteration = x_max * frac;
        svg << "<line x1=\"" << x << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\""
            << x << "\" y2=\"" << kMarginTop + plot_h + 5 << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << x << "\" y=\"" << kMarginTop + plot_h + 20
            << "\" font-size=\"11\" text-anchor=\"middle\">" << fmt_tick(iteration)
            << "</text>\n";

        const double y = kMarginTop + plot_h * (1.0 - frac);
        const double value = y_min + (y_max - y_min) * frac;
        svg << "<line x1=\"" << kMarginLeft - 5 << "\" y1=\"" << y << "\" x2=\""
            << kMarginLeft << "\" y2=\"" << y << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << kMarginLeft - 8 << "\" y=\"" << y + 4
            << "\" font-size=\"11\" text-anchor=\"end\">" << fmt_tick(value)
            << "</text>\n";
    }
    svg << "<text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\"" << kHeight - 10
        << "\" font-size=\"12\" text-anchor=\"middle\">iteration</text>\n";
    svg << "<text x=\"18\" y=\"" << kMarginTop + plot_h / 2
        << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << kMarginTop + plot_h / 2 << ")\">"
        << (log_scale ? "log10(best fitness)" : "best fitness") << "</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        if (series[s].values.empty()) continue;
        svg << "<polyline fill=\"none\" stroke=\"" << series_color(s)
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < series[s].values.size(); ++i) {
            if (i) svg << ' ';
            svg << px(static_cast<double>(i)) << ',' << py(transform(series[s].values[i]));
        }
        svg << "\"/>\n";
    }

    // legend
    const double legend_x = kMarginLeft + plot_w + 14;
    for (std::size_t s = 0; s < series.size(); ++s) {
        const double y = kMarginTop + 14 + 18.0 * static_cast<double>(s);
        svg << "<line x1=\"" << legend_x << "\" y1=\"" << y << "\" x2=\""
            << legend_x + 22 << "\" y2=\"" << y << "\" stroke=\"" << series_color(s)
            << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << legend_x + 28 << "\" y=\"" << y + 4
            << "\" font-size=\"11\">" << series[s].label
            << (floored[s] ? " (floored)" : "") << "</text>\n";
    }
    svg << "</svg>\n";

    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out << svg.str();
    out.flush();
    if (!out) {
        throw std::runtime_error("write failed for '" + path + "'");
    }
}

} // namespace fishswarm
