#ifndef FISHSWARM_SVG_HPP
#define FISHSWARM_SVG_HPP

#include <string>
#include <vector>

namespace fishswarm {

/// One plotted line: y values indexed by iteration.
struct TraceSeries {
    std::string label;
    std::vector<double> values;
};

/// Standalone SVG line chart: iteration on x, best fitness on y, one
/// polyline and one legend entry per series. With log_scale the y axis is
/// log10 and non-positive values are drawn at the declared floor of 1e-320,
/// with the affected legend entries marked "(floored)". A flat series is a
/// valid flat line, not an error.
void render_convergence_svg(const std::vector<TraceSeries>& series,
                            const std::string& path, bool log_scale);

} // namespace fishswarm

#endif // FISHSWARM_SVG_HPP
