#pragma once

#include <string>
#include <vector>

namespace mixtype {

/// Minimal line-plot emitter (no plotting dependency): one or more polylines
/// on linear axes with tick labels. Callers pass already-transformed data
/// (log10 for decay plots).
struct PlotSeries {
    std::string label;
    std::string color = "#1f6fb2";
    bool dashed = false;
    std::vector<double> x, y;
};

void write_svg_plot(const std::string& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<PlotSeries>& series);

} // namespace mixtype
