#include "mixtype/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace mixtype {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace

void write_svg_plot(const std::string& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<PlotSeries>& series) {
    const double width = 760, height = 480;
    const double ml = 70, mr = 20, mt = 40, mb = 50;

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series) {
        for (double v : s.x) {
            xmin = std::min(xmin, v);
            xmax = std::max(xmax, v);
        }
        for (double v : s.y) {
            if (!std::isfinite(v))
                continue;
            ymin = std::min(ymin, v);
            ymax = std::max(ymax, v);
        }
    }
    if (!std::isfinite(xmin) || !std::isfinite(ymin)) {
        xmin = 0;
        xmax = 1;
        ymin = 0;
        ymax = 1;
    }
    if (xmax - xmin < 1e-30)
        xmax = xmin + 1;
    if (ymax - ymin < 1e-30)
        ymax = ymin + 1;

    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (width - ml - mr); };
    auto py = [&](double y) { return height - mb - (y - ymin) / (ymax - ymin) * (height - mt - mb); };

    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\" "
        << "font-family=\"sans-serif\">" << title << "</text>\n";

    // axes
    out << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr
        << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << height - mb << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double xv = xmin + (xmax - xmin) * i / 5;
        const double yv = ymin + (ymax - ymin) * i / 5;
        out << "<line x1=\"" << px(xv) << "\" y1=\"" << height - mb << "\" x2=\"" << px(xv)
            << "\" y2=\"" << height - mb + 5 << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << px(xv) << "\" y=\"" << height - mb + 20
            << "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">" << num(xv)
            << "</text>\n";
        out << "<line x1=\"" << ml - 5 << "\" y1=\"" << py(yv) << "\" x2=\"" << ml << "\" y2=\""
            << py(yv) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << ml - 8 << "\" y=\"" << py(yv) + 4
            << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">" << num(yv)
            << "</text>\n";
    }
    out << "<text x=\"" << (ml + width - mr) / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\">" << x_label
        << "</text>\n";
    out << "<text x=\"16\" y=\"" << (mt + height - mb) / 2
        << "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\" "
        << "transform=\"rotate(-90 16 " << (mt + height - mb) / 2 << ")\">" << y_label
        << "</text>\n";

    double legend_y = mt + 8;
    for (const auto& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\"";
        if (s.dashed)
            out << " stroke-dasharray=\"6,4\"";
        out << " points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.y[i]))
                continue;
            out << num(px(s.x[i])) << "," << num(py(s.y[i])) << " ";
        }
        out << "\"/>\n";
        if (!s.label.empty()) {
            out << "<line x1=\"" << width - mr - 150 << "\" y1=\"" << legend_y << "\" x2=\""
                << width - mr - 120 << "\" y2=\"" << legend_y << "\" stroke=\"" << s.color
                << "\" stroke-width=\"1.5\"" << (s.dashed ? " stroke-dasharray=\"6,4\"" : "")
                << "/>\n";
            out << "<text x=\"" << width - mr - 114 << "\" y=\"" << legend_y + 4
                << "\" font-size=\"11\" font-family=\"sans-serif\">" << s.label << "</text>\n";
            legend_y += 16;
        }
    }
    out << "</svg>\n";
}

} // namespace mixtype
