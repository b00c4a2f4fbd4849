#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "ballotope/rational.hpp"
#include "ballotope/sequence.hpp"
#include "ballotope/vertex.hpp"

namespace ballotope {

namespace detail {

inline std::string fmt2(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

struct PlotNode {
    double x;
    double y;
    std::string label;  // empty = no label
};

// Fixed 800x500 canvas, integer grid, path scaled to fit. The dashed
// horizontal marks the final height; optional dashed verticals bracket the
// two buffer steps added at each end of a padded vector.
inline std::string render_plot(const std::vector<PlotNode>& nodes, bool alpha_guides) {
    const double width = 800, height = 500, margin = 45;
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    if (!nodes.empty()) {
        xmin = xmax = nodes[0].x;
        ymin = ymax = nodes[0].y;
        for (const auto& p : nodes) {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
    }
    ymin = std::floor(ymin);
    ymax = std::ceil(ymax);
    if (xmax - xmin < 1) xmax = xmin + 1;
    if (ymax - ymin < 1) ymax = ymin + 1;
    const double sx = (width - 2 * margin) / (xmax - xmin);
    const double sy = (height - 2 * margin) / (ymax - ymin);
    auto X = [&](double x) { return margin + (x - xmin) * sx; };
    auto Y = [&](double y) { return height - margin - (y - ymin) * sy; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" "
           "viewBox=\"0 0 800 500\">\n";
    svg += "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n";

    for (int gx = static_cast<int>(std::ceil(xmin)); gx <= static_cast<int>(std::floor(xmax)); ++gx)
        svg += "<line x1=\"" + fmt2(X(gx)) + "\" y1=\"" + fmt2(Y(ymin)) + "\" x2=\"" + fmt2(X(gx)) +
               "\" y2=\"" + fmt2(Y(ymax)) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    for (int gy = static_cast<int>(ymin); gy <= static_cast<int>(ymax); ++gy)
        svg += "<line x1=\"" + fmt2(X(xmin)) + "\" y1=\"" + fmt2(Y(gy)) + "\" x2=\"" + fmt2(X(xmax)) +
               "\" y2=\"" + fmt2(Y(gy)) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";

    if (ymin <= 0 && 0 <= ymax)
        svg += "<line x1=\"" + fmt2(X(xmin)) + "\" y1=\"" + fmt2(Y(0)) + "\" x2=\"" + fmt2(X(xmax)) +
               "\" y2=\"" + fmt2(Y(0)) + "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    svg += "<line x1=\"" + fmt2(X(xmin)) + "\" y1=\"" + fmt2(Y(ymin)) + "\" x2=\"" + fmt2(X(xmin)) +
           "\" y2=\"" + fmt2(Y(ymax)) + "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

    if (!nodes.empty()) {
        const double top = nodes.back().y;
        svg += "<line x1=\"" + fmt2(X(xmin)) + "\" y1=\"" + fmt2(Y(top)) + "\" x2=\"" +
               fmt2(X(xmax)) + "\" y2=\"" + fmt2(Y(top)) +
               "\" stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";
    }
    if (alpha_guides && nodes.size() >= 5) {
        for (double gx : {2.0, nodes.back().x - 2.0})
            svg += "<line x1=\"" + fmt2(X(gx)) + "\" y1=\"" + fmt2(Y(ymin)) + "\" x2=\"" +
                   fmt2(X(gx)) + "\" y2=\"" + fmt2(Y(ymax)) +
                   "\" stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"4,4\"/>\n";
    }

    std::string points;
    for (const auto& p : nodes) {
        if (!points.empty()) points += " ";
        points += fmt2(X(p.x)) + "," + fmt2(Y(p.y));
    }
    svg += "<polyline points=\"" + points +
           "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2.5\"/>\n";

    for (const auto& p : nodes) {
        svg += "<circle cx=\"" + fmt2(X(p.x)) + "\" cy=\"" + fmt2(Y(p.y)) +
               "\" r=\"4\" fill=\"#1f4e9c\"/>\n";
        if (!p.label.empty())
            svg += "<text x=\"" + fmt2(X(p.x) + 7) + "\" y=\"" + fmt2(Y(p.y) - 7) +
                   "\" font-family=\"monospace\" font-size=\"13\">" + p.label + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace detail

inline std::string render_height_path(const HeightPath& path) {
    std::vector<detail::PlotNode> nodes;
    nodes.reserve(path.heights.size());
    for (size_t t = 0; t < path.heights.size(); ++t)
        nodes.push_back({static_cast<double>(t), static_cast<double>(path.heights[t]), ""});
    return detail::render_plot(nodes, false);
}

/// Node labels carry the exact rational value of the function at each
/// integer point.
inline std::string render_slope_path(const SlopePath& path, bool alpha_guides = false) {
    std::vector<detail::PlotNode> nodes;
    nodes.reserve(path.values.size());
    for (size_t t = 0; t < path.values.size(); ++t)
        nodes.push_back({static_cast<double>(t), to_double(path.values[t]),
                         t == 0 ? std::string() : rational_str(path.values[t])});
    return detail::render_plot(nodes, alpha_guides);
}

}  // namespace ballotope
