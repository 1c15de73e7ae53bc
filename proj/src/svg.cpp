#include "ucc/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

namespace ucc {

namespace {

constexpr std::array<const char*, 6> kPalette = {"#1f77b4", "#d62728", "#2ca02c",
                                                 "#9467bd", "#ff7f0e", "#8c564b"};

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

struct Frame {
    double ml = 64, mt = 40, mr = 18, mb = 50;
    double width, height, x_range, y_range;

    double tx(double x) const { return ml + x / x_range * (width - ml - mr); }
    double ty(double y) const { return height - mb - y / y_range * (height - mt - mb); }
};

}  // namespace

std::string render_svg(const std::vector<UccCurve>& curves, const PlotOptions& options) {
    Frame f;
    f.width = options.width;
    f.height = options.height;

    double max_x = 0.0, max_y = 0.0;
    for (const auto& c : curves) {
        for (const auto& p : c.points) {
            max_x = std::max(max_x, p.x);
            max_y = std::max(max_y, p.y);
        }
    }
    f.x_range = max_x > 0.0 ? 1.04 * max_x : 1.0;
    f.y_range = max_y > 0.0 ? 1.04 * max_y : 1.0;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width
        << "\" height=\"" << options.height << "\" viewBox=\"0 0 " << options.width << " "
        << options.height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axes box and ticks
    svg << "<g stroke=\"#333\" stroke-width=\"1\" fill=\"none\">\n";
    svg << "<path d=\"M " << px(f.ml) << " " << px(f.mt) << " V " << px(f.height - f.mb)
        << " H " << px(f.width - f.mr) << "\"/>\n";
    svg << "</g>\n";
    svg << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
    for (int i = 0; i <= 5; ++i) {
        const double vx = f.x_range * i / 5.0;
        const double vy = f.y_range * i / 5.0;
        svg << "<line x1=\"" << px(f.tx(vx)) << "\" y1=\"" << px(f.height - f.mb) << "\" x2=\""
            << px(f.tx(vx)) << "\" y2=\"" << px(f.height - f.mb + 4)
            << "\" stroke=\"#333\"/>\n";
        svg << "<text x=\"" << px(f.tx(vx)) << "\" y=\"" << px(f.height - f.mb + 16)
            << "\" text-anchor=\"middle\">" << tick_label(vx) << "</text>\n";
        svg << "<line x1=\"" << px(f.ml - 4) << "\" y1=\"" << px(f.ty(vy)) << "\" x2=\""
            << px(f.ml) << "\" y2=\"" << px(f.ty(vy)) << "\" stroke=\"#333\"/>\n";
        svg << "<text x=\"" << px(f.ml - 7) << "\" y=\"" << px(f.ty(vy) + 4)
            << "\" text-anchor=\"end\">" << tick_label(vy) << "</text>\n";
    }
    svg << "</g>\n";

    // axis titles
    const std::string x_title = curves.empty() ? "x"
                                : options.x_unit.empty()
                                    ? std::string(curves.front().axes.x_name())
                                    : std::string(curves.front().axes.x_name()) + " (" +
                                          options.x_unit + ")";
    const std::string y_title = curves.empty() ? "y" : curves.front().axes.y_name();
    svg << "<g font-family=\"sans-serif\" font-size=\"13\" fill=\"#111\">\n";
    svg << "<text x=\"" << px((f.ml + f.width - f.mr) / 2.0) << "\" y=\""
        << px(f.height - 10) << "\" text-anchor=\"middle\">" << x_title << "</text>\n";
    svg << "<text x=\"14\" y=\"" << px((f.mt + f.height - f.mb) / 2.0)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
        << px((f.mt + f.height - f.mb) / 2.0) << ")\">" << y_title << "</text>\n";
    if (!options.title.empty()) {
        svg << "<text x=\"" << px(f.width / 2.0)
            << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << options.title
            << "</text>\n";
    }
    svg << "</g>\n";

    // miss-rate curves are staircases (horizontal to the next x, vertical to
    // its y); deficit curves are piecewise linear, drawn through their path
    for (std::size_t c = 0; c < curves.size(); ++c) {
        const bool staircase = curves[c].axes.y == YMetric::miss_rate;
        const auto& pts = staircase || curves[c].path.empty() ? curves[c].points
                                                              : curves[c].path;
        if (pts.empty()) continue;
        std::ostringstream d;
        d << "M " << px(f.tx(pts[0].x)) << " " << px(f.ty(pts[0].y));
        for (std::size_t j = 1; j < pts.size(); ++j) {
            if (staircase) {
                d << " H " << px(f.tx(pts[j].x)) << " V " << px(f.ty(pts[j].y));
            } else {
                d << " L " << px(f.tx(pts[j].x)) << " " << px(f.ty(pts[j].y));
            }
        }
        svg << "<path d=\"" << d.str() << "\" fill=\"none\" stroke=\""
            << kPalette[c % kPalette.size()] << "\" stroke-width=\"1.8\"/>\n";
    }

    // isocost line and optimal marker for the lead curve
    if (options.cost_c && !curves.empty()) {
        const double c = *options.cost_c;
        const auto opt = optimal_operating_point(curves.front(), c);
        if (c >= 1.0) {
            svg << "<line x1=\"" << px(f.tx(opt.point.x)) << "\" y1=\"" << px(f.mt)
                << "\" x2=\"" << px(f.tx(opt.point.x)) << "\" y2=\"" << px(f.height - f.mb)
                << "\" stroke=\"#999\" stroke-dasharray=\"5 4\"/>\n";
        } else {
            const double slope = -c / (1.0 - c);
            // clip the line through the optimal point to the data box
            double t0 = 0.0, t1 = 1.0;
            const double xa = 0.0, xb = f.x_range;
            const double ya = opt.point.y + slope * (xa - opt.point.x);
            const double yb = opt.point.y + slope * (xb - opt.point.x);
            const double dy = yb - ya;
            if (dy != 0.0) {
                double ta = (0.0 - ya) / dy;
                double tb = (f.y_range - ya) / dy;
                if (ta > tb) std::swap(ta, tb);
                t0 = std::max(t0, ta);
                t1 = std::min(t1, tb);
            }
            if (t0 < t1) {
                const double lx0 = xa + t0 * (xb - xa), ly0 = ya + t0 * dy;
                const double lx1 = xa + t1 * (xb - xa), ly1 = ya + t1 * dy;
                svg << "<line x1=\"" << px(f.tx(lx0)) << "\" y1=\"" << px(f.ty(ly0))
                    << "\" x2=\"" << px(f.tx(lx1)) << "\" y2=\"" << px(f.ty(ly1))
                    << "\" stroke=\"#999\" stroke-dasharray=\"5 4\"/>\n";
            }
        }
        svg << "<circle cx=\"" << px(f.tx(opt.point.x)) << "\" cy=\"" << px(f.ty(opt.point.y))
            << "\" r=\"4\" fill=\"none\" stroke=\"#111\" stroke-width=\"1.5\"/>\n";
    }

    // legend
    svg << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#111\">\n";
    for (std::size_t c = 0; c < curves.size(); ++c) {
        const double ly = f.mt + 14.0 + 18.0 * static_cast<double>(c);
        const double lx = f.width - f.mr - 150.0;
        std::string label = curves[c].model_label.empty()
                                ? "curve " + std::to_string(c + 1)
                                : curves[c].model_label;
        svg << "<line x1=\"" << px(lx) << "\" y1=\"" << px(ly - 4) << "\" x2=\"" << px(lx + 22)
            << "\" y2=\"" << px(ly - 4) << "\" stroke=\"" << kPalette[c % kPalette.size()]
            << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << px(lx + 28) << "\" y=\"" << px(ly) << "\">" << label
            << "</text>\n";
    }
    svg << "</g>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace ucc
