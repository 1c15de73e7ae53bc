#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ucc/curve.hpp"

namespace ucc {

struct PlotOptions {
    int width = 760;
    int height = 520;
    std::string title;
    /// When set, draws the isocost line with slope -c/(1-c) through the first
    /// curve's optimal operating point and marks that point.
    std::optional<double> cost_c;
    std::string x_unit;  // appended to the x-axis label, e.g. "std units"
};

/// Deterministic standalone SVG: staircase per curve (left-continuous, matching
/// the step-area semantics), axes with ticks, legend, optional isocost overlay.
/// Same inputs give byte-identical output.
std::string render_svg(const std::vector<UccCurve>& curves, const PlotOptions& options);

}  // namespace ucc
