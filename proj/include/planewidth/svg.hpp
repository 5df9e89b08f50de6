#pragma once

#include <planewidth/graph.hpp>
#include <planewidth/realization.hpp>

#include <string>

namespace planewidth
{
    inline constexpr double svg_pixels_per_unit = 100;

    // SVG 1.1 scatter of the arrangement: edges as segments when a graph is given, a dashed
    // unit circle about vertex 0, and a 1-unit scale bar. Dimension-1 points sit on y = 0.
    [[nodiscard]] auto render_svg(const Realization & r, const Graph * g = nullptr) -> std::string;
}
