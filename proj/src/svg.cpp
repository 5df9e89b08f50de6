#include <planewidth/error.hpp>
#include <planewidth/svg.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace planewidth
{
    namespace
    {
        // Pixel coordinates to a thousandth of a pixel.
        auto px(double x) -> std::string
        {
            char buffer[32];
            std::snprintf(buffer, sizeof buffer, "%.3f", x);
            return buffer;
        }
    }

    auto render_svg(const Realization & r, const Graph * g) -> std::string
    {
        if (g && g->order() != r.points.size())
            throw ParameterError("graph and realization disagree on the vertex count");
        constexpr double scale = svg_pixels_per_unit;

        // Plane bounds, covering the unit circle and the scale bar below the points.
        double min_x = 0, max_x = 1, min_y = 0, max_y = 0;
        if (! r.points.empty()) {
            Point anchor = r.points[0];
            min_x = anchor.x - 1, max_x = anchor.x + 1, min_y = anchor.y - 1, max_y = anchor.y + 1;
        }
        for (auto p : r.points) {
            min_x = std::min(min_x, p.x), max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y), max_y = std::max(max_y, p.y);
        }
        const double bar_y = min_y - 0.25;
        min_y = bar_y - 0.15;
        max_x = std::max(max_x, min_x + 1);
        const double margin = 0.05 * std::max(max_x - min_x, max_y - min_y);
        min_x -= margin, max_x += margin, min_y -= margin, max_y += margin;

        // SVG y grows downward.
        auto sx = [&](double x) { return px((x - min_x) * scale); };
        auto sy = [&](double y) { return px((max_y - y) * scale); };
        const double w = (max_x - min_x) * scale, h = (max_y - min_y) * scale;

        std::ostringstream out;
        out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << px(w) << "\" height=\""
            << px(h) << "\" viewBox=\"0 0 " << px(w) << ' ' << px(h) << "\">\n"
            << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

        if (! r.points.empty())
            out << "  <circle cx=\"" << sx(r.points[0].x) << "\" cy=\"" << sy(r.points[0].y) << "\" r=\""
                << px(scale) << "\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"6 4\"/>\n"
                << "  <text x=\"" << sx(r.points[0].x + 0.72) << "\" y=\"" << sy(r.points[0].y + 0.72)
                << "\" font-size=\"11\" fill=\"#666\">unit distance</text>\n";

        if (g) {
            out << "  <g stroke=\"#1f4e8c\" stroke-width=\"1.2\">\n";
            for (auto [u, v] : g->edges())
                out << "    <line x1=\"" << sx(r.points[u].x) << "\" y1=\"" << sy(r.points[u].y) << "\" x2=\""
                    << sx(r.points[v].x) << "\" y2=\"" << sy(r.points[v].y) << "\"/>\n";
            out << "  </g>\n";
        }

        out << "  <g fill=\"#c0392b\">\n";
        for (std::size_t v = 0; v < r.points.size(); ++v)
            out << "    <circle cx=\"" << sx(r.points[v].x) << "\" cy=\"" << sy(r.points[v].y) << "\" r=\"4\"><title>" << v
                << "</title></circle>\n";
        out << "  </g>\n";

        const double bar_x = min_x + margin;
        out << "  <line x1=\"" << sx(bar_x) << "\" y1=\"" << sy(bar_y) << "\" x2=\"" << sx(bar_x + 1) << "\" y2=\""
            << sy(bar_y) << "\" stroke=\"black\" stroke-width=\"2\"/>\n"
            << "  <text x=\"" << sx(bar_x + 1.05) << "\" y=\"" << sy(bar_y - 0.04) << "\" font-size=\"11\">1</text>\n"
            << "</svg>\n";
        return out.str();
    }
}
