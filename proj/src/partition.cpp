#include <planewidth/error.hpp>
#include <planewidth/partition.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

namespace planewidth
{
    namespace
    {
        constexpr double pi = std::numbers::pi;

        // Angles this close to a sector boundary are treated as lying on it.
        constexpr double boundary_snap = 1e-12;

        // Index of the half-open sector [start + i*w, start + (i+1)*w) holding p, w = 2pi/count.
        auto sector_of(Point p, Point center, double start, unsigned count) -> unsigned
        {
            double angle = std::atan2(p.y - center.y, p.x - center.x) - start;
            angle = std::fmod(angle, 2 * pi);
            if (angle < 0)
                angle += 2 * pi;
            const double w = 2 * pi / count;
            auto index = static_cast<unsigned>(std::floor(angle / w));
            if ((index + 1) * w - angle < boundary_snap)
                ++index;
            return index % count;
        }
    }

    auto parse_scheme(unsigned k) -> Scheme
    {
        switch (k) {
            case 3: return Scheme::three;
            case 4: return Scheme::four;
            case 7: return Scheme::seven;
            default: throw ParameterError("partition scheme must be 3, 4 or 7, got " + std::to_string(k));
        }
    }

    auto scheme_delta(Scheme s) -> double
    {
        switch (s) {
            case Scheme::three: return std::sqrt(3.0) / 2;
            case Scheme::four: return std::sqrt(2.0) / 2;
            case Scheme::seven: return 0.5;
        }
        return 0;
    }

    auto scheme_threshold(Scheme s) -> double
    {
        switch (s) {
            case Scheme::three: return 2 / std::sqrt(3.0);
            case Scheme::four: return std::sqrt(2.0);
            case Scheme::seven: return 2;
        }
        return 0;
    }

    auto HexSectorPartition::region_of(Point p) const -> unsigned
    {
        if (p == hull_.center)
            return 0;
        return sector_of(p, hull_.center, hull_.orientation, 3);
    }

    SquareQuadrantPartition::SquareQuadrantPartition(std::span<const Point> points)
    {
        if (points.empty())
            return;
        double min_x = points[0].x, max_x = min_x, min_y = points[0].y, max_y = min_y;
        for (auto p : points) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
        origin_ = {min_x, min_y};
        side_ = std::max({1.0, max_x - min_x, max_y - min_y});

        // Corners in lexicographic order; at most one end of each diagonal can hold a point.
        const std::array<std::pair<bool, bool>, 4> corners{{{false, false}, {false, true}, {true, false}, {true, true}}};
        for (auto [fx, fy] : corners) {
            Point corner{fx ? origin_.x + side_ : origin_.x, fy ? origin_.y + side_ : origin_.y};
            if (std::none_of(points.begin(), points.end(), [&](Point p) { return p == corner; })) {
                flip_x_ = fx;
                flip_y_ = fy;
                return;
            }
        }
        throw PreconditionError("every corner of the bounding square holds a point; the set is wider than 1");
    }

    auto SquareQuadrantPartition::to_unit_square(Point p) const -> Point
    {
        double u = (p.x - origin_.x) / side_, v = (p.y - origin_.y) / side_;
        if (flip_x_)
            u = 1 - u;
        if (flip_y_)
            v = 1 - v;
        return {std::clamp(u, 0.0, 1.0), std::clamp(v, 0.0, 1.0)};
    }

    auto SquareQuadrantPartition::region_of(Point p) const -> unsigned
    {
        auto [u, v] = to_unit_square(p);
        auto at = [&](double x, double y) { return u == x && v == y; };
        if (u <= 0.5 && v >= 0.5 && ! at(0, 0.5) && ! at(0.5, 0.5))
            return 0;
        if (u >= 0.5 && v >= 0.5 && ! at(0.5, 0.5) && ! at(0.5, 1))
            return 1;
        if (u <= 0.5 && v <= 0.5 && ! at(0, 0) && ! at(0.5, 0))
            return 2;
        if (u >= 0.5 && v <= 0.5 && ! at(0.5, 0.5) && ! at(1, 0.5))
            return 3;
        // Only the point-free corner (0,0) reaches here.
        return 2;
    }

    HexCoreRimPartition::HexCoreRimPartition(Hexagon hull) :
        hull_(hull)
    {
        // q_i sits (sqrt3 - 1)/2 * width in from the side midpoint m_i, toward the center.
        const double inner = hull.apothem() - (std::sqrt(3.0) - 1) / 2 * hull.width;
        for (int i = 0; i < 6; ++i)
            core_[static_cast<std::size_t>(i)] = hull.center + inner * hull.normal(i);
    }

    auto HexCoreRimPartition::region_of(Point p) const -> unsigned
    {
        bool on_corner = std::find(core_.begin(), core_.end(), p) != core_.end();
        if (! on_corner) {
            bool inside = true;
            for (int i = 0; i < 6 && inside; ++i) {
                Point a = core_corner(i), b = core_corner(i + 1);
                inside = cross(b - a, p - a) >= 0;
            }
            if (inside)
                return 0;
        }
        return 1 + sector_of(p, hull_.center, hull_.orientation, 6);
    }

    auto partition_unit(std::span<const Point> points, Scheme s) -> std::vector<unsigned>
    {
        std::vector<unsigned> labels(points.size(), 0);
        if (points.empty())
            return labels;
        double diam = diameter(points).value;
        if (diam > 1 + default_tolerance)
            throw PreconditionError("partition needs diameter <= 1, got " + std::to_string(diam));
        if (diam == 0)
            return labels;

        auto label_all = [&](const auto & partition) {
            for (std::size_t i = 0; i < points.size(); ++i)
                labels[i] = partition.region_of(points[i]);
        };
        switch (s) {
            case Scheme::three: label_all(HexSectorPartition(pal_hexagon(points))); break;
            case Scheme::four: label_all(SquareQuadrantPartition(points)); break;
            case Scheme::seven: label_all(HexCoreRimPartition(pal_hexagon(points))); break;
        }
        return labels;
    }

    auto extract_coloring(const Graph & g, const Realization & r, Scheme s) -> Coloring
    {
        auto eval = evaluate(g, r);
        if (! eval.valid)
            throw PreconditionError("realization is not valid");
        if (! r.norm.is_euclidean())
            throw PreconditionError("coloring extraction needs a Euclidean plane realization");
        const double threshold = scheme_threshold(s);
        if (eval.width > threshold + 1e-12)
            throw PreconditionError("width " + std::to_string(eval.width) + " exceeds the scheme-" +
                std::to_string(static_cast<unsigned>(s)) + " threshold " + std::to_string(threshold));
        if (eval.width == 0)
            return Coloring{std::vector<unsigned>(g.order(), 0), g.order() ? 1u : 0u};

        std::vector<Point> scaled;
        for (auto p : r.points)
            scaled.push_back((1 / eval.width) * p);
        auto coloring = compact(Coloring::from_colors(partition_unit(scaled, s)));
        if (auto e = monochromatic_edge(g, coloring))
            throw ConsistencyError("extracted coloring has monochromatic edge {" + std::to_string(e->first) + ", " +
                std::to_string(e->second) + "}");
        return coloring;
    }

    HexTiling::HexTiling(Hexagon hull, unsigned t) :
        hull_(hull),
        t_(t),
        side_(hull.width / (3.0 * t))
    {
        const double spacing = side_ * std::sqrt(3.0);
        // Lattice directions point at the corners of the enclosing hexagon, t steps out.
        e1_ = spacing * unit_vector(hull.orientation + pi / 6);
        e2_ = spacing * unit_vector(hull.orientation + pi / 2);
        const int reach = static_cast<int>(t);
        unsigned next = 0;
        for (int a = -reach; a <= reach; ++a)
            for (int b = -reach; b <= reach; ++b)
                if (std::abs(a + b) <= reach)
                    index_[{a, b}] = next++;
    }

    auto HexTiling::cell_center(std::pair<int, int> axial) const -> Point
    {
        return hull_.center + static_cast<double>(axial.first) * e1_ + static_cast<double>(axial.second) * e2_;
    }

    auto HexTiling::cell_of(Point p) const -> std::pair<int, int>
    {
        Point rel = p - hull_.center;
        double det = cross(e1_, e2_);
        double a = cross(rel, e2_) / det, b = cross(e1_, rel) / det, c = -a - b;
        double ra = std::round(a), rb = std::round(b), rc = std::round(c);
        double da = std::abs(ra - a), db = std::abs(rb - b), dc = std::abs(rc - c);
        if (da > db && da > dc)
            ra = -rb - rc;
        else if (db > dc)
            rb = -ra - rc;
        return {static_cast<int>(ra), static_cast<int>(rb)};
    }

    auto HexTiling::region_of(Point p) const -> std::optional<unsigned>
    {
        auto it = index_.find(cell_of(p));
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    auto tiling_steps(double width) -> unsigned
    {
        return static_cast<unsigned>(std::floor(2 * width / 3)) + 1;
    }

    auto tiling_color_bound(unsigned t) -> unsigned
    {
        return 3 * t * t + 3 * t + 1;
    }

    auto tiling_coloring(const Graph & g, const Realization & r) -> Coloring
    {
        auto eval = evaluate(g, r);
        if (! eval.valid)
            throw PreconditionError("realization is not valid");
        if (! r.norm.is_euclidean())
            throw PreconditionError("tiling coloring needs a Euclidean plane realization");
        if (! (eval.width > 0))
            throw PreconditionError("tiling coloring needs positive width");

        HexTiling tiling(pal_hexagon(r.points), tiling_steps(eval.width));
        std::vector<unsigned> cells;
        for (std::size_t v = 0; v < r.points.size(); ++v) {
            auto cell = tiling.region_of(r.points[v]);
            if (! cell)
                throw ConsistencyError("vertex " + std::to_string(v) + " lies outside the designated tiling cells");
            cells.push_back(*cell);
        }
        std::set<unsigned> used(cells.begin(), cells.end());
        std::vector<unsigned> rank(tiling.cell_count(), 0);
        unsigned next = 0;
        for (auto c : used)
            rank[c] = next++;
        Coloring coloring{{}, next};
        for (auto c : cells)
            coloring.colors.push_back(rank[c]);
        if (auto e = monochromatic_edge(g, coloring))
            throw ConsistencyError("tiling coloring has monochromatic edge {" + std::to_string(e->first) + ", " +
                std::to_string(e->second) + "}");
        return coloring;
    }
}
