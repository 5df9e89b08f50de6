#include <planewidth/error.hpp>
#include <planewidth/realization.hpp>

#include <algorithm>
#include <cstdint>
#include <numbers>
#include <string>
#include <tuple>

namespace planewidth
{
    namespace
    {
        constexpr double pi = std::numbers::pi;

        auto edge_name(Edge e) -> std::string
        {
            return "{" + std::to_string(e.first) + ", " + std::to_string(e.second) + "}";
        }

        void require_size(const Graph & g, const Realization & r)
        {
            if (r.points.size() != g.order())
                throw ParameterError("realization has " + std::to_string(r.points.size()) + " points for " +
                    std::to_string(g.order()) + " vertices");
        }

        void require_valid(const Graph & g, const Realization & r, const char * what)
        {
            require_size(g, r);
            auto e = evaluate(g, r);
            if (! e.valid)
                throw PreconditionError(std::string(what) + " is not a valid realization: edge " + edge_name(*e.violating_edge) +
                    " has length " + std::to_string(e.min_edge_distance));
        }

        void require_euclidean(const Realization & r, const char * what)
        {
            if (! r.norm.is_euclidean())
                throw PreconditionError(std::string(what) + " must be a Euclidean plane realization");
        }

        auto regular_polygon(std::size_t sides, double circumradius) -> std::vector<Point>
        {
            std::vector<Point> pts;
            for (std::size_t k = 0; k < sides; ++k)
                pts.push_back(circumradius * unit_vector(pi / 2 + 2 * pi * static_cast<double>(k) / static_cast<double>(sides)));
            return pts;
        }
    }

    auto width(const Realization & r) -> double
    {
        return diameter(r.points, r.norm).value;
    }

    auto evaluate(const Graph & g, const Realization & r, double tol) -> Evaluation
    {
        require_size(g, r);
        validate(r.norm);
        for (auto p : r.points)
            if (! std::isfinite(p.x) || ! std::isfinite(p.y))
                throw ParameterError("realization has a non-finite coordinate");

        Evaluation result;
        result.width = width(r);
        std::optional<Edge> shortest;
        for (auto e : g.edges()) {
            double d = distance(r.points[e.first], r.points[e.second], r.norm);
            if (d < result.min_edge_distance) {
                result.min_edge_distance = d;
                shortest = e;
            }
        }
        result.valid = result.min_edge_distance >= 1 - tol;
        if (! result.valid)
            result.violating_edge = shortest;
        return result;
    }

    auto feasibilize(const Graph & g, const Realization & r) -> Realization
    {
        require_size(g, r);
        if (g.size() == 0)
            throw ParameterError("feasibilize needs a graph with at least one edge");
        auto shortest = [&](const Realization & x) {
            double m = std::numeric_limits<double>::infinity();
            for (auto [u, v] : g.edges())
                m = std::min(m, distance(x.points[u], x.points[v], x.norm));
            return m;
        };
        double m = shortest(r);
        if (m >= 1)
            return r;
        if (m == 0)
            throw InfeasibleError("an edge has coincident endpoints; no scaling can make it valid");

        Point centroid;
        for (auto p : r.points)
            centroid = centroid + p;
        centroid = (1.0 / static_cast<double>(r.points.size())) * centroid;

        Realization result = r;
        double scale = 1 / m;
        // Rounding can leave the shortest edge an ulp short; bump the factor until it is not.
        for (int attempt = 0; attempt < 64; ++attempt) {
            for (std::size_t i = 0; i < r.points.size(); ++i)
                result.points[i] = centroid + scale * (r.points[i] - centroid);
            double now = shortest(result);
            if (now >= 1)
                return result;
            scale = std::nextafter(scale / now, std::numeric_limits<double>::infinity());
        }
        throw InfeasibleError("could not scale the realization to unit edge length");
    }

    auto known_complete_arrangement(std::size_t n) -> Realization
    {
        Realization r;
        switch (n) {
            case 2: r.points = {{0, 0}, {1, 0}}; break;
            case 3: r.points = {{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}}; break;
            case 4: r.points = {{0, 0}, {1, 0}, {1, 1}, {0, 1}}; break;
            case 5: r.points = regular_polygon(5, 1 / (2 * std::sin(pi / 5))); break;
            case 6:
                r.points = regular_polygon(5, 1);
                r.points.push_back({0, 0});
                break;
            case 7:
                r.points = regular_polygon(6, 1);
                r.points.push_back({0, 0});
                break;
            case 8:
                // Only the heptagonal hull is pinned down; the circumcenter is 1/(2 sin(pi/7)) > 1 from every corner.
                r.points = regular_polygon(7, 1 / (2 * std::sin(pi / 7)));
                r.points.push_back({0, 0});
                break;
            default: throw ParameterError("no known arrangement for K_" + std::to_string(n) + " (need 2 <= n <= 8)");
        }
        return r;
    }

    auto lattice_complete_arrangement(std::size_t n) -> Realization
    {
        if (n < 1)
            throw ParameterError("lattice arrangement needs n >= 1");
        // Point a*(1,0) + b*(1/2, sqrt3/2) has squared length a^2 + ab + b^2, an integer.
        const auto reach = static_cast<std::int64_t>(std::ceil(std::sqrt(2.0 * static_cast<double>(n) / (std::sqrt(3.0) * pi)) * 1.2)) + 3;
        struct Candidate
        {
            std::int64_t norm;
            double angle;
            std::size_t index;
            Point p;
        };
        std::vector<Candidate> candidates;
        for (std::int64_t a = -2 * reach; a <= 2 * reach; ++a)
            for (std::int64_t b = -2 * reach; b <= 2 * reach; ++b) {
                auto norm = a * a + a * b + b * b;
                if (norm > reach * reach)
                    continue;
                Point p{static_cast<double>(a) + static_cast<double>(b) / 2, static_cast<double>(b) * std::sqrt(3.0) / 2};
                double angle = std::atan2(p.y, p.x);
                if (angle < 0)
                    angle += 2 * pi;
                candidates.push_back({norm, angle, candidates.size(), p});
            }
        if (candidates.size() < n)
            throw ConsistencyError("lattice enumeration radius too small");
        std::sort(candidates.begin(), candidates.end(), [](const Candidate & x, const Candidate & y) {
            return std::tie(x.norm, x.angle, x.index) < std::tie(y.norm, y.angle, y.index);
        });
        Realization r;
        for (std::size_t i = 0; i < n; ++i)
            r.points.push_back(candidates[i].p);
        return r;
    }

    auto from_coloring(const Graph & g, const Coloring & c) -> Realization
    {
        require_proper(g, c);
        Realization target;
        if (c.k <= 3)
            target = known_complete_arrangement(3);
        else if (c.k <= 8)
            target = known_complete_arrangement(c.k);
        else
            target = lattice_complete_arrangement(c.k);
        Realization r;
        for (auto color : c.colors)
            r.points.push_back(target.points[color]);
        return r;
    }

    auto from_circular(const Graph & g, std::span<const double> angles, double chi_c) -> Realization
    {
        if (! (chi_c >= 2))
            throw ParameterError("circular chromatic number must be >= 2");
        if (angles.size() != g.order())
            throw ParameterError("need one angle per vertex");
        const double required = 2 * pi / chi_c;
        for (auto e : g.edges()) {
            double gap = std::fmod(std::abs(angles[e.first] - angles[e.second]), 2 * pi);
            gap = std::min(gap, 2 * pi - gap);
            if (gap < required * (1 - 1e-12))
                throw CertificateError("circular coloring violated on edge " + edge_name(e) + ": angular gap " +
                    std::to_string(gap) + " < " + std::to_string(required));
        }
        const double radius = 1 / (2 * std::sin(pi / chi_c));
        Realization r;
        for (auto angle : angles)
            r.points.push_back(radius * unit_vector(angle));
        return r;
    }

    auto circulant_angles(unsigned p) -> std::vector<double>
    {
        std::vector<double> angles;
        for (unsigned i = 0; i < p; ++i)
            angles.push_back(2 * pi * i / p);
        return angles;
    }

    auto star_arrangement(unsigned n, double epsilon) -> Realization
    {
        const unsigned count = 6 * n + 1;
        const double radius = (2 + epsilon) / 2;
        Realization r;
        for (unsigned i = 0; i < count; ++i)
            r.points.push_back(radius * unit_vector(2 * pi * i / count));
        r.points.push_back({0, 0});
        return r;
    }

    auto pullback(const Homomorphism & phi, const Realization & target) -> Realization
    {
        if (! verify_homomorphism(phi))
            throw CertificateError("map is not a homomorphism");
        require_size(phi.target, target);
        Realization r{{}, target.norm};
        for (auto image : phi.map)
            r.points.push_back(target.points[image]);
        return r;
    }

    auto transformed(const Realization & r, double angle, Point shift) -> Realization
    {
        Realization out{{}, r.norm};
        for (auto p : r.points)
            out.points.push_back(rotate(p, angle) + shift);
        return out;
    }

    namespace
    {
        // Rigidly moves r so its diametral pair (a, b) lies on the x-axis with a at `anchor`
        // and b further out in the direction `outward` (+1 or -1).
        auto place_on_axis(const Realization & r, double anchor, double outward) -> std::vector<Point>
        {
            auto diam = diameter(r.points);
            std::vector<Point> out;
            if (diam.value == 0) {
                out.assign(r.points.size(), Point{anchor, 0});
                return out;
            }
            Point a = r.points[diam.first], b = r.points[diam.second];
            double current = std::atan2(b.y - a.y, b.x - a.x);
            double wanted = outward > 0 ? 0.0 : pi;
            for (auto p : r.points)
                out.push_back(rotate(p - a, wanted - current) + Point{anchor, 0});
            return out;
        }
    }

    auto join_realization(const Graph & g, const Graph & h, const Realization & rg, const Realization & rh) -> Realization
    {
        require_valid(g, rg, "first realization");
        require_valid(h, rh, "second realization");
        require_euclidean(rg, "join input");
        require_euclidean(rh, "join input");

        auto left = place_on_axis(rg, -0.5, -1);
        auto right = place_on_axis(rh, 0.5, +1);

        double shift = 0;
        for (int attempt = 0; attempt < 8; ++attempt) {
            double closest = std::numeric_limits<double>::infinity();
            for (auto p : left)
                for (auto q : right)
                    closest = std::min(closest, distance(p, q + Point{shift, 0}));
            if (left.empty() || right.empty() || closest >= 1)
                break;
            shift += (1 - closest) + default_tolerance;
        }

        Realization r;
        r.points = std::move(left);
        for (auto q : right)
            r.points.push_back(q + Point{shift, 0});
        return r;
    }

    auto product_realization(const Graph & g, const Graph & h, const Realization & rg, const Realization & rh) -> Realization
    {
        require_valid(g, rg, "first realization");
        require_valid(h, rh, "second realization");
        if (rg.norm != rh.norm)
            throw PreconditionError("product inputs must share a norm");
        Realization r{{}, rg.norm};
        for (auto p : rg.points)
            for (auto q : rh.points)
                r.points.push_back(p + q);
        return r;
    }

    auto union_realization(const Graph & g, const Graph & h, const Realization & rg, const Realization & rh) -> Realization
    {
        require_valid(g, rg, "first realization");
        require_valid(h, rh, "second realization");
        require_euclidean(rg, "union input");
        require_euclidean(rh, "union input");

        Realization r;
        if (! rg.points.empty()) {
            auto hg = pal_hexagon(rg.points);
            for (auto p : rg.points)
                r.points.push_back(p - hg.center);
            if (! rh.points.empty()) {
                auto hh = pal_hexagon(rh.points);
                for (auto q : rh.points)
                    r.points.push_back(rotate(q - hh.center, hg.orientation - hh.orientation));
            }
        }
        else
            r.points = rh.points;
        return r;
    }

    auto low_dim_realization(const Graph & g, const Coloring & c, LowDimMode mode) -> Realization
    {
        require_proper(g, c);
        Realization r;
        if (mode == LowDimMode::line) {
            r.norm = NormSpec::line();
            for (auto color : c.colors)
                r.points.push_back({static_cast<double>(color), 0});
            return r;
        }
        unsigned side = 1;
        while (side * side < c.k)
            ++side;
        r.norm = NormSpec::chebyshev();
        for (auto color : c.colors)
            r.points.push_back({static_cast<double>(color % side), static_cast<double>(color / side)});
        return r;
    }
}
