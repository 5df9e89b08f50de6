#include <planewidth/error.hpp>
#include <planewidth/geometry.hpp>

#include <algorithm>
#include <numbers>
#include <numeric>
#include <string>

namespace planewidth
{
    void validate(const NormSpec & norm)
    {
        if (! (norm.p >= 1))
            throw ParameterError("norm exponent must be >= 1, got " + std::to_string(norm.p));
        if (norm.dim != 1 && norm.dim != 2)
            throw ParameterError("dimension must be 1 or 2");
    }

    auto distance(Point a, Point b, const NormSpec & norm) -> double
    {
        double dx = std::abs(a.x - b.x);
        if (norm.dim == 1)
            return dx;
        double dy = std::abs(a.y - b.y);
        if (norm.p == 2)
            return std::hypot(dx, dy);
        if (norm.is_infinite())
            return std::max(dx, dy);
        if (norm.p == 1)
            return dx + dy;
        double big = std::max(dx, dy), small = std::min(dx, dy);
        if (big == 0)
            return 0;
        return big * std::pow(1 + std::pow(small / big, norm.p), 1 / norm.p);
    }

    auto exhaustive_diameter(std::span<const Point> points, const NormSpec & norm) -> Diameter
    {
        Diameter best;
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j) {
                double d = distance(points[i], points[j], norm);
                if (d > best.value)
                    best = {d, i, j};
            }
        return best;
    }

    auto convex_hull(std::span<const Point> points) -> std::vector<std::size_t>
    {
        std::vector<std::size_t> order(points.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (points[a].x != points[b].x)
                return points[a].x < points[b].x;
            if (points[a].y != points[b].y)
                return points[a].y < points[b].y;
            return a < b;
        });
        order.erase(std::unique(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points[a] == points[b]; }),
            order.end());
        if (order.size() < 3)
            return order;

        // Andrew's monotone chain.
        std::vector<std::size_t> hull(2 * order.size());
        std::size_t k = 0;
        auto turn = [&](std::size_t o, std::size_t a, std::size_t b) {
            return cross(points[a] - points[o], points[b] - points[o]);
        };
        for (auto i : order) {
            while (k >= 2 && turn(hull[k - 2], hull[k - 1], i) <= 0)
                --k;
            hull[k++] = i;
        }
        for (std::size_t t = order.size() - 1, lower = k + 1; t-- > 0;) {
            auto i = order[t];
            while (k >= lower && turn(hull[k - 2], hull[k - 1], i) <= 0)
                --k;
            hull[k++] = i;
        }
        hull.resize(k - 1);
        return hull;
    }

    namespace
    {
        auto hull_diameter(std::span<const Point> points) -> Diameter
        {
            auto hull = convex_hull(points);
            Diameter best;
            auto consider = [&](std::size_t a, std::size_t b) {
                double d = std::hypot(points[a].x - points[b].x, points[a].y - points[b].y);
                auto lo = std::min(a, b), hi = std::max(a, b);
                if (d > best.value || (d == best.value && d > 0 && std::pair{lo, hi} < std::pair{best.first, best.second}))
                    best = {d, lo, hi};
            };
            const auto h = hull.size();
            if (h == 1)
                return {0, hull[0], hull[0]};
            if (h == 2) {
                consider(hull[0], hull[1]);
                return best;
            }

            // Rotating calipers over antipodal pairs.
            auto area = [&](std::size_t a, std::size_t b, std::size_t c) {
                return std::abs(cross(points[hull[b]] - points[hull[a]], points[hull[c]] - points[hull[a]]));
            };
            std::size_t j = 1;
            for (std::size_t i = 0; i < h; ++i) {
                std::size_t next = (i + 1) % h;
                while (area(i, next, (j + 1) % h) > area(i, next, j))
                    j = (j + 1) % h;
                consider(hull[i], hull[j]);
                consider(hull[next], hull[j]);
            }
            return best;
        }
    }

    auto diameter(std::span<const Point> points, const NormSpec & norm) -> Diameter
    {
        if (points.size() > 64 && norm.is_euclidean())
            return hull_diameter(points);
        return exhaustive_diameter(points, norm);
    }

    auto Hexagon::normal(int k) const -> Point
    {
        return unit_vector(orientation + k * std::numbers::pi / 3);
    }

    auto Hexagon::vertex(int k) const -> Point
    {
        return center + circumradius() * unit_vector(orientation + std::numbers::pi / 6 + k * std::numbers::pi / 3);
    }

    auto Hexagon::vertices() const -> std::array<Point, 6>
    {
        std::array<Point, 6> result;
        for (int k = 0; k < 6; ++k)
            result[k] = vertex(k);
        return result;
    }

    auto Hexagon::excess(Point p) const -> double
    {
        double worst = -std::numeric_limits<double>::infinity();
        for (int k = 0; k < 6; ++k)
            worst = std::max(worst, dot(p - center, normal(k)) - apothem());
        return worst;
    }

    namespace
    {
        struct Extent
        {
            double lo, hi;
            [[nodiscard]] auto mid() const -> double { return (lo + hi) / 2; }
        };

        auto extent(std::span<const Point> points, Point direction) -> Extent
        {
            Extent e{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
            for (auto p : points) {
                double s = dot(p, direction);
                e.lo = std::min(e.lo, s);
                e.hi = std::max(e.hi, s);
            }
            return e;
        }

        // Slab midlines along theta, theta+60, theta+120 are concurrent exactly when
        // mid0 - mid1 + mid2 = 0, since u0 - u1 + u2 = 0. The mismatch flips sign under a
        // 60 degree turn, so a root exists in [0, 60].
        auto mismatch(std::span<const Point> points, double theta) -> double
        {
            constexpr double step = std::numbers::pi / 3;
            return extent(points, unit_vector(theta)).mid() - extent(points, unit_vector(theta + step)).mid() +
                extent(points, unit_vector(theta + 2 * step)).mid();
        }
    }

    auto pal_hexagon(std::span<const Point> points) -> Hexagon
    {
        if (points.empty())
            throw ParameterError("pal_hexagon needs at least one point");
        const double diam = diameter(points).value;
        if (diam == 0)
            return Hexagon{points[0], 0, 0};

        double lo = 0, hi = std::numbers::pi / 3;
        double f_lo = mismatch(points, lo);
        double theta = lo;
        if (f_lo != 0) {
            while (hi - lo > 1e-12) {
                double mid = (lo + hi) / 2;
                double f_mid = mismatch(points, mid);
                if (f_mid == 0) {
                    lo = hi = mid;
                    break;
                }
                if ((f_mid > 0) == (f_lo > 0)) {
                    lo = mid;
                    f_lo = f_mid;
                }
                else
                    hi = mid;
            }
            theta = (lo + hi) / 2;
        }

        // Center from the first two slab midlines; the third agrees up to the bisection residual.
        Point u0 = unit_vector(theta), u1 = unit_vector(theta + std::numbers::pi / 3);
        double m0 = extent(points, u0).mid(), m1 = extent(points, u1).mid();
        double det = cross(u0, u1);
        Point center{(m0 * u1.y - m1 * u0.y) / det, (u0.x * m1 - u1.x * m0) / det};

        Hexagon hex{center, theta, diam};
        double defect = 0;
        for (auto p : points)
            defect = std::max(defect, hex.excess(p));
        if (defect > 0)
            hex.width += 2 * defect;
        return hex;
    }
}
