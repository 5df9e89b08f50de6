#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace planewidth
{
    struct Point
    {
        double x = 0;
        double y = 0;

        friend auto operator+(Point a, Point b) -> Point { return {a.x + b.x, a.y + b.y}; }
        friend auto operator-(Point a, Point b) -> Point { return {a.x - b.x, a.y - b.y}; }
        friend auto operator*(double s, Point a) -> Point { return {s * a.x, s * a.y}; }
        friend auto operator==(Point, Point) -> bool = default;
    };

    [[nodiscard]] inline auto dot(Point a, Point b) -> double { return a.x * b.x + a.y * b.y; }
    [[nodiscard]] inline auto cross(Point a, Point b) -> double { return a.x * b.y - a.y * b.x; }
    [[nodiscard]] inline auto unit_vector(double angle) -> Point { return {std::cos(angle), std::sin(angle)}; }
    [[nodiscard]] inline auto rotate(Point a, double angle) -> Point
    {
        double c = std::cos(angle), s = std::sin(angle);
        return {c * a.x - s * a.y, s * a.x + c * a.y};
    }

    // An l_p norm on the line (dim 1, y ignored) or the plane (dim 2). p = infinity is the max norm.
    struct NormSpec
    {
        double p = 2;
        int dim = 2;

        [[nodiscard]] static constexpr auto euclidean() -> NormSpec { return {2, 2}; }
        [[nodiscard]] static constexpr auto chebyshev() -> NormSpec { return {std::numeric_limits<double>::infinity(), 2}; }
        [[nodiscard]] static constexpr auto line() -> NormSpec { return {2, 1}; }

        [[nodiscard]] auto is_infinite() const -> bool { return std::isinf(p); }
        [[nodiscard]] auto is_euclidean() const -> bool { return dim == 2 && p == 2; }

        friend auto operator==(const NormSpec &, const NormSpec &) -> bool = default;
    };

    // Throws ParameterError unless p >= 1 and dim is 1 or 2.
    void validate(const NormSpec & norm);

    [[nodiscard]] auto distance(Point a, Point b, const NormSpec & norm = NormSpec::euclidean()) -> double;

    struct Diameter
    {
        double value = 0;
        std::size_t first = 0;
        std::size_t second = 0;
    };

    // Maximum pairwise distance with a witnessing pair. Euclidean inputs above 64 points go
    // through the convex hull and an antipodal scan; everything else is exhaustive.
    [[nodiscard]] auto diameter(std::span<const Point> points, const NormSpec & norm = NormSpec::euclidean()) -> Diameter;
    [[nodiscard]] auto exhaustive_diameter(std::span<const Point> points, const NormSpec & norm = NormSpec::euclidean())
        -> Diameter;

    // Indices of the convex hull vertices in counter-clockwise order, collinear points dropped.
    [[nodiscard]] auto convex_hull(std::span<const Point> points) -> std::vector<std::size_t>;

    // Regular hexagon given by its center, the angle of one side normal, and the distance
    // between opposite sides.
    struct Hexagon
    {
        Point center;
        double orientation = 0;
        double width = 0;

        [[nodiscard]] auto apothem() const -> double { return width / 2; }
        [[nodiscard]] auto circumradius() const -> double { return width / std::sqrt(3.0); }
        // Outward side normals at orientation + k * 60 degrees.
        [[nodiscard]] auto normal(int k) const -> Point;
        // Corners at orientation + 30 + k * 60 degrees.
        [[nodiscard]] auto vertex(int k) const -> Point;
        [[nodiscard]] auto vertices() const -> std::array<Point, 6>;
        // Largest signed distance from p to the six supporting lines; <= 0 means inside.
        [[nodiscard]] auto excess(Point p) const -> double;
        [[nodiscard]] auto contains(Point p, double tol = 1e-9) const -> bool { return excess(p) <= tol; }
    };

    // A regular hexagon of width equal to the Euclidean diameter of the points that contains
    // all of them. The orientation is found by bisecting the signed slab mismatch over three
    // directions 60 degrees apart; any floating-point shortfall is absorbed by widening.
    [[nodiscard]] auto pal_hexagon(std::span<const Point> points) -> Hexagon;
}
