#pragma once

#include <planewidth/coloring.hpp>
#include <planewidth/geometry.hpp>
#include <planewidth/graph.hpp>

#include <optional>
#include <span>
#include <vector>

namespace planewidth
{
    inline constexpr double default_tolerance = 1e-9;

    // One point per vertex plus the norm in force.
    struct Realization
    {
        std::vector<Point> points;
        NormSpec norm = NormSpec::euclidean();

        friend auto operator==(const Realization &, const Realization &) -> bool = default;
    };

    struct Evaluation
    {
        double width = 0;
        double min_edge_distance = std::numeric_limits<double>::infinity();
        bool valid = true;
        std::optional<Edge> violating_edge; // the shortest edge, reported when invalid

        friend auto operator==(const Evaluation &, const Evaluation &) -> bool = default;
    };

    [[nodiscard]] auto width(const Realization & r) -> double;
    [[nodiscard]] auto evaluate(const Graph & g, const Realization & r, double tol = default_tolerance) -> Evaluation;

    // Scales about the centroid by the reciprocal of the shortest edge when it is below 1.
    // Throws InfeasibleError when an edge has coincident endpoints.
    [[nodiscard]] auto feasibilize(const Graph & g, const Realization & r) -> Realization;

    // Maps color classes onto the best known arrangement of K_k: unit triangle for k <= 3,
    // the table arrangements for 4..8, the triangular lattice beyond.
    [[nodiscard]] auto from_coloring(const Graph & g, const Coloring & c) -> Realization;

    // Known optimal arrangements of K_n for 2 <= n <= 8.
    [[nodiscard]] auto known_complete_arrangement(std::size_t n) -> Realization;

    // The n unit-lattice points nearest to a lattice point, ties broken by angle.
    [[nodiscard]] auto lattice_complete_arrangement(std::size_t n) -> Realization;

    // Places v at radius 1 / (2 sin(pi / chi_c)) and angle angles[v]. Every edge must have an
    // angular gap of at least 2 pi / chi_c; otherwise CertificateError names the edge.
    [[nodiscard]] auto from_circular(const Graph & g, std::span<const double> angles, double chi_c) -> Realization;

    // Evenly spaced angles 2 pi i / p for circulant(p, q).
    [[nodiscard]] auto circulant_angles(unsigned p) -> std::vector<double>;

    // The defining arrangement of theorem41_star(n, eps): 6n+1 equidistant points on a circle
    // of diameter 2+eps and the center.
    [[nodiscard]] auto star_arrangement(unsigned n, double epsilon) -> Realization;

    // r'(v) = r(phi(v)). Throws CertificateError when phi is not a homomorphism.
    [[nodiscard]] auto pullback(const Homomorphism & phi, const Realization & target) -> Realization;

    // Realization of join(g, h): the two arrangements sit on a common line through their
    // diametral pairs, with the facing diametral points one unit apart.
    [[nodiscard]] auto join_realization(const Graph & g, const Graph & h, const Realization & rg, const Realization & rh)
        -> Realization;

    // r((u, x)) = rg(u) + rh(x), indexed like cartesian_product.
    [[nodiscard]] auto product_realization(const Graph & g, const Graph & h, const Realization & rg, const Realization & rh)
        -> Realization;

    // Both arrangements concentric in parallel Pal hexagons.
    [[nodiscard]] auto union_realization(const Graph & g, const Graph & h, const Realization & rg, const Realization & rh)
        -> Realization;

    enum class LowDimMode
    {
        line,
        linf_grid
    };

    // line: color i at coordinate i (width k-1). linf_grid: color i at (i mod s, i div s) with
    // s = ceil(sqrt k) under the max norm (width s-1).
    [[nodiscard]] auto low_dim_realization(const Graph & g, const Coloring & c, LowDimMode mode) -> Realization;

    // Rigid motion of every point.
    [[nodiscard]] auto transformed(const Realization & r, double angle, Point shift) -> Realization;
}
