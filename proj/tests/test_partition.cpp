#include "support.hpp"

#include <planewidth/error.hpp>
#include <planewidth/optimizer.hpp>
#include <planewidth/partition.hpp>
#include <planewidth/solver.hpp>

#include <doctest.h>

#include <set>

using namespace planewidth;
using namespace planewidth::test;

namespace
{
    constexpr std::array schemes{Scheme::three, Scheme::four, Scheme::seven};

    // Largest distance between two points sharing a label.
    auto max_intra(std::span<const Point> pts, const std::vector<unsigned> & labels) -> double
    {
        double worst = 0;
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                if (labels[i] == labels[j])
                    worst = std::max(worst, distance(pts[i], pts[j]));
        return worst;
    }

    void check_partition(std::span<const Point> pts, Scheme s)
    {
        auto labels = partition_unit(pts, s);
        REQUIRE(labels.size() == pts.size());
        for (auto l : labels)
            CHECK(l < static_cast<unsigned>(s));
        CHECK(max_intra(pts, labels) < scheme_delta(s) * (1 + 1e-9));
    }

    // Points of constant-width-like shapes that press against the Pal hexagon.
    auto regular_polygon(unsigned k, double rotation) -> std::vector<Point>
    {
        std::vector<Point> pts;
        for (unsigned i = 0; i < k; ++i)
            pts.push_back(unit_vector(rotation + 2 * pi * i / k));
        double d = diameter(pts).value;
        for (auto & p : pts)
            p = (1 / d) * p;
        return pts;
    }
}

TEST_CASE("scheme constants")
{
    CHECK(scheme_delta(Scheme::three) == doctest::Approx(sqrt3 / 2));
    CHECK(scheme_delta(Scheme::four) == doctest::Approx(sqrt2 / 2));
    CHECK(scheme_delta(Scheme::seven) == 0.5);
    CHECK(scheme_threshold(Scheme::three) == doctest::Approx(2 / sqrt3));
    CHECK(scheme_threshold(Scheme::four) == doctest::Approx(sqrt2));
    CHECK(scheme_threshold(Scheme::seven) == 2);
    CHECK(parse_scheme(7) == Scheme::seven);
    CHECK_THROWS_AS((void) parse_scheme(5), ParameterError);
}

TEST_CASE("partition examples")
{
    std::vector<Point> tri{{0, 0}, {1, 0}, {0.5, sqrt3 / 2}};
    auto labels = partition_unit(tri, Scheme::three);
    CHECK(std::set<unsigned>(labels.begin(), labels.end()).size() == 3);

    std::vector<Point> one{{0.3, 0.3}};
    for (auto s : schemes)
        CHECK(partition_unit(one, s) == std::vector<unsigned>{0});

    std::vector<Point> wide{{0, 0}, {1.01, 0}};
    for (auto s : schemes)
        CHECK_THROWS_AS((void) partition_unit(wide, s), PreconditionError);

    // Corners of a square of diameter 1: diagonal ends are exactly 1 apart.
    std::vector<Point> square_half{{0, 0}, {sqrt2 / 2, 0}, {sqrt2 / 2, sqrt2 / 2}, {0, sqrt2 / 2}};
    check_partition(square_half, Scheme::four);
}

TEST_CASE("partitions of random unit-diameter sets are delta-small")
{
    std::mt19937_64 rng(31337);
    for (auto s : schemes) {
        INFO("scheme " << static_cast<unsigned>(s));
        for (int trial = 0; trial < 300; ++trial) {
            auto pts = unit_diameter_points(2 + static_cast<std::size_t>(trial % 60), rng);
            check_partition(pts, s);
        }
    }
}

TEST_CASE("partitions of boundary-heavy sets")
{
    for (auto s : schemes) {
        INFO("scheme " << static_cast<unsigned>(s));
        for (unsigned k : {3u, 5u, 7u, 9u, 31u, 101u})
            for (double rot : {0.0, 0.1, pi / 6, pi / 3, 1.0})
                check_partition(regular_polygon(k, rot), s);

        // Segment with interior points; hexagon corners and side midpoints.
        std::vector<Point> segment;
        for (int i = 0; i <= 20; ++i)
            segment.push_back({i / 20.0, 0});
        check_partition(segment, s);

        Hexagon h{{0, 0}, 0, 1};
        std::vector<Point> rim;
        for (int k = 0; k < 6; ++k) {
            rim.push_back(h.center + h.apothem() * h.normal(k));
            rim.push_back(h.center + 0.25 * h.normal(k));
        }
        rim.push_back(h.center);
        check_partition(rim, s);
    }
}

TEST_CASE("scheme 7 core excludes its corners")
{
    Hexagon h{{0, 0}, 0.2, 1};
    HexCoreRimPartition part(h);
    CHECK(part.region_of(h.center) == 0);
    for (int i = 0; i < 6; ++i) {
        CHECK(part.region_of(part.core_corner(i)) != 0);
        // The core corners are (sqrt3 - 1)/2 in from the side midpoints.
        Point mid = h.center + h.apothem() * h.normal(i);
        CHECK(distance(mid, part.core_corner(i)) == doctest::Approx((sqrt3 - 1) / 2).epsilon(1e-14));
    }
    // The q_i sit (2 - sqrt3)/2 from the center, so the core has diameter 2 - sqrt3.
    CHECK(distance(part.core_corner(0), part.core_corner(3)) == doctest::Approx(2 - sqrt3).epsilon(1e-14));
    CHECK(distance(part.core_corner(0), part.core_corner(1)) == doctest::Approx((2 - sqrt3) / 2).epsilon(1e-14));
}

TEST_CASE("extract_coloring")
{
    auto k3 = complete_graph(3);
    auto c3 = extract_coloring(k3, known_complete_arrangement(3), Scheme::three);
    CHECK(c3.k == 3);
    CHECK(is_proper(k3, c3));

    auto k4 = complete_graph(4);
    auto c4 = extract_coloring(k4, known_complete_arrangement(4), Scheme::four);
    CHECK(c4.k == 4);
    CHECK(is_proper(k4, c4));

    auto k7 = complete_graph(7);
    auto c7 = extract_coloring(k7, known_complete_arrangement(7), Scheme::seven);
    CHECK(c7.k == 7);
    CHECK(is_proper(k7, c7));

    CHECK_THROWS_AS((void) extract_coloring(k4, known_complete_arrangement(4), Scheme::three), PreconditionError);
    CHECK_THROWS_AS((void) extract_coloring(complete_graph(8), known_complete_arrangement(8), Scheme::seven),
        PreconditionError);
    Realization bad{{{0, 0}, {0.5, 0}, {0, 0.5}}};
    CHECK_THROWS_AS((void) extract_coloring(k3, bad, Scheme::seven), PreconditionError);

    // Optimizer witnesses under a scheme threshold give proper colorings with few colors.
    OptimizeConfig cfg;
    cfg.restarts = 4;
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto g = random_graph(9, 0.35, seed);
        if (g.size() == 0)
            continue;
        auto r = optimize(g, cfg).realization;
        for (auto s : schemes) {
            if (width(r) > scheme_threshold(s))
                continue;
            auto c = extract_coloring(g, r, s);
            CHECK(is_proper(g, c));
            CHECK(c.k <= static_cast<unsigned>(s));
        }
    }
}

TEST_CASE("tiling coloring")
{
    CHECK(tiling_steps(2) == 2);
    CHECK(tiling_color_bound(2) == 19);
    CHECK(tiling_steps(1) == 1);
    CHECK(tiling_color_bound(1) == 7);
    CHECK(tiling_steps(1.5) == 2);
    CHECK(tiling_steps(1.4999) == 1);

    auto k3 = complete_graph(3);
    auto c = tiling_coloring(k3, known_complete_arrangement(3));
    CHECK(is_proper(k3, c));
    CHECK(c.k <= 7);

    auto k7 = complete_graph(7);
    auto c7 = tiling_coloring(k7, known_complete_arrangement(7));
    CHECK(is_proper(k7, c7));
    CHECK(c7.k <= 19);

    HexTiling tiling(Hexagon{{0, 0}, 0.4, 2}, 2);
    CHECK(tiling.cell_count() == 19);
    CHECK(tiling.cell_side() == doctest::Approx(2.0 / 6));
    // Corners of H are cell centers.
    Hexagon h{{0, 0}, 0.4, 2};
    for (int k = 0; k < 6; ++k) {
        auto cell = tiling.cell_of(h.vertex(k));
        CHECK(distance(tiling.cell_center(cell), h.vertex(k)) < 1e-12);
        CHECK(tiling.region_of(h.vertex(k)).has_value());
    }

    SUBCASE("large widths use fewer than ((2/sqrt3 + 0.1) d)^2 colors")
    {
        const std::size_t n = 2300;
        auto kn = complete_graph(n);
        auto r = lattice_complete_arrangement(n);
        double d = width(r);
        REQUIRE(d >= 50);
        auto cn = tiling_coloring(kn, r);
        CHECK(is_proper(kn, cn));
        CHECK(cn.k <= tiling_color_bound(tiling_steps(d)));
        CHECK(static_cast<double>(cn.k) < std::pow((2 / sqrt3 + 0.1) * d, 2));
    }

    CHECK_THROWS_AS((void) tiling_coloring(k3, Realization{{{0, 0}, {0.1, 0}, {0, 1}}}), PreconditionError);
}
