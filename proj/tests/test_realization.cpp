#include "support.hpp"

#include <planewidth/bounds.hpp>
#include <planewidth/error.hpp>
#include <planewidth/realization.hpp>
#include <planewidth/solver.hpp>

#include <doctest.h>

#include <numeric>

using namespace planewidth;
using namespace planewidth::test;

namespace
{
    // Exact widths of K_n.
    const std::vector<double> table{1, 1, sqrt2, phi, 2 * std::sin(72 * pi / 180), 2, 1 / (2 * std::sin(pi / 14))};

    auto valid(const Graph & g, const Realization & r) -> bool
    {
        return evaluate(g, r).valid;
    }
}

TEST_CASE("evaluate")
{
    auto k4 = complete_graph(4);
    Realization square{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
    auto e = evaluate(k4, square);
    CHECK(e.width == doctest::Approx(sqrt2).epsilon(1e-15));
    CHECK(e.min_edge_distance == 1);
    CHECK(e.valid);
    CHECK_FALSE(e.violating_edge);

    auto k2 = complete_graph(2);
    auto bad = evaluate(k2, Realization{{{0, 0}, {0, 0}}});
    CHECK(bad.min_edge_distance == 0);
    CHECK_FALSE(bad.valid);
    CHECK(bad.violating_edge == Edge{0, 1});

    auto k7 = evaluate(complete_graph(7), known_complete_arrangement(7));
    CHECK(k7.valid);
    CHECK(k7.width == doctest::Approx(2).epsilon(1e-15));

    auto edgeless = evaluate(Graph(3), Realization{{{0, 0}, {0, 0}, {3, 4}}});
    CHECK(edgeless.valid);
    CHECK(edgeless.width == 5);

    CHECK_THROWS_AS((void) evaluate(k2, Realization{{{0, 0}}}), ParameterError);
    CHECK_THROWS_AS((void) evaluate(k2, Realization{{{0, 0}, {std::nan(""), 0}}}), ParameterError);

    // Tolerance is explicit.
    Realization short_edge{{{0, 0}, {1 - 1e-10, 0}}};
    CHECK(evaluate(k2, short_edge).valid);
    CHECK_FALSE(evaluate(k2, short_edge, 0).valid);
}

TEST_CASE("feasibilize")
{
    auto k3 = complete_graph(3);
    Realization tri{{{0, 0}, {1, 0}, {0.5, sqrt3 / 2}}};
    CHECK(feasibilize(k3, tri) == tri);

    Realization half{{{0, 0}, {0.5, 0}, {0.25, sqrt3 / 4}}};
    auto scaled = feasibilize(k3, half);
    auto e = evaluate(k3, scaled, 0);
    CHECK(e.valid);
    CHECK(e.min_edge_distance >= 1);
    CHECK(e.width == doctest::Approx(1).epsilon(1e-14));

    // Perturbed unit-side pentagon with shortest edge 0.98.
    auto k5 = complete_graph(5);
    auto pentagon = known_complete_arrangement(5);
    for (auto & p : pentagon.points)
        p = 0.98 * p;
    auto fixed = feasibilize(k5, pentagon);
    auto fe = evaluate(k5, fixed, 0);
    CHECK(fe.valid);
    CHECK(fe.width == doctest::Approx(phi).epsilon(1e-12));
    CHECK(feasibilize(k5, fixed) == fixed);

    CHECK_THROWS_AS((void) feasibilize(complete_graph(2), Realization{{{1, 1}, {1, 1}}}), InfeasibleError);
    CHECK_THROWS_AS((void) feasibilize(Graph(2), Realization{{{0, 0}, {1, 1}}}), ParameterError);

    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = random_graph(8, 0.5, static_cast<std::uint64_t>(trial));
        if (g.size() == 0)
            continue;
        Realization r{random_points(8, rng)};
        auto f = feasibilize(g, r);
        CHECK(evaluate(g, f, 0).valid);
        CHECK(feasibilize(g, f) == f);
        CHECK(evaluate(g, f).min_edge_distance >= std::min(1.0, evaluate(g, r).min_edge_distance));
    }
}

TEST_CASE("known complete arrangements")
{
    for (std::size_t n = 2; n <= 8; ++n) {
        INFO("n = " << n);
        auto r = known_complete_arrangement(n);
        auto e = evaluate(complete_graph(n), r);
        CHECK(r.points.size() == n);
        CHECK(e.valid);
        CHECK(std::abs(e.width - table[n - 2]) <= 1e-12);
        CHECK(table_value(n) == table[n - 2]);
    }
    // K8: the heptagon circumcenter sits 1 / (2 sin(pi/7)) = 1.1523824 from every corner.
    auto k8 = known_complete_arrangement(8);
    for (std::size_t i = 0; i < 7; ++i)
        CHECK(distance(k8.points[i], k8.points[7]) == doctest::Approx(1.15238243548124).epsilon(1e-12));
    CHECK(table[6] == doctest::Approx(2.24697960371747).epsilon(1e-13));
    CHECK(table[4] == doctest::Approx(1.90211303259031).epsilon(1e-13));

    CHECK_THROWS_AS((void) known_complete_arrangement(1), ParameterError);
    CHECK_THROWS_AS((void) known_complete_arrangement(9), ParameterError);
}

TEST_CASE("lattice complete arrangements")
{
    CHECK(evaluate(complete_graph(3), lattice_complete_arrangement(3)).width == doctest::Approx(1).epsilon(1e-15));
    CHECK(evaluate(complete_graph(7), lattice_complete_arrangement(7)).width == doctest::Approx(2).epsilon(1e-15));

    // Independent evaluation (nearest lattice points to the origin, hull diameter):
    // n = 9: sqrt 7, 19: 4, 37: 6, 100: 10.440306508910550, 1000: 33.045423283716610.
    CHECK(width(lattice_complete_arrangement(9)) == doctest::Approx(std::sqrt(7.0)).epsilon(1e-14));
    CHECK(width(lattice_complete_arrangement(19)) == doctest::Approx(4).epsilon(1e-14));
    CHECK(width(lattice_complete_arrangement(37)) == doctest::Approx(6).epsilon(1e-14));
    CHECK(width(lattice_complete_arrangement(100)) == doctest::Approx(10.44030650891055).epsilon(1e-13));

    auto big = lattice_complete_arrangement(1000);
    double w = width(big);
    CHECK(w == doctest::Approx(33.04542328371661).epsilon(1e-13));
    // The sqrt(a n) - 1 floor, and the measured additive constant over sqrt(2 sqrt3 / pi * n).
    const double a = 2 * sqrt3 / pi;
    CHECK(w >= std::sqrt(a * 1000) - 1);
    CHECK(w <= std::sqrt(a * 1000) + 0.21);

    for (std::size_t n : {2, 5, 12, 30, 61})
        CHECK(evaluate(complete_graph(n), lattice_complete_arrangement(n)).valid);
}

TEST_CASE("from_coloring")
{
    auto c4 = cycle_graph(4);
    auto bip = from_coloring(c4, Coloring::from_colors({0, 1, 0, 1}));
    CHECK(valid(c4, bip));
    CHECK(width(bip) == doctest::Approx(1).epsilon(1e-15));

    auto wheel = odd_wheel(7);
    auto wr = from_coloring(wheel, chromatic_number(wheel).witness);
    CHECK(valid(wheel, wr));
    CHECK(width(wr) == doctest::Approx(sqrt2).epsilon(1e-15));

    for (auto & [name, g, chi] : exact_corpus()) {
        INFO(name);
        auto r = from_coloring(g, chromatic_number(g).witness);
        CHECK(valid(g, r));
        if (chi <= 8)
            CHECK(std::abs(width(r) - table[std::max(chi, 2u) - 2]) <= 1e-12);
    }

    auto k12 = complete_graph(12);
    auto r12 = from_coloring(k12, chromatic_number(k12).witness);
    CHECK(valid(k12, r12));
    CHECK(width(r12) == width(lattice_complete_arrangement(12)));

    CHECK_THROWS_AS((void) from_coloring(complete_graph(3), Coloring::from_colors({0, 1, 1})), CertificateError);
}

TEST_CASE("from_circular")
{
    auto k3 = complete_graph(3);
    auto r = from_circular(k3, std::vector<double>{0, 2 * pi / 3, 4 * pi / 3}, 3);
    CHECK(valid(k3, r));
    CHECK(width(r) <= 1 / std::sin(pi / 3) + 1e-12);
    CHECK(1 / std::sin(pi / 3) == doctest::Approx(1.1547005383792515).epsilon(1e-15));

    auto circ = circulant_graph(25, 4);
    auto rc = from_circular(circ, circulant_angles(25), 25.0 / 4);
    CHECK(valid(circ, rc));
    CHECK(width(rc) <= 1 / std::sin(4 * pi / 25) + 1e-9);
    CHECK(1 / std::sin(4 * pi / 25) == doctest::Approx(2.075749607648793).epsilon(1e-14));

    auto k2 = complete_graph(2);
    auto r2 = from_circular(k2, std::vector<double>{0, pi}, 2);
    CHECK(width(r2) == doctest::Approx(1).epsilon(1e-15));
    CHECK(distance(r2.points[0], {0, 0}) == doctest::Approx(0.5).epsilon(1e-15));

    CHECK_THROWS_AS((void) from_circular(k3, std::vector<double>{0, 0.1, pi}, 3), CertificateError);
    CHECK_THROWS_AS((void) from_circular(k2, std::vector<double>{0, pi}, 1.5), ParameterError);
    CHECK_THROWS_AS((void) from_circular(k2, std::vector<double>{0}, 2), ParameterError);

    // The theorem41 star arrangement is valid with width 2 + eps.
    auto star = theorem41_star(4, 0.1);
    auto rs = star_arrangement(4, 0.1);
    CHECK(valid(star, rs));
    CHECK(width(rs) <= 2.1 + 1e-12);
}

TEST_CASE("pullback")
{
    auto k4 = complete_graph(4);
    auto square = known_complete_arrangement(4);
    CHECK(pullback({k4, k4, {0, 1, 2, 3}}, square) == square);

    auto wheel = odd_wheel(5);
    auto c = chromatic_number(wheel).witness;
    REQUIRE(c.k == 4);
    CHECK(pullback(as_homomorphism(wheel, c), square) == from_coloring(wheel, c));

    // Double subdivision maps back through x -> v, y -> u.
    auto s = double_subdivide(k4, {0, 2});
    auto rs = pullback({s, k4, {0, 1, 2, 3, 2, 0}}, square);
    CHECK(valid(s, rs));
    CHECK(width(rs) <= sqrt2);

    CHECK_THROWS_AS((void) pullback({k4, k4, {0, 0, 1, 2}}, square), CertificateError);

    // Monotonicity: a subgraph inherits the supergraph witness without widening.
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = random_graph(9, 0.5, seed);
        auto witness = from_coloring(g, chromatic_number(g).witness);
        std::vector<Edge> kept;
        for (std::size_t i = 0; i < g.edges().size(); i += 2)
            kept.push_back(g.edges()[i]);
        Graph sub(g.order(), kept);
        std::vector<Vertex> identity(g.order());
        std::iota(identity.begin(), identity.end(), 0);
        auto r = pullback({sub, g, identity}, witness);
        CHECK(valid(sub, r));
        CHECK(width(r) <= width(witness));
    }
}

TEST_CASE("composition realizations")
{
    auto k1 = complete_graph(1), k2 = complete_graph(2), k3 = complete_graph(3);
    Realization seg{{{0, 0}, {1, 0}}};
    Realization point{{{0, 0}}};
    auto tri = known_complete_arrangement(3);

    SUBCASE("join")
    {
        auto j = join_realization(k2, k2, seg, seg);
        CHECK(valid(join(k2, k2), j));
        CHECK(width(j) <= 3 + 1e-12);

        auto c5 = cycle_graph(5);
        auto rc5 = from_coloring(c5, chromatic_number(c5).witness);
        auto jc = join_realization(k1, c5, point, rc5);
        CHECK(valid(join(k1, c5), jc));
        CHECK(width(jc) <= width(rc5) + 1 + 1e-12);
    }

    SUBCASE("product")
    {
        Realization vertical{{{0, 0}, {0, 1}}};
        auto p = product_realization(k2, k2, seg, vertical);
        CHECK(valid(cartesian_product(k2, k2), p));
        CHECK(width(p) == doctest::Approx(sqrt2).epsilon(1e-15));

        // Same-fiber edges keep the factor distances exactly.
        auto c5 = cycle_graph(5);
        auto rc5 = from_coloring(c5, chromatic_number(c5).witness);
        auto prod = product_realization(c5, k3, rc5, tri);
        for (Vertex u = 0; u < 5; ++u)
            for (Vertex x = 0; x < 3; ++x)
                for (Vertex y = x + 1; y < 3; ++y)
                    CHECK(distance(prod.points[u * 3 + x], prod.points[u * 3 + y]) ==
                        doctest::Approx(distance(tri.points[x], tri.points[y])).epsilon(1e-14));
        CHECK(valid(cartesian_product(c5, k3), prod));
        CHECK(width(prod) <= width(rc5) + width(tri) + 1e-12);
    }

    SUBCASE("union")
    {
        auto u = union_realization(k3, k3, tri, tri);
        CHECK(valid(disjoint_union(k3, k3), u));
        CHECK(width(u) <= 2 / sqrt3 + 1e-9);

        Graph empty(3);
        Realization heap{{{0, 0}, {0, 0}, {0, 0}}};
        auto ue = union_realization(k3, empty, tri, heap);
        CHECK(valid(disjoint_union(k3, empty), ue));
        CHECK(width(ue) == doctest::Approx(1).epsilon(1e-12));
    }
}

TEST_CASE("low-dimensional realizations")
{
    auto k3 = complete_graph(3);
    auto line = low_dim_realization(k3, Coloring::from_colors({0, 1, 2}), LowDimMode::line);
    CHECK(line.norm.dim == 1);
    CHECK(valid(k3, line));
    CHECK(width(line) == 2);

    auto k5 = complete_graph(5);
    auto grid = low_dim_realization(k5, Coloring::from_colors({0, 1, 2, 3, 4}), LowDimMode::linf_grid);
    CHECK(grid.norm.is_infinite());
    CHECK(valid(k5, grid));
    CHECK(width(grid) == 2);
    CHECK(width(grid) >= std::sqrt(5.0) - 1);
    CHECK(width(grid) < std::sqrt(5.0));

    auto k4 = complete_graph(4);
    auto g4 = low_dim_realization(k4, Coloring::from_colors({0, 1, 2, 3}), LowDimMode::linf_grid);
    CHECK(width(g4) == 1);
    CHECK(evaluate(k4, g4, 0).valid);

    CHECK_THROWS_AS((void) low_dim_realization(k3, Coloring::from_colors({0, 0, 1}), LowDimMode::line), CertificateError);
}

TEST_CASE("rigid motions preserve evaluation")
{
    auto g = petersen_graph();
    auto r = from_coloring(g, chromatic_number(g).witness);
    auto moved = transformed(r, 1.234, {5, -3});
    CHECK(valid(g, moved));
    CHECK(width(moved) == doctest::Approx(width(r)).epsilon(1e-14));
}
