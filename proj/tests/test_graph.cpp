#include "support.hpp"

#include <planewidth/coloring.hpp>
#include <planewidth/error.hpp>
#include <planewidth/graph.hpp>
#include <planewidth/solver.hpp>

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace planewidth;
using namespace planewidth::test;

TEST_CASE("graph construction normalizes edges")
{
    std::vector<Edge> edges{{2, 1}, {1, 2}, {0, 1}};
    Graph g(3, edges);
    CHECK(g.size() == 2);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(g.adjacent(2, 1));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.degree(1) == 2);

    std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Graph(3, loop), ParameterError);
    std::vector<Edge> out_of_range{{0, 3}};
    CHECK_THROWS_AS(Graph(3, out_of_range), ParameterError);
}

TEST_CASE("named generators")
{
    SUBCASE("complete graphs have n(n-1)/2 edges")
    {
        for (std::size_t n = 0; n <= 12; ++n)
            CHECK(complete_graph(n).size() == n * (n - (n ? 1 : 0)) / 2);
        auto k4 = generate({Family::complete, {4}});
        CHECK(k4.order() == 4);
        CHECK(k4.size() == 6);
    }

    SUBCASE("circulant(25,4) adjacency follows the chord rule")
    {
        // 2.1 sin(4 pi / 25) = 1.0117 >= 1 and 2.1 sin(3 pi / 25) = 0.7731 < 1.
        CHECK(2.1 * std::sin(4 * pi / 25) == doctest::Approx(1.01168).epsilon(1e-4));
        CHECK(2.1 * std::sin(3 * pi / 25) == doctest::Approx(0.77306).epsilon(1e-4));
        auto g = generate({Family::circulant, {25, 4}});
        CHECK(g.adjacent(0, 4));
        CHECK_FALSE(g.adjacent(0, 3));
        CHECK(g.adjacent(0, 21));
        CHECK_FALSE(g.adjacent(0, 22));
    }

    SUBCASE("circulant graphs are regular of degree p - 2q + 1")
    {
        for (auto [p, q] : std::vector<std::pair<unsigned, unsigned>>{{5, 2}, {7, 2}, {7, 3}, {25, 4}, {13, 3}, {11, 5}}) {
            auto g = circulant_graph(p, q);
            for (Vertex v = 0; v < p; ++v)
                CHECK(g.degree(v) == p - 2 * q + 1);
        }
        CHECK_THROWS_AS((void) circulant_graph(8, 4), ParameterError);
        CHECK_THROWS_AS((void) circulant_graph(5, 0), ParameterError);
    }

    SUBCASE("theorem41 star")
    {
        auto g = generate({Family::theorem41_star, {4, 0.1}});
        CHECK(g.order() == 26);
        CHECK(g.degree(25) == 25);
        // The rim is circulant(25, 4).
        std::vector<Vertex> rim(25);
        std::iota(rim.begin(), rim.end(), 0);
        CHECK(induced_subgraph(g, rim) == circulant_graph(25, 4));
        CHECK(smallest_star_n(0.1) == 4);
        CHECK(generate({Family::theorem41_star, {0.1}}).order() == 26);
    }

    SUBCASE("odd wheels")
    {
        auto w = generate({Family::odd_wheel, {5}});
        CHECK(w.order() == 6);
        CHECK(w.size() == 10);
        CHECK(w.degree(5) == 5);
        CHECK(odd_wheel(3) == complete_graph(4));
        CHECK_THROWS_AS((void) odd_wheel(4), ParameterError);
        CHECK_THROWS_AS((void) odd_wheel(1), ParameterError);
    }

    SUBCASE("fixed graphs")
    {
        auto p = petersen_graph();
        CHECK(p.order() == 10);
        CHECK(p.size() == 15);
        for (Vertex v = 0; v < 10; ++v)
            CHECK(p.degree(v) == 3);
        auto gr = grotzsch_graph();
        CHECK(gr.order() == 11);
        CHECK(gr.size() == 20);
        CHECK(max_clique(gr).size() == 2);
    }

    SUBCASE("family names")
    {
        CHECK(parse_family("odd-wheel") == Family::odd_wheel);
        CHECK(parse_family("theorem41-star") == Family::theorem41_star);
        CHECK_THROWS_AS((void) parse_family("hypercube"), ParameterError);
    }

    SUBCASE("random graphs are reproducible")
    {
        CHECK(random_graph(20, 0.3, 7) == random_graph(20, 0.3, 7));
        CHECK_FALSE(random_graph(20, 0.3, 7) == random_graph(20, 0.3, 8));
        CHECK(random_graph(10, 0, 1).size() == 0);
        CHECK(random_graph(10, 1, 1).size() == 45);
    }
}

TEST_CASE("compositions")
{
    auto k2 = complete_graph(2);
    CHECK(join(k2, k2) == complete_graph(4));
    // Q2: the 4-cycle 0-1-3-2 under the (u, x) -> 2u + x labeling.
    CHECK(cartesian_product(k2, k2) == Graph(4, std::vector<Edge>{{0, 1}, {1, 3}, {2, 3}, {0, 2}}));
    CHECK(complement(cycle_graph(5)).size() == 5);
    for (Vertex v = 0; v < 5; ++v)
        CHECK(complement(cycle_graph(5)).degree(v) == 2);
    // C5 is self-complementary via v -> 2v mod 5.
    std::vector<Vertex> map{0, 2, 4, 1, 3};
    CHECK(verify_homomorphism({cycle_graph(5), complement(cycle_graph(5)), map}));

    auto u = disjoint_union(complete_graph(3), k2);
    CHECK(u.order() == 5);
    CHECK(u.size() == 4);
    CHECK(u.adjacent(3, 4));

    auto joined = join(complete_graph(3), k2);
    REQUIRE(std::holds_alternative<ComposedOrigin>(joined.origin()));
    CHECK(std::get<ComposedOrigin>(joined.origin()).kind == Composition::join);
    CHECK(*std::get<ComposedOrigin>(joined.origin()).left == complete_graph(3));

    auto p = cartesian_product(cycle_graph(5), complete_graph(3));
    CHECK(p.order() == 15);
    CHECK(p.size() == 5 * 3 + 3 * 5);
    // (u, x) is index u * |H| + x.
    CHECK(p.adjacent(0 * 3 + 1, 1 * 3 + 1));
    CHECK(p.adjacent(0 * 3 + 1, 0 * 3 + 2));
    CHECK_FALSE(p.adjacent(0 * 3 + 1, 1 * 3 + 2));

    CHECK_THROWS_AS((void) compose(Composition::join, k2), ParameterError);
}

TEST_CASE("double subdivision")
{
    auto g = double_subdivide(complete_graph(3), {0, 1});
    CHECK(g.order() == 5);
    CHECK(g.size() == 5);
    for (Vertex v = 0; v < 5; ++v)
        CHECK(g.degree(v) == 2);
    CHECK(chromatic_number(g).upper == 3);

    // x = n is adjacent to u, y = n + 1 to v; x -> v, y -> u is a homomorphism back.
    auto k4 = complete_graph(4);
    auto s = double_subdivide(k4, {1, 3});
    CHECK(s.size() == k4.size() + 2);
    CHECK(s.adjacent(1, 4));
    CHECK(s.adjacent(4, 5));
    CHECK(s.adjacent(5, 3));
    CHECK_FALSE(s.adjacent(1, 3));
    CHECK(verify_homomorphism({s, k4, {0, 1, 2, 3, 3, 1}}));

    CHECK_THROWS_AS((void) double_subdivide(path_graph(3), {0, 2}), ParameterError);
}

TEST_CASE("four-cycle reduction")
{
    SUBCASE("re-adding the subdivided edge reduces back to the original")
    {
        // Holds label for label when the input is a fixed point of the reduction and every
        // vertex has degree >= 2; otherwise a degree-1 endpoint can pair with its new
        // neighbour and the result is only isomorphic.
        std::vector<Graph> inputs{complete_graph(4), petersen_graph(), odd_wheel(5), grotzsch_graph()};
        for (std::uint64_t seed = 0; inputs.size() < 24; ++seed) {
            auto g = random_graph(12, 0.4, seed);
            bool min_degree_two = true;
            for (Vertex v = 0; v < g.order(); ++v)
                min_degree_two = min_degree_two && g.degree(v) >= 2;
            if (min_degree_two && reduce_four_cycle_pairs(g) == g)
                inputs.push_back(g);
        }
        for (auto & g : inputs) {
            INFO(g.order() << " vertices, " << g.size() << " edges");
            for (auto e : g.edges()) {
                auto s = double_subdivide(g, e);
                std::vector<Edge> edges = s.edges();
                edges.push_back(e);
                Graph readded(s.order(), edges);
                CHECK(reduce_four_cycle_pairs(readded) == g);
            }
        }
    }

    SUBCASE("pendant endpoints reduce to an isomorphic copy")
    {
        auto g = path_graph(4); // 0-1-2-3 with pendant 0
        auto s = double_subdivide(g, {0, 1});
        std::vector<Edge> edges = s.edges();
        edges.emplace_back(0, 1);
        auto r = reduce_four_cycle_pairs(Graph(s.order(), edges));
        CHECK(r.order() == g.order());
        CHECK(r.size() == g.size());
        std::vector<std::size_t> degrees;
        for (Vertex v = 0; v < r.order(); ++v)
            degrees.push_back(r.degree(v));
        std::sort(degrees.begin(), degrees.end());
        CHECK(degrees == std::vector<std::size_t>{1, 1, 2, 2});
    }

    SUBCASE("graphs without such a pair are fixed points")
    {
        for (auto g : {complete_graph(5), cycle_graph(5), cycle_graph(6), petersen_graph()})
            CHECK(reduce_four_cycle_pairs(g) == g);
    }

    SUBCASE("vertex count never increases")
    {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            auto g = random_graph(10, 0.25, seed);
            CHECK(reduce_four_cycle_pairs(g).order() <= g.order());
        }
    }

    SUBCASE("C4 loses one adjacent pair")
    {
        // Both pairs qualify; the first one found goes and the remaining edge is kept.
        auto r = reduce_four_cycle_pairs(cycle_graph(4));
        CHECK(r.order() == 2);
        CHECK(r.size() == 1);
    }
}

TEST_CASE("homomorphisms")
{
    auto k4 = complete_graph(4);
    CHECK(verify_homomorphism({k4, k4, {0, 1, 2, 3}}));
    CHECK_FALSE(verify_homomorphism({k4, k4, {0, 0, 0, 0}}));
    CHECK_FALSE(verify_homomorphism({complete_graph(2), complete_graph(2), {1, 1}}));
    CHECK_THROWS_AS((void) verify_homomorphism({k4, k4, {0, 1, 2}}), ParameterError);
    CHECK_THROWS_AS((void) verify_homomorphism({k4, k4, {0, 1, 2, 4}}), ParameterError);

    // Every coloring produced anywhere is a homomorphism into K_k.
    for (auto & [name, g, chi] : exact_corpus()) {
        INFO(name);
        auto exact = chromatic_number(g);
        CHECK(verify_homomorphism(as_homomorphism(g, exact.witness)));
        CHECK(verify_homomorphism(as_homomorphism(g, greedy_coloring(g))));
    }
}
