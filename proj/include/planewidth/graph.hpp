#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace planewidth
{
    using Vertex = std::uint32_t;

    // Unordered pair, stored with first < second.
    using Edge = std::pair<Vertex, Vertex>;

    class Graph;

    enum class Composition
    {
        join,
        cartesian,
        disjoint_union,
        complement
    };

    auto to_string(Composition kind) -> std::string;

    // How a graph was produced. The bounds engine uses this to pick constructions
    // (composition realizations, circular arrangements) that are only known for
    // graphs built a particular way.
    struct ComposedOrigin
    {
        Composition kind;
        std::shared_ptr<const Graph> left;
        std::shared_ptr<const Graph> right; // null for complement
    };

    struct CirculantOrigin
    {
        unsigned p;
        unsigned q;
    };

    struct StarOrigin
    {
        unsigned n;
        double epsilon;
    };

    using Origin = std::variant<std::monostate, ComposedOrigin, CirculantOrigin, StarOrigin>;

    // Simple undirected graph on vertices 0..order()-1. Immutable after construction.
    class Graph
    {
    public:
        Graph() = default;
        explicit Graph(std::size_t order);

        // Duplicate edges (in either orientation) are merged. Self-loops and
        // out-of-range endpoints throw ParameterError.
        Graph(std::size_t order, std::span<const Edge> edges, Origin origin = {});

        [[nodiscard]] auto order() const -> std::size_t { return neighbours_.size(); }
        [[nodiscard]] auto size() const -> std::size_t { return edges_.size(); }

        [[nodiscard]] auto edges() const -> const std::vector<Edge> & { return edges_; }
        [[nodiscard]] auto neighbours(Vertex v) const -> std::span<const Vertex> { return neighbours_[v]; }
        [[nodiscard]] auto degree(Vertex v) const -> std::size_t { return neighbours_[v].size(); }
        [[nodiscard]] auto adjacent(Vertex u, Vertex v) const -> bool;

        [[nodiscard]] auto origin() const -> const Origin & { return origin_; }
        [[nodiscard]] auto with_origin(Origin origin) const -> Graph;

        // Structural equality on labeled graphs; origin is ignored.
        friend auto operator==(const Graph & a, const Graph & b) -> bool
        {
            return a.order() == b.order() && a.edges_ == b.edges_;
        }

    private:
        std::vector<Edge> edges_;
        std::vector<std::vector<Vertex>> neighbours_;
        std::vector<std::uint64_t> matrix_;
        std::size_t words_per_row_ = 0;
        Origin origin_;
    };

    [[nodiscard]] auto make_edge(Vertex u, Vertex v) -> Edge;

    enum class Family
    {
        empty,
        complete,
        cycle,
        path,
        odd_wheel,
        circulant,
        theorem41_star,
        petersen,
        grotzsch,
        random
    };

    // Family tag plus parameters. Meaning of `params` per family:
    //   empty n | complete n | cycle n | path n | odd_wheel cycle_length (odd, >= 3)
    //   circulant p q (p > 2q >= 2) | theorem41_star n eps | random n edge_probability seed
    struct GraphSpec
    {
        Family family = Family::complete;
        std::vector<double> params;
    };

    [[nodiscard]] auto parse_family(const std::string & name) -> Family;
    [[nodiscard]] auto generate(const GraphSpec & spec) -> Graph;

    [[nodiscard]] auto empty_graph(std::size_t n) -> Graph;
    [[nodiscard]] auto complete_graph(std::size_t n) -> Graph;
    [[nodiscard]] auto cycle_graph(std::size_t n) -> Graph;
    [[nodiscard]] auto path_graph(std::size_t n) -> Graph;
    // Odd cycle on vertices 0..len-1 plus hub vertex len adjacent to all of them.
    [[nodiscard]] auto odd_wheel(std::size_t cycle_length) -> Graph;
    // i ~ j iff the circular index distance min(|i-j|, p-|i-j|) is at least q.
    [[nodiscard]] auto circulant_graph(unsigned p, unsigned q) -> Graph;
    // 6n+1 equidistant points on a circle of diameter 2+eps joined when their chord is
    // at least 1, plus a universal center vertex (index 6n+1).
    [[nodiscard]] auto theorem41_star(unsigned n, double epsilon) -> Graph;
    // Smallest n >= 2 with (2+eps) sin(n pi / (6n+1)) >= 1.
    [[nodiscard]] auto smallest_star_n(double epsilon) -> unsigned;
    [[nodiscard]] auto petersen_graph() -> Graph;
    [[nodiscard]] auto grotzsch_graph() -> Graph;
    [[nodiscard]] auto random_graph(std::size_t n, double edge_probability, std::uint64_t seed) -> Graph;

    [[nodiscard]] auto compose(Composition kind, const Graph & g, const Graph * h = nullptr) -> Graph;
    [[nodiscard]] auto join(const Graph & g, const Graph & h) -> Graph;
    // Vertex (u, x) has index u * h.order() + x.
    [[nodiscard]] auto cartesian_product(const Graph & g, const Graph & h) -> Graph;
    // Vertices of g keep their indices; vertex x of h becomes g.order() + x.
    [[nodiscard]] auto disjoint_union(const Graph & g, const Graph & h) -> Graph;
    [[nodiscard]] auto complement(const Graph & g) -> Graph;

    // Replaces edge uv by the path u-x-y-v with x = n, y = n+1.
    [[nodiscard]] auto double_subdivide(const Graph & g, Edge e) -> Graph;

    // Deletes adjacent degree-2 pairs that lie on a four-cycle until none remain.
    // Surviving vertices keep their relative order.
    [[nodiscard]] auto reduce_four_cycle_pairs(const Graph & g) -> Graph;

    [[nodiscard]] auto induced_subgraph(const Graph & g, std::span<const Vertex> keep) -> Graph;

    struct Homomorphism
    {
        Graph source;
        Graph target;
        std::vector<Vertex> map;
    };

    // Throws ParameterError when the map is not total or has an out-of-range image.
    [[nodiscard]] auto verify_homomorphism(const Homomorphism & phi) -> bool;
}
