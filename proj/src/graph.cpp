#include <planewidth/error.hpp>
#include <planewidth/graph.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace planewidth
{
    auto to_string(Composition kind) -> std::string
    {
        switch (kind) {
            case Composition::join: return "join";
            case Composition::cartesian: return "cartesian";
            case Composition::disjoint_union: return "disjoint-union";
            case Composition::complement: return "complement";
        }
        return "unknown";
    }

    auto make_edge(Vertex u, Vertex v) -> Edge
    {
        return u < v ? Edge{u, v} : Edge{v, u};
    }

    Graph::Graph(std::size_t order) :
        Graph(order, std::span<const Edge>{})
    {
    }

    Graph::Graph(std::size_t order, std::span<const Edge> edges, Origin origin) :
        neighbours_(order),
        words_per_row_((order + 63) / 64),
        origin_(std::move(origin))
    {
        matrix_.assign(order * words_per_row_, 0);
        edges_.reserve(edges.size());
        for (auto [u, v] : edges) {
            if (u >= order || v >= order)
                throw ParameterError("edge {" + std::to_string(u) + ", " + std::to_string(v) + "} has an endpoint outside 0.." +
                    std::to_string(order) + "-1");
            if (u == v)
                throw ParameterError("self-loop at vertex " + std::to_string(u));
            edges_.push_back(make_edge(u, v));
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

        for (auto [u, v] : edges_) {
            neighbours_[u].push_back(v);
            neighbours_[v].push_back(u);
            matrix_[u * words_per_row_ + v / 64] |= std::uint64_t{1} << (v % 64);
            matrix_[v * words_per_row_ + u / 64] |= std::uint64_t{1} << (u % 64);
        }
        for (auto & n : neighbours_)
            std::sort(n.begin(), n.end());
    }

    auto Graph::adjacent(Vertex u, Vertex v) const -> bool
    {
        return (matrix_[u * words_per_row_ + v / 64] >> (v % 64)) & 1;
    }

    auto Graph::with_origin(Origin origin) const -> Graph
    {
        Graph result = *this;
        result.origin_ = std::move(origin);
        return result;
    }

    auto parse_family(const std::string & name) -> Family
    {
        if (name == "empty") return Family::empty;
        if (name == "complete") return Family::complete;
        if (name == "cycle") return Family::cycle;
        if (name == "path") return Family::path;
        if (name == "odd-wheel" || name == "wheel") return Family::odd_wheel;
        if (name == "circulant") return Family::circulant;
        if (name == "theorem41-star" || name == "star") return Family::theorem41_star;
        if (name == "petersen") return Family::petersen;
        if (name == "grotzsch") return Family::grotzsch;
        if (name == "random") return Family::random;
        throw ParameterError("unknown graph family '" + name + "'");
    }

    namespace
    {
        auto as_count(const GraphSpec & spec, std::size_t index, const char * what) -> std::size_t
        {
            if (index >= spec.params.size())
                throw ParameterError(std::string("missing parameter: ") + what);
            double value = spec.params[index];
            if (! (value >= 0) || value != std::floor(value))
                throw ParameterError(std::string(what) + " must be a nonnegative integer");
            return static_cast<std::size_t>(value);
        }
    }

    auto generate(const GraphSpec & spec) -> Graph
    {
        switch (spec.family) {
            case Family::empty: return empty_graph(as_count(spec, 0, "n"));
            case Family::complete: return complete_graph(as_count(spec, 0, "n"));
            case Family::cycle: return cycle_graph(as_count(spec, 0, "n"));
            case Family::path: return path_graph(as_count(spec, 0, "n"));
            case Family::odd_wheel: return odd_wheel(as_count(spec, 0, "cycle length"));
            case Family::circulant:
                return circulant_graph(static_cast<unsigned>(as_count(spec, 0, "p")), static_cast<unsigned>(as_count(spec, 1, "q")));
            case Family::theorem41_star: {
                // A single parameter is epsilon alone; n is then the smallest admissible value.
                if (spec.params.size() == 1)
                    return theorem41_star(smallest_star_n(spec.params[0]), spec.params[0]);
                if (spec.params.size() < 2)
                    throw ParameterError("theorem41-star needs n and epsilon");
                return theorem41_star(static_cast<unsigned>(as_count(spec, 0, "n")), spec.params[1]);
            }
            case Family::petersen: return petersen_graph();
            case Family::grotzsch: return grotzsch_graph();
            case Family::random: {
                if (spec.params.size() < 2)
                    throw ParameterError("random needs n and edge probability");
                auto seed = spec.params.size() > 2 ? as_count(spec, 2, "seed") : 0;
                return random_graph(as_count(spec, 0, "n"), spec.params[1], seed);
            }
        }
        throw ParameterError("unknown graph family");
    }

    auto empty_graph(std::size_t n) -> Graph
    {
        return Graph(n);
    }

    auto complete_graph(std::size_t n) -> Graph
    {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        return Graph(n, edges);
    }

    auto cycle_graph(std::size_t n) -> Graph
    {
        if (n < 3)
            throw ParameterError("cycle needs at least 3 vertices");
        std::vector<Edge> edges;
        for (Vertex v = 0; v < n; ++v)
            edges.push_back(make_edge(v, static_cast<Vertex>((v + 1) % n)));
        return Graph(n, edges);
    }

    auto path_graph(std::size_t n) -> Graph
    {
        std::vector<Edge> edges;
        for (Vertex v = 0; v + 1 < n; ++v)
            edges.emplace_back(v, v + 1);
        return Graph(n, edges);
    }

    auto odd_wheel(std::size_t cycle_length) -> Graph
    {
        if (cycle_length < 3 || cycle_length % 2 == 0)
            throw ParameterError("odd wheel needs an odd cycle length >= 3, got " + std::to_string(cycle_length));
        std::vector<Edge> edges;
        auto hub = static_cast<Vertex>(cycle_length);
        for (Vertex v = 0; v < cycle_length; ++v) {
            edges.push_back(make_edge(v, static_cast<Vertex>((v + 1) % cycle_length)));
            edges.emplace_back(v, hub);
        }
        return Graph(cycle_length + 1, edges);
    }

    auto circulant_graph(unsigned p, unsigned q) -> Graph
    {
        if (q < 1 || p <= 2 * q)
            throw ParameterError("circulant needs p > 2q >= 2, got p=" + std::to_string(p) + " q=" + std::to_string(q));
        std::vector<Edge> edges;
        for (Vertex i = 0; i < p; ++i)
            for (Vertex j = i + 1; j < p; ++j) {
                auto gap = j - i;
                if (std::min(gap, p - gap) >= q)
                    edges.emplace_back(i, j);
            }
        return Graph(p, edges, CirculantOrigin{p, q});
    }

    auto smallest_star_n(double epsilon) -> unsigned
    {
        if (! (epsilon > 0))
            throw ParameterError("epsilon must be positive");
        for (unsigned n = 2; n < 1'000'000; ++n)
            if ((2.0 + epsilon) * std::sin(n * std::numbers::pi / (6.0 * n + 1.0)) >= 1.0)
                return n;
        throw ParameterError("epsilon too small: no admissible n below 10^6");
    }

    auto theorem41_star(unsigned n, double epsilon) -> Graph
    {
        if (n < 1)
            throw ParameterError("theorem41-star needs n >= 1");
        if (! (epsilon > 0))
            throw ParameterError("epsilon must be positive");
        const unsigned points = 6 * n + 1;
        const double diameter = 2.0 + epsilon;
        std::vector<Edge> edges;
        for (Vertex i = 0; i < points; ++i)
            for (Vertex j = i + 1; j < points; ++j) {
                auto gap = std::min(j - i, points - (j - i));
                double chord = diameter * std::sin(gap * std::numbers::pi / points);
                if (chord >= 1.0)
                    edges.emplace_back(i, j);
            }
        for (Vertex i = 0; i < points; ++i)
            edges.emplace_back(i, points);
        return Graph(points + 1, edges, StarOrigin{n, epsilon});
    }

    auto petersen_graph() -> Graph
    {
        std::vector<Edge> edges;
        for (Vertex i = 0; i < 5; ++i) {
            edges.push_back(make_edge(i, (i + 1) % 5));
            edges.push_back(make_edge(i, i + 5));
            edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
        }
        return Graph(10, edges);
    }

    auto grotzsch_graph() -> Graph
    {
        // Mycielskian of C5: outer cycle 0..4, shadows 5..9, apex 10.
        std::vector<Edge> edges;
        for (Vertex i = 0; i < 5; ++i) {
            Vertex next = (i + 1) % 5, prev = (i + 4) % 5;
            edges.push_back(make_edge(i, next));
            edges.push_back(make_edge(5 + i, next));
            edges.push_back(make_edge(5 + i, prev));
            edges.push_back(make_edge(5 + i, 10));
        }
        return Graph(11, edges);
    }

    auto random_graph(std::size_t n, double edge_probability, std::uint64_t seed) -> Graph
    {
        if (! (edge_probability >= 0 && edge_probability <= 1))
            throw ParameterError("edge probability must lie in [0, 1]");
        std::mt19937_64 rng(seed);
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) {
                double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                if (x < edge_probability)
                    edges.emplace_back(u, v);
            }
        return Graph(n, edges);
    }

    auto compose(Composition kind, const Graph & g, const Graph * h) -> Graph
    {
        if (kind != Composition::complement && ! h)
            throw ParameterError(to_string(kind) + " needs two graphs");
        switch (kind) {
            case Composition::join: return join(g, *h);
            case Composition::cartesian: return cartesian_product(g, *h);
            case Composition::disjoint_union: return disjoint_union(g, *h);
            case Composition::complement: return complement(g);
        }
        throw ParameterError("unknown composition");
    }

    namespace
    {
        auto origin_of(Composition kind, const Graph & g, const Graph * h) -> Origin
        {
            return ComposedOrigin{kind, std::make_shared<const Graph>(g), h ? std::make_shared<const Graph>(*h) : nullptr};
        }
    }

    auto disjoint_union(const Graph & g, const Graph & h) -> Graph
    {
        auto offset = static_cast<Vertex>(g.order());
        std::vector<Edge> edges = g.edges();
        for (auto [x, y] : h.edges())
            edges.emplace_back(offset + x, offset + y);
        return Graph(g.order() + h.order(), edges, origin_of(Composition::disjoint_union, g, &h));
    }

    auto join(const Graph & g, const Graph & h) -> Graph
    {
        auto offset = static_cast<Vertex>(g.order());
        std::vector<Edge> edges = g.edges();
        for (auto [x, y] : h.edges())
            edges.emplace_back(offset + x, offset + y);
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex x = 0; x < h.order(); ++x)
                edges.emplace_back(u, offset + x);
        return Graph(g.order() + h.order(), edges, origin_of(Composition::join, g, &h));
    }

    auto cartesian_product(const Graph & g, const Graph & h) -> Graph
    {
        const auto m = static_cast<Vertex>(h.order());
        std::vector<Edge> edges;
        for (Vertex u = 0; u < g.order(); ++u)
            for (auto [x, y] : h.edges())
                edges.emplace_back(u * m + x, u * m + y);
        for (auto [u, v] : g.edges())
            for (Vertex x = 0; x < m; ++x)
                edges.emplace_back(u * m + x, v * m + x);
        return Graph(g.order() * h.order(), edges, origin_of(Composition::cartesian, g, &h));
    }

    auto complement(const Graph & g) -> Graph
    {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < g.order(); ++u)
            for (Vertex v = u + 1; v < g.order(); ++v)
                if (! g.adjacent(u, v))
                    edges.emplace_back(u, v);
        return Graph(g.order(), edges, origin_of(Composition::complement, g, nullptr));
    }

    auto double_subdivide(const Graph & g, Edge e) -> Graph
    {
        auto [u, v] = e;
        if (u >= g.order() || v >= g.order() || u == v || ! g.adjacent(u, v))
            throw ParameterError("{" + std::to_string(u) + ", " + std::to_string(v) + "} is not an edge");
        auto x = static_cast<Vertex>(g.order()), y = x + 1;
        std::vector<Edge> edges;
        for (auto edge : g.edges())
            if (edge != make_edge(u, v))
                edges.push_back(edge);
        edges.emplace_back(u, x);
        edges.emplace_back(x, y);
        edges.emplace_back(v, y);
        return Graph(g.order() + 2, edges);
    }

    auto induced_subgraph(const Graph & g, std::span<const Vertex> keep) -> Graph
    {
        std::vector<std::optional<Vertex>> relabel(g.order());
        Vertex next = 0;
        for (auto v : keep) {
            if (v >= g.order())
                throw ParameterError("vertex " + std::to_string(v) + " out of range");
            if (! relabel[v])
                relabel[v] = next++;
        }
        std::vector<Edge> edges;
        for (auto [u, v] : g.edges())
            if (relabel[u] && relabel[v])
                edges.push_back(make_edge(*relabel[u], *relabel[v]));
        return Graph(next, edges);
    }

    namespace
    {
        // First adjacent pair (a, b), a < b, both of degree 2, lying on a four-cycle a-b-d-c-a.
        auto find_reducible_pair(const Graph & g) -> std::optional<Edge>
        {
            for (auto [a, b] : g.edges()) {
                if (g.degree(a) != 2 || g.degree(b) != 2)
                    continue;
                auto other = [&](Vertex v, Vertex not_this) {
                    auto n = g.neighbours(v);
                    return n[0] == not_this ? n[1] : n[0];
                };
                Vertex c = other(a, b), d = other(b, a);
                if (c != d && c != b && d != a && g.adjacent(c, d))
                    return Edge{a, b};
            }
            return std::nullopt;
        }
    }

    auto reduce_four_cycle_pairs(const Graph & g) -> Graph
    {
        Graph current = g;
        while (auto pair = find_reducible_pair(current)) {
            std::vector<Vertex> keep;
            for (Vertex v = 0; v < current.order(); ++v)
                if (v != pair->first && v != pair->second)
                    keep.push_back(v);
            current = induced_subgraph(current, keep);
        }
        return current;
    }

    auto verify_homomorphism(const Homomorphism & phi) -> bool
    {
        if (phi.map.size() != phi.source.order())
            throw ParameterError("homomorphism map has " + std::to_string(phi.map.size()) + " entries for " +
                std::to_string(phi.source.order()) + " source vertices");
        for (auto image : phi.map)
            if (image >= phi.target.order())
                throw ParameterError("homomorphism image " + std::to_string(image) + " outside target");
        for (auto [u, v] : phi.source.edges()) {
            auto a = phi.map[u], b = phi.map[v];
            if (a == b || ! phi.target.adjacent(a, b))
                return false;
        }
        return true;
    }
}
