#include <planewidth/bounds.hpp>
#include <planewidth/error.hpp>
#include <planewidth/partition.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <variant>

namespace planewidth
{
    namespace
    {
        constexpr double pi = std::numbers::pi;
        constexpr double same_value = 1e-12;

        // A vertex whose neighbourhood holds an odd cycle is the hub of an odd-wheel subgraph.
        auto has_odd_wheel(const Graph & g) -> bool
        {
            std::vector<int> side(g.order(), -1);
            std::vector<char> in_hood(g.order(), 0);
            for (Vertex hub = 0; hub < g.order(); ++hub) {
                auto hood = g.neighbours(hub);
                for (auto v : hood)
                    in_hood[v] = 1, side[v] = -1;
                bool odd = false;
                for (auto start : hood) {
                    if (side[start] != -1)
                        continue;
                    side[start] = 0;
                    std::vector<Vertex> stack{start};
                    while (! stack.empty() && ! odd) {
                        auto u = stack.back();
                        stack.pop_back();
                        for (auto w : g.neighbours(u)) {
                            if (! in_hood[w])
                                continue;
                            if (side[w] == -1) {
                                side[w] = 1 - side[u];
                                stack.push_back(w);
                            } else if (side[w] == side[u]) {
                                odd = true;
                                break;
                            }
                        }
                    }
                    if (odd)
                        break;
                }
                for (auto v : hood)
                    in_hood[v] = 0;
                if (odd)
                    return true;
            }
            return false;
        }
    }

    auto table_value(std::size_t n) -> std::optional<double>
    {
        switch (n) {
            case 2:
            case 3: return 1.0;
            case 4: return std::sqrt(2.0);
            case 5: return (1 + std::sqrt(5.0)) / 2;
            case 6: return 2 * std::sin(72 * pi / 180);
            case 7: return 2.0;
            case 8: return 1 / (2 * std::sin(pi / 14));
            default: return std::nullopt;
        }
    }

    auto kn_lower(std::size_t n) -> double
    {
        if (n < 2)
            throw ParameterError("kn_lower needs n >= 2");
        if (auto v = table_value(n))
            return *v;
        double formula = std::sqrt(2 * std::sqrt(3.0) / pi * static_cast<double>(n)) - 1;
        return std::max(*table_value(8), formula);
    }

    auto kn_upper(std::size_t n) -> double
    {
        if (n < 2)
            return 0.0;
        if (auto v = table_value(n))
            return *v;
        return width(lattice_complete_arrangement(n));
    }

    auto brute_force_extent(const Graph & g) -> double
    {
        return 1 + kn_upper(std::max<std::size_t>(2, greedy_coloring(g).k));
    }

    auto lower_bound(const Graph & g, const ChromaticResult & chi) -> LowerBound
    {
        if (g.size() == 0)
            throw ParameterError("lower bound needs a graph with at least one edge");

        struct Candidate
        {
            double value;
            bool strict;
            const char * tag;
        };
        std::vector<Candidate> candidates{{1.0, false, tag::edge}};

        auto omega = max_clique(g).size();
        if (omega >= 2)
            candidates.push_back({kn_lower(omega), false, omega <= 8 ? tag::clique_table : tag::clique_formula});

        // Every odd wheel has width exactly sqrt2, and subgraphs never widen.
        if (has_odd_wheel(g))
            candidates.push_back({std::sqrt(2.0), false, tag::odd_wheel});

        const unsigned k = chi.lower;
        if (k >= 4)
            candidates.push_back({2 / std::sqrt(3.0), true, tag::chi_threshold});
        if (k >= 5)
            candidates.push_back({std::sqrt(2.0), true, tag::chi_threshold});
        if (k >= 8)
            candidates.push_back({2.0, true, tag::chi_threshold});

        // A width below 3t/2 admits a (3t^2+3t+1)-coloring by tiling.
        unsigned t = 0;
        while (tiling_color_bound(t + 1) < k)
            ++t;
        if (t >= 1)
            candidates.push_back({1.5 * t, false, tag::tiling_inversion});

        LowerBound result;
        for (auto & c : candidates)
            result.value = std::max(result.value, c.value);
        for (auto & c : candidates)
            if (c.value >= result.value - same_value) {
                result.strict = result.strict || c.strict;
                if (std::find(result.provenance.begin(), result.provenance.end(), c.tag) == result.provenance.end())
                    result.provenance.emplace_back(c.tag);
            }
        return result;
    }

    namespace
    {
        struct Witness
        {
            Realization realization;
            double width;
            const char * tag;
        };

        auto zero_width(const Graph & g) -> Realization
        {
            return Realization{std::vector<Point>(g.order(), Point{}), NormSpec::euclidean()};
        }

        // Best witness for a component graph of a composition.
        auto best_for(const Graph & g, const BoundsConfig & cfg) -> Realization
        {
            if (g.size() == 0)
                return zero_width(g);
            auto chi = chromatic_number(g, cfg.chi_budget);
            BoundsConfig inner = cfg;
            inner.circular.reset();
            return upper_bound(g, chi, inner).witness;
        }

        void add_if_valid(const Graph & g, Realization r, const char * tag, std::vector<Witness> & out)
        {
            auto eval = evaluate(g, r);
            if (! eval.valid)
                return;
            out.push_back({std::move(r), eval.width, tag});
        }

        void composition_witnesses(const Graph & g, const ComposedOrigin & origin, const BoundsConfig & cfg,
            std::vector<Witness> & out)
        {
            if (origin.kind == Composition::complement || ! origin.left || ! origin.right)
                return;
            const Graph & left = *origin.left;
            const Graph & right = *origin.right;
            auto rl = best_for(left, cfg);
            auto rr = best_for(right, cfg);
            switch (origin.kind) {
                case Composition::join:
                    add_if_valid(g, join_realization(left, right, rl, rr), tag::join, out);
                    break;
                case Composition::cartesian: {
                    // Any rotation of one factor is still a realization; keep the narrowest sum.
                    std::optional<Realization> best;
                    double best_width = std::numeric_limits<double>::infinity();
                    for (int k = 0; k < 12; ++k) {
                        auto turned = transformed(rr, k * pi / 12, {});
                        auto r = product_realization(left, right, rl, turned);
                        double w = width(r);
                        if (w < best_width) {
                            best_width = w;
                            best = std::move(r);
                        }
                    }
                    add_if_valid(g, std::move(*best), tag::product, out);
                    break;
                }
                case Composition::disjoint_union:
                    add_if_valid(g, union_realization(left, right, rl, rr), tag::disjoint_union, out);
                    break;
                case Composition::complement: break;
            }
        }

        void collect(const Graph & g, const ChromaticResult & chi, const BoundsConfig & cfg, std::vector<Witness> & out)
        {
            add_if_valid(g, from_coloring(g, chi.witness), tag::coloring, out);

            if (cfg.opt_restarts > 0) {
                OptimizeConfig oc;
                oc.restarts = cfg.opt_restarts;
                oc.seed = cfg.opt_seed;
                auto result = optimize(g, oc);
                add_if_valid(g, std::move(result.realization), tag::optimizer, out);
            }

            if (cfg.circular)
                add_if_valid(g, from_circular(g, cfg.circular->angles, cfg.circular->chi_c), tag::circular, out);

            if (auto * c = std::get_if<CirculantOrigin>(&g.origin()))
                add_if_valid(g, from_circular(g, circulant_angles(c->p), static_cast<double>(c->p) / c->q), tag::circular, out);
            else if (auto * s = std::get_if<StarOrigin>(&g.origin()))
                add_if_valid(g, star_arrangement(s->n, s->epsilon), tag::circular, out);
            else if (auto * composed = std::get_if<ComposedOrigin>(&g.origin()))
                composition_witnesses(g, *composed, cfg, out);
        }
    }

    auto upper_bound(const Graph & g, const ChromaticResult & chi, const BoundsConfig & cfg) -> UpperBound
    {
        if (g.size() == 0)
            throw ParameterError("upper bound needs a graph with at least one edge");
        std::vector<Witness> witnesses;
        collect(g, chi, cfg, witnesses);
        if (witnesses.empty())
            throw ConsistencyError("no construction produced a valid witness");

        auto best = std::min_element(witnesses.begin(), witnesses.end(),
            [](const Witness & a, const Witness & b) { return a.width < b.width; });
        UpperBound result{best->width, best->realization, {}};
        for (auto & w : witnesses)
            if (w.width <= result.value + same_value &&
                std::find(result.provenance.begin(), result.provenance.end(), w.tag) == result.provenance.end())
                result.provenance.emplace_back(w.tag);
        return result;
    }

    auto pw_interval(const Graph & g, const BoundsConfig & cfg) -> BoundReport
    {
        if (g.size() == 0)
            throw ParameterError("plane-width bounds need a graph with at least one edge");
        BoundReport report;
        report.chi = chromatic_number(g, cfg.chi_budget);
        report.clique = max_clique(g).size();
        auto lower = lower_bound(g, report.chi);
        auto upper = upper_bound(g, report.chi, cfg);
        if (lower.value > upper.value + 1e-9)
            throw ConsistencyError("bound interval inverted: lower " + std::to_string(lower.value) + " > upper " +
                std::to_string(upper.value));
        report.lower = lower.value;
        report.lower_strict = lower.strict;
        report.lower_provenance = std::move(lower.provenance);
        report.upper = upper.value;
        report.upper_witness = std::move(upper.witness);
        report.upper_provenance = std::move(upper.provenance);
        return report;
    }
}
