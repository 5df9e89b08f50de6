#include <planewidth/solver.hpp>

#include <algorithm>
#include <numeric>
#include <optional>

namespace planewidth
{
    namespace
    {
        auto degree_order(const Graph & g) -> std::vector<Vertex>
        {
            std::vector<Vertex> order(g.order());
            std::iota(order.begin(), order.end(), Vertex{0});
            std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
            return order;
        }

        class CliqueSearch
        {
        public:
            explicit CliqueSearch(const Graph & g) :
                g_(g)
            {
            }

            auto run() -> std::vector<Vertex>
            {
                std::vector<Vertex> current;
                expand(current, degree_order(g_));
                std::sort(best_.begin(), best_.end());
                return best_;
            }

        private:
            void expand(std::vector<Vertex> & current, const std::vector<Vertex> & candidates)
            {
                // Greedy-colour the candidates; a vertex's colour number bounds the clique
                // size reachable through it and everything before it.
                std::vector<std::vector<Vertex>> classes;
                for (auto v : candidates) {
                    auto fits = [&](const std::vector<Vertex> & cls) {
                        return std::none_of(cls.begin(), cls.end(), [&](Vertex w) { return g_.adjacent(v, w); });
                    };
                    auto it = std::find_if(classes.begin(), classes.end(), fits);
                    if (it == classes.end())
                        classes.emplace_back(1, v);
                    else
                        it->push_back(v);
                }
                std::vector<Vertex> order;
                std::vector<std::size_t> bound;
                for (std::size_t c = 0; c < classes.size(); ++c)
                    for (auto v : classes[c]) {
                        order.push_back(v);
                        bound.push_back(c + 1);
                    }

                for (std::size_t i = order.size(); i-- > 0;) {
                    if (current.size() + bound[i] <= best_.size())
                        return;
                    Vertex v = order[i];
                    current.push_back(v);
                    std::vector<Vertex> next;
                    for (std::size_t j = 0; j < i; ++j)
                        if (g_.adjacent(v, order[j]))
                            next.push_back(order[j]);
                    if (next.empty()) {
                        if (current.size() > best_.size())
                            best_ = current;
                    }
                    else
                        expand(current, next);
                    current.pop_back();
                }
            }

            const Graph & g_;
            std::vector<Vertex> best_;
        };

        class DsaturSearch
        {
        public:
            DsaturSearch(const Graph & g, std::chrono::milliseconds budget) :
                g_(g),
                deadline_(std::chrono::steady_clock::now() + budget)
            {
            }

            auto run() -> ChromaticResult
            {
                const auto n = g_.order();
                ChromaticResult result;
                if (n == 0) {
                    result.exact = true;
                    return result;
                }

                auto clique = max_clique(g_);
                lower_ = static_cast<unsigned>(std::max<std::size_t>(clique.size(), 1));
                best_ = greedy_coloring(g_);
                if (best_.k > lower_) {
                    stride_ = best_.k;
                    colour_.assign(n, -1);
                    conflicts_.assign(n * stride_, 0);
                    saturation_.assign(n, 0);
                    unsigned used = 0;
                    for (auto v : clique)
                        assign(v, used++);
                    search(clique.size(), used);
                }

                result.lower = timed_out_ ? lower_ : best_.k;
                result.upper = best_.k;
                result.witness = best_;
                result.exact = ! timed_out_;
                result.timed_out = timed_out_;
                return result;
            }

        private:
            void assign(Vertex v, unsigned c)
            {
                colour_[v] = static_cast<int>(c);
                for (auto w : g_.neighbours(v))
                    if (conflicts_[w * stride_ + c]++ == 0)
                        ++saturation_[w];
            }

            void unassign(Vertex v)
            {
                auto c = static_cast<unsigned>(colour_[v]);
                colour_[v] = -1;
                for (auto w : g_.neighbours(v))
                    if (--conflicts_[w * stride_ + c] == 0)
                        --saturation_[w];
            }

            auto out_of_time() -> bool
            {
                if (timed_out_)
                    return true;
                if (++nodes_ % 4096 == 0 && std::chrono::steady_clock::now() > deadline_)
                    timed_out_ = true;
                return timed_out_;
            }

            void search(std::size_t coloured, unsigned used)
            {
                if (out_of_time())
                    return;
                const auto n = g_.order();
                if (coloured == n) {
                    std::vector<unsigned> colours(n);
                    for (std::size_t v = 0; v < n; ++v)
                        colours[v] = static_cast<unsigned>(colour_[v]);
                    best_ = Coloring{std::move(colours), used};
                    return;
                }

                // Highest saturation, then highest degree, then lowest index.
                std::optional<Vertex> pick;
                for (Vertex v = 0; v < n; ++v) {
                    if (colour_[v] >= 0)
                        continue;
                    if (! pick || saturation_[v] > saturation_[*pick] ||
                        (saturation_[v] == saturation_[*pick] && g_.degree(v) > g_.degree(*pick)))
                        pick = v;
                }
                Vertex v = *pick;

                for (unsigned c = 0; c <= used; ++c) {
                    if (std::max(used, c + 1) >= best_.k)
                        break;
                    if (conflicts_[v * stride_ + c] > 0)
                        continue;
                    assign(v, c);
                    search(coloured + 1, std::max(used, c + 1));
                    unassign(v);
                    if (best_.k <= lower_ || timed_out_)
                        return;
                }
            }

            const Graph & g_;
            std::chrono::steady_clock::time_point deadline_;
            unsigned lower_ = 0;
            Coloring best_;
            std::vector<int> colour_;
            std::vector<unsigned> conflicts_;
            std::vector<unsigned> saturation_;
            unsigned stride_ = 0; // colours per row of conflicts_, fixed at the initial upper bound
            std::size_t nodes_ = 0;
            bool timed_out_ = false;
        };
    }

    auto max_clique(const Graph & g) -> std::vector<Vertex>
    {
        return CliqueSearch(g).run();
    }

    auto greedy_coloring(const Graph & g) -> Coloring
    {
        const auto n = g.order();
        std::vector<int> colour(n, -1);
        std::vector<std::vector<bool>> seen(n);
        std::vector<unsigned> saturation(n, 0);
        unsigned k = 0;
        for (std::size_t step = 0; step < n; ++step) {
            std::optional<Vertex> pick;
            for (Vertex v = 0; v < n; ++v) {
                if (colour[v] >= 0)
                    continue;
                if (! pick || saturation[v] > saturation[*pick] ||
                    (saturation[v] == saturation[*pick] && g.degree(v) > g.degree(*pick)))
                    pick = v;
            }
            Vertex v = *pick;
            unsigned c = 0;
            while (c < seen[v].size() && seen[v][c])
                ++c;
            colour[v] = static_cast<int>(c);
            k = std::max(k, c + 1);
            for (auto w : g.neighbours(v)) {
                if (seen[w].size() <= c)
                    seen[w].resize(c + 1, false);
                if (! seen[w][c]) {
                    seen[w][c] = true;
                    ++saturation[w];
                }
            }
        }
        std::vector<unsigned> colours(n);
        for (std::size_t v = 0; v < n; ++v)
            colours[v] = static_cast<unsigned>(colour[v]);
        return Coloring{std::move(colours), k};
    }

    auto chromatic_number(const Graph & g, std::chrono::milliseconds budget) -> ChromaticResult
    {
        return DsaturSearch(g, budget).run();
    }
}
