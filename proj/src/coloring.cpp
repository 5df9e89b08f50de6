#include <planewidth/coloring.hpp>
#include <planewidth/error.hpp>

#include <algorithm>
#include <string>

namespace planewidth
{
    auto Coloring::from_colors(std::vector<unsigned> colors) -> Coloring
    {
        unsigned k = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
        return Coloring{std::move(colors), k};
    }

    auto monochromatic_edge(const Graph & g, const Coloring & c) -> std::optional<Edge>
    {
        if (c.colors.size() != g.order())
            throw ParameterError("coloring has " + std::to_string(c.colors.size()) + " entries for " +
                std::to_string(g.order()) + " vertices");
        for (auto e : g.edges())
            if (c.colors[e.first] == c.colors[e.second])
                return e;
        return std::nullopt;
    }

    auto is_proper(const Graph & g, const Coloring & c) -> bool
    {
        return ! monochromatic_edge(g, c);
    }

    void require_proper(const Graph & g, const Coloring & c)
    {
        if (auto e = monochromatic_edge(g, c))
            throw CertificateError("coloring is not proper: edge {" + std::to_string(e->first) + ", " +
                std::to_string(e->second) + "} is monochromatic (color " + std::to_string(c.colors[e->first]) + ")");
    }

    auto compact(const Coloring & c) -> Coloring
    {
        std::vector<int> relabel(c.k, -1);
        std::vector<unsigned> colors(c.colors.size());
        unsigned next = 0;
        for (std::size_t v = 0; v < c.colors.size(); ++v) {
            auto & slot = relabel[c.colors[v]];
            if (slot < 0)
                slot = static_cast<int>(next++);
            colors[v] = static_cast<unsigned>(slot);
        }
        return Coloring{std::move(colors), next};
    }

    auto as_homomorphism(const Graph & g, const Coloring & c) -> Homomorphism
    {
        if (c.colors.size() != g.order())
            throw ParameterError("coloring size does not match graph order");
        return Homomorphism{g, complete_graph(c.k), std::vector<Vertex>(c.colors.begin(), c.colors.end())};
    }
}
