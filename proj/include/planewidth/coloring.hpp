#pragma once

#include <planewidth/graph.hpp>

#include <optional>
#include <vector>

namespace planewidth
{
    // Vertex-indexed color assignment. Properness is checked against a graph, never assumed.
    struct Coloring
    {
        std::vector<unsigned> colors;
        unsigned k = 0; // max color + 1

        [[nodiscard]] static auto from_colors(std::vector<unsigned> colors) -> Coloring;

        friend auto operator==(const Coloring &, const Coloring &) -> bool = default;
    };

    [[nodiscard]] auto monochromatic_edge(const Graph & g, const Coloring & c) -> std::optional<Edge>;
    [[nodiscard]] auto is_proper(const Graph & g, const Coloring & c) -> bool;

    // Throws CertificateError naming the first monochromatic edge, ParameterError on size mismatch.
    void require_proper(const Graph & g, const Coloring & c);

    // Relabels colors to 0..k-1 in order of first appearance, dropping unused colors.
    [[nodiscard]] auto compact(const Coloring & c) -> Coloring;

    // The coloring seen as a homomorphism into K_k.
    [[nodiscard]] auto as_homomorphism(const Graph & g, const Coloring & c) -> Homomorphism;
}
