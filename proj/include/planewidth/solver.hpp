#pragma once

#include <planewidth/coloring.hpp>
#include <planewidth/graph.hpp>

#include <chrono>
#include <vector>

namespace planewidth
{
    // Maximum clique by branch and bound with a greedy-coloring bound. Vertices are
    // tried in degree order, ties by lowest index, so the result is deterministic.
    [[nodiscard]] auto max_clique(const Graph & g) -> std::vector<Vertex>;

    // DSATUR greedy coloring.
    [[nodiscard]] auto greedy_coloring(const Graph & g) -> Coloring;

    struct ChromaticResult
    {
        unsigned lower = 0;
        unsigned upper = 0;
        Coloring witness; // proper, uses `upper` colors
        bool exact = false;
        bool timed_out = false;
    };

    inline constexpr std::chrono::milliseconds default_chromatic_budget{10'000};

    // Exact chromatic number by saturation-ordered branch and bound seeded with the
    // maximum clique. On timeout the best known (lower, upper) pair is returned with
    // `timed_out` set.
    [[nodiscard]] auto chromatic_number(const Graph & g, std::chrono::milliseconds budget = default_chromatic_budget)
        -> ChromaticResult;
}
