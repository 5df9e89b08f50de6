#pragma once

#include <planewidth/geometry.hpp>
#include <planewidth/graph.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace planewidth::test
{
    inline constexpr double pi = std::numbers::pi;
    inline const double sqrt2 = std::sqrt(2.0);
    inline const double sqrt3 = std::sqrt(3.0);
    inline const double phi = (1 + std::sqrt(5.0)) / 2;

    // Uniform double in [0, 1) from the top 53 bits, identical on every platform.
    inline auto uniform(std::mt19937_64 & rng) -> double
    {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    }

    inline auto random_points(std::size_t n, std::mt19937_64 & rng, double side = 1) -> std::vector<Point>
    {
        std::vector<Point> pts;
        for (std::size_t i = 0; i < n; ++i)
            pts.push_back({side * uniform(rng), side * uniform(rng)});
        return pts;
    }

    // Random points rescaled about the first point so the diameter is exactly as computed, then
    // divided by it: unit diameter up to one rounding.
    inline auto unit_diameter_points(std::size_t n, std::mt19937_64 & rng) -> std::vector<Point>
    {
        auto pts = random_points(n, rng);
        double d = diameter(pts).value;
        if (d == 0)
            return pts;
        for (auto & p : pts)
            p = (1 / d) * p;
        return pts;
    }

    // Small corpus of named graphs with exact chromatic numbers.
    struct Named
    {
        const char * name;
        Graph graph;
        unsigned chi;
    };

    inline auto exact_corpus() -> std::vector<Named>
    {
        return {
            {"K2", complete_graph(2), 2},
            {"K3", complete_graph(3), 3},
            {"K4", complete_graph(4), 4},
            {"K5", complete_graph(5), 5},
            {"K6", complete_graph(6), 6},
            {"K7", complete_graph(7), 7},
            {"K8", complete_graph(8), 8},
            {"C4", cycle_graph(4), 2},
            {"C5", cycle_graph(5), 3},
            {"C7", cycle_graph(7), 3},
            {"P3", path_graph(3), 2},
            {"W5", odd_wheel(5), 4},
            {"W7", odd_wheel(7), 4},
            {"W11", odd_wheel(11), 4},
            {"Petersen", petersen_graph(), 3},
            {"Grotzsch", grotzsch_graph(), 4},
            {"circulant(25,4)", circulant_graph(25, 4), 7},
            {"circulant(7,2)", circulant_graph(7, 2), 4},
        };
    }
}
