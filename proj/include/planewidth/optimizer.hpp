#pragma once

#include <planewidth/graph.hpp>
#include <planewidth/realization.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace planewidth
{
    struct OptimizeConfig
    {
        unsigned restarts = 50;
        unsigned max_iters = 2000; // per restart, spread over the annealing stages
        std::uint64_t seed = 0;
        NormSpec norm = NormSpec::euclidean();
        double beta_start = 10;
        double beta_end = 1000;
        double penalty_start = 1;
        double penalty_end = 1e6;
        double tol = 1e-10;  // stop a stage when the objective decreases by less than this
        unsigned threads = 0; // 0 = hardware concurrency
    };

    // Throws ParameterError on an unusable configuration.
    void validate(const OptimizeConfig & cfg);

    struct OptimizeResult
    {
        Realization realization; // valid at tol 1e-9
        double width = 0;
        unsigned restart_index = 0;
        unsigned iterations = 0;
    };

    struct ObjectiveValue
    {
        double value = 0;
        std::vector<Point> gradient;
    };

    // Exponent used during descent: p itself, or 64 for the max norm.
    [[nodiscard]] auto descent_exponent(const NormSpec & norm) -> double;

    // softmax_beta(all pairwise l_p distances) + penalty * sum over edges of max(0, 1 - d)^2,
    // with its analytic gradient.
    [[nodiscard]] auto smoothed_objective(const Graph & g, std::span<const Point> points, double beta, double penalty,
        double p) -> ObjectiveValue;

    // Multistart descent; returns the narrowest certified witness, ties to the lowest restart.
    // Results do not depend on thread scheduling.
    [[nodiscard]] auto optimize(const Graph & g, const OptimizeConfig & cfg = {}) -> OptimizeResult;

    struct BruteForceResult
    {
        double width = 0;
        Realization realization;
    };

    inline constexpr std::size_t brute_force_hard_cap = 5;

    // Exhaustive grid search: vertex 0 at the origin, vertex 1 on the nonnegative x-axis, the
    // rest over [-d_max, d_max]^2 at the given step. Only placements meeting every edge
    // constraint exactly are accepted.
    [[nodiscard]] auto brute_force(const Graph & g, double resolution, double d_max, std::size_t max_order = 4)
        -> BruteForceResult;
}
