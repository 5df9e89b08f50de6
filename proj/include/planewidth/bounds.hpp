#pragma once

#include <planewidth/graph.hpp>
#include <planewidth/optimizer.hpp>
#include <planewidth/realization.hpp>
#include <planewidth/solver.hpp>

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace planewidth
{
    // Known exact pw(K_n) for 2 <= n <= 8.
    [[nodiscard]] auto table_value(std::size_t n) -> std::optional<double>;

    // Lower bound on pw(K_n): the table value up to n = 8, then
    // max(pw(K_8), sqrt(2 sqrt3 / pi * n) - 1). Non-decreasing in n.
    [[nodiscard]] auto kn_lower(std::size_t n) -> double;

    // Best available upper bound on pw(K_n) from the constructions implemented here: the
    // table arrangements up to n = 8, the lattice arrangement beyond.
    [[nodiscard]] auto kn_upper(std::size_t n) -> double;

    // Default search box half-side for brute_force: 1 + the upper bound for K_k, k the greedy
    // color count.
    [[nodiscard]] auto brute_force_extent(const Graph & g) -> double;

    // Provenance tags.
    namespace tag
    {
        inline constexpr const char * edge = "edge";
        inline constexpr const char * clique_table = "clique-table";
        inline constexpr const char * clique_formula = "clique-formula";
        inline constexpr const char * odd_wheel = "odd-wheel";
        inline constexpr const char * chi_threshold = "chi-threshold";
        inline constexpr const char * tiling_inversion = "tiling-inversion";
        inline constexpr const char * coloring = "coloring";
        inline constexpr const char * optimizer = "optimizer";
        inline constexpr const char * circular = "circular";
        inline constexpr const char * join = "join";
        inline constexpr const char * product = "product";
        inline constexpr const char * disjoint_union = "union";
    }

    struct LowerBound
    {
        double value = 0;
        bool strict = false;
        std::vector<std::string> provenance; // every mechanism attaining the value
    };

    struct UpperBound
    {
        double value = 0;
        Realization witness;
        std::vector<std::string> provenance; // every mechanism attaining the value
    };

    struct CircularColoring
    {
        std::vector<double> angles;
        double chi_c = 0;
    };

    struct BoundsConfig
    {
        std::chrono::milliseconds chi_budget = default_chromatic_budget;
        unsigned opt_restarts = 10; // 0 skips the optimizer
        std::uint64_t opt_seed = 0;
        std::optional<CircularColoring> circular;
    };

    // Max of: 1 for any edge; pw(K_omega); sqrt2 when some vertex sees an odd cycle in its
    // neighbourhood (an odd-wheel subgraph); chi thresholds (chi >= 4: 2/sqrt3, >= 5: sqrt2,
    // >= 8: 2, all strict); and the tiling inversion 3t/2 for the largest t with
    // 3t^2 + 3t + 1 < chi. Uses chi.lower when chi is only bounded.
    [[nodiscard]] auto lower_bound(const Graph & g, const ChromaticResult & chi) -> LowerBound;

    // Min over the coloring construction, the optimizer, composition constructions for graphs
    // built by join/product/union, circular arrangements (supplied, circulant family, or the
    // defining arrangement of a theorem41 star). The witness is always re-verified.
    [[nodiscard]] auto upper_bound(const Graph & g, const ChromaticResult & chi, const BoundsConfig & cfg = {}) -> UpperBound;

    struct BoundReport
    {
        double lower = 0;
        bool lower_strict = false;
        std::vector<std::string> lower_provenance;
        double upper = 0;
        Realization upper_witness;
        std::vector<std::string> upper_provenance;
        ChromaticResult chi;
        std::size_t clique = 0;
    };

    // Throws ConsistencyError if lower exceeds upper by more than 1e-9.
    [[nodiscard]] auto pw_interval(const Graph & g, const BoundsConfig & cfg = {}) -> BoundReport;
}
