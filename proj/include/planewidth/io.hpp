#pragma once

#include <planewidth/bounds.hpp>
#include <planewidth/coloring.hpp>
#include <planewidth/graph.hpp>
#include <planewidth/optimizer.hpp>
#include <planewidth/realization.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace planewidth::io
{
    // Shortest text that reads back to the same double (17 significant digits).
    [[nodiscard]] auto format_double(double x) -> std::string;

    // Edge list: "u v" per line, 0-based, '#' starts a comment. A "# n N" comment fixes the
    // order so isolated trailing vertices survive; otherwise the order is max id + 1.
    [[nodiscard]] auto read_edge_list(std::istream & in) -> Graph;
    void write_edge_list(std::ostream & out, const Graph & g);

    // DIMACS: "p edge n m" then "e u v", 1-based on the wire.
    [[nodiscard]] auto read_dimacs(std::istream & in) -> Graph;
    void write_dimacs(std::ostream & out, const Graph & g);

    // Picks DIMACS when the first non-comment line starts with 'p' or 'c'.
    [[nodiscard]] auto read_graph(std::istream & in) -> Graph;

    [[nodiscard]] auto read_realization(std::istream & in) -> Realization;
    void write_realization(std::ostream & out, const Realization & r);

    [[nodiscard]] auto read_coloring(std::istream & in) -> Coloring;
    void write_coloring(std::ostream & out, const Coloring & c);

    // One angle in radians per line, vertex order.
    [[nodiscard]] auto read_angles(std::istream & in) -> std::vector<double>;

    // Reads "p" as a number or "inf".
    [[nodiscard]] auto parse_norm_exponent(const std::string & text) -> double;

    [[nodiscard]] auto bound_report_json(const BoundReport & report) -> std::string;

    // Flat object keyed by OptimizeConfig field names; absent keys keep the values in `base`.
    [[nodiscard]] auto read_optimize_config(std::istream & in, OptimizeConfig base = {}) -> OptimizeConfig;
}
