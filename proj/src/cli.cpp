#include <planewidth/bounds.hpp>
#include <planewidth/cli.hpp>
#include <planewidth/error.hpp>
#include <planewidth/io.hpp>
#include <planewidth/optimizer.hpp>
#include <planewidth/partition.hpp>
#include <planewidth/realization.hpp>
#include <planewidth/solver.hpp>
#include <planewidth/svg.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace planewidth::cli
{
    namespace
    {
        struct Streams
        {
            std::istream & in;
            std::ostream & out;
        };

        template <typename Read>
        auto load(const std::string & path, Streams io, Read read)
        {
            if (path == "-")
                return read(io.in);
            std::ifstream file(path);
            if (! file)
                throw ParameterError("cannot open '" + path + "'");
            return read(file);
        }

        void save(const std::string & path, Streams io, const std::function<void(std::ostream &)> & write)
        {
            if (path.empty() || path == "-") {
                write(io.out);
                return;
            }
            std::ofstream file(path);
            if (! file)
                throw ParameterError("cannot write '" + path + "'");
            write(file);
            if (! file)
                throw ParameterError("write to '" + path + "' failed");
        }

        auto load_graph(const std::string & path, Streams io) -> Graph
        {
            return load(path, io, [](std::istream & s) { return io::read_graph(s); });
        }

        auto load_realization(const std::string & path, Streams io) -> Realization
        {
            return load(path, io, [](std::istream & s) { return io::read_realization(s); });
        }

        // PW_SEED replaces the built-in default seed; an explicit flag still wins.
        auto default_seed() -> std::uint64_t
        {
            const char * env = std::getenv("PW_SEED");
            if (! env || ! *env)
                return 0;
            std::uint64_t seed = 0;
            std::string text(env);
            auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
            if (ec != std::errc{} || end != text.data() + text.size())
                throw ParameterError("PW_SEED must be a non-negative integer, got '" + text + "'");
            return seed;
        }

        auto norm_from(const std::string & text) -> NormSpec
        {
            NormSpec norm{io::parse_norm_exponent(text), 2};
            validate(norm);
            return norm;
        }

        auto distance_text(double d) -> std::string
        {
            return std::isinf(d) ? "inf" : io::format_double(d);
        }

        auto join_tags(const std::vector<std::string> & tags) -> std::string
        {
            std::string s;
            for (auto & t : tags)
                s += (s.empty() ? "" : ",") + t;
            return s.empty() ? "none" : s;
        }

        auto budget_from_seconds(double seconds) -> std::chrono::milliseconds
        {
            if (! (seconds >= 0) || ! std::isfinite(seconds))
                throw ParameterError("--chi-budget must be a non-negative number of seconds");
            return std::chrono::milliseconds(static_cast<long long>(std::llround(seconds * 1000)));
        }

        auto circular_input(const std::string & angles_path, std::optional<double> chi_c, Streams io)
            -> std::optional<CircularColoring>
        {
            if (angles_path.empty() != ! chi_c)
                throw ParameterError("--angles and --chi-c go together");
            if (angles_path.empty())
                return std::nullopt;
            return CircularColoring{load(angles_path, io, [](std::istream & s) { return io::read_angles(s); }), *chi_c};
        }
    }

    auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int
    {
        Streams io{in, out};
        CLI::App app{"Plane-width bounds, realizations and colorings", "planewidth"};
        app.require_subcommand(1, 1);

        // gen
        auto * gen = app.add_subcommand("gen", "Write a named graph");
        std::string family, output, format = "edgelist";
        std::vector<double> params;
        gen->add_option("--family", family, "complete, cycle, path, empty, odd-wheel, circulant, theorem41-star, petersen, grotzsch, random")
            ->required();
        gen->add_option("--params", params, "Family parameters");
        gen->add_option("-o,--output", output, "Output file (stdout when absent)");
        gen->add_option("--format", format, "edgelist or dimacs")->check(CLI::IsMember({"edgelist", "dimacs"}));

        // bounds
        auto * bounds = app.add_subcommand("bounds", "Certified plane-width interval");
        std::string graph_path = "-", angles_path;
        double chi_budget = 10;
        unsigned opt_restarts = 10;
        bool as_json = false;
        std::optional<double> chi_c;
        bounds->add_option("GRAPH", graph_path, "Graph file, '-' for stdin");
        bounds->add_option("--chi-budget", chi_budget, "Seconds for the exact chromatic number");
        bounds->add_option("--opt-restarts", opt_restarts, "Optimizer restarts, 0 to skip");
        bounds->add_option("--angles", angles_path, "Circular coloring angles");
        bounds->add_option("--chi-c", chi_c, "Circular chromatic number for --angles");
        bounds->add_flag("--json", as_json, "Emit a JSON object");

        // realize
        auto * realize = app.add_subcommand("realize", "Construct a realization");
        std::string method;
        std::optional<std::uint64_t> seed;
        std::optional<unsigned> restarts;
        realize->add_option("GRAPH", graph_path, "Graph file, '-' for stdin");
        realize->add_option("--method", method, "Construction")
            ->required()
            ->check(CLI::IsMember({"coloring", "table", "lattice", "circular", "optimize", "line", "linf-grid"}));
        realize->add_option("--angles", angles_path, "Angles file for --method circular");
        realize->add_option("--chi-c", chi_c, "Circular chromatic number for --method circular");
        realize->add_option("--seed", seed, "Optimizer seed");
        realize->add_option("--restarts", restarts, "Optimizer restarts");
        realize->add_option("-o,--output", output, "Realization file (stdout when absent)");

        // verify
        auto * verify = app.add_subcommand("verify", "Check a realization against a graph");
        std::string realization_path;
        double tol = default_tolerance;
        std::string norm_text;
        verify->add_option("GRAPH", graph_path, "Graph file")->required();
        verify->add_option("REALIZATION", realization_path, "Realization file")->required();
        verify->add_option("--tol", tol, "Edge tolerance");
        verify->add_option("--norm", norm_text, "Override the norm exponent (number or inf)");

        // color
        auto * color = app.add_subcommand("color", "Extract a coloring from a realization");
        std::string scheme_text;
        color->add_option("GRAPH", graph_path, "Graph file")->required();
        color->add_option("--from", realization_path, "Realization file")->required();
        color->add_option("--scheme", scheme_text, "3, 4, 7 or tiling")
            ->required()
            ->check(CLI::IsMember({"3", "4", "7", "tiling"}));
        color->add_option("-o,--output", output, "Coloring file (stdout when absent)");

        // optimize
        auto * optimize_cmd = app.add_subcommand("optimize", "Numerically minimize the width");
        std::string config_path;
        std::optional<unsigned> max_iters;
        optimize_cmd->add_option("GRAPH", graph_path, "Graph file, '-' for stdin");
        optimize_cmd->add_option("--seed", seed, "Base seed");
        optimize_cmd->add_option("--restarts", restarts, "Restarts");
        optimize_cmd->add_option("--max-iters", max_iters, "Iterations per restart");
        optimize_cmd->add_option("--norm", norm_text, "Norm exponent (number or inf)");
        optimize_cmd->add_option("--config", config_path, "Flat JSON optimizer configuration");
        optimize_cmd->add_option("-o,--output", output, "Realization file (stdout when absent)");

        // plot
        auto * plot = app.add_subcommand("plot", "Render a realization as SVG");
        std::string plot_graph;
        plot->add_option("REALIZATION", realization_path, "Realization file")->required();
        plot->add_option("GRAPH", plot_graph, "Graph file for drawing edges");
        plot->add_option("-o,--output", output, "SVG file (stdout when absent)");

        try {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        } catch (const CLI::ParseError & e) {
            int code = app.exit(e, out, err);
            return code == 0 ? ok : usage_error;
        }

        // Messages about what was written go to stdout only when the payload went to a file.
        std::ostream & report = output.empty() || output == "-" ? err : out;

        try {
            if (gen->parsed()) {
                auto g = generate(GraphSpec{parse_family(family), params});
                save(output, io, [&](std::ostream & s) {
                    if (format == "dimacs")
                        io::write_dimacs(s, g);
                    else
                        io::write_edge_list(s, g);
                });
                return ok;
            }

            if (bounds->parsed()) {
                auto g = load_graph(graph_path, io);
                BoundsConfig cfg;
                cfg.chi_budget = budget_from_seconds(chi_budget);
                cfg.opt_restarts = opt_restarts;
                cfg.opt_seed = default_seed();
                cfg.circular = circular_input(angles_path, chi_c, io);
                auto r = pw_interval(g, cfg);
                if (as_json) {
                    out << io::bound_report_json(r);
                    return ok;
                }
                out << "lower " << io::format_double(r.lower) << '\n'
                    << "lower_strict " << (r.lower_strict ? "true" : "false") << '\n'
                    << "lower_provenance " << join_tags(r.lower_provenance) << '\n'
                    << "upper " << io::format_double(r.upper) << '\n'
                    << "upper_provenance " << join_tags(r.upper_provenance) << '\n'
                    << "chi " << r.chi.lower;
                if (! r.chi.exact)
                    out << ".." << r.chi.upper;
                out << '\n' << "clique " << r.clique << '\n';
                return ok;
            }

            if (realize->parsed()) {
                auto g = load_graph(graph_path, io);
                Realization r;
                if (method == "table") {
                    if (g.order() < 2 || g.order() > 8)
                        throw PreconditionError("table arrangements cover 2..8 vertices, graph has " + std::to_string(g.order()));
                    r = known_complete_arrangement(g.order());
                } else if (method == "lattice") {
                    r = lattice_complete_arrangement(g.order());
                } else if (method == "circular") {
                    auto c = circular_input(angles_path, chi_c, io);
                    if (! c)
                        throw ParameterError("--method circular needs --angles and --chi-c");
                    r = from_circular(g, c->angles, c->chi_c);
                } else if (method == "optimize") {
                    OptimizeConfig cfg;
                    cfg.seed = seed.value_or(default_seed());
                    if (restarts)
                        cfg.restarts = *restarts;
                    r = optimize(g, cfg).realization;
                } else {
                    auto chi = chromatic_number(g);
                    if (method == "coloring")
                        r = from_coloring(g, chi.witness);
                    else
                        r = low_dim_realization(g, chi.witness, method == "line" ? LowDimMode::line : LowDimMode::linf_grid);
                }
                auto eval = evaluate(g, r);
                if (! eval.valid)
                    throw ConsistencyError("constructed realization fails verification");
                save(output, io, [&](std::ostream & s) { io::write_realization(s, r); });
                report << "width " << io::format_double(eval.width) << '\n';
                return ok;
            }

            if (verify->parsed()) {
                auto g = load_graph(graph_path, io);
                auto r = load_realization(realization_path, io);
                if (! norm_text.empty()) {
                    r.norm.p = io::parse_norm_exponent(norm_text);
                    validate(r.norm);
                }
                auto eval = evaluate(g, r, tol);
                out << "valid " << (eval.valid ? "true" : "false") << '\n'
                    << "width " << io::format_double(eval.width) << '\n'
                    << "min_edge_distance " << distance_text(eval.min_edge_distance) << '\n';
                if (eval.violating_edge)
                    out << "violating_edge " << eval.violating_edge->first << ' ' << eval.violating_edge->second << '\n';
                return eval.valid ? ok : check_failed;
            }

            if (color->parsed()) {
                auto g = load_graph(graph_path, io);
                auto r = load_realization(realization_path, io);
                auto c = scheme_text == "tiling" ? tiling_coloring(g, r)
                                                 : extract_coloring(g, r, parse_scheme(static_cast<unsigned>(std::stoul(scheme_text))));
                if (auto e = monochromatic_edge(g, c))
                    throw ConsistencyError("extracted coloring is improper on {" + std::to_string(e->first) + ", " +
                        std::to_string(e->second) + "}");
                save(output, io, [&](std::ostream & s) { io::write_coloring(s, c); });
                report << "colors " << c.k << '\n';
                return ok;
            }

            if (optimize_cmd->parsed()) {
                auto g = load_graph(graph_path, io);
                OptimizeConfig cfg;
                cfg.seed = default_seed();
                if (! config_path.empty())
                    cfg = load(config_path, io, [&](std::istream & s) { return io::read_optimize_config(s, cfg); });
                if (seed)
                    cfg.seed = *seed;
                if (restarts)
                    cfg.restarts = *restarts;
                if (max_iters)
                    cfg.max_iters = *max_iters;
                if (! norm_text.empty())
                    cfg.norm = norm_from(norm_text);
                validate(cfg);
                auto result = optimize(g, cfg);
                save(output, io, [&](std::ostream & s) { io::write_realization(s, result.realization); });
                report << "width " << io::format_double(result.width) << '\n'
                       << "restart " << result.restart_index << '\n'
                       << "iterations " << result.iterations << '\n';
                return ok;
            }

            if (plot->parsed()) {
                auto r = load_realization(realization_path, io);
                std::optional<Graph> g;
                if (! plot_graph.empty())
                    g = load_graph(plot_graph, io);
                auto svg = render_svg(r, g ? &*g : nullptr);
                save(output, io, [&](std::ostream & s) { s << svg; });
                return ok;
            }
        } catch (const ParseError & e) {
            err << "error: " << e.what() << '\n';
            return usage_error;
        } catch (const ParameterError & e) {
            err << "error: " << e.what() << '\n';
            return usage_error;
        } catch (const ConsistencyError & e) {
            err << "internal consistency error: " << e.what() << '\n';
            return inconsistent;
        } catch (const Error & e) {
            err << "error: " << e.what() << '\n';
            return check_failed;
        } catch (const std::exception & e) {
            err << "internal error: " << e.what() << '\n';
            return inconsistent;
        }
        return usage_error;
    }
}
