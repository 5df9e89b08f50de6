#include <planewidth/error.hpp>
#include <planewidth/io.hpp>

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace planewidth::io
{
    namespace
    {
        using json = nlohmann::json;

        struct Line
        {
            std::size_t number;
            std::string text; // comment stripped
            std::string comment;
        };

        auto lines_of(std::istream & in) -> std::vector<Line>
        {
            std::vector<Line> lines;
            std::string raw;
            for (std::size_t number = 1; std::getline(in, raw); ++number) {
                Line line{number, raw, {}};
                if (auto hash = raw.find('#'); hash != std::string::npos) {
                    line.text = raw.substr(0, hash);
                    line.comment = raw.substr(hash + 1);
                }
                lines.push_back(std::move(line));
            }
            return lines;
        }

        auto tokens_of(const std::string & text) -> std::vector<std::string>
        {
            std::istringstream ss(text);
            std::vector<std::string> out;
            for (std::string t; ss >> t;)
                out.push_back(t);
            return out;
        }

        auto parse_index(const std::string & token, std::size_t line) -> std::uint64_t
        {
            std::uint64_t value = 0;
            auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || end != token.data() + token.size())
                throw ParseError("line " + std::to_string(line) + ": expected a non-negative integer, got '" + token + "'");
            if (value > std::numeric_limits<Vertex>::max() - 1)
                throw ParseError("line " + std::to_string(line) + ": vertex id " + token + " out of range");
            return value;
        }

        auto parse_real(const std::string & token, std::size_t line) -> double
        {
            double value = 0;
            auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || end != token.data() + token.size() || ! std::isfinite(value))
                throw ParseError("line " + std::to_string(line) + ": expected a number, got '" + token + "'");
            return value;
        }

    }

    auto format_double(double x) -> std::string
    {
        if (! std::isfinite(x))
            throw ParameterError("cannot serialize a non-finite number");
        char buffer[32];
        std::snprintf(buffer, sizeof buffer, "%.17g", x);
        return buffer;
    }

    auto read_edge_list(std::istream & in) -> Graph
    {
        std::optional<std::size_t> declared;
        std::vector<std::pair<std::string, std::string>> pairs;
        std::vector<std::size_t> line_of;
        for (auto & line : lines_of(in)) {
            auto header = tokens_of(line.comment);
            if (header.size() == 2 && header[0] == "n")
                declared = parse_index(header[1], line.number);
            auto t = tokens_of(line.text);
            if (t.empty())
                continue;
            if (t.size() != 2)
                throw ParseError("line " + std::to_string(line.number) + ": expected 'u v'");
            pairs.emplace_back(t[0], t[1]);
            line_of.push_back(line.number);
        }

        // Non-negative integer ids are used as given; any other token switches the whole file
        // to labels numbered by first appearance.
        auto is_index = [](const std::string & token) {
            return ! token.empty() && std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; });
        };
        bool numeric = std::all_of(pairs.begin(), pairs.end(),
            [&](auto & p) { return is_index(p.first) && is_index(p.second); });
        std::map<std::string, Vertex> labels;
        auto id = [&](const std::string & token, std::size_t line) -> std::uint64_t {
            if (numeric)
                return parse_index(token, line);
            return labels.try_emplace(token, static_cast<Vertex>(labels.size())).first->second;
        };

        std::size_t order = 0;
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            auto u = id(pairs[i].first, line_of[i]), v = id(pairs[i].second, line_of[i]);
            if (u == v)
                throw ParseError("line " + std::to_string(line_of[i]) + ": self-loop on vertex " + pairs[i].first);
            order = std::max<std::size_t>(order, std::max(u, v) + 1);
            edges.push_back(make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
        }
        if (declared) {
            if (*declared < order)
                throw ParseError("declared order " + std::to_string(*declared) + " is below the number of vertices used");
            order = *declared;
        }
        return Graph(order, edges);
    }

    void write_edge_list(std::ostream & out, const Graph & g)
    {
        out << "# n " << g.order() << '\n';
        for (auto [u, v] : g.edges())
            out << u << ' ' << v << '\n';
    }

    auto read_dimacs(std::istream & in) -> Graph
    {
        std::optional<std::size_t> order;
        std::vector<Edge> edges;
        for (auto & line : lines_of(in)) {
            auto t = tokens_of(line.text);
            if (t.empty() || t[0] == "c")
                continue;
            if (t[0] == "p") {
                if (order)
                    throw ParseError("line " + std::to_string(line.number) + ": second problem line");
                if (t.size() != 4 || (t[1] != "edge" && t[1] != "col"))
                    throw ParseError("line " + std::to_string(line.number) + ": expected 'p edge n m'");
                order = parse_index(t[2], line.number);
                continue;
            }
            if (t[0] == "e") {
                if (! order)
                    throw ParseError("line " + std::to_string(line.number) + ": edge before the problem line");
                if (t.size() != 3)
                    throw ParseError("line " + std::to_string(line.number) + ": expected 'e u v'");
                auto u = parse_index(t[1], line.number), v = parse_index(t[2], line.number);
                if (u == 0 || v == 0 || u > *order || v > *order)
                    throw ParseError("line " + std::to_string(line.number) + ": vertex out of range 1.." +
                        std::to_string(*order));
                if (u == v)
                    throw ParseError("line " + std::to_string(line.number) + ": self-loop on vertex " + t[1]);
                edges.push_back(make_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)));
                continue;
            }
            throw ParseError("line " + std::to_string(line.number) + ": unknown DIMACS record '" + t[0] + "'");
        }
        if (! order)
            throw ParseError("missing 'p edge n m' line");
        return Graph(*order, edges);
    }

    void write_dimacs(std::ostream & out, const Graph & g)
    {
        out << "p edge " << g.order() << ' ' << g.size() << '\n';
        for (auto [u, v] : g.edges())
            out << "e " << u + 1 << ' ' << v + 1 << '\n';
    }

    auto read_graph(std::istream & in) -> Graph
    {
        std::stringstream buffer;
        buffer << in.rdbuf();
        std::string text = buffer.str();
        std::istringstream scan(text);
        bool dimacs = false;
        for (auto & line : lines_of(scan)) {
            auto t = tokens_of(line.text);
            if (t.empty())
                continue;
            dimacs = t[0] == "p" || t[0] == "c" || t[0] == "e";
            break;
        }
        std::istringstream body(text);
        return dimacs ? read_dimacs(body) : read_edge_list(body);
    }

    auto parse_norm_exponent(const std::string & text) -> double
    {
        if (text == "inf" || text == "infinity")
            return std::numeric_limits<double>::infinity();
        double p = 0;
        auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
        if (ec != std::errc{} || end != text.data() + text.size())
            throw ParseError("norm must be a number or 'inf', got '" + text + "'");
        return p;
    }

    auto read_realization(std::istream & in) -> Realization
    {
        json doc;
        try {
            doc = json::parse(in);
        } catch (const json::exception & e) {
            throw ParseError(std::string("realization file: ") + e.what());
        }
        if (! doc.is_object())
            throw ParseError("realization file must hold a single object");
        for (const char * key : {"n", "norm", "dim", "points"})
            if (! doc.contains(key))
                throw ParseError(std::string("realization file lacks key '") + key + "'");
        if (! doc["n"].is_number_unsigned())
            throw ParseError("'n' must be a non-negative integer");
        if (! doc["dim"].is_number_unsigned())
            throw ParseError("'dim' must be 1 or 2");

        Realization r;
        auto & norm = doc["norm"];
        if (norm.is_string())
            r.norm.p = parse_norm_exponent(norm.get<std::string>());
        else if (norm.is_number())
            r.norm.p = norm.get<double>();
        else
            throw ParseError("'norm' must be a number or \"inf\"");
        auto dim = doc["dim"].get<unsigned>();
        r.norm.dim = dim;
        try {
            validate(r.norm);
        } catch (const ParameterError & e) {
            throw ParseError(std::string("realization file: ") + e.what());
        }

        auto n = doc["n"].get<std::size_t>();
        auto & points = doc["points"];
        if (! points.is_array() || points.size() != n)
            throw ParseError("'points' must be an array of n entries");
        for (std::size_t i = 0; i < n; ++i) {
            auto & p = points[i];
            if (! p.is_array() || p.size() != dim || ! std::all_of(p.begin(), p.end(), [](auto & c) { return c.is_number(); }))
                throw ParseError("point " + std::to_string(i) + " must be an array of " + std::to_string(dim) + " numbers");
            r.points.push_back({p[0].get<double>(), dim == 2 ? p[1].get<double>() : 0.0});
        }
        return r;
    }

    void write_realization(std::ostream & out, const Realization & r)
    {
        out << "{\n  \"n\": " << r.points.size() << ",\n  \"norm\": ";
        if (r.norm.is_infinite())
            out << "\"inf\"";
        else
            out << format_double(r.norm.p);
        out << ",\n  \"dim\": " << r.norm.dim << ",\n  \"points\": [";
        for (std::size_t i = 0; i < r.points.size(); ++i) {
            out << (i ? ",\n    [" : "\n    [") << format_double(r.points[i].x);
            if (r.norm.dim == 2)
                out << ", " << format_double(r.points[i].y);
            out << ']';
        }
        out << (r.points.empty() ? "]\n}\n" : "\n  ]\n}\n");
    }

    auto read_coloring(std::istream & in) -> Coloring
    {
        std::vector<std::pair<std::uint64_t, unsigned>> entries;
        for (auto & line : lines_of(in)) {
            auto t = tokens_of(line.text);
            if (t.empty())
                continue;
            if (t.size() != 2)
                throw ParseError("line " + std::to_string(line.number) + ": expected 'vertex color'");
            entries.emplace_back(parse_index(t[0], line.number), static_cast<unsigned>(parse_index(t[1], line.number)));
        }
        std::sort(entries.begin(), entries.end());
        std::vector<unsigned> colors;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (entries[i].first != i)
                throw ParseError("coloring must list every vertex 0..n-1 exactly once");
            colors.push_back(entries[i].second);
        }
        return Coloring::from_colors(std::move(colors));
    }

    void write_coloring(std::ostream & out, const Coloring & c)
    {
        for (std::size_t v = 0; v < c.colors.size(); ++v)
            out << v << ' ' << c.colors[v] << '\n';
    }

    auto read_angles(std::istream & in) -> std::vector<double>
    {
        std::vector<double> angles;
        for (auto & line : lines_of(in))
            for (auto & t : tokens_of(line.text))
                angles.push_back(parse_real(t, line.number));
        return angles;
    }

    auto bound_report_json(const BoundReport & report) -> std::string
    {
        // Numbers go through format_double so the text matches the line-oriented report.
        auto strings = [](const std::vector<std::string> & v) {
            std::string s = "[";
            for (std::size_t i = 0; i < v.size(); ++i)
                s += (i ? ", " : "") + json(v[i]).dump();
            return s + "]";
        };
        std::ostringstream out;
        out << "{\n"
            << "  \"lower\": " << format_double(report.lower) << ",\n"
            << "  \"lower_strict\": " << (report.lower_strict ? "true" : "false") << ",\n"
            << "  \"lower_provenance\": " << strings(report.lower_provenance) << ",\n"
            << "  \"upper\": " << format_double(report.upper) << ",\n"
            << "  \"upper_provenance\": " << strings(report.upper_provenance) << ",\n"
            << "  \"chi_lower\": " << report.chi.lower << ",\n"
            << "  \"chi_upper\": " << report.chi.upper << ",\n"
            << "  \"chi_exact\": " << (report.chi.exact ? "true" : "false") << ",\n"
            << "  \"clique\": " << report.clique << "\n"
            << "}\n";
        return out.str();
    }

    auto read_optimize_config(std::istream & in, OptimizeConfig base) -> OptimizeConfig
    {
        json doc;
        try {
            doc = json::parse(in);
        } catch (const json::exception & e) {
            throw ParseError(std::string("config file: ") + e.what());
        }
        if (! doc.is_object())
            throw ParseError("config file must hold a flat object");

        auto count = [](const json & v, const std::string & key) -> std::uint64_t {
            if (! v.is_number_unsigned())
                throw ParseError("config key '" + key + "' must be a non-negative integer");
            return v.get<std::uint64_t>();
        };
        auto real = [](const json & v, const std::string & key) -> double {
            if (! v.is_number())
                throw ParseError("config key '" + key + "' must be a number");
            return v.get<double>();
        };
        for (auto & [key, value] : doc.items()) {
            if (key == "restarts")
                base.restarts = static_cast<unsigned>(count(value, key));
            else if (key == "max_iters")
                base.max_iters = static_cast<unsigned>(count(value, key));
            else if (key == "seed")
                base.seed = count(value, key);
            else if (key == "threads")
                base.threads = static_cast<unsigned>(count(value, key));
            else if (key == "norm")
                base.norm.p = value.is_string() ? parse_norm_exponent(value.get<std::string>()) : real(value, key);
            else if (key == "beta_start")
                base.beta_start = real(value, key);
            else if (key == "beta_end")
                base.beta_end = real(value, key);
            else if (key == "penalty_start")
                base.penalty_start = real(value, key);
            else if (key == "penalty_end")
                base.penalty_end = real(value, key);
            else if (key == "tol")
                base.tol = real(value, key);
            else
                throw ParseError("unknown config key '" + key + "'");
        }
        validate(base);
        return base;
    }
}
