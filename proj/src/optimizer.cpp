#include <planewidth/error.hpp>
#include <planewidth/optimizer.hpp>
#include <planewidth/solver.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <optional>
#include <random>
#include <string>
#include <numeric>
#include <thread>

namespace planewidth
{
    void validate(const OptimizeConfig & cfg)
    {
        if (cfg.restarts < 1)
            throw ParameterError("restarts must be >= 1");
        if (cfg.max_iters < 1)
            throw ParameterError("max_iters must be >= 1");
        if (! (cfg.beta_start > 0 && cfg.beta_end >= cfg.beta_start))
            throw ParameterError("smooth-max schedule must be positive and increasing");
        if (! (cfg.penalty_start > 0 && cfg.penalty_end >= cfg.penalty_start))
            throw ParameterError("penalty schedule must be positive and increasing");
        if (! (cfg.tol >= 0))
            throw ParameterError("tol must be nonnegative");
        validate(cfg.norm);
        if (cfg.norm.dim != 2)
            throw ParameterError("the optimizer works in the plane only");
    }

    auto descent_exponent(const NormSpec & norm) -> double
    {
        return norm.is_infinite() ? 64.0 : norm.p;
    }

    namespace
    {
        // l_p distance of (dx, dy) and its partial derivatives.
        struct Dist
        {
            double d, ddx, ddy;
        };

        auto lp_distance(double dx, double dy, double p) -> Dist
        {
            if (p == 2) {
                double d = std::hypot(dx, dy);
                if (d == 0)
                    return {0, 0, 0};
                return {d, dx / d, dy / d};
            }
            if (p == 1) {
                // |x| smoothed by a 1e-12 perturbation so ties have a defined slope.
                double ax = std::sqrt(dx * dx + 1e-24), ay = std::sqrt(dy * dy + 1e-24);
                return {ax + ay, dx / ax, dy / ay};
            }
            double ax = std::abs(dx), ay = std::abs(dy);
            double big = std::max(ax, ay);
            if (big == 0)
                return {0, 0, 0};
            double rx = ax / big, ry = ay / big;
            double s = std::pow(rx, p) + std::pow(ry, p);
            double d = big * std::pow(s, 1 / p);
            // dd/dx = sign(dx) (|dx| / d)^(p-1)
            double gx = std::pow(ax / d, p - 1), gy = std::pow(ay / d, p - 1);
            return {d, dx < 0 ? -gx : gx, dy < 0 ? -gy : gy};
        }

        // Portable uniform double in [0, 1).
        auto uniform(std::mt19937_64 & rng) -> double
        {
            return static_cast<double>(rng() >> 11) * 0x1.0p-53;
        }

        auto geometric(double from, double to, unsigned step, unsigned steps) -> double
        {
            if (steps <= 1)
                return to;
            return from * std::pow(to / from, static_cast<double>(step) / (steps - 1));
        }

        constexpr unsigned stages = 8;
        constexpr std::size_t memory = 8;

        struct Attempt
        {
            std::optional<Realization> realization;
            double width = std::numeric_limits<double>::infinity();
            unsigned iterations = 0;
        };

        auto run_restart(const Graph & g, const OptimizeConfig & cfg, unsigned restart, double box) -> Attempt
        {
            const auto n = g.order();
            const double p = descent_exponent(cfg.norm);
            std::mt19937_64 rng(cfg.seed + restart);
            std::vector<Point> x(n);
            for (auto & pt : x) {
                pt.x = uniform(rng) * box;
                pt.y = uniform(rng) * box;
            }

            Attempt attempt;
            const unsigned per_stage = std::max(1u, cfg.max_iters / stages);
            for (unsigned stage = 0; stage < stages; ++stage) {
                const double beta = geometric(cfg.beta_start, cfg.beta_end, stage, stages);
                const double mu = geometric(cfg.penalty_start, cfg.penalty_end, stage, stages);
                auto current = smoothed_objective(g, x, beta, mu, p);

                // Limited-memory BFGS direction, backtracking Armijo step.
                std::deque<std::pair<std::vector<double>, std::vector<double>>> history;
                double step_hint = 1;
                for (unsigned it = 0; it < per_stage; ++it) {
                    ++attempt.iterations;
                    std::vector<double> grad(2 * n);
                    for (std::size_t i = 0; i < n; ++i) {
                        grad[2 * i] = current.gradient[i].x;
                        grad[2 * i + 1] = current.gradient[i].y;
                    }
                    std::vector<double> dir = grad;
                    std::vector<double> alpha(history.size());
                    for (std::size_t h = history.size(); h-- > 0;) {
                        auto & [s, y] = history[h];
                        double rho = 1 / std::inner_product(y.begin(), y.end(), s.begin(), 0.0);
                        alpha[h] = rho * std::inner_product(s.begin(), s.end(), dir.begin(), 0.0);
                        for (std::size_t k = 0; k < dir.size(); ++k)
                            dir[k] -= alpha[h] * y[k];
                    }
                    if (! history.empty()) {
                        auto & [s, y] = history.back();
                        double gamma = std::inner_product(s.begin(), s.end(), y.begin(), 0.0) /
                            std::inner_product(y.begin(), y.end(), y.begin(), 0.0);
                        for (auto & d : dir)
                            d *= gamma;
                    }
                    for (std::size_t h = 0; h < history.size(); ++h) {
                        auto & [s, y] = history[h];
                        double rho = 1 / std::inner_product(y.begin(), y.end(), s.begin(), 0.0);
                        double b = rho * std::inner_product(y.begin(), y.end(), dir.begin(), 0.0);
                        for (std::size_t k = 0; k < dir.size(); ++k)
                            dir[k] += (alpha[h] - b) * s[k];
                    }
                    double slope = std::inner_product(grad.begin(), grad.end(), dir.begin(), 0.0);
                    if (! (slope > 0)) {
                        dir = grad;
                        history.clear();
                        slope = std::inner_product(grad.begin(), grad.end(), grad.begin(), 0.0);
                    }
                    if (slope == 0)
                        break;

                    double step = history.empty() ? std::min(step_hint, 0.1 / std::sqrt(slope)) : 1.0;
                    std::vector<Point> trial(n);
                    std::optional<ObjectiveValue> accepted;
                    for (int tries = 0; tries < 60; ++tries) {
                        for (std::size_t i = 0; i < n; ++i)
                            trial[i] = {x[i].x - step * dir[2 * i], x[i].y - step * dir[2 * i + 1]};
                        auto value = smoothed_objective(g, trial, beta, mu, p);
                        if (value.value <= current.value - 1e-4 * step * slope) {
                            accepted = std::move(value);
                            break;
                        }
                        step /= 2;
                    }
                    if (! accepted)
                        break;

                    std::vector<double> s(2 * n), y(2 * n);
                    for (std::size_t i = 0; i < n; ++i) {
                        s[2 * i] = trial[i].x - x[i].x;
                        s[2 * i + 1] = trial[i].y - x[i].y;
                        y[2 * i] = accepted->gradient[i].x - current.gradient[i].x;
                        y[2 * i + 1] = accepted->gradient[i].y - current.gradient[i].y;
                    }
                    if (std::inner_product(s.begin(), s.end(), y.begin(), 0.0) > 1e-16) {
                        history.emplace_back(std::move(s), std::move(y));
                        if (history.size() > memory)
                            history.pop_front();
                    }
                    double decrease = current.value - accepted->value;
                    step_hint = step * 2;
                    x = std::move(trial);
                    current = std::move(*accepted);
                    if (decrease < cfg.tol)
                        break;
                }
            }

            Realization candidate{x, cfg.norm};
            try {
                auto feasible = feasibilize(g, candidate);
                auto eval = evaluate(g, feasible);
                if (eval.valid) {
                    attempt.width = eval.width;
                    attempt.realization = std::move(feasible);
                }
            }
            catch (const InfeasibleError &) {
            }
            return attempt;
        }
    }

    auto smoothed_objective(const Graph & g, std::span<const Point> points, double beta, double penalty, double p)
        -> ObjectiveValue
    {
        const auto n = points.size();
        ObjectiveValue out;
        out.gradient.assign(n, Point{});
        if (n < 2)
            return out;

        std::vector<Dist> dist;
        dist.reserve(n * (n - 1) / 2);
        double largest = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                auto d = lp_distance(points[i].x - points[j].x, points[i].y - points[j].y, p);
                largest = std::max(largest, d.d);
                dist.push_back(d);
            }

        double sum = 0;
        for (auto & d : dist)
            sum += std::exp(beta * (d.d - largest));
        out.value = largest + std::log(sum) / beta;

        std::size_t k = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j, ++k) {
                double w = std::exp(beta * (dist[k].d - largest)) / sum;
                Point grad{w * dist[k].ddx, w * dist[k].ddy};
                out.gradient[i] = out.gradient[i] + grad;
                out.gradient[j] = out.gradient[j] - grad;
            }

        for (auto [u, v] : g.edges()) {
            auto d = lp_distance(points[u].x - points[v].x, points[u].y - points[v].y, p);
            if (d.d >= 1)
                continue;
            double slack = 1 - d.d;
            out.value += penalty * slack * slack;
            double coef = -2 * penalty * slack;
            Point grad{coef * d.ddx, coef * d.ddy};
            out.gradient[u] = out.gradient[u] + grad;
            out.gradient[v] = out.gradient[v] - grad;
        }
        return out;
    }

    auto optimize(const Graph & g, const OptimizeConfig & cfg) -> OptimizeResult
    {
        validate(cfg);
        if (g.size() == 0)
            throw ParameterError("optimize needs a graph with at least one edge");

        auto greedy = greedy_coloring(g);
        const double box = 1 + std::sqrt(static_cast<double>(greedy.k));

        std::vector<Attempt> attempts(cfg.restarts);
        std::atomic<unsigned> next{0};
        auto worker = [&] {
            for (unsigned r = next++; r < cfg.restarts; r = next++)
                attempts[r] = run_restart(g, cfg, r, box);
        };
        unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
        threads = std::min(threads, cfg.restarts);
        {
            std::vector<std::jthread> pool;
            for (unsigned t = 1; t < threads; ++t)
                pool.emplace_back(worker);
            worker();
        }

        std::optional<OptimizeResult> best;
        for (unsigned r = 0; r < cfg.restarts; ++r) {
            auto & a = attempts[r];
            if (a.realization && (! best || a.width < best->width))
                best = OptimizeResult{*a.realization, a.width, r, a.iterations};
        }
        if (! best) {
            // Every restart collapsed an edge; fall back to the coloring witness.
            auto r = from_coloring(g, greedy);
            r.norm = cfg.norm;
            auto eval = evaluate(g, r);
            if (! eval.valid)
                r = feasibilize(g, r);
            best = OptimizeResult{r, evaluate(g, r).width, 0, 0};
        }
        return *best;
    }

    auto brute_force(const Graph & g, double resolution, double d_max, std::size_t max_order) -> BruteForceResult
    {
        if (max_order > brute_force_hard_cap)
            throw ParameterError("brute force is capped at " + std::to_string(brute_force_hard_cap) + " vertices");
        if (g.order() > max_order)
            throw ParameterError("brute force refuses graphs with more than " + std::to_string(max_order) + " vertices (got " +
                std::to_string(g.order()) + ")");
        if (g.size() == 0)
            throw ParameterError("brute force needs a graph with at least one edge");
        if (! (resolution > 0) || ! (d_max > 0))
            throw ParameterError("resolution and d_max must be positive");

        using Cell = std::pair<long, long>;
        const auto n = g.order();
        const long reach = static_cast<long>(std::floor(d_max / resolution + 1e-9));

        // Unit length in squared grid units; exact when 1/resolution is an integer.
        const double inverse = 1 / resolution;
        const bool integral = std::abs(inverse - std::round(inverse)) < 1e-9;
        const long unit2 = integral ? static_cast<long>(std::round(inverse)) * static_cast<long>(std::round(inverse)) : 0;
        auto long_enough = [&](long d2) {
            return integral ? d2 >= unit2 : static_cast<double>(d2) * resolution * resolution >= 1;
        };
        auto dist2 = [](Cell a, Cell b) {
            long dx = a.first - b.first, dy = a.second - b.second;
            return dx * dx + dy * dy;
        };

        std::vector<Cell> placed(n), best_cells;
        long best2 = std::numeric_limits<long>::max();

        auto fits = [&](std::size_t k, Cell c, long spread2, long & new_spread2) {
            new_spread2 = spread2;
            for (std::size_t j = 0; j < k; ++j) {
                long d2 = dist2(c, placed[j]);
                if (g.adjacent(static_cast<Vertex>(j), static_cast<Vertex>(k)) && ! long_enough(d2))
                    return false;
                new_spread2 = std::max(new_spread2, d2);
                if (new_spread2 >= best2)
                    return false;
            }
            return true;
        };

        auto search = [&](auto && self, std::size_t k, long spread2) -> void {
            if (k == n) {
                best2 = spread2;
                best_cells = placed;
                return;
            }
            long x_lo = -reach, x_hi = reach, y_lo = -reach, y_hi = reach;
            if (k == 1)
                x_lo = 0, y_lo = y_hi = 0;
            if (best2 != std::numeric_limits<long>::max()) {
                // Every coordinate must stay within the incumbent width of every placed point.
                long span = static_cast<long>(std::ceil(std::sqrt(static_cast<double>(best2))));
                for (std::size_t j = 0; j < k; ++j) {
                    x_lo = std::max(x_lo, placed[j].first - span);
                    x_hi = std::min(x_hi, placed[j].first + span);
                    y_lo = std::max(y_lo, placed[j].second - span);
                    y_hi = std::min(y_hi, placed[j].second + span);
                }
            }
            for (long x = x_lo; x <= x_hi; ++x)
                for (long y = y_lo; y <= y_hi; ++y) {
                    long next2;
                    if (fits(k, {x, y}, spread2, next2)) {
                        placed[k] = {x, y};
                        self(self, k + 1, next2);
                    }
                }
        };
        placed[0] = {0, 0};
        search(search, 1, 0);

        if (best_cells.empty())
            throw PreconditionError("no valid grid placement within d_max = " + std::to_string(d_max));
        BruteForceResult result;
        for (auto [x, y] : best_cells)
            result.realization.points.push_back({static_cast<double>(x) * resolution, static_cast<double>(y) * resolution});
        result.width = std::sqrt(static_cast<double>(best2)) * resolution;
        return result;
    }
}
