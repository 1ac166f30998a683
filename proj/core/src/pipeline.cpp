#include "bnsl/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "bnsl/separation.hpp"

namespace bnsl {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct TimeBudget {
    Clock::time_point start = Clock::now();
    double limit;

    explicit TimeBudget(double limit_seconds) : limit(limit_seconds) {}
    bool exhausted() const { return seconds_since(start) > limit; }
    double remaining() const { return std::max(0.0, limit - seconds_since(start)); }
};

// Prices the given nodes concurrently over an immutable duals snapshot;
// results land in node order regardless of thread count.
std::vector<PriceResult> price_nodes(const std::vector<int>& nodes, const LocalScorer& scorer,
                                     const PricingConfig& config, const DualSolution& duals,
                                     const ClusterSet& clusters, const ColumnPool& pool,
                                     const RmlpState* last, std::uint64_t round, int threads) {
    std::vector<PriceResult> results(nodes.size());
    if (threads <= 1 || nodes.size() <= 1) {
        for (std::size_t k = 0; k < nodes.size(); ++k)
            results[k] = price_node(nodes[k], scorer, config, duals, clusters, pool, last, round);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    const int width = std::min<int>(threads, static_cast<int>(nodes.size()));
    for (int w = 0; w < width; ++w) {
        workers.emplace_back([&, w] {
            try {
                while (true) {
                    std::size_t k = next.fetch_add(1);
                    if (k >= nodes.size()) break;
                    results[k] =
                        price_node(nodes[k], scorer, config, duals, clusters, pool, last, round);
                }
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

}  // namespace

RunReport run(const Dataset& data, const PipelineConfig& config) {
    const int n = data.n();
    TimeBudget budget(config.limits.wall_seconds);

    LocalScorer scorer(data, config.score);

    std::vector<double> empty_scores(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) empty_scores[static_cast<std::size_t>(i)] = scorer.local_score(i, NodeSet());

    RunReport report{Dag::empty(n)};
    double empty_score = 0.0;
    for (double s : empty_scores) empty_score += s;
    report.score = empty_score;

    ColumnPool pool(n, empty_scores);
    ClusterSet clusters;
    RmlpState rmlp(n);

    auto finish = [&](const std::string& reason) {
        report.convergence = reason;
        report.score_with_constant = report.score + n * scorer.constant_per_node();
        report.timings.total = seconds_since(budget.start);
        report.lp_solves = rmlp.solves();
        return report;
    };

    try {
        bool have_prev_score = false;
        double prev_score = 0.0;
        std::uint64_t pricing_round = 0;

        for (int outer = 0; outer < config.limits.outer_iterations; ++outer) {
            report.outer_iterations = outer + 1;
            long iter_columns = 0;
            long iter_clusters = 0;

            // Column generation: price nodes with negative reduced cost until
            // none is left or the inner cap trips.
            auto cg_start = Clock::now();
            std::vector<bool> must_price(static_cast<std::size_t>(n), true);
            for (int inner = 0; inner < config.cg_inner_cap; ++inner) {
                if (budget.exhausted()) return finish("time_limit");
                rmlp.solve(pool, clusters);
                DualSolution duals = rmlp.duals(clusters);

                std::vector<int> to_price;
                for (int i = 0; i < n; ++i)
                    if (must_price[static_cast<std::size_t>(i)]) to_price.push_back(i);
                if (to_price.empty()) break;

                ++pricing_round;
                std::vector<PriceResult> priced =
                    price_nodes(to_price, scorer, config.pricing, duals, clusters, pool, &rmlp,
                                pricing_round, config.threads);

                bool any_columns = false;
                for (std::size_t k = 0; k < to_price.size(); ++k) {
                    const PriceResult& pr = priced[k];
                    report.dca_calls += pr.dca_calls;
                    report.monotonicity_violations += pr.monotonicity_violations;
                    must_price[static_cast<std::size_t>(to_price[k])] =
                        pr.best_rc < config.pricing.accept_threshold;
                    for (const Column& c : pr.new_columns) {
                        if (pool.insert(c)) {
                            ++report.columns_generated;
                            ++iter_columns;
                            any_columns = true;
                        }
                    }
                }
                if (!any_columns) {
                    // No progress is possible without new columns; pricing
                    // again with identical duals would repeat itself.
                    break;
                }
                if (inner + 1 == config.cg_inner_cap) report.cg_cap_hit = true;
            }
            report.timings.cg += seconds_since(cg_start);

            // Row generation: add the most violated cluster until none exists.
            auto rows_start = Clock::now();
            while (true) {
                if (budget.exhausted()) return finish("time_limit");
                rmlp.solve(pool, clusters);
                auto violated = separate_fractional(rmlp.primal_support(), n);
                if (!violated.has_value()) break;
                if (!clusters.insert(violated->cluster))
                    throw InvariantViolation("separation returned a known cluster");
                ++report.clusters_added;
                ++iter_clusters;
            }
            report.timings.rows += seconds_since(rows_start);

            // Integer phase over the current pools and clusters.
            auto int_start = Clock::now();
            MilpLimits rmip_limits = config.rmip_limits;
            rmip_limits.time_seconds = std::min(rmip_limits.time_seconds, budget.remaining() + 1.0);
            RmipResult rmip = solve_rmip(pool, clusters, rmip_limits);
            report.timings.integer += seconds_since(int_start);

            report.clusters_added += static_cast<long>(rmip.clusters_added.size());
            iter_clusters += static_cast<long>(rmip.clusters_added.size());
            report.dag = rmip.dag;
            report.score = rmip.score;

            if (budget.exhausted()) return finish("time_limit");

            bool score_stable =
                have_prev_score &&
                std::abs(rmip.score - prev_score) < 1e-6 * (1.0 + std::abs(rmip.score));
            bool nothing_new = iter_columns == 0 && iter_clusters == 0;
            if (score_stable && nothing_new) {
                if (rmip.status != MilpStatus::Optimal) {
                    // Certify restricted optimality with an uncapped final solve.
                    MilpLimits unlimited;
                    unlimited.max_nodes = std::numeric_limits<long>::max();
                    unlimited.time_seconds = budget.remaining() + 1.0;
                    RmipResult final_rmip = solve_rmip(pool, clusters, unlimited);
                    report.dag = final_rmip.dag;
                    report.score = final_rmip.score;
                }
                return finish("converged");
            }
            have_prev_score = true;
            prev_score = rmip.score;
        }
        return finish("iteration_limit");
    } catch (const Error& e) {
        // Salvage the all-empty assignment rather than losing the run.
        report.dag = Dag::empty(n);
        report.score = empty_score;
        return finish(std::string("error:") + e.what());
    }
}

}  // namespace bnsl
