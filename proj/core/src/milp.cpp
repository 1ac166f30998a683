#include "bnsl/milp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <queue>

namespace bnsl {

namespace {

constexpr double kIntTol = 1e-6;

struct Node {
    long id = 0;
    double estimate = 0.0;  // parent LP bound, in max-sense units
    std::vector<std::pair<int, double>> fixings;  // (binary var, 0 or 1)
    Basis warm;
};

struct NodeOrder {
    // Best bound first; FIFO on ties for determinism.
    bool operator()(const Node& a, const Node& b) const {
        if (a.estimate != b.estimate) return a.estimate < b.estimate;
        return a.id > b.id;
    }
};

}  // namespace

MilpResult solve_milp(const MilpProblem& problem, const LazyCallback& callback,
                      const MilpLimits& limits) {
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    LinearProgram lp = problem.lp;  // grows as lazy cuts arrive
    const bool maximize = lp.sense == Sense::Maximize;
    const double sign = maximize ? 1.0 : -1.0;  // work in max-sense units internally

    for (int j : problem.binaries) {
        if (j < 0 || j >= lp.num_vars()) throw LpFailure("binary index out of range");
        lp.lower[static_cast<std::size_t>(j)] = std::max(lp.lower[static_cast<std::size_t>(j)], 0.0);
        lp.upper[static_cast<std::size_t>(j)] = std::min(lp.upper[static_cast<std::size_t>(j)], 1.0);
    }

    MilpResult res;
    bool have_incumbent = false;
    double best = -kInfinity;  // max-sense incumbent value
    std::vector<double> best_x;

    SimplexSolver simplex;
    std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
    long next_id = 0;
    open.push(Node{next_id++, kInfinity, {}, {}});

    double exhausted_bound = -kInfinity;  // max over bounds of pruned subtrees
    bool hit_limit = false;
    MilpStatus limit_kind = MilpStatus::Optimal;

    while (!open.empty()) {
        if (res.nodes >= limits.max_nodes) {
            hit_limit = true;
            limit_kind = MilpStatus::NodeLimit;
            break;
        }
        if (elapsed() > limits.time_seconds) {
            hit_limit = true;
            limit_kind = MilpStatus::TimeLimit;
            break;
        }

        Node node = open.top();
        open.pop();
        if (have_incumbent && node.estimate <= best + 1e-9) {
            exhausted_bound = std::max(exhausted_bound, node.estimate);
            continue;
        }
        ++res.nodes;

        // Apply node fixings on a scratch copy of the bounds.
        std::vector<double> saved_lo = lp.lower, saved_hi = lp.upper;
        for (const auto& [j, v] : node.fixings) {
            lp.lower[static_cast<std::size_t>(j)] = v;
            lp.upper[static_cast<std::size_t>(j)] = v;
        }

        LpSolution sol;
        bool fractional = false;
        int branch_var = -1;
        while (true) {
            sol = simplex.solve(lp, node.warm.empty() ? nullptr : &node.warm);
            if (sol.status == LpStatus::Unbounded) {
                lp.lower = std::move(saved_lo);
                lp.upper = std::move(saved_hi);
                throw LpFailure("relaxation unbounded; binary problems should be box-bounded");
            }
            if (sol.status == LpStatus::Infeasible) break;
            node.warm = sol.basis;

            double bound = sign * sol.objective;
            if (have_incumbent && bound <= best + 1e-9) {
                exhausted_bound = std::max(exhausted_bound, bound);
                break;
            }

            fractional = false;
            branch_var = -1;
            double most = -1.0;
            for (int j : problem.binaries) {
                double v = sol.primal[static_cast<std::size_t>(j)];
                double frac = std::min(v - std::floor(v), std::ceil(v) - v);
                double dist = std::min(std::abs(v), std::abs(1.0 - v));
                if (dist > kIntTol) {
                    fractional = true;
                    if (frac > most + 1e-12) {
                        most = frac;
                        branch_var = j;
                    }
                }
            }
            if (fractional) break;

            // Integer candidate: round and consult the lazy callback.
            std::vector<double> cand = sol.primal;
            for (int j : problem.binaries)
                cand[static_cast<std::size_t>(j)] = std::round(cand[static_cast<std::size_t>(j)]);
            std::vector<RowConstraint> cuts = callback ? callback(cand) : std::vector<RowConstraint>{};
            if (cuts.empty()) {
                if (!have_incumbent || bound > best + 1e-9) {
                    have_incumbent = true;
                    best = bound;
                    best_x = std::move(cand);
                }
                exhausted_bound = std::max(exhausted_bound, bound);
                break;
            }
            for (RowConstraint& c : cuts) lp.add_row(std::move(c));
            // Re-solve the same node with the new global rows.
        }

        lp.lower = std::move(saved_lo);
        lp.upper = std::move(saved_hi);

        if (sol.status == LpStatus::Infeasible) continue;
        double bound = sign * sol.objective;
        if (!fractional) continue;  // handled above (incumbent or pruned)
        if (have_incumbent && bound <= best + 1e-9) {
            exhausted_bound = std::max(exhausted_bound, bound);
            continue;
        }

        // Branch: fixing to 0/1; children inherit the node basis.
        for (double v : {0.0, 1.0}) {
            Node child;
            child.id = next_id++;
            child.estimate = bound;
            child.fixings = node.fixings;
            child.fixings.emplace_back(branch_var, v);
            child.warm = node.warm;
            open.push(child);
        }
    }

    if (!have_incumbent) throw NoIncumbent("limits reached before any feasible integer point");

    double bound_maxsense = best;
    if (hit_limit) {
        bound_maxsense = std::max(bound_maxsense, exhausted_bound);
        while (!open.empty()) {
            bound_maxsense = std::max(bound_maxsense, open.top().estimate);
            open.pop();
        }
    }

    res.status = hit_limit ? limit_kind : MilpStatus::Optimal;
    res.incumbent = std::move(best_x);
    res.objective = sign * best;  // back to the problem's own sense
    res.bound = sign * bound_maxsense;
    return res;
}

}  // namespace bnsl
