#include "bnsl/dca.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "bnsl/lp.hpp"

namespace bnsl {

std::vector<double> kelley_minimize(const SetFunctionOracle& g, std::span<const double> linear,
                                    const DcaConfig& config, std::span<const double> start) {
    const int d = g.ground_size();
    if (static_cast<int>(linear.size()) != d || static_cast<int>(start.size()) != d)
        throw Error("kelley dimension mismatch");

    auto surrogate = [&](std::span<const double> x) {
        double v = lovasz_value(g, x);
        for (int k = 0; k < d; ++k) v -= linear[static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(k)];
        return v;
    };

    // LP over (x, t): min t - <linear, x> with epigraph cuts t >= g^L(x_j) + <s_j, x - x_j>.
    LinearProgram lp;
    lp.sense = Sense::Minimize;
    for (int k = 0; k < d; ++k) lp.add_variable(-linear[static_cast<std::size_t>(k)], 0.0, 1.0);
    const int tvar = lp.add_variable(1.0, -kInfinity, kInfinity);

    std::vector<double> x(start.begin(), start.end());
    std::vector<double> best_x = x;
    double best_val = surrogate(x);

    SimplexSolver simplex;
    Basis warm;

    for (int cut = 0; cut < config.kelley_max_cuts; ++cut) {
        double gval = lovasz_value(g, x);
        std::vector<double> grad = lovasz_subgradient(g, x);

        double cur = gval;
        for (int k = 0; k < d; ++k) cur -= linear[static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(k)];
        if (cur < best_val) {
            best_val = cur;
            best_x = x;
        }

        // t - <grad, x> >= g^L(x_cut) - <grad, x_cut>
        RowConstraint row;
        row.rel = Relation::GreaterEqual;
        double rhs = gval;
        for (int k = 0; k < d; ++k) {
            rhs -= grad[static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(k)];
            if (grad[static_cast<std::size_t>(k)] != 0.0)
                row.coeffs.emplace_back(k, -grad[static_cast<std::size_t>(k)]);
        }
        row.coeffs.emplace_back(tvar, 1.0);
        row.rhs = rhs;
        lp.add_row(std::move(row));

        LpSolution sol = simplex.solve(lp, warm.empty() ? nullptr : &warm);
        if (sol.status != LpStatus::Optimal)
            throw LpFailure("kelley model LP did not solve to optimality");
        warm = sol.basis;

        double lower = sol.objective;
        if (best_val - lower <= config.kelley_tolerance) break;
        for (int k = 0; k < d; ++k) x[static_cast<std::size_t>(k)] = sol.primal[static_cast<std::size_t>(k)];
    }
    return best_x;
}

namespace {

// Evaluates z on all d+1 level sets of x and folds them into the running best
// and the visited list. Tie on value prefers the smaller encoding.
void scan_level_sets(const DsObjective& obj, std::span<const double> x, NodeSet& best_subset,
                     double& best_value, bool& have_best,
                     std::vector<std::pair<NodeSet, double>>& visited,
                     std::unordered_set<std::uint64_t>& seen) {
    std::vector<int> order = descending_order(x);
    NodeSet level;
    for (int k = 0; k <= static_cast<int>(order.size()); ++k) {
        if (k > 0) level = level.with(order[static_cast<std::size_t>(k - 1)]);
        if (!seen.insert(level.bits()).second) continue;
        double v = obj.value(level);
        if (v < 0.0) visited.emplace_back(level, v);
        if (!have_best || v < best_value ||
            (v == best_value && level.bits() < best_subset.bits())) {
            have_best = true;
            best_value = v;
            best_subset = level;
        }
    }
}

}  // namespace

DcaResult dca_minimize(const DsObjective& obj, std::span<const double> x0, const DcaConfig& config) {
    const int d = obj.d;
    if (static_cast<int>(x0.size()) != d) throw Error("dca start dimension mismatch");
    if (config.epsilon <= 0 || config.max_outer_iters < 1 || config.kelley_max_cuts < 1)
        throw Error("invalid dca configuration");

    DcaResult res;
    std::unordered_set<std::uint64_t> seen;
    bool have_best = false;

    std::vector<double> x(x0.begin(), x0.end());
    for (double& v : x) v = std::clamp(v, 0.0, 1.0);

    auto extension_value = [&](std::span<const double> p) {
        return lovasz_value(obj.g, p) - lovasz_value(obj.f, p);
    };

    double z_prev = extension_value(x);
    res.extension_values.push_back(z_prev);
    scan_level_sets(obj, x, res.best_subset, res.best_value, have_best, res.visited, seen);

    for (int t = 0; t < config.max_outer_iters; ++t) {
        std::vector<double> y = lovasz_subgradient(obj.f, x);
        std::vector<double> x_next = kelley_minimize(obj.g, y, config, x);

        double z_next = extension_value(x_next);
        res.extension_values.push_back(z_next);
        res.iterations = t + 1;
        scan_level_sets(obj, x_next, res.best_subset, res.best_value, have_best, res.visited, seen);

        x = std::move(x_next);
        if (std::abs(z_next - z_prev) < config.epsilon) {
            z_prev = z_next;
            break;
        }
        z_prev = z_next;
        if (t + 1 == config.max_outer_iters) res.hit_iteration_cap = true;
    }
    return res;
}

}  // namespace bnsl
