#pragma once

#include <span>
#include <vector>

#include "bnsl/submodular.hpp"

namespace bnsl {

struct DcaConfig {
    double epsilon = 1e-6;          // outer convergence on |z(x_t) - z(x_{t-1})|
    int max_outer_iters = 50;
    double kelley_tolerance = 1e-6;
    int kelley_max_cuts = 200;
};

/// Outcome of one DS minimization. best_value is a true set-function value
/// (never an extension value); visited holds every distinct level-set subset
/// with negative value seen at any iterate.
struct DcaResult {
    NodeSet best_subset;
    double best_value = 0.0;
    std::vector<std::pair<NodeSet, double>> visited;
    int iterations = 0;
    std::vector<double> extension_values;  // z^L at x_0, x_1, ...
    bool hit_iteration_cap = false;
};

/// Minimizes the Lovasz extension of g minus the linear term <y, x> over the
/// unit box by Kelley's cutting-plane method, stopping when the gap between
/// the best evaluated objective and the LP lower bound drops below
/// kelley_tolerance or the cut budget is exhausted. Returns the best
/// evaluated point, which is never worse than the start point.
std::vector<double> kelley_minimize(const SetFunctionOracle& g, std::span<const double> linear,
                                    const DcaConfig& config, std::span<const double> start);

/// DCA on z = g - f via Lovasz extensions: linearize f at the iterate, let
/// Kelley minimize the convex surrogate, and round every iterate through its
/// level sets. The extension-value trajectory is non-increasing.
DcaResult dca_minimize(const DsObjective& objective, std::span<const double> x0,
                       const DcaConfig& config);

}  // namespace bnsl
