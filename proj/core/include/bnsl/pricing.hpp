#pragma once

#include "bnsl/dca.hpp"
#include "bnsl/master.hpp"
#include "bnsl/rng.hpp"
#include "bnsl/scoring.hpp"

namespace bnsl {

enum class InitStrategy { Random, Warm, Hybrid };

struct PricingConfig {
    InitStrategy strategy = InitStrategy::Hybrid;
    int hybrid_threshold = 50;  // pool size at which hybrid switches to warm starts
    std::uint64_t seed = 0;
    DcaConfig dca;
    int random_restarts = 3;  // independent DCA starts per call in the random phase
    double accept_threshold = -1e-6;  // reduced-cost acceptance cutoff, master units
};

/// Reduced cost of column (i, J) given master duals:
///   -score + lambda_i + sum of cluster duals over {C : i in C, J meets C}.
double reduced_cost(int node, NodeSet parents, const DualSolution& duals,
                    const ClusterSet& clusters, double score);

/// DCA start point on [0,1]^{n-1} for node i. Random draws coordinates
/// uniformly; warm superposes the parent-set indicators weighted by the last
/// master primal (throws WarmUnavailable before any solve); hybrid is random
/// until the node's pool reaches hybrid_threshold.
std::vector<double> make_initial_point(int node, InitStrategy strategy, const PricingConfig& config,
                                       const ColumnPool& pool, const RmlpState* last_rmlp, Rng& rng);

struct PriceResult {
    double best_rc = 0.0;  // master units
    std::vector<Column> new_columns;
    int dca_calls = 0;
    int monotonicity_violations = 0;  // extension-value increases beyond tolerance
};

/// Prices one node: builds the DS objective from the current duals, runs DCA
/// from the configured start(s), and turns every visited subset with reduced
/// cost below the acceptance threshold into a scored column not yet pooled.
PriceResult price_node(int node, const LocalScorer& scorer, const PricingConfig& config,
                       const DualSolution& duals, const ClusterSet& clusters,
                       const ColumnPool& pool, const RmlpState* last_rmlp, std::uint64_t round);

}  // namespace bnsl
