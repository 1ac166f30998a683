#pragma once

#include "bnsl/column.hpp"
#include "bnsl/pricing.hpp"
#include "bnsl/scoring.hpp"

namespace bnsl {

struct ExactBnsl {
    Dag dag;
    double score = 0.0;
};

/// Globally optimal DAG by dynamic programming over sink orderings, with
/// per-node best-parent-set tables accumulated over subsets. Exponential:
/// refuses n > max_n. Intended for tests and acceptance checks.
ExactBnsl exact_bnsl(const Dataset& data, const ScoreConfig& config, int max_n = 12);

struct ExactPricingResult {
    NodeSet best_parents;
    double best_rc = 0.0;
};

/// Exact pricing minimum by full enumeration of the 2^(n-1) parent sets.
ExactPricingResult exact_pricing(int node, const DualSolution& duals, const ClusterSet& clusters,
                                 const LocalScorer& scorer, int max_n = 20);

}  // namespace bnsl
