#include "bnsl/oracle.hpp"

#include <cmath>
#include <limits>

namespace bnsl {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace

ExactBnsl exact_bnsl(const Dataset& data, const ScoreConfig& config, int max_n) {
    const int n = data.n();
    if (n > max_n)
        throw TooLarge("exact search limited to " + std::to_string(max_n) + " nodes, got " +
                       std::to_string(n));

    LocalScorer scorer(data, config);
    const std::uint64_t full = n == 64 ? ~0ull : ((1ull << n) - 1);
    const std::size_t num_masks = static_cast<std::size_t>(full) + 1;

    // best_parents[v][T]: max_{J subseteq T} score_v(J), with its argmax.
    std::vector<std::vector<double>> bp_val(static_cast<std::size_t>(n),
                                            std::vector<double>(num_masks, kNegInf));
    std::vector<std::vector<std::uint64_t>> bp_arg(
        static_cast<std::size_t>(n), std::vector<std::uint64_t>(num_masks, 0));

    for (int v = 0; v < n; ++v) {
        for (std::uint64_t mask = 0; mask <= full; ++mask) {
            if (mask & (1ull << v)) continue;
            double best;
            std::uint64_t arg = mask;
            try {
                best = scorer.local_score(v, NodeSet::from_bits(mask));
            } catch (const SingularSubmatrix&) {
                best = kNegInf;  // degenerate fit; cannot be part of a finite optimum
            }
            std::uint64_t rest = mask;
            while (rest != 0) {
                std::uint64_t bit = rest & (~rest + 1);
                rest ^= bit;
                std::uint64_t sub = mask ^ bit;
                if (bp_val[static_cast<std::size_t>(v)][sub] > best) {
                    best = bp_val[static_cast<std::size_t>(v)][sub];
                    arg = bp_arg[static_cast<std::size_t>(v)][sub];
                }
            }
            bp_val[static_cast<std::size_t>(v)][mask] = best;
            bp_arg[static_cast<std::size_t>(v)][mask] = arg;
        }
    }

    // best[S]: optimal score over DAGs on variable set S, via the last sink.
    std::vector<double> best(num_masks, 0.0);
    std::vector<int> best_sink(num_masks, -1);
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
        double value = kNegInf;
        int sink = -1;
        std::uint64_t rest = mask;
        while (rest != 0) {
            std::uint64_t bit = rest & (~rest + 1);
            int v = std::countr_zero(bit);
            rest ^= bit;
            std::uint64_t others = mask ^ bit;
            double cand = best[others] + bp_val[static_cast<std::size_t>(v)][others];
            if (cand > value) {
                value = cand;
                sink = v;
            }
        }
        best[mask] = value;
        best_sink[mask] = sink;
        if (mask == full) break;
    }

    std::vector<NodeSet> parents(static_cast<std::size_t>(n));
    std::uint64_t mask = full;
    while (mask != 0) {
        int v = best_sink[mask];
        if (v < 0) throw InvariantViolation("exact search failed to recover a sink");
        std::uint64_t others = mask ^ (1ull << v);
        parents[static_cast<std::size_t>(v)] = NodeSet::from_bits(bp_arg[static_cast<std::size_t>(v)][others]);
        mask = others;
    }

    Dag dag = Dag::make(std::move(parents));
    return ExactBnsl{dag, best[full]};
}

ExactPricingResult exact_pricing(int node, const DualSolution& duals, const ClusterSet& clusters,
                                 const LocalScorer& scorer, int max_n) {
    const int n = scorer.data().n();
    if (n > max_n) throw TooLarge("exact pricing limited to " + std::to_string(max_n) + " nodes");

    ExactPricingResult res;
    res.best_rc = std::numeric_limits<double>::infinity();
    const std::uint64_t full = (1ull << n) - 1;
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
        if (mask & (1ull << node)) continue;
        NodeSet parents = NodeSet::from_bits(mask);
        double rc;
        try {
            rc = reduced_cost(node, parents, duals, clusters, scorer.local_score(node, parents));
        } catch (const SingularSubmatrix&) {
            continue;
        }
        if (rc < res.best_rc) {
            res.best_rc = rc;
            res.best_parents = parents;
        }
    }
    return res;
}

}  // namespace bnsl
