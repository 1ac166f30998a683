#include "bnsl/pricing.hpp"

#include <algorithm>
#include <unordered_set>

namespace bnsl {

double reduced_cost(int node, NodeSet parents, const DualSolution& duals,
                    const ClusterSet& clusters, double score) {
    if (parents.contains(node)) throw Error("parent set contains the node itself");
    double rc = -score + duals.node_duals[static_cast<std::size_t>(node)];
    for (int c = 0; c < clusters.size(); ++c) {
        const NodeSet& cluster = clusters.cluster(c);
        if (cluster.contains(node) && parents.intersects(cluster))
            rc += duals.cluster_duals[static_cast<std::size_t>(c)];
    }
    return rc;
}

std::vector<double> make_initial_point(int node, InitStrategy strategy, const PricingConfig& config,
                                       const ColumnPool& pool, const RmlpState* last_rmlp, Rng& rng) {
    const int n = pool.node_count();
    const int d = n - 1;

    InitStrategy effective = strategy;
    if (strategy == InitStrategy::Hybrid)
        effective = pool.pool_size(node) < config.hybrid_threshold ? InitStrategy::Random
                                                                   : InitStrategy::Warm;

    std::vector<double> x(static_cast<std::size_t>(d), 0.0);
    if (effective == InitStrategy::Random) {
        for (double& v : x) v = rng.next_double();
        return x;
    }

    if (last_rmlp == nullptr || !last_rmlp->solved()) throw WarmUnavailable();
    // Weighted superposition of the selected parent-set indicators.
    for (const Column& c : pool.columns(node)) {
        double w = last_rmlp->primal_value(node, c.parents);
        if (w <= 0.0) continue;
        c.parents.for_each([&](int j) {
            int local = j < node ? j : j - 1;
            x[static_cast<std::size_t>(local)] += w;
        });
    }
    for (double& v : x) v = std::clamp(v, 0.0, 1.0);
    return x;
}

PriceResult price_node(int node, const LocalScorer& scorer, const PricingConfig& config,
                       const DualSolution& duals, const ClusterSet& clusters,
                       const ColumnPool& pool, const RmlpState* last_rmlp, std::uint64_t round) {
    const Dataset& data = scorer.data();
    DsObjective obj =
        data.is_continuous()
            ? build_gaussian_ds(scorer.gaussian_kernel(), data, scorer.config(), node, duals, clusters)
            : build_discrete_ds(scorer.entropy_kernel(), data, scorer.config(), node, duals, clusters);

    InitStrategy effective = config.strategy;
    if (effective == InitStrategy::Hybrid)
        effective = pool.pool_size(node) < config.hybrid_threshold ? InitStrategy::Random
                                                                   : InitStrategy::Warm;
    const int starts = effective == InitStrategy::Warm ? 1 : config.random_restarts;

    Rng rng = make_stream(config.seed, "pricing", static_cast<std::uint64_t>(node), round);

    PriceResult res;
    std::unordered_set<std::uint64_t> candidate_sets;
    bool have_best = false;
    double best_ds = 0.0;
    NodeSet best_local;

    for (int s = 0; s < starts; ++s) {
        std::vector<double> x0 = make_initial_point(node, effective, config, pool, last_rmlp, rng);
        DcaResult dca = dca_minimize(obj, x0, config.dca);
        ++res.dca_calls;

        for (std::size_t t = 1; t < dca.extension_values.size(); ++t)
            if (dca.extension_values[t] > dca.extension_values[t - 1] + config.dca.kelley_tolerance)
                ++res.monotonicity_violations;

        if (!have_best || dca.best_value < best_ds) {
            have_best = true;
            best_ds = dca.best_value;
            best_local = dca.best_subset;
        }
        candidate_sets.insert(dca.best_subset.bits());
        for (const auto& [subset, value] : dca.visited) candidate_sets.insert(subset.bits());
    }

    // Recompute candidate reduced costs exactly in master units; keep the
    // strictly negative ones that are not already pooled.
    res.best_rc = kInfinity;
    for (std::uint64_t bits : candidate_sets) {
        NodeSet local = NodeSet::from_bits(bits);
        NodeSet parents = obj.to_global_set(local);
        double score = scorer.local_score(node, parents);
        double rc = reduced_cost(node, parents, duals, clusters, score);
        res.best_rc = std::min(res.best_rc, rc);
        if (rc < config.accept_threshold && !pool.contains(node, parents))
            res.new_columns.emplace_back(node, parents, score);
    }
    if (res.best_rc == kInfinity) res.best_rc = 0.0;

    // Deterministic pool merge order.
    std::sort(res.new_columns.begin(), res.new_columns.end(),
              [](const Column& a, const Column& b) { return a.parents.bits() < b.parents.bits(); });
    return res;
}

}  // namespace bnsl
