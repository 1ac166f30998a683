#include "bnsl/submodular.hpp"

#include <algorithm>
#include <cmath>

namespace bnsl {

namespace {

constexpr double kBoxTol = 1e-9;

std::vector<double> clamped(std::span<const double> x) {
    std::vector<double> out(x.begin(), x.end());
    for (double& v : out) {
        if (v < -kBoxTol || v > 1.0 + kBoxTol) throw OutOfBox("coordinate outside [0,1]");
        v = std::clamp(v, 0.0, 1.0);
    }
    return out;
}

// Shared cluster/dual term: lambda_i' + sum of lambda_C' over stored clusters
// containing the node that J intersects. Nondecreasing and submodular in J.
struct ClusterTerm {
    std::vector<std::pair<NodeSet, double>> hits;  // (cluster restricted to ground set, scaled dual)
    double base = 0.0;

    double operator()(NodeSet global_j) const {
        double v = base;
        for (const auto& [c, lam] : hits)
            if (global_j.intersects(c)) v += lam;
        return v;
    }
};

ClusterTerm make_cluster_term(int node, const DualSolution& duals, const ClusterSet& clusters,
                              double scale) {
    ClusterTerm term;
    term.base = scale * duals.node_duals[static_cast<std::size_t>(node)];
    for (int c = 0; c < clusters.size(); ++c) {
        const NodeSet& cluster = clusters.cluster(c);
        if (!cluster.contains(node)) continue;
        double lam = duals.cluster_duals[static_cast<std::size_t>(c)];
        if (lam <= 0.0) continue;
        term.hits.emplace_back(cluster.without(node), scale * lam);
    }
    return term;
}

std::vector<int> ground_map(int node, int n) {
    std::vector<int> map;
    map.reserve(static_cast<std::size_t>(n - 1));
    for (int j = 0; j < n; ++j)
        if (j != node) map.push_back(j);
    return map;
}

NodeSet to_global(NodeSet local, const std::vector<int>& map) {
    NodeSet out;
    local.for_each([&](int k) { out = out.with(map[static_cast<std::size_t>(k)]); });
    return out;
}

}  // namespace

std::vector<int> descending_order(std::span<const double> x) {
    std::vector<int> order(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) order[k] = static_cast<int>(k);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return x[static_cast<std::size_t>(a)] > x[static_cast<std::size_t>(b)];
    });
    return order;
}

double lovasz_value(const SetFunctionOracle& oracle, std::span<const double> x) {
    const int d = oracle.ground_size();
    if (static_cast<int>(x.size()) != d) throw Error("point dimension mismatch");
    std::vector<double> xc = clamped(x);
    std::vector<int> order = descending_order(xc);

    // sum_k (x_(k) - x_(k+1)) h(S_k) with x_(0) = 1 and x_(d+1) = 0.
    double value = 0.0;
    double prev = 1.0;
    NodeSet level;
    value += (prev - (d > 0 ? xc[static_cast<std::size_t>(order[0])] : 0.0)) * oracle(level);
    for (int k = 0; k < d; ++k) {
        double xk = xc[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
        double xnext = k + 1 < d ? xc[static_cast<std::size_t>(order[static_cast<std::size_t>(k + 1)])] : 0.0;
        level = level.with(order[static_cast<std::size_t>(k)]);
        value += (xk - xnext) * oracle(level);
    }
    return value;
}

std::vector<double> lovasz_subgradient(const SetFunctionOracle& oracle, std::span<const double> x) {
    const int d = oracle.ground_size();
    if (static_cast<int>(x.size()) != d) throw Error("point dimension mismatch");
    std::vector<double> xc = clamped(x);
    std::vector<int> order = descending_order(xc);

    std::vector<double> y(static_cast<std::size_t>(d), 0.0);
    NodeSet level;
    double prev_val = oracle(level);
    for (int k = 0; k < d; ++k) {
        level = level.with(order[static_cast<std::size_t>(k)]);
        double val = oracle(level);
        y[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = val - prev_val;
        prev_val = val;
    }
    return y;
}

DsObjective build_gaussian_ds(const GaussianKernel& kernel, const Dataset& data,
                              const ScoreConfig& config, int node, const DualSolution& duals,
                              const ClusterSet& clusters) {
    const int n = data.n();
    const double N = static_cast<double>(data.sample_count());
    const double scale = 2.0 / N;  // rescale so the likelihood term is the bare logdet difference

    DsObjective obj;
    obj.node = node;
    obj.d = n - 1;
    obj.to_global = ground_map(node, n);
    obj.master_scale = N / 2.0;

    ClusterTerm term = make_cluster_term(node, duals, clusters, scale);
    const double penalty = scale * config.penalty;
    const auto map = obj.to_global;

    obj.g = SetFunctionOracle(obj.d, [&kernel, term, penalty, node, map](NodeSet local) {
        NodeSet j = to_global(local, map);
        return kernel.log_det(j.with(node)) + penalty * j.size() + term(j);
    });
    obj.f = SetFunctionOracle(obj.d, [&kernel, map](NodeSet local) {
        return kernel.log_det(to_global(local, map));
    });
    return obj;
}

DsObjective build_discrete_ds(const EntropyKernel& kernel, const Dataset& data,
                              const ScoreConfig& config, int node, const DualSolution& duals,
                              const ClusterSet& clusters) {
    const int n = data.n();
    const double N = static_cast<double>(data.sample_count());
    const double scale = 1.0 / N;  // per-sample units

    DsObjective obj;
    obj.node = node;
    obj.d = n - 1;
    obj.to_global = ground_map(node, n);
    obj.master_scale = N;

    ClusterTerm term = make_cluster_term(node, duals, clusters, scale);
    const double penalty = scale * config.penalty;
    const auto map = obj.to_global;
    const Dataset* dptr = &data;

    obj.g = SetFunctionOracle(obj.d, [&kernel, term, node, map](NodeSet local) {
        NodeSet j = to_global(local, map);
        return kernel.entropy(j.with(node)) + term(j);
    });
    obj.f = SetFunctionOracle(obj.d, [&kernel, dptr, penalty, node, map](NodeSet local) {
        NodeSet j = to_global(local, map);
        return kernel.entropy(j) - penalty * discrete_parameter_count(*dptr, node, j);
    });
    return obj;
}

}  // namespace bnsl
