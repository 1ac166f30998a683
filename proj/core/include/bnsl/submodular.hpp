#pragma once

#include <functional>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "bnsl/column.hpp"
#include "bnsl/scoring.hpp"

namespace bnsl {

/// Set function on a ground set {0, ..., d-1} with optional memoization.
/// Repeated evaluation of the same subset returns the identical value.
class SetFunctionOracle {
public:
    SetFunctionOracle() = default;
    SetFunctionOracle(int ground_size, std::function<double(NodeSet)> eval, bool memoize = true)
        : d_(ground_size), eval_(std::move(eval)) {
        if (memoize) memo_ = std::make_shared<std::unordered_map<std::uint64_t, double>>();
    }

    int ground_size() const { return d_; }

    double operator()(NodeSet s) const {
        if (!memo_) return eval_(s);
        auto it = memo_->find(s.bits());
        if (it != memo_->end()) return it->second;
        double v = eval_(s);
        memo_->emplace(s.bits(), v);
        return v;
    }

private:
    int d_ = 0;
    std::function<double(NodeSet)> eval_;
    std::shared_ptr<std::unordered_map<std::uint64_t, double>> memo_;
};

/// Pricing objective for one node as a difference of submodular functions:
/// z(J) = g(J) - f(J) over the ground set V \ {node}, re-indexed to
/// 0..d-1. Values are in rescaled per-sample units; multiply by
/// master_scale to get master-problem reduced costs.
struct DsObjective {
    SetFunctionOracle g;
    SetFunctionOracle f;
    int node = 0;
    int d = 0;
    std::vector<int> to_global;  // local index -> dataset column
    double master_scale = 1.0;

    double value(NodeSet local) const { return g(local) - f(local); }
    double master_value(NodeSet local) const { return master_scale * value(local); }

    NodeSet to_global_set(NodeSet local) const {
        NodeSet out;
        local.for_each([&](int k) { out = out.with(to_global[static_cast<std::size_t>(k)]); });
        return out;
    }
};

/// Descending coordinate order; equal coordinates break ties by ascending
/// index so subgradients are reproducible.
std::vector<int> descending_order(std::span<const double> x);

/// Lovasz extension value at x in [0,1]^d. Coordinates more than 1e-9 outside
/// the box raise OutOfBox; smaller excursions are clamped.
double lovasz_value(const SetFunctionOracle& oracle, std::span<const double> x);

/// Greedy subgradient of the Lovasz extension at x: marginal gains along the
/// descending sort of x.
std::vector<double> lovasz_subgradient(const SetFunctionOracle& oracle, std::span<const double> x);

/// Gaussian pricing decomposition:
///   g(J) = logdet(Sigma_{J+i}) + penalty'|J| + cluster duals hit by J + node dual
///   f(J) = logdet(Sigma_J)
/// in (2/N)-rescaled units; master_scale converts back (N/2).
DsObjective build_gaussian_ds(const GaussianKernel& kernel, const Dataset& data,
                              const ScoreConfig& config, int node, const DualSolution& duals,
                              const ClusterSet& clusters);

/// Multinomial pricing decomposition:
///   g(J) = H(J + i) + cluster duals hit by J + node dual
///   f(J) = H(J) - penalty' * parameter count
/// in per-sample units; master_scale converts back (N).
DsObjective build_discrete_ds(const EntropyKernel& kernel, const Dataset& data,
                              const ScoreConfig& config, int node, const DualSolution& duals,
                              const ClusterSet& clusters);

}  // namespace bnsl
