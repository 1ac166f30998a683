#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "bnsl/dataset.hpp"
#include "bnsl/graph.hpp"
#include "bnsl/node_set.hpp"

namespace bnsl {

/// Penalty configuration for l0-penalized likelihood scores. BIC and AIC are
/// the standard instantiations; a raw penalty is accepted as well.
struct ScoreConfig {
    double penalty = 1.0;
    bool include_constant = false;  // add -(N/2)(1+log 2pi) per node to reported Gaussian scores

    static ScoreConfig bic(int num_samples) {
        return {std::log(static_cast<double>(num_samples)) / 2.0, false};
    }
    static ScoreConfig aic() { return {1.0, false}; }
    static ScoreConfig raw(double lambda) { return {lambda, false}; }
};

/// Empirical covariance (1/N normalization) of an all-continuous dataset,
/// computed on column-mean-centered data. Throws NonFinite on bad values.
Eigen::MatrixXd covariance(const Dataset& data);

/// Memoizing log-determinant oracle over principal submatrices of the ridge-
/// regularized empirical covariance. Thread-safe: concurrent reads, serialized
/// inserts; duplicated evaluation is possible but values are deterministic.
class GaussianKernel {
public:
    explicit GaussianKernel(const Dataset& data);

    /// log det of the regularized covariance restricted to S; 0 for S = {}.
    /// Throws SingularSubmatrix when the determinant underflows entirely.
    double log_det(NodeSet s) const;

    const Eigen::MatrixXd& sigma() const { return sigma_; }
    double ridge() const { return ridge_; }

private:
    double compute(NodeSet s) const;

    Eigen::MatrixXd sigma_;
    double ridge_ = 0.0;
    mutable std::unordered_map<std::uint64_t, double> cache_;
    mutable std::shared_mutex mutex_;
};

/// Memoizing joint-entropy oracle (nats) over variable subsets of an
/// all-discrete dataset; H({}) = 0 and 0 log 0 counts as 0.
class EntropyKernel {
public:
    explicit EntropyKernel(const Dataset& data);

    double entropy(NodeSet s) const;

private:
    double compute(NodeSet s) const;

    const Dataset* data_;
    mutable std::unordered_map<std::uint64_t, double> cache_;
    mutable std::shared_mutex mutex_;
};

/// Number of free parameters of node i with parents J in the multinomial
/// model: (a_i - 1) * prod_{j in J} a_j. Throws OverflowError when the
/// product leaves the representable range.
double discrete_parameter_count(const Dataset& data, int i, NodeSet j);

/// Local score facade: dispatches to the Gaussian or multinomial score and
/// owns the kernel caches shared by every evaluation.
class LocalScorer {
public:
    LocalScorer(const Dataset& data, ScoreConfig config);

    /// score_i(J); requires i not in J.
    double local_score(int i, NodeSet parents) const;

    /// Sum of local scores over a whole parent assignment.
    double graph_score(const Dag& dag) const;

    /// Per-node additive constant -(N/2)(1+log 2pi) for Gaussian data, 0 for
    /// discrete. Reported scores add it; optimization-facing scores drop it.
    double constant_per_node() const;

    const Dataset& data() const { return *data_; }
    const ScoreConfig& config() const { return config_; }

    const GaussianKernel& gaussian_kernel() const;
    const EntropyKernel& entropy_kernel() const;

private:
    const Dataset* data_;
    ScoreConfig config_;
    std::shared_ptr<GaussianKernel> gaussian_;
    std::shared_ptr<EntropyKernel> entropy_;
};

/// score_i(J) for Gaussian data: -(N/2) log(residual variance) - penalty |J|,
/// with the residual variance obtained from the log-det difference of the two
/// covariance submatrices.
double gaussian_local_score(const GaussianKernel& kernel, const Dataset& data,
                            const ScoreConfig& config, int i, NodeSet parents);

/// score_i(J) for multinomial data: N (H(J) - H(J + i)) - penalty * parameter count.
double discrete_local_score(const EntropyKernel& kernel, const Dataset& data,
                            const ScoreConfig& config, int i, NodeSet parents);

}  // namespace bnsl
