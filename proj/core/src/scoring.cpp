#include "bnsl/scoring.hpp"

#include <Eigen/Cholesky>
#include <numbers>
#include <string>

namespace bnsl {

namespace {

// Residual variances at or below this multiple of the ridge indicate an
// exactly collinear fit; the log-likelihood is unbounded there.
constexpr double kResidualFloorFactor = 1e3;

constexpr double kLogDetFloor = -690.0;  // ~ log(1e-300)

Eigen::MatrixXd submatrix(const Eigen::MatrixXd& m, NodeSet s, double ridge) {
    const auto idx = s.to_vector();
    const int k = static_cast<int>(idx.size());
    Eigen::MatrixXd out(k, k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            out(a, b) = m(idx[static_cast<std::size_t>(a)], idx[static_cast<std::size_t>(b)]);
    out.diagonal().array() += ridge;
    return out;
}

}  // namespace

Eigen::MatrixXd covariance(const Dataset& data) {
    if (!data.is_continuous()) throw Error("covariance requires continuous data");
    const int n = data.n();
    const int N = data.sample_count();
    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> values(
        data.values().data(), N, n);
    Eigen::MatrixXd centered = values;
    centered.rowwise() -= values.colwise().mean();
    Eigen::MatrixXd sigma = (centered.transpose() * centered) / static_cast<double>(N);
    if (!sigma.allFinite()) throw NonFinite("covariance");
    return sigma;
}

GaussianKernel::GaussianKernel(const Dataset& data) : sigma_(covariance(data)) {
    ridge_ = 1e-10 * sigma_.trace() / static_cast<double>(sigma_.rows());
}

double GaussianKernel::log_det(NodeSet s) const {
    if (s.empty()) return 0.0;  // det of the empty matrix is 1
    {
        std::shared_lock lock(mutex_);
        auto it = cache_.find(s.bits());
        if (it != cache_.end()) return it->second;
    }
    double value = compute(s);
    {
        std::unique_lock lock(mutex_);
        cache_.emplace(s.bits(), value);
    }
    return value;
}

double GaussianKernel::compute(NodeSet s) const {
    Eigen::MatrixXd sub = submatrix(sigma_, s, ridge_);
    Eigen::LLT<Eigen::MatrixXd> llt(sub);
    if (llt.info() != Eigen::Success)
        throw SingularSubmatrix("covariance submatrix is not positive definite");
    double log_det = 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
    if (!std::isfinite(log_det) || log_det < kLogDetFloor)
        throw SingularSubmatrix("covariance submatrix determinant underflow");
    return log_det;
}

EntropyKernel::EntropyKernel(const Dataset& data) : data_(&data) {
    if (!data.is_discrete()) throw Error("entropy kernel requires discrete data");
}

double EntropyKernel::entropy(NodeSet s) const {
    if (s.empty()) return 0.0;
    {
        std::shared_lock lock(mutex_);
        auto it = cache_.find(s.bits());
        if (it != cache_.end()) return it->second;
    }
    double value = compute(s);
    {
        std::unique_lock lock(mutex_);
        cache_.emplace(s.bits(), value);
    }
    return value;
}

double EntropyKernel::compute(NodeSet s) const {
    const Dataset& d = *data_;
    const int N = d.sample_count();
    const auto cols = s.to_vector();

    // Configuration keys as packed code bytes; distinct observed configs <= N.
    std::unordered_map<std::string, int> counts;
    counts.reserve(static_cast<std::size_t>(N));
    std::string key(cols.size() * 2, '\0');
    for (int r = 0; r < N; ++r) {
        for (std::size_t k = 0; k < cols.size(); ++k) {
            int code = d.code(r, cols[k]);
            key[2 * k] = static_cast<char>(code & 0xff);
            key[2 * k + 1] = static_cast<char>((code >> 8) & 0xff);
        }
        ++counts[key];
    }

    double h = 0.0;
    const double invN = 1.0 / static_cast<double>(N);
    for (const auto& [cfg, c] : counts) {
        double p = c * invN;
        h -= p * std::log(p);
    }
    return h;
}

double discrete_parameter_count(const Dataset& data, int i, NodeSet j) {
    double count = static_cast<double>(data.arity(i) - 1);
    bool overflow = false;
    j.for_each([&](int v) {
        count *= static_cast<double>(data.arity(v));
        if (count > 1e300) overflow = true;
    });
    if (overflow || !std::isfinite(count))
        throw OverflowError("parameter count overflow for parent set of node " + std::to_string(i));
    return count;
}

double gaussian_local_score(const GaussianKernel& kernel, const Dataset& data,
                            const ScoreConfig& config, int i, NodeSet parents) {
    if (parents.contains(i)) throw Error("parent set contains the node itself");
    const double N = static_cast<double>(data.sample_count());
    double log_resid = kernel.log_det(parents.with(i)) - kernel.log_det(parents);
    // Residuals indistinguishable from the ridge mean the fit is exactly
    // collinear and the likelihood diverges.
    if (std::exp(log_resid) <= kResidualFloorFactor * kernel.ridge())
        throw SingularSubmatrix("residual variance vanishes: exact linear dependence");
    double score = -0.5 * N * log_resid - config.penalty * parents.size();
    if (config.include_constant) score += -0.5 * N * (1.0 + std::log(2.0 * std::numbers::pi));
    return score;
}

double discrete_local_score(const EntropyKernel& kernel, const Dataset& data,
                            const ScoreConfig& config, int i, NodeSet parents) {
    if (parents.contains(i)) throw Error("parent set contains the node itself");
    const double N = static_cast<double>(data.sample_count());
    double loglik = N * (kernel.entropy(parents) - kernel.entropy(parents.with(i)));
    return loglik - config.penalty * discrete_parameter_count(data, i, parents);
}

LocalScorer::LocalScorer(const Dataset& data, ScoreConfig config) : data_(&data), config_(config) {
    if (config.penalty < 0) throw Error("penalty must be nonnegative");
    if (data.is_continuous())
        gaussian_ = std::make_shared<GaussianKernel>(data);
    else
        entropy_ = std::make_shared<EntropyKernel>(data);
}

double LocalScorer::local_score(int i, NodeSet parents) const {
    if (gaussian_) return gaussian_local_score(*gaussian_, *data_, config_, i, parents);
    return discrete_local_score(*entropy_, *data_, config_, i, parents);
}

double LocalScorer::graph_score(const Dag& dag) const {
    double total = 0.0;
    for (int i = 0; i < dag.node_count(); ++i) total += local_score(i, dag.parents(i));
    return total;
}

double LocalScorer::constant_per_node() const {
    if (gaussian_) return -0.5 * data_->sample_count() * (1.0 + std::log(2.0 * std::numbers::pi));
    return 0.0;
}

const GaussianKernel& LocalScorer::gaussian_kernel() const {
    if (!gaussian_) throw Error("no Gaussian kernel for discrete data");
    return *gaussian_;
}

const EntropyKernel& LocalScorer::entropy_kernel() const {
    if (!entropy_) throw Error("no entropy kernel for continuous data");
    return *entropy_;
}

}  // namespace bnsl
