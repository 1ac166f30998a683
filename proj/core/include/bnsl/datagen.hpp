#pragma once

#include <string>

#include "bnsl/dataset.hpp"
#include "bnsl/graph.hpp"
#include "bnsl/rng.hpp"

namespace bnsl {

/// Linear-Gaussian simulation protocol: a random DAG on a fixed topological
/// order with edge probability p = 2d/(n-1), edge coefficients of magnitude
/// [0.5, 2] with random sign, and noise variances from [0.7, 1.2].
struct SimSpec {
    int n = 2;
    int samples = 1;
    double avg_in_degree = 0.0;
    double coef_min = 0.5, coef_max = 2.0;
    double noise_var_min = 0.7, noise_var_max = 1.2;
    std::uint64_t seed = 0;

    double edge_probability() const;
    void validate() const;
};

/// DAG with identity topological order: each forward edge i -> j (i < j)
/// appears independently with probability 2d/(n-1).
Dag random_dag(const SimSpec& spec);

struct Simulated {
    Dataset data;
    Dag truth;
    std::vector<std::vector<double>> coefficients;  // per node, aligned with parent iteration order
    std::vector<double> noise_variances;
};

/// Samples X_i = alpha' X_parents + noise in topological order.
Simulated simulate_gaussian(const Dag& truth, const SimSpec& spec);

/// CSV loader: optional header (detected by a non-numeric first field), comma
/// separator, no quoting. Empty kinds infers them: all-integral columns load
/// as discrete with arity max+1, anything else as continuous.
Dataset load_csv(const std::string& path, const std::vector<ColumnInfo>& kinds = {});

/// Writes a dataset as CSV with a header row.
void write_csv(const std::string& path, const Dataset& data);

}  // namespace bnsl
