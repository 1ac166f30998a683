#include "bnsl/dataset.hpp"

#include <cmath>

namespace bnsl {

namespace {

std::vector<std::string> default_names(int n) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) names.push_back("X" + std::to_string(j));
    return names;
}

void check_shape(std::size_t count, int num_samples, int num_vars) {
    if (num_vars < 2) throw Error("dataset needs at least 2 variables");
    if (num_vars > NodeSet::kMaxNodes) throw Error("variable count exceeds supported maximum of 64");
    if (num_samples < 2) throw Error("dataset needs at least 2 samples");
    if (count != static_cast<std::size_t>(num_samples) * static_cast<std::size_t>(num_vars))
        throw Error("dataset value count does not match N x n");
}

}  // namespace

Dataset Dataset::continuous(std::vector<double> values, int num_samples, int num_vars,
                            std::vector<std::string> names) {
    check_shape(values.size(), num_samples, num_vars);
    for (double v : values)
        if (!std::isfinite(v)) throw NonFinite("dataset values");

    // Center each column so the zero-mean Gaussian model applies without intercepts.
    for (int j = 0; j < num_vars; ++j) {
        double mean = 0.0;
        for (int r = 0; r < num_samples; ++r) mean += values[static_cast<std::size_t>(r) * num_vars + j];
        mean /= num_samples;
        for (int r = 0; r < num_samples; ++r) values[static_cast<std::size_t>(r) * num_vars + j] -= mean;
    }

    Dataset d;
    d.values_ = std::move(values);
    d.kinds_.assign(static_cast<std::size_t>(num_vars), ColumnInfo::continuous());
    d.names_ = names.empty() ? default_names(num_vars) : std::move(names);
    if (d.names_.size() != static_cast<std::size_t>(num_vars)) throw Error("column name count mismatch");
    d.num_samples_ = num_samples;
    d.num_vars_ = num_vars;
    return d;
}

Dataset Dataset::discrete(std::vector<int> codes, int num_samples, int num_vars,
                          std::vector<int> arities, std::vector<std::string> names) {
    check_shape(codes.size(), num_samples, num_vars);
    if (arities.size() != static_cast<std::size_t>(num_vars)) throw Error("arity count mismatch");

    Dataset d;
    d.kinds_.reserve(static_cast<std::size_t>(num_vars));
    for (int j = 0; j < num_vars; ++j) {
        if (arities[static_cast<std::size_t>(j)] < 2) throw Error("discrete arity must be >= 2");
        d.kinds_.push_back(ColumnInfo::discrete(arities[static_cast<std::size_t>(j)]));
    }
    d.values_.resize(codes.size());
    for (int r = 0; r < num_samples; ++r) {
        for (int j = 0; j < num_vars; ++j) {
            int c = codes[static_cast<std::size_t>(r) * num_vars + j];
            if (c < 0 || c >= arities[static_cast<std::size_t>(j)])
                throw ArityViolation("code " + std::to_string(c) + " outside [0, " +
                                     std::to_string(arities[static_cast<std::size_t>(j)]) +
                                     ") in column " + std::to_string(j) + ", row " + std::to_string(r));
            d.values_[static_cast<std::size_t>(r) * num_vars + j] = static_cast<double>(c);
        }
    }
    d.names_ = names.empty() ? default_names(num_vars) : std::move(names);
    if (d.names_.size() != static_cast<std::size_t>(num_vars)) throw Error("column name count mismatch");
    d.num_samples_ = num_samples;
    d.num_vars_ = num_vars;
    return d;
}

}  // namespace bnsl
