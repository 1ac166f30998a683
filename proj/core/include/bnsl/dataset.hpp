#pragma once

#include <string>
#include <vector>

#include "bnsl/errors.hpp"
#include "bnsl/node_set.hpp"

namespace bnsl {

enum class ColumnKind { Continuous, Discrete };

struct ColumnInfo {
    ColumnKind kind = ColumnKind::Continuous;
    int arity = 0;  // >= 2 when discrete, ignored otherwise

    static ColumnInfo continuous() { return {ColumnKind::Continuous, 0}; }
    static ColumnInfo discrete(int arity) { return {ColumnKind::Discrete, arity}; }
};

/// Immutable observation matrix: N samples of n variables, all-continuous or
/// all-discrete. Continuous columns are mean-centered at construction;
/// discrete columns hold integer codes in [0, arity).
class Dataset {
public:
    /// values is row-major N x n. Centers every column.
    static Dataset continuous(std::vector<double> values, int num_samples, int num_vars,
                              std::vector<std::string> names = {});

    /// codes is row-major N x n; arity of column j must exceed every code in it.
    static Dataset discrete(std::vector<int> codes, int num_samples, int num_vars,
                            std::vector<int> arities, std::vector<std::string> names = {});

    int n() const { return num_vars_; }
    int sample_count() const { return num_samples_; }

    bool is_continuous() const { return kinds_[0].kind == ColumnKind::Continuous; }
    bool is_discrete() const { return kinds_[0].kind == ColumnKind::Discrete; }

    const ColumnInfo& info(int col) const { return kinds_[static_cast<std::size_t>(col)]; }
    int arity(int col) const { return kinds_[static_cast<std::size_t>(col)].arity; }

    double value(int row, int col) const {
        return values_[static_cast<std::size_t>(row) * num_vars_ + col];
    }
    int code(int row, int col) const {
        return static_cast<int>(values_[static_cast<std::size_t>(row) * num_vars_ + col]);
    }

    /// Row-major N x n backing store.
    const std::vector<double>& values() const { return values_; }

    const std::vector<std::string>& names() const { return names_; }

private:
    Dataset() = default;

    std::vector<double> values_;
    std::vector<ColumnInfo> kinds_;
    std::vector<std::string> names_;
    int num_samples_ = 0;
    int num_vars_ = 0;
};

}  // namespace bnsl
