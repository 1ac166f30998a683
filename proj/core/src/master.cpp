#include "bnsl/master.hpp"

#include <algorithm>

namespace bnsl {

int column_coefficient(NodeSet parents, int node, NodeSet cluster) {
    if (parents.contains(node)) throw Error("column parent set contains its own node");
    return cluster.contains(node) && parents.intersects(cluster) ? 1 : 0;
}

RmlpState::RmlpState(int n) : n_(n) {
    lp_.sense = Sense::Maximize;
    for (int i = 0; i < n; ++i) {
        RowConstraint row;
        row.rel = Relation::Equal;
        row.rhs = 1.0;
        lp_.add_row(std::move(row));
    }
}

void RmlpState::append_column(const Column& c) {
    int col = lp_.add_variable(c.local_score, 0.0, 1.0);
    lp_.rows[static_cast<std::size_t>(c.node)].coeffs.emplace_back(col, 1.0);
    for (std::size_t r = 0; r < row_clusters_.size(); ++r) {
        if (column_coefficient(c.parents, c.node, row_clusters_[r]) == 1)
            lp_.rows[static_cast<std::size_t>(n_) + r].coeffs.emplace_back(col, 1.0);
    }
    col_index_.emplace(ColKey{c.node, c.parents.bits()}, col);
    col_meta_.emplace_back(c.node, c.parents);
}

void RmlpState::append_cluster(NodeSet cluster) {
    RowConstraint row;
    row.rel = Relation::LessEqual;
    row.rhs = static_cast<double>(cluster.size() - 1);
    for (std::size_t col = 0; col < col_meta_.size(); ++col) {
        const auto& [node, parents] = col_meta_[col];
        if (column_coefficient(parents, node, cluster) == 1)
            row.coeffs.emplace_back(static_cast<int>(col), 1.0);
    }
    cluster_rows_.emplace(cluster.bits(), lp_.num_rows());
    row_clusters_.push_back(cluster);
    lp_.add_row(std::move(row));
}

const LpSolution& RmlpState::solve(const ColumnPool& pool, const ClusterSet& clusters) {
    if (pool.node_count() != n_) throw Error("pool node count mismatch");

    const int old_structs = lp_.num_vars();
    const int old_rows = lp_.num_rows();

    for (int i = 0; i < n_; ++i)
        for (const Column& c : pool.columns(i))
            if (!col_index_.contains(ColKey{c.node, c.parents.bits()})) append_column(c);
    for (const NodeSet& c : clusters.clusters())
        if (!cluster_rows_.contains(c.bits())) append_cluster(c);

    // Remap the previous basis onto the grown variable/slack layout.
    Basis warm;
    if (!warm_.empty()) {
        const int new_structs = lp_.num_vars();
        warm.status.assign(static_cast<std::size_t>(new_structs + lp_.num_rows()), VarStatus::AtLower);
        for (int j = 0; j < old_structs; ++j) warm.status[static_cast<std::size_t>(j)] = warm_.status[static_cast<std::size_t>(j)];
        for (int r = 0; r < old_rows; ++r)
            warm.status[static_cast<std::size_t>(new_structs + r)] =
                warm_.status[static_cast<std::size_t>(old_structs + r)];
        for (int r = old_rows; r < lp_.num_rows(); ++r)
            warm.status[static_cast<std::size_t>(new_structs + r)] = VarStatus::Basic;
    }

    SimplexSolver simplex;
    last_ = simplex.solve(lp_, warm.empty() ? nullptr : &warm);
    ++solves_;
    if (last_.status != LpStatus::Optimal) {
        // The all-empty assignment is always feasible, so anything else is a bug.
        if (last_.status == LpStatus::Infeasible)
            throw InvariantViolation("master LP reported infeasible");
        throw LpFailure("master LP unbounded");
    }
    warm_ = last_.basis;
    solved_ = true;
    return last_;
}

const LpSolution& RmlpState::last_solution() const {
    if (!solved_) throw Error("master LP not solved yet");
    return last_;
}

DualSolution RmlpState::duals(const ClusterSet& clusters) const {
    const LpSolution& sol = last_solution();
    DualSolution d;
    d.node_duals.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) d.node_duals[static_cast<std::size_t>(i)] = sol.duals[static_cast<std::size_t>(i)];
    d.cluster_duals.resize(static_cast<std::size_t>(clusters.size()), 0.0);
    for (int c = 0; c < clusters.size(); ++c) {
        auto it = cluster_rows_.find(clusters.cluster(c).bits());
        if (it == cluster_rows_.end()) throw Error("cluster not in master LP");
        d.cluster_duals[static_cast<std::size_t>(c)] =
            std::max(0.0, sol.duals[static_cast<std::size_t>(it->second)]);
    }
    return d;
}

double RmlpState::primal_value(int node, NodeSet parents) const {
    const LpSolution& sol = last_solution();
    auto it = col_index_.find(ColKey{node, parents.bits()});
    if (it == col_index_.end()) return 0.0;
    return sol.primal[static_cast<std::size_t>(it->second)];
}

std::vector<RmlpState::SupportEntry> RmlpState::primal_support(double threshold) const {
    const LpSolution& sol = last_solution();
    std::vector<SupportEntry> out;
    for (std::size_t col = 0; col < col_meta_.size(); ++col) {
        double v = sol.primal[col];
        if (v > threshold) out.push_back({col_meta_[col].first, col_meta_[col].second, v});
    }
    return out;
}

}  // namespace bnsl
