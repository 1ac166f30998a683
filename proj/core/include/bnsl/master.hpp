#pragma once

#include <unordered_map>

#include "bnsl/column.hpp"
#include "bnsl/lp.hpp"

namespace bnsl {

/// Entry of x_{i<-J} in the row of cluster C: 1 iff i is in C and J meets C.
int column_coefficient(NodeSet parents, int node, NodeSet cluster);

/// Restricted master LP over the current column pool and cluster rows:
///   max sum score_i(J) x_{i<-J}
///   s.t. per-node convexity (= 1), cluster rows (<= |C|-1), 0 <= x <= 1.
/// Rebuilt incrementally: new columns and rows append and the simplex warm
/// starts from the previous basis.
class RmlpState {
public:
    explicit RmlpState(int n);

    /// Appends any pool columns / clusters not yet in the LP, then re-solves.
    const LpSolution& solve(const ColumnPool& pool, const ClusterSet& clusters);

    bool solved() const { return solved_; }
    const LpSolution& last_solution() const;

    /// Duals aligned with node indices and ClusterSet order. Cluster duals
    /// are clamped to be nonnegative.
    DualSolution duals(const ClusterSet& clusters) const;

    /// Primal value of x_{i<-J}; 0 for unknown columns.
    double primal_value(int node, NodeSet parents) const;

    /// Primal support as (node, parents, value) with value > threshold.
    struct SupportEntry {
        int node;
        NodeSet parents;
        double value;
    };
    std::vector<SupportEntry> primal_support(double threshold = 1e-9) const;

    double objective() const { return last_solution().objective; }
    long solves() const { return solves_; }

private:
    struct ColKey {
        int node;
        std::uint64_t parents;
        bool operator==(const ColKey&) const = default;
    };
    struct ColKeyHash {
        std::size_t operator()(const ColKey& k) const {
            return std::hash<std::uint64_t>()(k.parents * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(k.node));
        }
    };

    void append_column(const Column& c);
    void append_cluster(NodeSet cluster);

    int n_;
    LinearProgram lp_;
    std::unordered_map<ColKey, int, ColKeyHash> col_index_;
    std::vector<std::pair<int, NodeSet>> col_meta_;  // LP column -> (node, parents)
    std::unordered_map<std::uint64_t, int> cluster_rows_;
    std::vector<NodeSet> row_clusters_;  // cluster per LP row beyond the n convexity rows
    LpSolution last_;
    Basis warm_;
    bool solved_ = false;
    long solves_ = 0;
};

}  // namespace bnsl
