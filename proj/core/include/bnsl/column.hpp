#pragma once

#include <cmath>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bnsl/errors.hpp"
#include "bnsl/graph.hpp"
#include "bnsl/node_set.hpp"

namespace bnsl {

/// One master variable: parent set candidate J for node i with its local score.
struct Column {
    int node = 0;
    NodeSet parents;
    double local_score = 0.0;

    Column() = default;
    Column(int node_, NodeSet parents_, double score_)
        : node(node_), parents(parents_), local_score(score_) {
        if (parents.contains(node)) throw Error("column parent set contains its own node");
        if (!std::isfinite(score_)) throw NonFinite("column local score");
    }

    friend bool operator==(const Column& a, const Column& b) {
        return a.node == b.node && a.parents == b.parents;
    }
};

/// Per-node ordered, de-duplicated lists of candidate parent sets. Every
/// node's pool always contains the empty parent set.
class ColumnPool {
public:
    /// empty_scores[i] is the local score of (i, {}).
    ColumnPool(int n, const std::vector<double>& empty_scores);

    int node_count() const { return static_cast<int>(columns_.size()); }

    /// Appends unless (node, parents) is already present. Returns true when added.
    bool insert(const Column& c);

    bool contains(int node, NodeSet parents) const {
        return seen_[static_cast<std::size_t>(node)].count(parents.bits()) != 0;
    }

    const std::vector<Column>& columns(int node) const {
        return columns_[static_cast<std::size_t>(node)];
    }

    int pool_size(int node) const { return static_cast<int>(columns_[static_cast<std::size_t>(node)].size()); }

    int total_size() const {
        int s = 0;
        for (const auto& v : columns_) s += static_cast<int>(v.size());
        return s;
    }

private:
    std::vector<std::vector<Column>> columns_;
    std::vector<std::unordered_set<std::uint64_t>> seen_;
};

/// Working set of cluster constraints; stores only clusters with >= 2 nodes
/// (a singleton row is vacuous because i never belongs to its own parent set).
class ClusterSet {
public:
    /// Returns true when the cluster was new and got stored.
    bool insert(NodeSet cluster);

    bool contains(NodeSet cluster) const { return seen_.count(cluster.bits()) != 0; }

    int size() const { return static_cast<int>(clusters_.size()); }
    const std::vector<NodeSet>& clusters() const { return clusters_; }
    const NodeSet& cluster(int idx) const { return clusters_[static_cast<std::size_t>(idx)]; }

private:
    std::vector<NodeSet> clusters_;
    std::unordered_set<std::uint64_t> seen_;
};

/// Master LP duals: one unrestricted value per node (convexity rows) and one
/// nonnegative value per stored cluster, aligned with ClusterSet order.
struct DualSolution {
    std::vector<double> node_duals;
    std::vector<double> cluster_duals;

    static DualSolution zeros(int n, int num_clusters) {
        return {std::vector<double>(static_cast<std::size_t>(n), 0.0),
                std::vector<double>(static_cast<std::size_t>(num_clusters), 0.0)};
    }

    void validate(int n, const ClusterSet& clusters) const;
};

/// Rebuilds the Dag encoded by a one-column-per-node selection.
/// Throws MissingNode / CycleDetected.
Dag decode_dag(const std::vector<Column>& selected, int n);

}  // namespace bnsl
