#include "bnsl/column.hpp"

namespace bnsl {

ColumnPool::ColumnPool(int n, const std::vector<double>& empty_scores) {
    if (n < 1 || n > NodeSet::kMaxNodes) throw Error("node count out of range");
    if (empty_scores.size() != static_cast<std::size_t>(n))
        throw Error("empty-set score count mismatch");
    columns_.resize(static_cast<std::size_t>(n));
    seen_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) insert(Column(i, NodeSet(), empty_scores[static_cast<std::size_t>(i)]));
}

bool ColumnPool::insert(const Column& c) {
    if (c.node < 0 || c.node >= node_count()) throw Error("column node out of range");
    auto [it, added] = seen_[static_cast<std::size_t>(c.node)].insert(c.parents.bits());
    if (!added) return false;
    columns_[static_cast<std::size_t>(c.node)].push_back(c);
    return true;
}

bool ClusterSet::insert(NodeSet cluster) {
    if (cluster.size() < 2) throw Error("cluster needs at least 2 nodes");
    auto [it, added] = seen_.insert(cluster.bits());
    if (!added) return false;
    clusters_.push_back(cluster);
    return true;
}

void DualSolution::validate(int n, const ClusterSet& clusters) const {
    if (node_duals.size() != static_cast<std::size_t>(n)) throw Error("node dual count mismatch");
    if (cluster_duals.size() != static_cast<std::size_t>(clusters.size()))
        throw Error("cluster dual count mismatch");
    for (double d : cluster_duals)
        if (d < -1e-9) throw InvariantViolation("negative cluster dual");
}

Dag decode_dag(const std::vector<Column>& selected, int n) {
    std::vector<NodeSet> parents(static_cast<std::size_t>(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (const Column& c : selected) {
        if (c.node < 0 || c.node >= n) throw Error("selected column node out of range");
        if (seen[static_cast<std::size_t>(c.node)]) throw Error("multiple columns selected for one node");
        seen[static_cast<std::size_t>(c.node)] = true;
        parents[static_cast<std::size_t>(c.node)] = c.parents;
    }
    for (int i = 0; i < n; ++i)
        if (!seen[static_cast<std::size_t>(i)]) throw MissingNode(i);
    return Dag::make(std::move(parents));
}

}  // namespace bnsl
