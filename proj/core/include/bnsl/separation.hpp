#pragma once

#include <optional>

#include "bnsl/column.hpp"
#include "bnsl/master.hpp"
#include "bnsl/milp.hpp"

namespace bnsl {

/// Clusters violated by an integer candidate: the node set of every strongly
/// connected component with at least two nodes of the graph decoded from the
/// parent assignment. Empty iff the assignment is acyclic.
std::vector<NodeSet> separate_integer(const std::vector<NodeSet>& parents);

struct SeparatedCluster {
    NodeSet cluster;
    double violation = 0.0;
};

/// Most violated cluster constraint at a fractional master solution, found by
/// the exact separation IP over the primal support, or nullopt when every
/// cluster constraint holds within 1e-6. Only clusters with >= 2 nodes are
/// considered (singleton rows are vacuous).
std::optional<SeparatedCluster> separate_fractional(
    const std::vector<RmlpState::SupportEntry>& primal_support, int n,
    const MilpLimits& limits = {});

}  // namespace bnsl
