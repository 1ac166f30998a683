#pragma once

#include "bnsl/column.hpp"
#include "bnsl/milp.hpp"

namespace bnsl {

struct RmipResult {
    Dag dag;
    double score = 0.0;
    std::vector<NodeSet> clusters_added;
    MilpStatus status = MilpStatus::Optimal;
};

/// Integer phase: branch and bound over the pooled columns with the current
/// cluster rows, adding cycle clusters as lazy cuts whenever an integer
/// incumbent decodes to a cyclic graph. Newly separated clusters are merged
/// into the shared set and reported back.
RmipResult solve_rmip(const ColumnPool& pool, ClusterSet& clusters, const MilpLimits& limits = {});

}  // namespace bnsl
