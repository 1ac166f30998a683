#pragma once

#include <functional>
#include <vector>

#include "bnsl/lp.hpp"

namespace bnsl {

/// LP plus a set of variables restricted to {0,1}.
struct MilpProblem {
    LinearProgram lp;
    std::vector<int> binaries;
};

struct MilpLimits {
    double time_seconds = kInfinity;
    long max_nodes = 100000;
};

enum class MilpStatus { Optimal, NodeLimit, TimeLimit };

struct MilpResult {
    MilpStatus status = MilpStatus::Optimal;
    std::vector<double> incumbent;
    double objective = 0.0;
    double bound = 0.0;  // valid bound on the true optimum
    long nodes = 0;
};

/// Invoked on every integer candidate. Returns constraints the candidate
/// violates (each by more than 1e-6) that are valid for all feasible integer
/// points; an empty list accepts the candidate as an incumbent.
using LazyCallback = std::function<std::vector<RowConstraint>(const std::vector<double>&)>;

/// Best-bound branch and bound on the binary variables, branching on the most
/// fractional one. Callback-added constraints apply globally to all open
/// nodes. Throws NoIncumbent when limits stop the search before any feasible
/// integer point was found.
MilpResult solve_milp(const MilpProblem& problem, const LazyCallback& callback = {},
                      const MilpLimits& limits = {});

}  // namespace bnsl
