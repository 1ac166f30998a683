#pragma once

#include <string>

#include "bnsl/pricing.hpp"
#include "bnsl/rmip.hpp"
#include "bnsl/scoring.hpp"

namespace bnsl {

struct PipelineLimits {
    int outer_iterations = 25;
    double wall_seconds = kInfinity;
};

struct PipelineConfig {
    ScoreConfig score;
    PricingConfig pricing;
    PipelineLimits limits;
    int threads = 1;        // pricing fan-out width; results are width-independent
    int cg_inner_cap = 200;  // RMLP re-solves per outer iteration before moving on
    MilpLimits rmip_limits;
};

struct PhaseTimings {
    double cg = 0.0;
    double rows = 0.0;
    double integer = 0.0;
    double total = 0.0;
};

struct RunReport {
    Dag dag;
    double score = 0.0;                // penalized score, optimization units
    double score_with_constant = 0.0;  // plus the per-node Gaussian constant
    PhaseTimings timings;
    long columns_generated = 0;
    long clusters_added = 0;
    long dca_calls = 0;
    long lp_solves = 0;  // master LP solves
    long monotonicity_violations = 0;
    int outer_iterations = 0;
    bool cg_cap_hit = false;
    std::string convergence;  // converged | iteration_limit | time_limit | error:<what>
};

/// Alternates a column-generation phase (price every node with a negative
/// reduced cost until none remains), a row-generation phase (add the most
/// violated cluster until separation finds none), and an integer phase
/// (branch and bound over the pooled columns with lazy cycle cuts), until the
/// integer solution stops changing and no new columns or clusters appear.
RunReport run(const Dataset& data, const PipelineConfig& config);

}  // namespace bnsl
