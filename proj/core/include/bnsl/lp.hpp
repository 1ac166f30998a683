#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "bnsl/errors.hpp"

namespace bnsl {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Sense { Minimize, Maximize };
enum class Relation { LessEqual, Equal, GreaterEqual };

struct RowConstraint {
    std::vector<std::pair<int, double>> coeffs;  // (variable, coefficient)
    Relation rel = Relation::LessEqual;
    double rhs = 0.0;
};

/// Dense-bounds LP in natural form: optimize c'x subject to rows and
/// per-variable bounds (infinities allowed).
struct LinearProgram {
    Sense sense = Sense::Maximize;
    std::vector<double> objective;
    std::vector<double> lower;
    std::vector<double> upper;
    std::vector<RowConstraint> rows;

    int num_vars() const { return static_cast<int>(objective.size()); }
    int num_rows() const { return static_cast<int>(rows.size()); }

    int add_variable(double obj, double lo, double hi) {
        objective.push_back(obj);
        lower.push_back(lo);
        upper.push_back(hi);
        return num_vars() - 1;
    }

    int add_row(RowConstraint row) {
        rows.push_back(std::move(row));
        return num_rows() - 1;
    }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

enum class VarStatus : std::uint8_t { Basic, AtLower, AtUpper, FreeNonbasic };

/// Simplex basis: one status per structural variable followed by one per row
/// slack. Reusable as a warm start for a program with the same or extended
/// structure (new variables/rows get defaults).
struct Basis {
    std::vector<VarStatus> status;
    bool empty() const { return status.empty(); }
};

struct LpSolution {
    LpStatus status = LpStatus::Optimal;
    std::vector<double> primal;  // structural variable values
    std::vector<double> duals;   // per row; sign convention: d(objective)/d(rhs)
    double objective = 0.0;
    Basis basis;
    int iterations = 0;
};

/// Bounded-variable primal simplex over a dense tableau. Phase 1 is the
/// composite (artificial-free) method, which also accepts primal-infeasible
/// warm bases such as a previous optimum after new cutting rows. Bland's rule
/// engages after a budget of degenerate pivots.
class SimplexSolver {
public:
    LpSolution solve(const LinearProgram& lp, const Basis* warm = nullptr);

    /// Feasibility / optimality tolerances.
    static constexpr double kFeasTol = 1e-7;
    static constexpr double kPivotTol = 1e-9;
};

/// Debug dump in an LP-text-like layout: objective, constraints, bounds.
std::string to_lp_text(const LinearProgram& lp);

/// Lagrangian bound implied by the solution's duals (equals the optimal
/// objective at an exact optimum). Used by tests to verify strong duality.
double dual_objective(const LinearProgram& lp, const LpSolution& sol);

}  // namespace bnsl
