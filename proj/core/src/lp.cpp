#include "bnsl/lp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bnsl {

namespace {

constexpr double kInf = kInfinity;

struct Tableau {
    int m = 0;        // rows
    int nstruct = 0;  // structural variables
    int ntot = 0;     // structural + slack
    std::vector<double> rowmat;  // dense tableau, m x ntot
    std::vector<double> beta;    // basic variable values, per row
    std::vector<int> basis;      // basic variable per row
    std::vector<int> varrow;     // row of a basic variable, -1 if nonbasic
    std::vector<VarStatus> stat;
    std::vector<double> xval;    // value of nonbasic variables
    std::vector<double> lo, hi, cost;

    double* row(int i) { return rowmat.data() + static_cast<std::size_t>(i) * ntot; }
    const double* row(int i) const { return rowmat.data() + static_cast<std::size_t>(i) * ntot; }
};

double nonbasic_value(const Tableau& t, int j) {
    switch (t.stat[static_cast<std::size_t>(j)]) {
        case VarStatus::AtLower: return t.lo[static_cast<std::size_t>(j)];
        case VarStatus::AtUpper: return t.hi[static_cast<std::size_t>(j)];
        default: return 0.0;
    }
}

// Solves B X = RHS in place via Gaussian elimination with partial pivoting.
// B is m x m row-major, RHS is m x k row-major. Returns false when singular.
bool dense_solve(std::vector<double>& B, std::vector<double>& RHS, int m, int k) {
    std::vector<int> perm(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i;
    auto b = [&](int i, int j) -> double& { return B[static_cast<std::size_t>(i) * m + j]; };
    auto r = [&](int i, int j) -> double& { return RHS[static_cast<std::size_t>(i) * k + j]; };

    for (int col = 0; col < m; ++col) {
        int piv = col;
        double best = std::abs(b(col, col));
        for (int i = col + 1; i < m; ++i) {
            double v = std::abs(b(i, col));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best < 1e-12) return false;
        if (piv != col) {
            for (int j = 0; j < m; ++j) std::swap(b(col, j), b(piv, j));
            for (int j = 0; j < k; ++j) std::swap(r(col, j), r(piv, j));
        }
        double inv = 1.0 / b(col, col);
        for (int i = 0; i < m; ++i) {
            if (i == col) continue;
            double f = b(i, col) * inv;
            if (f == 0.0) continue;
            for (int j = col; j < m; ++j) b(i, j) -= f * b(col, j);
            for (int j = 0; j < k; ++j) r(i, j) -= f * r(col, j);
        }
        for (int j = col; j < m; ++j) b(col, j) *= inv;
        for (int j = 0; j < k; ++j) r(col, j) *= inv;
    }
    return true;
}

}  // namespace

LpSolution SimplexSolver::solve(const LinearProgram& lp, const Basis* warm) {
    const int m = lp.num_rows();
    const int nstruct = lp.num_vars();
    const int ntot = nstruct + m;
    const double tol = kFeasTol;

    if (lp.lower.size() != static_cast<std::size_t>(nstruct) ||
        lp.upper.size() != static_cast<std::size_t>(nstruct))
        throw LpFailure("bound arrays do not match variable count");

    Tableau t;
    t.m = m;
    t.nstruct = nstruct;
    t.ntot = ntot;
    t.lo.resize(static_cast<std::size_t>(ntot));
    t.hi.resize(static_cast<std::size_t>(ntot));
    t.cost.assign(static_cast<std::size_t>(ntot), 0.0);

    const bool maximize = lp.sense == Sense::Maximize;
    for (int j = 0; j < nstruct; ++j) {
        t.lo[static_cast<std::size_t>(j)] = lp.lower[static_cast<std::size_t>(j)];
        t.hi[static_cast<std::size_t>(j)] = lp.upper[static_cast<std::size_t>(j)];
        if (t.lo[static_cast<std::size_t>(j)] > t.hi[static_cast<std::size_t>(j)] + 1e-12) {
            LpSolution out;
            out.status = LpStatus::Infeasible;
            return out;
        }
        double c = lp.objective[static_cast<std::size_t>(j)];
        t.cost[static_cast<std::size_t>(j)] = maximize ? -c : c;
    }
    std::vector<double> rhs(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) {
        const RowConstraint& row = lp.rows[static_cast<std::size_t>(r)];
        rhs[static_cast<std::size_t>(r)] = row.rhs;
        int s = nstruct + r;
        switch (row.rel) {
            case Relation::LessEqual:
                t.lo[static_cast<std::size_t>(s)] = 0.0;
                t.hi[static_cast<std::size_t>(s)] = kInf;
                break;
            case Relation::GreaterEqual:
                t.lo[static_cast<std::size_t>(s)] = -kInf;
                t.hi[static_cast<std::size_t>(s)] = 0.0;
                break;
            case Relation::Equal:
                t.lo[static_cast<std::size_t>(s)] = 0.0;
                t.hi[static_cast<std::size_t>(s)] = 0.0;
                break;
        }
    }

    // Dense constraint matrix with slack identity: A x + I s = b.
    std::vector<double> A(static_cast<std::size_t>(m) * ntot, 0.0);
    for (int r = 0; r < m; ++r) {
        for (const auto& [j, v] : lp.rows[static_cast<std::size_t>(r)].coeffs) {
            if (j < 0 || j >= nstruct) throw LpFailure("row coefficient column out of range");
            A[static_cast<std::size_t>(r) * ntot + j] += v;
        }
        A[static_cast<std::size_t>(r) * ntot + nstruct + r] = 1.0;
    }

    auto default_status = [&](int j) {
        if (t.lo[static_cast<std::size_t>(j)] > -kInf) return VarStatus::AtLower;
        if (t.hi[static_cast<std::size_t>(j)] < kInf) return VarStatus::AtUpper;
        return VarStatus::FreeNonbasic;
    };

    // Initial statuses: warm basis when usable, else all slacks basic.
    t.stat.assign(static_cast<std::size_t>(ntot), VarStatus::AtLower);
    bool warm_ok = false;
    if (warm != nullptr && !warm->empty() && warm->status.size() <= static_cast<std::size_t>(ntot)) {
        int basics = 0;
        for (std::size_t j = 0; j < warm->status.size(); ++j) {
            t.stat[j] = warm->status[j];
            if (t.stat[j] == VarStatus::Basic) ++basics;
        }
        for (int j = static_cast<int>(warm->status.size()); j < ntot; ++j)
            t.stat[static_cast<std::size_t>(j)] =
                j >= nstruct ? VarStatus::Basic : default_status(j);
        for (int j = static_cast<int>(warm->status.size()); j < ntot; ++j)
            if (t.stat[static_cast<std::size_t>(j)] == VarStatus::Basic) ++basics;
        // Fix any bound-status inconsistencies introduced by changed bounds.
        for (int j = 0; j < ntot; ++j) {
            VarStatus& s = t.stat[static_cast<std::size_t>(j)];
            if (s == VarStatus::AtLower && t.lo[static_cast<std::size_t>(j)] <= -kInf)
                s = t.hi[static_cast<std::size_t>(j)] < kInf ? VarStatus::AtUpper : VarStatus::FreeNonbasic;
            if (s == VarStatus::AtUpper && t.hi[static_cast<std::size_t>(j)] >= kInf)
                s = t.lo[static_cast<std::size_t>(j)] > -kInf ? VarStatus::AtLower : VarStatus::FreeNonbasic;
        }
        warm_ok = basics == m;
    }
    if (!warm_ok) {
        for (int j = 0; j < nstruct; ++j) t.stat[static_cast<std::size_t>(j)] = default_status(j);
        for (int r = 0; r < m; ++r) t.stat[static_cast<std::size_t>(nstruct + r)] = VarStatus::Basic;
    }

    t.basis.clear();
    t.varrow.assign(static_cast<std::size_t>(ntot), -1);
    for (int j = 0; j < ntot; ++j)
        if (t.stat[static_cast<std::size_t>(j)] == VarStatus::Basic) {
            t.varrow[static_cast<std::size_t>(j)] = static_cast<int>(t.basis.size());
            t.basis.push_back(j);
        }

    t.xval.assign(static_cast<std::size_t>(ntot), 0.0);
    for (int j = 0; j < ntot; ++j)
        if (t.stat[static_cast<std::size_t>(j)] != VarStatus::Basic)
            t.xval[static_cast<std::size_t>(j)] = nonbasic_value(t, j);

    // Tableau = B^-1 A and beta = B^-1 (b - A_N xbar_N).
    auto build_tableau = [&]() -> bool {
        std::vector<double> rhs_adj = rhs;
        for (int r = 0; r < m; ++r)
            for (int j = 0; j < ntot; ++j)
                if (t.stat[static_cast<std::size_t>(j)] != VarStatus::Basic)
                    rhs_adj[static_cast<std::size_t>(r)] -=
                        A[static_cast<std::size_t>(r) * ntot + j] * t.xval[static_cast<std::size_t>(j)];

        bool slack_basis = true;
        for (int r = 0; r < m; ++r)
            if (t.basis[static_cast<std::size_t>(r)] != nstruct + r) slack_basis = false;

        if (slack_basis) {
            t.rowmat = A;
            t.beta = rhs_adj;
            return true;
        }
        std::vector<double> B(static_cast<std::size_t>(m) * m);
        for (int r = 0; r < m; ++r)
            for (int i = 0; i < m; ++i)
                B[static_cast<std::size_t>(r) * m + i] =
                    A[static_cast<std::size_t>(r) * ntot + t.basis[static_cast<std::size_t>(i)]];
        // Solve B [T | beta] = [A | rhs_adj] as one augmented system.
        std::vector<double> aug(static_cast<std::size_t>(m) * (ntot + 1));
        for (int r = 0; r < m; ++r) {
            for (int j = 0; j < ntot; ++j)
                aug[static_cast<std::size_t>(r) * (ntot + 1) + j] = A[static_cast<std::size_t>(r) * ntot + j];
            aug[static_cast<std::size_t>(r) * (ntot + 1) + ntot] = rhs_adj[static_cast<std::size_t>(r)];
        }
        if (!dense_solve(B, aug, m, ntot + 1)) return false;
        t.rowmat.assign(static_cast<std::size_t>(m) * ntot, 0.0);
        t.beta.assign(static_cast<std::size_t>(m), 0.0);
        for (int r = 0; r < m; ++r) {
            for (int j = 0; j < ntot; ++j)
                t.rowmat[static_cast<std::size_t>(r) * ntot + j] =
                    aug[static_cast<std::size_t>(r) * (ntot + 1) + j];
            t.beta[static_cast<std::size_t>(r)] = aug[static_cast<std::size_t>(r) * (ntot + 1) + ntot];
        }
        return true;
    };

    if (!build_tableau()) {
        // Singular warm basis: reset to the all-slack basis and retry.
        for (int j = 0; j < nstruct; ++j) t.stat[static_cast<std::size_t>(j)] = default_status(j);
        for (int r = 0; r < m; ++r) t.stat[static_cast<std::size_t>(nstruct + r)] = VarStatus::Basic;
        t.basis.clear();
        t.varrow.assign(static_cast<std::size_t>(ntot), -1);
        for (int j = 0; j < ntot; ++j)
            if (t.stat[static_cast<std::size_t>(j)] == VarStatus::Basic) {
                t.varrow[static_cast<std::size_t>(j)] = static_cast<int>(t.basis.size());
                t.basis.push_back(j);
            }
        for (int j = 0; j < ntot; ++j)
            t.xval[static_cast<std::size_t>(j)] =
                t.stat[static_cast<std::size_t>(j)] == VarStatus::Basic ? 0.0 : nonbasic_value(t, j);
        if (!build_tableau()) throw NumericalBreakdown("could not factor the initial basis");
    }

    auto violation = [&](int r) -> double {
        int k = t.basis[static_cast<std::size_t>(r)];
        double v = t.beta[static_cast<std::size_t>(r)];
        if (v > t.hi[static_cast<std::size_t>(k)]) return v - t.hi[static_cast<std::size_t>(k)];
        if (v < t.lo[static_cast<std::size_t>(k)]) return v - t.lo[static_cast<std::size_t>(k)];
        return 0.0;
    };
    auto total_violation = [&]() {
        double s = 0.0;
        for (int r = 0; r < m; ++r) s += std::abs(violation(r));
        return s;
    };

    LpSolution out;
    bool bland = false;
    long degenerate = 0;
    const long bland_after = 2L * (m + ntot);
    const long iter_cap = 20000L + 300L * (m + ntot);
    long iter = 0;

    // One pass of the composite phase-1 / phase-2 machinery.
    // phase1 prices the infeasibility-reduction direction instead of cost.
    auto run_phase = [&](bool phase1) -> LpStatus {
        std::vector<double> d(static_cast<std::size_t>(ntot));
        while (true) {
            if (++iter > iter_cap) throw NumericalBreakdown("simplex iteration cap exceeded");
            out.iterations = static_cast<int>(iter);

            if (phase1 && total_violation() <= tol) return LpStatus::Optimal;

            // Reduced costs: d_j = c_j - c_B' T_j; in phase 1, c is the
            // signed-violation vector over basic variables only.
            std::vector<double> cb(static_cast<std::size_t>(m), 0.0);
            bool any_cb = false;
            for (int r = 0; r < m; ++r) {
                double c;
                if (phase1) {
                    double v = violation(r);
                    c = v > tol ? 1.0 : (v < -tol ? -1.0 : 0.0);
                } else {
                    c = t.cost[static_cast<std::size_t>(t.basis[static_cast<std::size_t>(r)])];
                }
                cb[static_cast<std::size_t>(r)] = c;
                if (c != 0.0) any_cb = true;
            }
            for (int j = 0; j < ntot; ++j) {
                if (t.stat[static_cast<std::size_t>(j)] == VarStatus::Basic) {
                    d[static_cast<std::size_t>(j)] = 0.0;
                    continue;
                }
                double acc = phase1 ? 0.0 : t.cost[static_cast<std::size_t>(j)];
                if (any_cb)
                    for (int r = 0; r < m; ++r)
                        acc -= cb[static_cast<std::size_t>(r)] *
                               t.rowmat[static_cast<std::size_t>(r) * ntot + j];
                d[static_cast<std::size_t>(j)] = acc;
            }

            // Entering variable.
            int enter = -1, dir = 0;
            double best = tol;
            for (int j = 0; j < ntot; ++j) {
                VarStatus s = t.stat[static_cast<std::size_t>(j)];
                if (s == VarStatus::Basic) continue;
                if (t.hi[static_cast<std::size_t>(j)] - t.lo[static_cast<std::size_t>(j)] <= 0.0)
                    continue;  // fixed variable can never move
                double dj = d[static_cast<std::size_t>(j)];
                int cand_dir = 0;
                if (s == VarStatus::AtLower && dj < -tol) cand_dir = 1;
                else if (s == VarStatus::AtUpper && dj > tol) cand_dir = -1;
                else if (s == VarStatus::FreeNonbasic && std::abs(dj) > tol) cand_dir = dj < 0 ? 1 : -1;
                if (cand_dir == 0) continue;
                if (bland) {
                    enter = j;
                    dir = cand_dir;
                    break;
                }
                if (std::abs(dj) > best) {
                    best = std::abs(dj);
                    enter = j;
                    dir = cand_dir;
                }
            }
            if (enter < 0) {
                if (phase1) return total_violation() <= tol ? LpStatus::Optimal : LpStatus::Infeasible;
                return LpStatus::Optimal;
            }

            // Ratio test: smallest step at which a basic variable hits a
            // bound (in phase 1, an infeasible basic blocks when it comes
            // back into range).
            double row_limit = kInf;
            int leave_row = -1;
            double leave_pivot = 0.0;
            bool leave_at_upper = false;

            for (int r = 0; r < m; ++r) {
                double a = t.rowmat[static_cast<std::size_t>(r) * ntot + enter];
                if (std::abs(a) < kPivotTol) continue;
                double rate = -dir * a;  // d beta_r / dt
                int k = t.basis[static_cast<std::size_t>(r)];
                double v = t.beta[static_cast<std::size_t>(r)];
                double lim = kInf;
                bool at_upper = false;
                if (phase1 && v > t.hi[static_cast<std::size_t>(k)] + tol) {
                    if (rate < 0.0) {
                        lim = (v - t.hi[static_cast<std::size_t>(k)]) / (-rate);
                        at_upper = true;
                    }
                } else if (phase1 && v < t.lo[static_cast<std::size_t>(k)] - tol) {
                    if (rate > 0.0) {
                        lim = (t.lo[static_cast<std::size_t>(k)] - v) / rate;
                        at_upper = false;
                    }
                } else {
                    if (rate > 0.0 && t.hi[static_cast<std::size_t>(k)] < kInf) {
                        lim = (t.hi[static_cast<std::size_t>(k)] - v) / rate;
                        at_upper = true;
                    } else if (rate < 0.0 && t.lo[static_cast<std::size_t>(k)] > -kInf) {
                        lim = (v - t.lo[static_cast<std::size_t>(k)]) / (-rate);
                        at_upper = false;
                    }
                }
                if (lim >= kInf) continue;
                lim = std::max(lim, 0.0);
                bool take;
                if (leave_row < 0 || lim < row_limit - 1e-12) {
                    take = true;
                } else if (lim <= row_limit + 1e-12) {
                    // Tie: lowest variable index under Bland, else larger pivot.
                    take = bland ? k < t.basis[static_cast<std::size_t>(leave_row)]
                                 : std::abs(a) > std::abs(leave_pivot);
                } else {
                    take = false;
                }
                if (take) {
                    row_limit = std::min(row_limit, lim);
                    leave_row = r;
                    leave_pivot = a;
                    leave_at_upper = at_upper;
                }
            }

            double own_range =
                t.hi[static_cast<std::size_t>(enter)] - t.lo[static_cast<std::size_t>(enter)];
            if (t.stat[static_cast<std::size_t>(enter)] == VarStatus::FreeNonbasic) own_range = kInf;

            double step_len = std::min(own_range, row_limit);
            if (step_len >= kInf) {
                if (phase1) throw NumericalBreakdown("phase-1 direction unbounded");
                return LpStatus::Unbounded;
            }
            if (step_len <= 1e-10) ++degenerate;
            if (!bland && degenerate > bland_after) bland = true;

            if (own_range <= row_limit) {
                // Entering variable swings to its opposite bound; no pivot.
                double step = dir * own_range;
                for (int r = 0; r < m; ++r)
                    t.beta[static_cast<std::size_t>(r)] -=
                        step * t.rowmat[static_cast<std::size_t>(r) * ntot + enter];
                t.stat[static_cast<std::size_t>(enter)] =
                    t.stat[static_cast<std::size_t>(enter)] == VarStatus::AtLower ? VarStatus::AtUpper
                                                                                  : VarStatus::AtLower;
                t.xval[static_cast<std::size_t>(enter)] = nonbasic_value(t, enter);
                continue;
            }

            // Pivot: entering becomes basic in leave_row.
            double tmax = row_limit;
            double enter_val = t.xval[static_cast<std::size_t>(enter)] + dir * tmax;
            int leaving = t.basis[static_cast<std::size_t>(leave_row)];
            for (int r = 0; r < m; ++r) {
                if (r == leave_row) continue;
                t.beta[static_cast<std::size_t>(r)] -=
                    dir * tmax * t.rowmat[static_cast<std::size_t>(r) * ntot + enter];
            }
            t.stat[static_cast<std::size_t>(leaving)] =
                leave_at_upper ? VarStatus::AtUpper : VarStatus::AtLower;
            t.xval[static_cast<std::size_t>(leaving)] = nonbasic_value(t, leaving);
            t.varrow[static_cast<std::size_t>(leaving)] = -1;

            double piv = t.rowmat[static_cast<std::size_t>(leave_row) * ntot + enter];
            double* prow = t.row(leave_row);
            double inv = 1.0 / piv;
            for (int j = 0; j < ntot; ++j) prow[j] *= inv;
            for (int r = 0; r < m; ++r) {
                if (r == leave_row) continue;
                double f = t.rowmat[static_cast<std::size_t>(r) * ntot + enter];
                if (f == 0.0) continue;
                double* rr = t.row(r);
                for (int j = 0; j < ntot; ++j) rr[j] -= f * prow[j];
            }
            t.basis[static_cast<std::size_t>(leave_row)] = enter;
            t.varrow[static_cast<std::size_t>(enter)] = leave_row;
            t.stat[static_cast<std::size_t>(enter)] = VarStatus::Basic;
            t.beta[static_cast<std::size_t>(leave_row)] = enter_val;
        }
    };

    LpStatus st = LpStatus::Optimal;
    if (total_violation() > tol) st = run_phase(true);
    if (st == LpStatus::Optimal) st = run_phase(false);

    out.status = st;
    if (st != LpStatus::Optimal) {
        out.objective = st == LpStatus::Unbounded ? (maximize ? kInf : -kInf) : 0.0;
        return out;
    }

    out.primal.assign(static_cast<std::size_t>(nstruct), 0.0);
    for (int j = 0; j < nstruct; ++j) {
        int r = t.varrow[static_cast<std::size_t>(j)];
        out.primal[static_cast<std::size_t>(j)] =
            r >= 0 ? t.beta[static_cast<std::size_t>(r)] : t.xval[static_cast<std::size_t>(j)];
    }
    double obj = 0.0;
    for (int j = 0; j < nstruct; ++j)
        obj += lp.objective[static_cast<std::size_t>(j)] * out.primal[static_cast<std::size_t>(j)];
    out.objective = obj;

    // Duals from slack reduced costs: y = c_B' B^-1 and T_slack = B^-1.
    out.duals.assign(static_cast<std::size_t>(m), 0.0);
    for (int r = 0; r < m; ++r) {
        double y = 0.0;
        for (int i = 0; i < m; ++i)
            y += t.cost[static_cast<std::size_t>(t.basis[static_cast<std::size_t>(i)])] *
                 t.rowmat[static_cast<std::size_t>(i) * ntot + nstruct + r];
        out.duals[static_cast<std::size_t>(r)] = maximize ? -y : y;
    }

    out.basis.status = t.stat;
    return out;
}

std::string to_lp_text(const LinearProgram& lp) {
    std::ostringstream os;
    os << (lp.sense == Sense::Maximize ? "Maximize" : "Minimize") << "\n obj:";
    for (int j = 0; j < lp.num_vars(); ++j) {
        double c = lp.objective[static_cast<std::size_t>(j)];
        if (c == 0.0) continue;
        os << (c >= 0 ? " + " : " - ") << std::abs(c) << " x" << j;
    }
    os << "\nSubject To\n";
    for (int r = 0; r < lp.num_rows(); ++r) {
        const RowConstraint& row = lp.rows[static_cast<std::size_t>(r)];
        os << " c" << r << ":";
        for (const auto& [j, v] : row.coeffs) os << (v >= 0 ? " + " : " - ") << std::abs(v) << " x" << j;
        switch (row.rel) {
            case Relation::LessEqual: os << " <= "; break;
            case Relation::Equal: os << " = "; break;
            case Relation::GreaterEqual: os << " >= "; break;
        }
        os << row.rhs << "\n";
    }
    os << "Bounds\n";
    for (int j = 0; j < lp.num_vars(); ++j)
        os << " " << lp.lower[static_cast<std::size_t>(j)] << " <= x" << j << " <= "
           << lp.upper[static_cast<std::size_t>(j)] << "\n";
    os << "End\n";
    return os.str();
}

double dual_objective(const LinearProgram& lp, const LpSolution& sol) {
    const int n = lp.num_vars();
    const int m = lp.num_rows();
    std::vector<double> reduced(lp.objective);
    for (int r = 0; r < m; ++r)
        for (const auto& [j, v] : lp.rows[static_cast<std::size_t>(r)].coeffs)
            reduced[static_cast<std::size_t>(j)] -= sol.duals[static_cast<std::size_t>(r)] * v;

    double val = 0.0;
    for (int r = 0; r < m; ++r)
        val += sol.duals[static_cast<std::size_t>(r)] * lp.rows[static_cast<std::size_t>(r)].rhs;
    for (int j = 0; j < n; ++j) {
        double dj = reduced[static_cast<std::size_t>(j)];
        if (std::abs(dj) < 1e-12) continue;
        // For a max problem the Lagrangian picks the box maximizer; min picks the minimizer.
        bool pick_upper = lp.sense == Sense::Maximize ? dj > 0 : dj < 0;
        double bound = pick_upper ? lp.upper[static_cast<std::size_t>(j)] : lp.lower[static_cast<std::size_t>(j)];
        val += dj * bound;
    }
    return val;
}

}  // namespace bnsl
