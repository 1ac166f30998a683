#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "bnsl/lp.hpp"
#include "bnsl/rng.hpp"

using namespace bnsl;

namespace {

LinearProgram box_lp(Sense sense, std::vector<double> obj, std::vector<double> lo,
                     std::vector<double> hi) {
    LinearProgram lp;
    lp.sense = sense;
    lp.objective = std::move(obj);
    lp.lower = std::move(lo);
    lp.upper = std::move(hi);
    return lp;
}

// Exhaustive vertex enumeration for small programs with finite boxes: every
// vertex lies on n active constraints chosen among rows and bounds.
double brute_force_box_lp(const LinearProgram& lp, bool& feasible) {
    const int n = lp.num_vars();
    const int m = lp.num_rows();
    feasible = false;
    double best = lp.sense == Sense::Maximize ? -kInfinity : kInfinity;

    // Candidate constraint set: rows as equalities plus variable bounds.
    struct Plane {
        std::vector<double> a;
        double b;
    };
    std::vector<Plane> planes;
    for (int r = 0; r < m; ++r) {
        Plane p{std::vector<double>(static_cast<std::size_t>(n), 0.0), lp.rows[static_cast<std::size_t>(r)].rhs};
        for (auto [j, v] : lp.rows[static_cast<std::size_t>(r)].coeffs) p.a[static_cast<std::size_t>(j)] += v;
        planes.push_back(std::move(p));
    }
    for (int j = 0; j < n; ++j) {
        Plane pl{std::vector<double>(static_cast<std::size_t>(n), 0.0), lp.lower[static_cast<std::size_t>(j)]};
        pl.a[static_cast<std::size_t>(j)] = 1.0;
        planes.push_back(pl);
        Plane pu{std::vector<double>(static_cast<std::size_t>(n), 0.0), lp.upper[static_cast<std::size_t>(j)]};
        pu.a[static_cast<std::size_t>(j)] = 1.0;
        planes.push_back(pu);
    }

    const int p = static_cast<int>(planes.size());
    std::vector<int> pick(static_cast<std::size_t>(n));
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == n) {
            // Solve the n x n system by Gaussian elimination.
            std::vector<double> A(static_cast<std::size_t>(n) * n);
            std::vector<double> b(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j)
                    A[static_cast<std::size_t>(i) * n + j] = planes[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])].a[static_cast<std::size_t>(j)];
                b[static_cast<std::size_t>(i)] = planes[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])].b;
            }
            for (int c = 0; c < n; ++c) {
                int piv = -1;
                double mx = 1e-9;
                for (int i = c; i < n; ++i)
                    if (std::abs(A[static_cast<std::size_t>(i) * n + c]) > mx) {
                        mx = std::abs(A[static_cast<std::size_t>(i) * n + c]);
                        piv = i;
                    }
                if (piv < 0) return;
                for (int j = 0; j < n; ++j)
                    std::swap(A[static_cast<std::size_t>(c) * n + j], A[static_cast<std::size_t>(piv) * n + j]);
                std::swap(b[static_cast<std::size_t>(c)], b[static_cast<std::size_t>(piv)]);
                for (int i = 0; i < n; ++i) {
                    if (i == c) continue;
                    double f = A[static_cast<std::size_t>(i) * n + c] / A[static_cast<std::size_t>(c) * n + c];
                    for (int j = 0; j < n; ++j)
                        A[static_cast<std::size_t>(i) * n + j] -= f * A[static_cast<std::size_t>(c) * n + j];
                    b[static_cast<std::size_t>(i)] -= f * b[static_cast<std::size_t>(c)];
                }
            }
            std::vector<double> x(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(i)] / A[static_cast<std::size_t>(i) * n + i];

            // Feasibility.
            for (int j = 0; j < n; ++j)
                if (x[static_cast<std::size_t>(j)] < lp.lower[static_cast<std::size_t>(j)] - 1e-7 ||
                    x[static_cast<std::size_t>(j)] > lp.upper[static_cast<std::size_t>(j)] + 1e-7)
                    return;
            for (int r = 0; r < m; ++r) {
                double lhs = 0;
                for (auto [j, v] : lp.rows[static_cast<std::size_t>(r)].coeffs) lhs += v * x[static_cast<std::size_t>(j)];
                const double rhs = lp.rows[static_cast<std::size_t>(r)].rhs;
                switch (lp.rows[static_cast<std::size_t>(r)].rel) {
                    case Relation::LessEqual:
                        if (lhs > rhs + 1e-7) return;
                        break;
                    case Relation::GreaterEqual:
                        if (lhs < rhs - 1e-7) return;
                        break;
                    case Relation::Equal:
                        if (std::abs(lhs - rhs) > 1e-7) return;
                        break;
                }
            }
            double obj = 0;
            for (int j = 0; j < n; ++j) obj += lp.objective[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
            feasible = true;
            best = lp.sense == Sense::Maximize ? std::max(best, obj) : std::min(best, obj);
            return;
        }
        for (int i = start; i <= p - (n - depth); ++i) {
            pick[static_cast<std::size_t>(depth)] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return best;
}

void check_optimality_conditions(const LinearProgram& lp, const LpSolution& sol) {
    REQUIRE(sol.status == LpStatus::Optimal);
    const int n = lp.num_vars();
    const int m = lp.num_rows();

    // Primal feasibility.
    for (int j = 0; j < n; ++j) {
        CHECK(sol.primal[static_cast<std::size_t>(j)] >= lp.lower[static_cast<std::size_t>(j)] - 1e-6);
        CHECK(sol.primal[static_cast<std::size_t>(j)] <= lp.upper[static_cast<std::size_t>(j)] + 1e-6);
    }
    double scale = 1.0 + std::abs(sol.objective);
    for (int r = 0; r < m; ++r) {
        double lhs = 0;
        for (auto [j, v] : lp.rows[static_cast<std::size_t>(r)].coeffs)
            lhs += v * sol.primal[static_cast<std::size_t>(j)];
        double rhs = lp.rows[static_cast<std::size_t>(r)].rhs;
        double slack = rhs - lhs;
        switch (lp.rows[static_cast<std::size_t>(r)].rel) {
            case Relation::LessEqual: CHECK(lhs <= rhs + 1e-6 * scale); break;
            case Relation::GreaterEqual: CHECK(lhs >= rhs - 1e-6 * scale); break;
            case Relation::Equal: CHECK(std::abs(slack) <= 1e-6 * scale); break;
        }
        // Dual sign convention: d(obj)/d(rhs).
        if (lp.rows[static_cast<std::size_t>(r)].rel == Relation::LessEqual)
            CHECK((lp.sense == Sense::Maximize ? sol.duals[static_cast<std::size_t>(r)]
                                               : -sol.duals[static_cast<std::size_t>(r)]) >= -1e-6);
        if (lp.rows[static_cast<std::size_t>(r)].rel == Relation::GreaterEqual)
            CHECK((lp.sense == Sense::Maximize ? sol.duals[static_cast<std::size_t>(r)]
                                               : -sol.duals[static_cast<std::size_t>(r)]) <= 1e-6);
        // Complementary slackness.
        CHECK(std::abs(sol.duals[static_cast<std::size_t>(r)] * slack) <= 1e-5 * scale);
    }

    // Strong duality via the Lagrangian bound.
    CHECK(std::abs(sol.objective - dual_objective(lp, sol)) <= 1e-6 * scale);
}

}  // namespace

TEST_CASE("single binding row") {
    LinearProgram lp = box_lp(Sense::Maximize, {1, 1}, {0, 0}, {1, 1});
    lp.add_row({{{0, 1.0}, {1, 1.0}}, Relation::LessEqual, 1.0});
    LpSolution sol = SimplexSolver().solve(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == doctest::Approx(1.0));
    CHECK(sol.duals[0] == doctest::Approx(1.0));
    check_optimality_conditions(lp, sol);
}

TEST_CASE("two-row vertex with known duals") {
    LinearProgram lp = box_lp(Sense::Maximize, {3, 2}, {0, 0}, {kInfinity, kInfinity});
    lp.add_row({{{0, 1.0}, {1, 1.0}}, Relation::LessEqual, 4.0});
    lp.add_row({{{0, 1.0}}, Relation::LessEqual, 2.0});
    LpSolution sol = SimplexSolver().solve(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == doctest::Approx(10.0));
    CHECK(sol.primal[0] == doctest::Approx(2.0));
    CHECK(sol.primal[1] == doctest::Approx(2.0));
    CHECK(sol.duals[0] == doctest::Approx(2.0));
    CHECK(sol.duals[1] == doctest::Approx(1.0));
    check_optimality_conditions(lp, sol);
}

TEST_CASE("contradictory rows are infeasible") {
    LinearProgram lp = box_lp(Sense::Minimize, {0}, {-kInfinity, }, {kInfinity});
    lp.add_row({{{0, 1.0}}, Relation::GreaterEqual, 1.0});
    lp.add_row({{{0, 1.0}}, Relation::LessEqual, 0.0});
    LpSolution sol = SimplexSolver().solve(lp);
    CHECK(sol.status == LpStatus::Infeasible);
}

TEST_CASE("unbounded direction detected") {
    LinearProgram lp = box_lp(Sense::Maximize, {1}, {0}, {kInfinity});
    LpSolution sol = SimplexSolver().solve(lp);
    CHECK(sol.status == LpStatus::Unbounded);
}

TEST_CASE("free variables and equality rows") {
    // min x + y s.t. x + y = 3, x - y = 1 with both free -> x=2, y=1.
    LinearProgram lp = box_lp(Sense::Minimize, {1, 1}, {-kInfinity, -kInfinity}, {kInfinity, kInfinity});
    lp.add_row({{{0, 1.0}, {1, 1.0}}, Relation::Equal, 3.0});
    lp.add_row({{{0, 1.0}, {1, -1.0}}, Relation::Equal, 1.0});
    LpSolution sol = SimplexSolver().solve(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.primal[0] == doctest::Approx(2.0));
    CHECK(sol.primal[1] == doctest::Approx(1.0));
}

TEST_CASE("random programs match vertex enumeration and satisfy duality") {
    Rng rng(2024);
    int optimal = 0;
    for (int trial = 0; trial < 500; ++trial) {
        int n = 2 + static_cast<int>(rng.next_below(3));  // 2..4 vars
        int m = 1 + static_cast<int>(rng.next_below(4));  // 1..4 rows
        LinearProgram lp;
        lp.sense = rng.next_bool() ? Sense::Maximize : Sense::Minimize;
        for (int j = 0; j < n; ++j) {
            double lo = -2.0 + 2.0 * rng.next_double();
            lp.add_variable(std::round(10.0 * (rng.next_double() * 2 - 1)) / 2.0, lo,
                            lo + 3.0 * rng.next_double());
        }
        for (int r = 0; r < m; ++r) {
            RowConstraint row;
            for (int j = 0; j < n; ++j)
                if (rng.next_double() < 0.8)
                    row.coeffs.emplace_back(j, std::round(8.0 * (rng.next_double() * 2 - 1)) / 2.0);
            double u = rng.next_double();
            row.rel = u < 0.4 ? Relation::LessEqual : (u < 0.8 ? Relation::GreaterEqual : Relation::Equal);
            row.rhs = std::round(8.0 * (rng.next_double() * 2 - 1)) / 2.0;
            lp.add_row(std::move(row));
        }

        bool feasible = false;
        double brute = brute_force_box_lp(lp, feasible);
        LpSolution sol = SimplexSolver().solve(lp);

        if (!feasible) {
            CHECK(sol.status == LpStatus::Infeasible);
            continue;
        }
        REQUIRE_MESSAGE(sol.status == LpStatus::Optimal, "trial ", trial, "\n", to_lp_text(lp));
        ++optimal;
        CHECK_MESSAGE(std::abs(sol.objective - brute) <= 1e-6 * (1.0 + std::abs(brute)), "trial ",
                      trial, " simplex ", sol.objective, " brute ", brute, "\n", to_lp_text(lp));
        check_optimality_conditions(lp, sol);
    }
    CHECK(optimal > 200);  // the generator should not be degenerate
}

TEST_CASE("warm start solves the extended program") {
    LinearProgram lp = box_lp(Sense::Maximize, {3, 2}, {0, 0}, {kInfinity, kInfinity});
    lp.add_row({{{0, 1.0}, {1, 1.0}}, Relation::LessEqual, 4.0});
    lp.add_row({{{0, 1.0}}, Relation::LessEqual, 2.0});
    SimplexSolver solver;
    LpSolution first = solver.solve(lp);
    REQUIRE(first.status == LpStatus::Optimal);

    // Add a cutting row violated by the current optimum (2,2).
    lp.add_row({{{0, 1.0}, {1, 2.0}}, Relation::LessEqual, 5.0});
    LpSolution warm = solver.solve(lp, &first.basis);
    LpSolution cold = solver.solve(lp);
    REQUIRE(warm.status == LpStatus::Optimal);
    REQUIRE(cold.status == LpStatus::Optimal);
    CHECK(warm.objective == doctest::Approx(cold.objective));
    check_optimality_conditions(lp, warm);
}

TEST_CASE("lp text dump mentions every block") {
    LinearProgram lp = box_lp(Sense::Maximize, {1, -2}, {0, 0}, {1, 1});
    lp.add_row({{{0, 1.0}, {1, 1.0}}, Relation::LessEqual, 1.0});
    std::string text = to_lp_text(lp);
    CHECK(text.find("Maximize") != std::string::npos);
    CHECK(text.find("Subject To") != std::string::npos);
    CHECK(text.find("Bounds") != std::string::npos);
    CHECK(text.find("x1") != std::string::npos);
}
