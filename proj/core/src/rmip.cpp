#include "bnsl/rmip.hpp"

#include "bnsl/master.hpp"
#include "bnsl/separation.hpp"

namespace bnsl {

RmipResult solve_rmip(const ColumnPool& pool, ClusterSet& clusters, const MilpLimits& limits) {
    const int n = pool.node_count();

    MilpProblem problem;
    problem.lp.sense = Sense::Maximize;
    std::vector<std::pair<int, NodeSet>> meta;  // LP column -> (node, parents)

    for (int i = 0; i < n; ++i) {
        RowConstraint row;
        row.rel = Relation::Equal;
        row.rhs = 1.0;
        problem.lp.add_row(std::move(row));
    }
    for (int i = 0; i < n; ++i) {
        for (const Column& c : pool.columns(i)) {
            int col = problem.lp.add_variable(c.local_score, 0.0, 1.0);
            problem.binaries.push_back(col);
            problem.lp.rows[static_cast<std::size_t>(i)].coeffs.emplace_back(col, 1.0);
            meta.emplace_back(c.node, c.parents);
        }
    }
    for (const NodeSet& cluster : clusters.clusters()) {
        RowConstraint row;
        row.rel = Relation::LessEqual;
        row.rhs = static_cast<double>(cluster.size() - 1);
        for (std::size_t col = 0; col < meta.size(); ++col)
            if (column_coefficient(meta[col].second, meta[col].first, cluster) == 1)
                row.coeffs.emplace_back(static_cast<int>(col), 1.0);
        problem.lp.add_row(std::move(row));
    }

    std::vector<NodeSet> added;
    LazyCallback callback = [&](const std::vector<double>& candidate) {
        std::vector<NodeSet> parents(static_cast<std::size_t>(n));
        for (std::size_t col = 0; col < meta.size(); ++col)
            if (candidate[col] > 0.5) parents[static_cast<std::size_t>(meta[col].first)] = meta[col].second;

        std::vector<RowConstraint> cuts;
        for (const NodeSet& cluster : separate_integer(parents)) {
            RowConstraint row;
            row.rel = Relation::LessEqual;
            row.rhs = static_cast<double>(cluster.size() - 1);
            for (std::size_t col = 0; col < meta.size(); ++col)
                if (column_coefficient(meta[col].second, meta[col].first, cluster) == 1)
                    row.coeffs.emplace_back(static_cast<int>(col), 1.0);
            cuts.push_back(std::move(row));
            added.push_back(cluster);
        }
        return cuts;
    };

    MilpResult milp;
    try {
        milp = solve_milp(problem, callback, limits);
    } catch (const NoIncumbent&) {
        // The all-empty selection is always feasible, so this cannot happen.
        throw InvariantViolation("integer master found no incumbent");
    }

    std::vector<Column> selected;
    for (std::size_t col = 0; col < meta.size(); ++col)
        if (milp.incumbent[col] > 0.5)
            selected.emplace_back(meta[col].first, meta[col].second,
                                  problem.lp.objective[col]);

    RmipResult res{decode_dag(selected, n), milp.objective, {}, milp.status};
    for (const NodeSet& cluster : added)
        if (clusters.insert(cluster)) res.clusters_added.push_back(cluster);
    return res;
}

}  // namespace bnsl
