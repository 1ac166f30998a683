#include "bnsl/separation.hpp"

#include <algorithm>

namespace bnsl {

namespace {

// Iterative Tarjan over the graph with an edge p -> i for every p in parents[i].
struct Tarjan {
    const std::vector<std::vector<int>>& out_edges;
    std::vector<int> index, low, stack;
    std::vector<bool> on_stack;
    int counter = 0;
    std::vector<NodeSet> components;

    explicit Tarjan(const std::vector<std::vector<int>>& edges)
        : out_edges(edges),
          index(edges.size(), -1),
          low(edges.size(), 0),
          on_stack(edges.size(), false) {}

    void run(int root) {
        // Explicit stack of (node, next-edge) frames.
        std::vector<std::pair<int, std::size_t>> frames;
        frames.emplace_back(root, 0);
        index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
        stack.push_back(root);
        on_stack[static_cast<std::size_t>(root)] = true;

        while (!frames.empty()) {
            auto& [v, next] = frames.back();
            if (next < out_edges[static_cast<std::size_t>(v)].size()) {
                int w = out_edges[static_cast<std::size_t>(v)][next++];
                if (index[static_cast<std::size_t>(w)] < 0) {
                    index[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = counter++;
                    stack.push_back(w);
                    on_stack[static_cast<std::size_t>(w)] = true;
                    frames.emplace_back(w, 0);
                } else if (on_stack[static_cast<std::size_t>(w)]) {
                    low[static_cast<std::size_t>(v)] =
                        std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
                }
            } else {
                if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
                    NodeSet comp;
                    int count = 0;
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[static_cast<std::size_t>(w)] = false;
                        comp = comp.with(w);
                        ++count;
                        if (w == v) break;
                    }
                    if (count >= 2) components.push_back(comp);
                }
                frames.pop_back();
                if (!frames.empty()) {
                    int parent = frames.back().first;
                    low[static_cast<std::size_t>(parent)] =
                        std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(v)]);
                }
            }
        }
    }
};

}  // namespace

std::vector<NodeSet> separate_integer(const std::vector<NodeSet>& parents) {
    const int n = static_cast<int>(parents.size());
    std::vector<std::vector<int>> out_edges(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        parents[static_cast<std::size_t>(i)].for_each(
            [&](int p) { out_edges[static_cast<std::size_t>(p)].push_back(i); });

    Tarjan tarjan(out_edges);
    for (int v = 0; v < n; ++v)
        if (tarjan.index[static_cast<std::size_t>(v)] < 0) tarjan.run(v);

    // Tarjan emits components in reverse topological order; sort by lowest
    // member for a deterministic interface.
    std::sort(tarjan.components.begin(), tarjan.components.end(),
              [](NodeSet a, NodeSet b) { return a.bits() < b.bits(); });
    return tarjan.components;
}

std::optional<SeparatedCluster> separate_fractional(
    const std::vector<RmlpState::SupportEntry>& primal_support, int n, const MilpLimits& limits) {
    // max sum x*_{iJ} y_{iJ} - sum z_i  s.t.  y_{iJ} <= z_i, y_{iJ} <= sum_{i' in J} z_{i'},
    // sum z_i >= 2, all binary. Columns with empty J force y = 0 and are dropped.
    MilpProblem problem;
    problem.lp.sense = Sense::Maximize;

    std::vector<int> zvar(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        zvar[static_cast<std::size_t>(i)] = problem.lp.add_variable(-1.0, 0.0, 1.0);
        problem.binaries.push_back(zvar[static_cast<std::size_t>(i)]);
    }

    for (const auto& entry : primal_support) {
        if (entry.parents.empty() || entry.value <= 0.0) continue;
        int y = problem.lp.add_variable(entry.value, 0.0, 1.0);
        problem.binaries.push_back(y);

        RowConstraint own;
        own.rel = Relation::LessEqual;
        own.coeffs = {{y, 1.0}, {zvar[static_cast<std::size_t>(entry.node)], -1.0}};
        own.rhs = 0.0;
        problem.lp.add_row(std::move(own));

        RowConstraint reach;
        reach.rel = Relation::LessEqual;
        reach.coeffs.emplace_back(y, 1.0);
        entry.parents.for_each(
            [&](int p) { reach.coeffs.emplace_back(zvar[static_cast<std::size_t>(p)], -1.0); });
        reach.rhs = 0.0;
        problem.lp.add_row(std::move(reach));
    }

    RowConstraint size_row;
    size_row.rel = Relation::GreaterEqual;
    for (int i = 0; i < n; ++i) size_row.coeffs.emplace_back(zvar[static_cast<std::size_t>(i)], 1.0);
    size_row.rhs = 2.0;
    problem.lp.add_row(std::move(size_row));

    MilpResult res = solve_milp(problem, {}, limits);
    if (res.objective <= -1.0 + 1e-6) return std::nullopt;

    NodeSet cluster;
    for (int i = 0; i < n; ++i)
        if (res.incumbent[static_cast<std::size_t>(zvar[static_cast<std::size_t>(i)])] > 0.5)
            cluster = cluster.with(i);
    return SeparatedCluster{cluster, res.objective + 1.0};
}

}  // namespace bnsl
