#include "bnsl/graph.hpp"

#include <algorithm>

namespace bnsl {

std::optional<std::vector<int>> topological_order(std::span<const NodeSet> parents) {
    const int n = static_cast<int>(parents.size());
    std::vector<int> remaining_parents(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> children(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        remaining_parents[static_cast<std::size_t>(i)] = parents[static_cast<std::size_t>(i)].size();
        parents[static_cast<std::size_t>(i)].for_each(
            [&](int p) { children[static_cast<std::size_t>(p)].push_back(i); });
    }

    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<int> frontier;
    for (int i = 0; i < n; ++i)
        if (remaining_parents[static_cast<std::size_t>(i)] == 0) frontier.push_back(i);

    while (!frontier.empty()) {
        // Pop the smallest index for a deterministic order.
        std::pop_heap(frontier.begin(), frontier.end(), std::greater<>());
        int v = frontier.back();
        frontier.pop_back();
        order.push_back(v);
        for (int c : children[static_cast<std::size_t>(v)]) {
            if (--remaining_parents[static_cast<std::size_t>(c)] == 0) {
                frontier.push_back(c);
                std::push_heap(frontier.begin(), frontier.end(), std::greater<>());
            }
        }
    }

    if (static_cast<int>(order.size()) != n) return std::nullopt;
    return order;
}

bool is_acyclic(std::span<const NodeSet> parents) { return topological_order(parents).has_value(); }

std::vector<int> find_cycle(std::span<const NodeSet> parents) {
    const int n = static_cast<int>(parents.size());
    // Walk parent pointers from an unvisited node until a node repeats.
    std::vector<int> color(static_cast<std::size_t>(n), 0);  // 0 white, 1 on path, 2 done
    std::vector<int> path;

    for (int start = 0; start < n; ++start) {
        if (color[static_cast<std::size_t>(start)] != 0) continue;
        path.clear();
        int v = start;
        while (true) {
            if (color[static_cast<std::size_t>(v)] == 1) {
                // Found the cycle: suffix of path beginning at v.
                auto it = std::find(path.begin(), path.end(), v);
                std::vector<int> cycle(it, path.end());
                std::sort(cycle.begin(), cycle.end());
                return cycle;
            }
            if (color[static_cast<std::size_t>(v)] == 2) break;
            color[static_cast<std::size_t>(v)] = 1;
            path.push_back(v);
            const NodeSet& ps = parents[static_cast<std::size_t>(v)];
            if (ps.empty()) break;
            v = ps.first();
        }
        for (int u : path) color[static_cast<std::size_t>(u)] = 2;
    }
    return {};
}

Dag Dag::make(std::vector<NodeSet> parents) {
    for (std::size_t i = 0; i < parents.size(); ++i)
        if (parents[i].contains(static_cast<int>(i))) throw CycleDetected({static_cast<int>(i)});
    if (!is_acyclic(parents)) throw CycleDetected(find_cycle(parents));
    return Dag(std::move(parents));
}

int Dag::edge_count() const {
    int count = 0;
    for (const NodeSet& p : parents_) count += p.size();
    return count;
}

int Pdag::edge_count() const {
    int count = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (adjacent(i, j)) ++count;
    return count;
}

}  // namespace bnsl
