#include "bnsl/metrics.hpp"

namespace bnsl {

namespace {

// Meek orientation rules, applied to exhaustion. Each rule orients an
// undirected a - b into a -> b when leaving it reversible would force either
// a new v-structure or a directed cycle in some extension.
bool apply_meek_rules(Pdag& g) {
    const int n = g.node_count();
    bool changed = false;

    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (!g.has_undirected(a, b)) continue;

            // R1: c -> a, a - b, c and b nonadjacent  =>  a -> b.
            bool oriented = false;
            for (int c = 0; c < n && !oriented; ++c) {
                if (c == a || c == b) continue;
                if (g.has_directed(c, a) && !g.adjacent(c, b)) {
                    g.set_directed(a, b);
                    oriented = true;
                }
            }
            if (oriented) {
                changed = true;
                continue;
            }

            // R2: a -> c -> b with a - b  =>  a -> b.
            for (int c = 0; c < n && !oriented; ++c) {
                if (c == a || c == b) continue;
                if (g.has_directed(a, c) && g.has_directed(c, b)) {
                    g.set_directed(a, b);
                    oriented = true;
                }
            }
            if (oriented) {
                changed = true;
                continue;
            }

            // R3: a - c, a - d, c -> b, d -> b, c and d nonadjacent  =>  a -> b.
            for (int c = 0; c < n && !oriented; ++c) {
                if (c == a || c == b || !g.has_undirected(a, c) || !g.has_directed(c, b)) continue;
                for (int d = c + 1; d < n && !oriented; ++d) {
                    if (d == a || d == b || !g.has_undirected(a, d) || !g.has_directed(d, b)) continue;
                    if (!g.adjacent(c, d)) {
                        g.set_directed(a, b);
                        oriented = true;
                    }
                }
            }
            if (oriented) {
                changed = true;
                continue;
            }

            // R4: a - d, d -> c, c -> b, b and d nonadjacent  =>  a -> b.
            // (b -> a would give either the cycle a -> d -> c -> b -> a or a
            // new v-structure b -> a <- d.)
            for (int d = 0; d < n && !oriented; ++d) {
                if (d == a || d == b || !g.has_undirected(a, d)) continue;
                for (int c = 0; c < n && !oriented; ++c) {
                    if (c == a || c == b || c == d) continue;
                    if (g.has_directed(d, c) && g.has_directed(c, b) && !g.adjacent(b, d)) {
                        g.set_directed(a, b);
                        oriented = true;
                    }
                }
            }
            if (oriented) changed = true;
        }
    }
    return changed;
}

}  // namespace

Pdag to_essential_graph(const Dag& dag) {
    const int n = dag.node_count();
    Pdag g(n);

    // Skeleton, all undirected.
    for (int j = 0; j < n; ++j)
        dag.parents(j).for_each([&](int i) { g.set_undirected(i, j); });

    // V-structures i -> k <- j with i, j nonadjacent are compelled.
    for (int k = 0; k < n; ++k) {
        const NodeSet& ps = dag.parents(k);
        ps.for_each([&](int i) {
            ps.for_each([&](int j) {
                if (i >= j) return;
                if (!dag.has_edge(i, j) && !dag.has_edge(j, i)) {
                    g.set_directed(i, k);
                    g.set_directed(j, k);
                }
            });
        });
    }

    while (apply_meek_rules(g)) {
    }
    return g;
}

int shd(const Pdag& a, const Pdag& b) {
    if (a.node_count() != b.node_count()) throw NodeMismatch("graphs have different node counts");
    const int n = a.node_count();
    int dist = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            // Pair mark: none / undirected / i->j / j->i.
            bool differ = a.mark(i, j) != b.mark(i, j) || a.mark(j, i) != b.mark(j, i);
            if (differ) ++dist;
        }
    return dist;
}

GraphMetrics compare(const Dag& predicted, const Dag& truth) {
    if (predicted.node_count() != truth.node_count())
        throw NodeMismatch("graphs have different node counts");
    const int n = predicted.node_count();

    Pdag p = to_essential_graph(predicted);
    Pdag t = to_essential_graph(truth);

    int pred_edges = 0, true_edges = 0, matched = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool in_p = p.adjacent(i, j);
            bool in_t = t.adjacent(i, j);
            if (in_p) ++pred_edges;
            if (in_t) ++true_edges;
            if (in_p && in_t && p.mark(i, j) == t.mark(i, j) && p.mark(j, i) == t.mark(j, i))
                ++matched;
        }

    GraphMetrics m;
    m.precision = pred_edges > 0 ? static_cast<double>(matched) / pred_edges
                                 : (true_edges == 0 ? 1.0 : 0.0);
    m.recall = true_edges > 0 ? static_cast<double>(matched) / true_edges
                              : (pred_edges == 0 ? 1.0 : 0.0);
    m.shd = shd(p, t);
    return m;
}

}  // namespace bnsl
