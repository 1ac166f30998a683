#pragma once

#include "bnsl/graph.hpp"

namespace bnsl {

/// Essential graph (CPDAG) of a DAG: skeleton plus v-structures, with the
/// remaining compelled edges oriented by the Meek rules and everything else
/// undirected. Idempotent as a map on equivalence classes.
Pdag to_essential_graph(const Dag& dag);

struct GraphMetrics {
    double precision = 0.0;
    double recall = 0.0;
    int shd = 0;
};

/// Compares two DAGs through their essential graphs. A matched edge requires
/// the identical mark (same direction, or undirected on both sides); SHD is
/// the number of node pairs whose marks differ.
GraphMetrics compare(const Dag& predicted, const Dag& truth);

/// SHD between two partially directed graphs (Hamming distance over pair marks).
int shd(const Pdag& a, const Pdag& b);

}  // namespace bnsl
