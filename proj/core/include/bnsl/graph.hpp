#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bnsl/errors.hpp"
#include "bnsl/node_set.hpp"

namespace bnsl {

/// Topological order of the graph described by per-node parent sets, or
/// nullopt if it contains a directed cycle.
std::optional<std::vector<int>> topological_order(std::span<const NodeSet> parents);

/// True iff the parent assignment induces an acyclic directed graph.
bool is_acyclic(std::span<const NodeSet> parents);

/// Extracts the node list of one directed cycle; requires the graph cyclic.
std::vector<int> find_cycle(std::span<const NodeSet> parents);

/// Directed acyclic graph over nodes {0, ..., n-1}, one parent set per node.
/// The constructor rejects cyclic assignments, so every Dag is acyclic by
/// construction. Equality is parent-set equality.
class Dag {
public:
    /// Throws CycleDetected when the assignment induces a cycle.
    static Dag make(std::vector<NodeSet> parents);

    /// Edgeless graph on n nodes.
    static Dag empty(int n) { return Dag(std::vector<NodeSet>(static_cast<std::size_t>(n))); }

    int node_count() const { return static_cast<int>(parents_.size()); }
    const NodeSet& parents(int i) const { return parents_[static_cast<std::size_t>(i)]; }
    const std::vector<NodeSet>& parent_sets() const { return parents_; }

    int edge_count() const;
    bool has_edge(int from, int to) const { return parents_[static_cast<std::size_t>(to)].contains(from); }

    friend bool operator==(const Dag& a, const Dag& b) { return a.parents_ == b.parents_; }

private:
    explicit Dag(std::vector<NodeSet> parents) : parents_(std::move(parents)) {}
    std::vector<NodeSet> parents_;
};

/// Partially directed graph: per ordered node pair an edge mark in
/// {none, undirected, directed}. Directed and undirected marks on the same
/// pair are mutually exclusive.
class Pdag {
public:
    enum class Mark : std::uint8_t { None, Undirected, Directed };

    explicit Pdag(int n) : n_(n), marks_(static_cast<std::size_t>(n) * n, 0) {}

    int node_count() const { return n_; }

    /// Mark of the ordered pair (i, j): Directed means i -> j.
    Mark mark(int i, int j) const {
        std::uint8_t m = marks_[idx(i, j)];
        if (m == 1) return Mark::Directed;
        if (m == 2) return Mark::Undirected;
        return Mark::None;
    }

    bool adjacent(int i, int j) const { return marks_[idx(i, j)] != 0 || marks_[idx(j, i)] != 0; }
    bool has_directed(int i, int j) const { return marks_[idx(i, j)] == 1; }
    bool has_undirected(int i, int j) const { return marks_[idx(i, j)] == 2; }

    void set_directed(int i, int j) {
        marks_[idx(i, j)] = 1;
        marks_[idx(j, i)] = 0;
    }
    void set_undirected(int i, int j) {
        marks_[idx(i, j)] = 2;
        marks_[idx(j, i)] = 2;
    }
    void clear(int i, int j) {
        marks_[idx(i, j)] = 0;
        marks_[idx(j, i)] = 0;
    }

    /// Number of adjacent unordered pairs.
    int edge_count() const;

    friend bool operator==(const Pdag& a, const Pdag& b) { return a.n_ == b.n_ && a.marks_ == b.marks_; }

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

    int n_;
    std::vector<std::uint8_t> marks_;
};

}  // namespace bnsl
