#include <doctest.h>

#include "bnsl/column.hpp"
#include "bnsl/dataset.hpp"
#include "bnsl/graph.hpp"
#include "bnsl/node_set.hpp"
#include "bnsl/rng.hpp"

using namespace bnsl;

TEST_CASE("node set basics") {
    NodeSet s = NodeSet::of({0, 3, 5});
    CHECK(s.size() == 3);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(1));
    CHECK(s.with(1).size() == 4);
    CHECK(s.without(3) == NodeSet::of({0, 5}));
    CHECK(s.to_vector() == std::vector<int>{0, 3, 5});

    CHECK(NodeSet::full(3) == NodeSet::of({0, 1, 2}));
    CHECK(NodeSet().empty());
    CHECK_THROWS_AS(NodeSet::single(64), Error);
}

TEST_CASE("node set iteration is ascending") {
    NodeSet s = NodeSet::of({7, 2, 40, 13});
    std::vector<int> seen;
    s.for_each([&](int v) { seen.push_back(v); });
    CHECK(seen == std::vector<int>{2, 7, 13, 40});
}

TEST_CASE("inclusion-exclusion cardinality identity on random sets") {
    Rng rng(123);
    for (int trial = 0; trial < 500; ++trial) {
        NodeSet a = NodeSet::from_bits(rng.next_u64());
        NodeSet b = NodeSet::from_bits(rng.next_u64());
        CHECK(a.unite(b).size() + a.intersect(b).size() == a.size() + b.size());
    }
}

TEST_CASE("decode two-node chain") {
    std::vector<Column> sel{Column(0, NodeSet(), 0.0), Column(1, NodeSet::of({0}), 0.0)};
    Dag d = decode_dag(sel, 2);
    CHECK(d.has_edge(0, 1));
    CHECK(d.edge_count() == 1);
}

TEST_CASE("decode mutual parents reports the 2-cycle") {
    std::vector<Column> sel{Column(0, NodeSet::of({1}), 0.0), Column(1, NodeSet::of({0}), 0.0)};
    try {
        decode_dag(sel, 2);
        FAIL("expected CycleDetected");
    } catch (const CycleDetected& e) {
        CHECK(e.cycle() == std::vector<int>{0, 1});
    }
}

TEST_CASE("decode complete dag on a fixed order") {
    std::vector<Column> sel{Column(0, NodeSet(), 0.0), Column(1, NodeSet::of({0}), 0.0),
                            Column(2, NodeSet::of({0, 1}), 0.0)};
    Dag d = decode_dag(sel, 3);
    CHECK(d.has_edge(0, 1));
    CHECK(d.has_edge(0, 2));
    CHECK(d.has_edge(1, 2));
}

TEST_CASE("decode with a node missing") {
    std::vector<Column> sel{Column(0, NodeSet(), 0.0)};
    CHECK_THROWS_AS(decode_dag(sel, 2), MissingNode);
}

TEST_CASE("acyclicity checks") {
    // 0 -> 1 -> 2
    std::vector<NodeSet> chain{NodeSet(), NodeSet::of({0}), NodeSet::of({1})};
    CHECK(is_acyclic(chain));

    // 0 -> 1, 1 -> 2, 2 -> 0
    std::vector<NodeSet> cycle{NodeSet::of({2}), NodeSet::of({0}), NodeSet::of({1})};
    CHECK_FALSE(is_acyclic(cycle));
    CHECK_THROWS_AS(Dag::make(cycle), CycleDetected);

    std::vector<NodeSet> empty(5);
    CHECK(is_acyclic(empty));
}

TEST_CASE("random dags accepted by the constructor are acyclic") {
    Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng.next_below(8));
        std::vector<NodeSet> parents(static_cast<std::size_t>(n));
        // Random order + random forward edges is acyclic by construction.
        std::vector<int> order(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(order[static_cast<std::size_t>(i)],
                      order[rng.next_below(static_cast<std::uint64_t>(i + 1))]);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng.next_bool())
                    parents[static_cast<std::size_t>(order[static_cast<std::size_t>(b)])] =
                        parents[static_cast<std::size_t>(order[static_cast<std::size_t>(b)])].with(
                            order[static_cast<std::size_t>(a)]);
        Dag d = Dag::make(parents);
        CHECK(is_acyclic(d.parent_sets()));
    }
}

TEST_CASE("column pool insertion is idempotent and keeps the empty set") {
    ColumnPool pool(3, {1.0, 2.0, 3.0});
    CHECK(pool.pool_size(0) == 1);
    CHECK(pool.contains(0, NodeSet()));

    Column c(1, NodeSet::of({0, 2}), -5.0);
    CHECK(pool.insert(c));
    CHECK_FALSE(pool.insert(c));
    CHECK(pool.pool_size(1) == 2);
    CHECK(pool.total_size() == 4);
}

TEST_CASE("cluster set rejects singletons and duplicates") {
    ClusterSet cs;
    CHECK_THROWS_AS(cs.insert(NodeSet::of({2})), Error);
    CHECK(cs.insert(NodeSet::of({0, 1})));
    CHECK_FALSE(cs.insert(NodeSet::of({0, 1})));
    CHECK(cs.size() == 1);
}

TEST_CASE("dataset validates shape and codes") {
    CHECK_THROWS_AS(Dataset::continuous({1.0, 2.0, 3.0}, 3, 1), Error);  // n < 2
    CHECK_THROWS_AS(Dataset::discrete({0, 1, 0, 3}, 2, 2, {2, 2}), ArityViolation);

    Dataset d = Dataset::continuous({1.0, 2.0, 3.0, 4.0, 5.0, 6.0}, 3, 2);
    CHECK(d.n() == 2);
    CHECK(d.sample_count() == 3);
    // Columns are centered.
    double mean0 = (d.value(0, 0) + d.value(1, 0) + d.value(2, 0)) / 3.0;
    CHECK(mean0 == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("dag equality is parent-set equality") {
    Dag a = Dag::make({NodeSet(), NodeSet::of({0})});
    Dag b = Dag::make({NodeSet(), NodeSet::of({0})});
    Dag c = Dag::make({NodeSet::of({1}), NodeSet()});
    CHECK(a == b);
    CHECK_FALSE(a == c);
}

TEST_CASE("pdag marks stay consistent") {
    Pdag g(3);
    g.set_undirected(0, 1);
    CHECK(g.mark(0, 1) == Pdag::Mark::Undirected);
    CHECK(g.mark(1, 0) == Pdag::Mark::Undirected);
    g.set_directed(0, 1);
    CHECK(g.mark(0, 1) == Pdag::Mark::Directed);
    CHECK(g.mark(1, 0) == Pdag::Mark::None);
    CHECK(g.adjacent(1, 0));
    CHECK(g.edge_count() == 1);
}
