#include <doctest.h>

#include "graphaug/graph.hpp"
#include "oracles.hpp"

using namespace graphaug;

namespace {

Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }
Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }

}  // namespace

TEST_CASE("construction enforces simple-graph invariants") {
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), InvalidInputError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidInputError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidInputError);
    CHECK_THROWS_AS(Graph(-1, {}), InvalidInputError);
    CHECK_NOTHROW(Graph(0, {}));
    CHECK_NOTHROW(Graph(5, {}));
}

TEST_CASE("edges are canonical and adjacency is symmetric") {
    const Graph g(4, {{2, 0}, {3, 1}});
    CHECK(g.edges()[0] == Edge(0, 2));
    CHECK(g.edges()[1] == Edge(1, 3));
    for (NodeId v = 0; v < g.node_count(); ++v)
        for (NodeId w : g.neighbors(v)) {
            CHECK(g.has_edge(v, w));
            CHECK(g.has_edge(w, v));
        }
    CHECK(g.edge_count() * 2 == g.degree(0) + g.degree(1) + g.degree(2) + g.degree(3));
}

TEST_CASE("degree") {
    CHECK(triangle().degree(0) == 2);
    CHECK(Graph(1, {}).degree(0) == 0);
    const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(star.degree(0) == 3);
    CHECK_THROWS_AS(star.degree(4), InvalidNodeError);
    CHECK_THROWS_AS(star.degree(-1), InvalidNodeError);
}

TEST_CASE("is_connected") {
    CHECK(is_connected(Graph(4, {{0, 1}, {1, 2}, {2, 3}})));
    CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
    CHECK(is_connected(Graph(1, {})));
    CHECK_THROWS_AS(is_connected(Graph(0, {})), InvalidInputError);
}

TEST_CASE("is_connected agrees with Floyd-Warshall on random small graphs") {
    Rng rng(20240501);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = uniform_int(rng, 1, 7);
        const Graph g = oracle::er_graph(n, 0.4, rng);
        CHECK(is_connected(g) == oracle::connected_floyd_warshall(g));
    }
}

TEST_CASE("apply_rewire follows set algebra") {
    const Graph changed = apply_rewire(path3(), RewireOp{{{1, 2}}, {{0, 2}}});
    CHECK(changed == Graph(3, {{0, 1}, {0, 2}}));

    CHECK(apply_rewire(triangle(), RewireOp{}) == triangle());

    // delete-then-add of the same edge is valid and is the identity
    CHECK(apply_rewire(triangle(), RewireOp{{{0, 1}}, {{0, 1}}}) == triangle());

    CHECK_THROWS_AS(apply_rewire(triangle(), RewireOp{{{0, 1}}, {{0, 2}}}), RewireConflictError);
    CHECK_THROWS_AS(apply_rewire(path3(), RewireOp{{{0, 2}}, {}}), RewireConflictError);
    CHECK_THROWS_AS(apply_rewire(path3(), RewireOp{{}, {{2, 2}}}), RewireConflictError);
}

TEST_CASE("apply_rewire preserves node count and inverts cleanly") {
    Rng rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = uniform_int(rng, 2, 10);
        const Graph g = oracle::er_graph(n, 0.5, rng);

        RewireOp op;
        for (const Edge& e : g.edges())
            if (coin_flip(rng)) op.deleted.push_back(e);
        for (NodeId u = 0; u < n; ++u)
            for (NodeId v = u + 1; v < n; ++v)
                if (!g.has_edge(u, v) && coin_flip(rng) && coin_flip(rng))
                    op.added.emplace_back(u, v);

        const Graph rewired = apply_rewire(g, op);
        CHECK(rewired.node_count() == g.node_count());
        CHECK(apply_rewire(rewired, inverse(op)) == g);
    }
}
