#include <doctest.h>

#include <bit>
#include <random>
#include <sstream>

#include "liminal/graph.hpp"

using namespace liminal;

TEST_SUITE_BEGIN("graph");

TEST_CASE("family generators match hand counts") {
    Graph q3 = build_family("hypercube:3");
    CHECK(q3.n() == 8);
    CHECK(q3.edge_count() == 12);
    CHECK(q3.diameter() == 3);

    Graph g55 = build_family("grid:5x5");
    CHECK(g55.n() == 25);
    CHECK(g55.edge_count() == 40);

    Graph cl = build_family("cliques:2x3");
    CHECK(cl.n() == 6);
    CHECK(cl.edge_count() == 6);
    CHECK(cl.component_count() == 2);

    Graph sp = build_family("spider:4,2");
    CHECK(sp.n() == 9);
    CHECK(sp.is_tree());

    Graph cat = build_family("caterpillar:[2,0,3]");
    CHECK(cat.n() == 8);
    CHECK(cat.is_tree());
}

TEST_CASE("bad family specs are rejected") {
    CHECK_THROWS_AS(build_family("path:0"), std::invalid_argument);
    CHECK_THROWS_AS(build_family("spider:2,3"), std::invalid_argument);
    CHECK_THROWS_AS(build_family("grid:5"), std::invalid_argument);
    CHECK_THROWS_AS(build_family("widget:3"), std::invalid_argument);
    CHECK_THROWS_AS(build_family("path:3 trailing"), std::invalid_argument);
}

TEST_CASE("cartesian product") {
    Graph c4ish = cartesian_product(make_path(2), make_path(2));
    CHECK(c4ish.n() == 4);
    CHECK(c4ish.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(c4ish.degree(v) == 2);
    CHECK(c4ish.connected());

    // index identity with the grid generator
    Graph p5p5 = cartesian_product(make_path(5), make_path(5));
    Graph g = make_grid(5, 5);
    REQUIRE(p5p5.n() == g.n());
    for (int v = 0; v < g.n(); ++v) CHECK(p5p5.neighbors(v) == g.neighbors(v));

    // 3 + 2*3 edges by hand enumeration
    Graph p2k3 = cartesian_product(make_path(2), make_complete(3));
    CHECK(p2k3.n() == 6);
    CHECK(p2k3.edge_count() == 9);
}

TEST_CASE("strong product") {
    Graph k4 = strong_product(make_complete(2), make_complete(2));
    CHECK(k4.n() == 4);
    CHECK(k4.edge_count() == 6);

    // hand enumeration: 4 cartesian path edges + 3 rung edges + 4 diagonals
    Graph p3k2 = strong_product(make_path(3), make_complete(2));
    CHECK(p3k2.n() == 6);
    CHECK(p3k2.edge_count() == 11);

    Graph h2 = make_hypercube(2);
    Graph same = strong_product(h2, make_complete(1));
    REQUIRE(same.n() == h2.n());
    for (int v = 0; v < h2.n(); ++v) CHECK(same.neighbors(v) == h2.neighbors(v));
}

TEST_CASE("disjoint union") {
    Graph u = disjoint_union(make_path(3), make_complete(3));
    CHECK(u.n() == 6);
    CHECK(u.component_count() == 2);
    CHECK(disjoint_union(Graph(1), Graph(1)).edge_count() == 0);
    CHECK(build_family("union(path:2,cliques:2x4)").n() == 10);
}

TEST_CASE("distances and the disconnected sentinel") {
    Graph p4 = make_path(4);
    CHECK(p4.distance(0, 3) == 3);
    Graph q4 = make_hypercube(4);
    CHECK(q4.distance(0b0000, 0b1111) == 4);
    Graph cl = make_cliques(2, 3);
    CHECK(cl.distance(0, 3) == cl.n());
    CHECK(cl.distance(0, 1) == 1);
}

TEST_CASE("hypercube distance is popcount of xor") {
    for (int n = 1; n <= 6; ++n) {
        Graph q = make_hypercube(n);
        const auto& d = q.distances();
        for (int u = 0; u < q.n(); ++u)
            for (int v = 0; v < q.n(); ++v)
                REQUIRE(d[u][v] == std::popcount(unsigned(u ^ v)));
    }
}

TEST_CASE("diameters of standard families") {
    for (int n : {2, 3, 5, 8}) CHECK(make_path(n).diameter() == n - 1);
    for (int n : {2, 3, 4}) CHECK(make_grid(n, n).diameter() == 2 * n - 2);
    for (int n : {1, 2, 3, 5}) CHECK(make_hypercube(n).diameter() == n);
}

TEST_CASE("graded-lex order") {
    VertexOrder o22 = graded_lex_order(2, 2);
    CHECK(o22.by_rank == std::vector<int>{0, 1, 2, 3});  // (0,0),(0,1),(1,0),(1,1)

    VertexOrder o33 = graded_lex_order(3, 3);
    CHECK(o33.rank_of[1 * 3 + 1] < o33.rank_of[2 * 3 + 0]);  // (1,1) before (2,0)

    VertexOrder o55 = graded_lex_order(5, 5);
    CHECK(o55.by_rank[0] == 0);
    CHECK(o55.by_rank[1] == 1);      // (0,1)
    CHECK(o55.by_rank[2] == 5);      // (1,0)

    // ranks list each diagonal contiguously in increasing distance from (0,0)
    Graph g = make_grid(5, 5);
    const auto& dist = g.distances();
    int prev = 0;
    for (int r = 0; r < 25; ++r) {
        int d = dist[0][o55.by_rank[r]];
        CHECK(d >= prev);
        prev = d;
    }
}

TEST_CASE("edge list round trip and file DSL") {
    std::mt19937_64 rng(7);
    Graph g(9);
    std::bernoulli_distribution coin(0.4);
    for (int u = 0; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v)
            if (coin(rng)) g.add_edge(u, v);
    std::stringstream ss;
    write_edge_list(ss, g);
    Graph h = read_edge_list(ss);
    REQUIRE(h.n() == g.n());
    for (int v = 0; v < g.n(); ++v) CHECK(h.neighbors(v) == g.neighbors(v));
}

TEST_CASE("nested DSL") {
    Graph g = build_family("cart(path:2,strong(path:2,complete:2))");
    CHECK(g.n() == 8);
    Graph u = build_family("union(complete:1,complete:1)");
    CHECK(u.n() == 2);
    CHECK(u.edge_count() == 0);
}

TEST_SUITE_END();
