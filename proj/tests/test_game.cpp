#include <doctest.h>

#include <random>

#include "liminal/game.hpp"
#include "liminal/json_io.hpp"
#include "liminal/strategies.hpp"

using namespace liminal;

TEST_SUITE_BEGIN("game");

namespace {

GameState at_pre_reveal(const Graph& g, std::initializer_list<int> burned,
                        std::initializer_list<int> revealed, int round = 2) {
    GameState s = GameState::initial(g);
    s.burned = Bits::of(g.n(), burned);
    s.revealed = Bits::of(g.n(), revealed);
    s.round = round;
    s.phase = Phase::PreReveal;
    return s;
}

int count_subsets(int n, int r) {  // C(n, r)
    long long v = 1;
    for (int i = 0; i < r; ++i) v = v * (n - i) / (i + 1);
    return (int)v;
}

}  // namespace

TEST_CASE("propagation") {
    Graph p3 = make_path(3);
    GameState s = GameState::initial(p3);
    s.burned.set(1);
    s.round = 2;
    s.phase = Phase::PrePropagation;
    GameState t = propagate(p3, s);
    CHECK(t.burned.count() == 3);

    GameState empty = GameState::initial(p3);
    empty.round = 2;
    empty.phase = Phase::PrePropagation;
    CHECK(propagate(p3, empty).burned.none());

    Graph g33 = make_grid(3, 3);
    GameState c = GameState::initial(g33);
    c.burned.set(0);  // (0,0)
    c.round = 2;
    c.phase = Phase::PrePropagation;
    GameState after = propagate(g33, c);
    CHECK(after.burned == Bits::of(9, {0, 1, 3}));
}

TEST_CASE("reveal options") {
    Graph p8 = make_path(8);
    GameState s = at_pre_reveal(p8, {0}, {0, 1, 2});  // unlit = {3..7}, 5 vertices
    RevealOptions ro = reveal_options(p8, s, 2);
    CHECK(ro.required == 2);
    CHECK(ro.pool.count() == 5);
    CHECK(count_subsets(5, 2) == 10);

    GameState forced = at_pre_reveal(p8, {0, 1, 2, 3}, {4, 5, 6});  // unlit = {7}
    RevealOptions ro2 = reveal_options(p8, forced, 3);
    CHECK(ro2.required == 1);
    CHECK(ro2.pool == Bits::of(8, {7}));

    GameState none = at_pre_reveal(p8, {0, 1, 2, 3}, {4, 5, 6, 7});
    CHECK(reveal_options(p8, none, 3).required == 0);
}

TEST_CASE("reveal legality") {
    Graph p4 = make_path(4);
    GameState s = at_pre_reveal(p4, {0}, {1});
    CHECK_THROWS_AS(apply_reveal(p4, s, 2, Bits::of(4, {1, 2})), IllegalMove);  // lit vertex
    CHECK_THROWS_AS(apply_reveal(p4, s, 2, Bits::of(4, {2})), IllegalMove);     // cardinality
    GameState t = apply_reveal(p4, s, 2, Bits::of(4, {2, 3}));
    CHECK(t.revealed == Bits::of(4, {1, 2, 3}));
    CHECK(t.phase == Phase::PreBurn);
}

TEST_CASE("burn legality") {
    Graph p4 = make_path(4);
    GameState s = at_pre_reveal(p4, {0}, {1});
    s = apply_reveal(p4, s, 2, Bits::of(4, {2, 3}));
    Bits pool = s.selectable();
    CHECK(pool == Bits::of(4, {1, 2, 3}));
    CHECK_THROWS_AS(apply_burn(p4, s, std::nullopt, pool), IllegalMove);  // compulsory
    CHECK_THROWS_AS(apply_burn(p4, s, 0, pool), IllegalMove);             // already burned
    GameState t = apply_burn(p4, s, 3, pool);
    CHECK(t.burned == Bits::of(4, {0, 3}));
    CHECK(t.round == s.round + 1);
}

TEST_CASE("trivial playouts") {
    auto idx = [](const Graph& g) { return VertexOrder::identity(g.n()); };
    {
        Graph k1(1);
        Transcript t = play(k1, 3, basic_saboteur(idx(k1)), greedy_arsonist(idx(k1)));
        CHECK(t.length == 1);
    }
    {
        Graph p2 = make_path(2);
        for (auto variant : {GreedyVariant::Smallest, GreedyVariant::Largest}) {
            Transcript t = play(p2, 2, basic_saboteur(idx(p2)), greedy_arsonist(idx(p2), variant));
            CHECK(t.length == 2);
        }
    }
    {
        // one burn, then propagation finishes the clique: b(K_n) = 2
        Graph k5 = make_complete(5);
        Transcript t = play(k5, 5, basic_saboteur(idx(k5)), greedy_arsonist(idx(k5)));
        CHECK(t.length == 2);
        CHECK(t.rounds.size() == 2);
        CHECK(t.rounds[0].revealed.size() == 5);
    }
}

TEST_CASE("monotone growth and termination on random playouts") {
    std::mt19937_64 rng(11);
    std::bernoulli_distribution coin(0.3);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + (int)(rng() % 8);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) g.add_edge(u, v);
        int k = 1 + (int)(rng() % 3);
        Transcript t = play(g, k, basic_saboteur(VertexOrder::identity(n)),
                            greedy_arsonist(VertexOrder::identity(n)));
        CHECK(t.length <= 2 * n);
        // replay re-validates every transition, including monotonicity
        GameState end = replay(g, t);
        CHECK(end.complete());
    }
}

TEST_CASE("replay determinism and transcript JSON round trip") {
    Graph g = make_grid(3, 3);
    VertexOrder order = graded_lex_order(3, 3);
    PlayOptions po;
    po.graph_spec = "grid:3x3";
    Transcript t = play(g, 2, basic_saboteur(order), greedy_arsonist(order), po);
    Transcript t2 = transcript_from_json(transcript_to_json(t));
    CHECK(t2.length == t.length);
    CHECK(t2.rounds.size() == t.rounds.size());
    GameState end = replay(g, t2);
    CHECK(end.complete());

    // byte-identical reruns
    Transcript t3 = play(g, 2, basic_saboteur(order), greedy_arsonist(order), po);
    CHECK(transcript_to_json(t3) == transcript_to_json(t));
}

TEST_CASE("figure-2 anchor: basic saboteur vs smallest arsonist on G_100 at k=1") {
    Graph g = make_grid(100, 100);
    VertexOrder order = graded_lex_order(100, 100);
    Transcript t = play(g, 1, basic_saboteur(order), greedy_arsonist(order));
    CHECK(t.length == 189);
}

TEST_CASE("strict arsonist falls back to leftovers only when nothing was revealed") {
    // K_1 ∪ K_1 at k=2: both revealed round 1, one burned; in strict mode the
    // second round has no reveal, so the burn comes from the leftover pool.
    Graph g = disjoint_union(Graph(1), Graph(1));
    PlayOptions po;
    po.strict_arsonist = true;
    Transcript t = play(g, 2, basic_saboteur(VertexOrder::identity(2)),
                        greedy_arsonist(VertexOrder::identity(2)), po);
    CHECK(t.length == 2);
}

TEST_SUITE_END();
