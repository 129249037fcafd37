#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "purelab/families.hpp"
#include "purelab/orbit.hpp"
#include "purelab/word.hpp"
#include "support.hpp"

using namespace purelab;
using namespace purelab::test;

namespace {

Graph edges_of(int n, std::initializer_list<std::pair<int, int>> es) {
    Graph g(n);
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
}

} // namespace

TEST_CASE("local complement examples") {
    Graph c5 = gen_cycle(5);
    Graph h = local_complement(c5, 0);
    CHECK(h == edges_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 4}}));

    Graph iso(3);
    iso.add_edge(1, 2);
    CHECK(local_complement(iso, 0) == iso); // isolated vertex

    std::mt19937 rng(5);
    for (int t = 0; t < 100; t++) {
        Graph g = random_graph(rng, 1 + rng() % 9, 0.5);
        int u = rng() % g.n;
        CHECK(local_complement(local_complement(g, u), u) == g); // R1
    }
    CHECK_THROWS_AS(local_complement(c5, 9), Error);
}

TEST_CASE("substitution rules R1-R4 hold on random graphs") {
    std::mt19937 rng(99);
    int checked_r2 = 0, checked_r3 = 0, checked_r4 = 0;
    for (int t = 0; t < 500; t++) {
        int n = 2 + rng() % 9;
        Graph g = random_graph(rng, n, 0.5);
        int u = rng() % n, v = rng() % n, w = rng() % n;
        CHECK(apply_word(g, {u, u}) == g); // R1
        if (u != v && !g.edge(u, v)) {
            CHECK(apply_word(g, {u, v, u, v}) == g); // R2
            checked_r2++;
        }
        if (u != v && g.edge(u, v)) {
            CHECK(apply_word(g, {u, v, u, v, u, v}) == g); // R3: [uv][vu]
            checked_r3++;
        }
        if (u != v && v != w && u != w && g.edge(u, v) && g.edge(v, w) && g.edge(u, w)) {
            // R4: [uv][vw][uw]
            CHECK(apply_word(g, {u, v, u, v, w, v, u, w, u}) == g);
            checked_r4++;
        }
    }
    CHECK(checked_r2 > 50);
    CHECK(checked_r3 > 50);
    CHECK(checked_r4 > 5);
}

TEST_CASE("global rules R5 and R6") {
    std::mt19937 rng(123);
    for (int t = 0; t < 500; t++) {
        int n = 2 + rng() % 9;
        Graph g = random_graph(rng, n, 0.4);
        for (int u = 0; u < n; u++)
            if (g.degree(u) <= 1) CHECK(apply_word(g, {u}) == g); // R5
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++)
                if (g.adj[u] == g.adj[v]) CHECK(apply_word(g, {u, v}) == g); // R6
    }
}

TEST_CASE("edge triple complement closed form") {
    Graph p3 = gen_path(3);
    CHECK(edge_triple_complement(p3, 0, 1) == edges_of(3, {{0, 1}, {0, 2}}));

    Graph k2 = gen_complete(2);
    CHECK(edge_triple_complement(k2, 0, 1) == k2);

    Graph k3 = gen_complete(3);
    CHECK(edge_triple_complement(k3, 0, 1) == apply_word(k3, {0, 1, 0}));

    CHECK_THROWS_AS(edge_triple_complement(p3, 0, 2), Error);

    std::mt19937 rng(77);
    for (int t = 0; t < 300; t++) {
        int n = 2 + rng() % 9;
        Graph g = random_graph(rng, n, 0.5);
        for (auto [u, v] : g.edge_list()) {
            Graph closed = edge_triple_complement(g, u, v);
            CHECK(closed == apply_word(g, {u, v, u}));
            CHECK(closed == apply_word(g, {v, u, v}));
        }
    }
}

TEST_CASE("reduced word parser") {
    Graph c5 = gen_cycle(5);
    CHECK(is_reduced(c5, {0, 1, 0}));          // bracket [01], edge present
    CHECK_FALSE(is_reduced(c5, {0, 2, 0}));    // no edge 02
    CHECK(is_reduced(c5, {0, 2}));             // two singles
    CHECK_FALSE(is_reduced(c5, {0, 1, 0, 1})); // 1 in two blocks
    CHECK(is_reduced(c5, {}));
}

TEST_CASE("reduce_word examples") {
    Graph c5 = gen_cycle(5);
    CHECK(reduce_word(c5, {1, 1, 0}) == Word{0});
    CHECK(reduce_word(c5, {0, 2, 0, 2}) == Word{});
    CHECK(reduce_word(c5, {0, 1, 0}) == Word{0, 1, 0});
}

TEST_CASE("reduce_word contract on random words") {
    std::mt19937 rng(2024);
    for (int t = 0; t < 800; t++) {
        int n = 2 + rng() % 7;
        Graph g = random_graph(rng, n, 0.45);
        int len = rng() % 12;
        Word s;
        for (int i = 0; i < len; i++) s.push_back(rng() % n);
        std::optional<int> prio;
        if (t % 3 == 0) prio = static_cast<int>(rng() % n);
        Word r = reduce_word(g, s, prio);
        REQUIRE(is_reduced(g, r));
        REQUIRE(apply_word(g, r) == apply_word(g, s));
        std::set<int> support(s.begin(), s.end());
        for (int u : r) REQUIRE(support.count(u));
        if (prio) {
            int fp = -1;
            for (size_t i = 0; i < r.size(); i++)
                if (r[i] == *prio) {
                    fp = static_cast<int>(i);
                    break;
                }
            REQUIRE(fp <= 1);
        }
    }
}

TEST_CASE("reduced words from different orders share their support") {
    std::mt19937 rng(31);
    for (int t = 0; t < 300; t++) {
        int n = 2 + rng() % 6;
        Graph g = random_graph(rng, n, 0.5);
        Word s;
        int len = rng() % 10;
        for (int i = 0; i < len; i++) s.push_back(rng() % n);
        std::optional<std::set<int>> support;
        for (int prio = -1; prio < n; prio++) {
            Word r = prio < 0 ? reduce_word(g, s) : reduce_word(g, s, prio);
            std::set<int> sup(r.begin(), r.end());
            if (!support)
                support = sup;
            else
                REQUIRE(*support == sup);
        }
    }
}

TEST_CASE("bracket pair rewriting (two-bracket lemma)") {
    // for reduced [uv][wx] on up to 6 vertices, one of the three listed
    // rewrites is reduced and equivalent
    std::mt19937 rng(555);
    int instances = 0;
    for (int t = 0; t < 600; t++) {
        int n = 4 + rng() % 3;
        Graph g = random_graph(rng, n, 0.5);
        int u = rng() % n, v = rng() % n, w = rng() % n, x = rng() % n;
        if (std::set<int>{u, v, w, x}.size() != 4) continue;
        Word s{u, v, u, w, x, w};
        if (!is_reduced(g, s)) continue;
        instances++;
        Graph target = apply_word(g, s);
        Word cands[3] = {{w, x, w, u, v, u}, {w, u, w, v, x, v}, {w, v, w, u, x, u}};
        bool any = false;
        for (const Word& c : cands)
            if (is_reduced(g, c) && apply_word(g, c) == target) any = true;
        REQUIRE(any);
    }
    CHECK(instances > 20);
}

TEST_CASE("component splitting of reduced words") {
    Graph g1 = edges_of(4, {{0, 1}, {2, 3}});
    Word r1 = split_word_by_components(g1, {0, 2});
    CHECK((r1 == Word{0, 2} || r1 == Word{2, 0}));

    Graph c5 = gen_cycle(5);
    CHECK(split_word_by_components(c5, {0, 1, 0}) == Word{0, 1, 0});

    // K2 + isolated vertex 2
    Graph g2 = edges_of(3, {{0, 1}});
    Word r2 = split_word_by_components(g2, {0, 1, 0, 2});
    CHECK(apply_word(g2, r2) == apply_word(g2, Word{0, 1, 0, 2}));
    CHECK((r2 == Word{0, 1, 0, 2} || r2 == Word{2, 0, 1, 0}));

    CHECK_THROWS_AS(split_word_by_components(c5, Word{0, 2, 0}), Error);

    std::mt19937 rng(888);
    for (int t = 0; t < 300; t++) {
        int n = 2 + rng() % 7;
        Graph g = random_graph(rng, n, 0.3);
        Word s;
        int len = rng() % 10;
        for (int i = 0; i < len; i++) s.push_back(rng() % n);
        Word r = reduce_word(g, s);
        Word sp = split_word_by_components(g, r);
        REQUIRE(is_reduced(g, sp));
        REQUIRE(apply_word(g, sp) == apply_word(g, r));
        uint64_t support = 0;
        for (int u : sp) support |= 1ULL << u;
        auto comps = components(g, support);
        auto blocks = *parse_reduced(g, sp);
        std::vector<int> comp_of_block;
        for (const Block& b : blocks)
            for (size_t c = 0; c < comps.size(); c++)
                if (comps[c] & (1ULL << b.u)) comp_of_block.push_back(static_cast<int>(c));
        for (size_t i = 0; i + 1 < blocks.size(); i++) {
            if (comp_of_block[i] != comp_of_block[i + 1]) continue;
            bool single_after_bracket = blocks[i].is_bracket() && !blocks[i + 1].is_bracket();
            REQUIRE_FALSE(single_after_bracket);
        }
    }
}

TEST_CASE("complementation class enumeration") {
    CHECK(enumerate_complementation_class(gen_complete(1), false).reps.size() == 1);
    CHECK(enumerate_complementation_class(gen_complete(2), false).reps.size() == 1);

    Orbit k3 = enumerate_complementation_class(gen_complete(3), true);
    CHECK(k3.labeled->size() == 4);
    CHECK(k3.reps.size() == 2);

    Budget tiny{3};
    CHECK_THROWS_AS(enumerate_complementation_class(gen_cycle(6), true, tiny), Error);

    // parallel expansion is byte-identical
    Budget b;
    Graph c7 = gen_cycle(7);
    Orbit seq = enumerate_complementation_class(c7, false, b, 1);
    Orbit par = enumerate_complementation_class(c7, false, b, 3);
    REQUIRE(seq.reps.size() == par.reps.size());
    for (size_t i = 0; i < seq.reps.size(); i++) {
        CHECK(seq.reps[i].first == par.reps[i].first);
        CHECK(seq.reps[i].second == par.reps[i].second);
    }
}

TEST_CASE("complementation diameter examples") {
    CHECK(complementation_diameter(gen_complete(1)) == 0);
    CHECK(complementation_diameter(gen_complete(3)) == 2);
}

TEST_CASE("diameter bound on all connected graphs up to 5 vertices") {
    for (int n = 1; n <= 5; n++) {
        std::set<CanonKey> seen;
        for (const Graph& g : all_connected_graphs(n)) {
            if (!seen.insert(canonical_form(g)).second) continue;
            int d = complementation_diameter(g);
            int bound = std::max(n + 1, (10 * n + 8) / 9);
            REQUIRE(d <= bound);
        }
    }
}

TEST_CASE("complement reachability") {
    CHECK(complement_reachable(gen_cycle(5)));
    CHECK_FALSE(complement_reachable(gen_complete(4)));
    CHECK(complement_reachable(gen_paley(13)));
    CHECK_FALSE(complement_reachable(gen_paley(17)));
    CHECK(complement_reachable(gen_complete(1)));

    // BFS oracle agreement on small graphs
    std::mt19937 rng(4242);
    for (int t = 0; t < 60; t++) {
        int n = 1 + rng() % 6;
        Graph g = random_graph(rng, n, 0.5);
        CHECK(complement_reachable(g) == complement_reachable_bfs(g));
    }
    CHECK(complement_reachable_bfs(gen_paley(5)));
}
