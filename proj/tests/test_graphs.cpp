#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "rsh/graph.hpp"
#include "rsh/selfcheck.hpp"

using namespace rsh;

TEST_CASE("make_graph rejects loops and duplicates") {
    CHECK_THROWS(make_graph(3, {{0, 0}}));
    CHECK_THROWS(make_graph(3, {{0, 1}, {1, 0}}));
    CHECK_THROWS(make_graph(2, {{0, 2}}));
}

TEST_CASE("gloc: vertex and edge counts match the construction") {
    GlocInstance inst = gen_gloc(4, 16);
    CHECK(inst.graph.n == 16);
    CHECK(inst.graph.m() == 21); // 2(2r-3) + 4 + 1 + (n-2r-2)
    CHECK(inst.graph.m() == inst.graph.n + 2 * 4 - 3);
    CHECK(inst.graph.connected());
}

TEST_CASE("gloc: t_opt has one extra leaf and differs by 4(r-1) edges") {
    GlocInstance inst = gen_gloc(4, 16);
    CHECK(leaf_count(inst.t_opt) - leaf_count(inst.t_lopt) == 1);
    CHECK(inst.t_lopt.edge_bits.hamming(inst.t_opt.edge_bits) == 4 * (4 - 1));
}

TEST_CASE("gloc: parameter validation") {
    CHECK_THROWS(gen_gloc(2, 10));
    CHECK_THROWS(gen_gloc(4, 10)); // needs n >= 2r+3
    CHECK_NOTHROW(gen_gloc(3, 9));
}

TEST_CASE("complete bipartite") {
    Graph k11 = gen_complete_bipartite(1, 1);
    CHECK(k11.n == 2);
    CHECK(k11.m() == 1);

    Graph k23 = gen_complete_bipartite(2, 3);
    CHECK(k23.n == 5);
    CHECK(k23.m() == 6);
}

TEST_CASE("leaf_count on canonical trees") {
    Graph path = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(leaf_count(bfs_tree(path)) == 2);

    Graph star = make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    CHECK(leaf_count(bfs_tree(star)) == 5);
}

TEST_CASE("leaf cache equals an independent degree scan on gloc trees") {
    GlocInstance inst = gen_gloc(4, 16);
    std::vector<int> degree(inst.graph.n, 0);
    for (int e = 0; e < inst.graph.m(); ++e)
        if (inst.t_lopt.edge_bits.test(e)) {
            ++degree[inst.graph.edges[e].first];
            ++degree[inst.graph.edges[e].second];
        }
    int leaves = 0;
    for (int d : degree)
        if (d == 1) ++leaves;
    CHECK(leaves == leaf_count(inst.t_lopt));
    CHECK(degree == inst.t_lopt.degree);
}

TEST_CASE("wilson: tree input returns that tree") {
    Graph path = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    RngStream rng(1, 0);
    CHECK(random_spanning_tree(path, rng).edge_ids() == std::vector<int>{0, 1, 2});
}

TEST_CASE("wilson: uniform over the four trees of C_4") {
    Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    RngStream rng(7, 0);
    std::map<std::vector<int>, int> freq;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) freq[random_spanning_tree(c4, rng).edge_ids()]++;
    CHECK(freq.size() == 4);
    for (const auto& [tree, count] : freq)
        CHECK(std::abs(count / static_cast<double>(draws) - 0.25) < 0.01);
}

TEST_CASE("wilson: all 16 trees of K_4 appear") {
    Graph k4 = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    RngStream rng(8, 0);
    std::set<std::vector<int>> seen;
    for (int i = 0; i < 100000; ++i) seen.insert(random_spanning_tree(k4, rng).edge_ids());
    CHECK(seen.size() == 16); // Cayley: 4^{4-2}
}

TEST_CASE("fundamental cycle on C_4") {
    Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    SpanningTree t = SpanningTree::from_edges(c4, {0, 1, 2});
    auto cycle = fundamental_cycle(c4, t, 3);
    CHECK(cycle.size() == 4);
    CHECK(std::find(cycle.begin(), cycle.end(), 3) != cycle.end());
    CHECK_THROWS(fundamental_cycle(c4, t, 1)); // tree edge
}

TEST_CASE("fundamental cycle matches brute-force search on random graphs") {
    RngStream rng(9, 0);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = gen_random_connected(4 + rng.next_below(5), 0.4, rng);
        SpanningTree t = random_spanning_tree(g, rng);
        for (int e = 0; e < g.m(); ++e) {
            if (t.edge_bits.test(e)) continue;
            auto cycle = fundamental_cycle(g, t, e);
            CHECK(std::find(cycle.begin(), cycle.end(), e) != cycle.end());
            // the cycle's edges form a closed walk: every touched vertex has
            // degree exactly 2 within the cycle
            std::map<int, int> deg;
            for (int ce : cycle) {
                deg[g.edges[ce].first]++;
                deg[g.edges[ce].second]++;
            }
            for (const auto& [v, d] : deg) CHECK(d == 2);
            // swap property: cycle minus any edge plus e is a spanning tree
            for (int remove : cycle) {
                if (remove == e) continue;
                Bitset bits = t.edge_bits;
                bits.set(e);
                bits.reset(remove);
                CHECK(is_spanning_tree(g, bits));
            }
        }
    }
}

TEST_CASE("graph text format round-trips with comments") {
    GlocInstance inst = gen_gloc(3, 9);
    std::ostringstream os;
    write_graph(os, inst.graph, "gloc r=3 n=9");
    std::istringstream is(os.str());
    Graph back = read_graph(is);
    CHECK(back.n == inst.graph.n);
    CHECK(back.edges == inst.graph.edges);
}

TEST_CASE("gen_random_connected output is connected and simple") {
    RngStream rng(10, 0);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = gen_random_connected(2 + rng.next_below(12), 0.2, rng);
        CHECK(g.connected());
    }
}
