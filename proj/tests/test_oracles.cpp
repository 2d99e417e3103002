#include <doctest.h>

#include <cmath>

#include "rsh/oracles.hpp"
#include "rsh/selfcheck.hpp"

using namespace rsh;

TEST_CASE("vertex cover oracle on canonical instances") {
    CHECK(brute_min_vertex_cover(make_graph(2, {{0, 1}})).optimum == 1);
    CHECK(brute_min_vertex_cover(make_graph(3, {{0, 1}, {1, 2}, {0, 2}})).optimum == 2);
    for (int a = 1; a <= 5; ++a)
        for (int b = a; b <= 5; ++b)
            CHECK(brute_min_vertex_cover(gen_complete_bipartite(a, b)).optimum == a);
    CHECK_THROWS(brute_min_vertex_cover(gen_complete_bipartite(13, 13)));
}

TEST_CASE("vertex cover oracle collects exactly the optimal covers") {
    Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto res = brute_min_vertex_cover(c4);
    CHECK(res.optimum == 2);
    CHECK(res.witnesses.size() == 2); // {0,2} and {1,3}
}

TEST_CASE("max leaf oracle on canonical instances") {
    for (int n = 4; n <= 8; ++n) {
        std::vector<std::pair<int, int>> cycle;
        for (int i = 0; i < n; ++i) cycle.emplace_back(i, (i + 1) % n);
        CHECK(brute_max_leaf_tree(make_graph(n, cycle)).optimum == 2);
    }
    Graph star = make_graph(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}});
    CHECK(brute_max_leaf_tree(star).optimum == 6);

    GlocInstance inst = gen_gloc(3, 9);
    CHECK(brute_max_leaf_tree(inst.graph).optimum == leaf_count(inst.t_opt));
}

TEST_CASE("max leaf oracle matches spanning tree enumeration on small graphs") {
    RngStream rng(62, 0);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = gen_random_connected(5 + rng.next_below(3), 0.35, rng);
        int best = 0;
        for (const auto& ids : selfcheck::all_spanning_trees(g))
            best = std::max(best, leaf_count(SpanningTree::from_edges(g, ids)));
        CHECK(brute_max_leaf_tree(g).optimum == best);
    }
}

TEST_CASE("held-karp on canonical instances") {
    PointSet tri = PointSet::create({{0, 0}, {8, 1}, {3, 7}}, 16);
    double perimeter = tri.dist(0, 1) + tri.dist(1, 2) + tri.dist(2, 0);
    CHECK(held_karp(tri).optimum == doctest::Approx(perimeter));

    PointSet quad = PointSet::create({{0, 0}, {10, 1}, {9, 11}, {1, 10}}, 16);
    double hull_cost = 0;
    for (std::size_t i = 0; i < quad.hull().size(); ++i)
        hull_cost +=
            quad.dist(quad.hull()[i], quad.hull()[(i + 1) % quad.hull().size()]);
    CHECK(held_karp(quad).optimum == doctest::Approx(hull_cost));
}

TEST_CASE("held-karp equals full enumeration on random n=8 instances") {
    RngStream rng(63, 0);
    for (int trial = 0; trial < 8; ++trial) {
        PointSet ps = gen_inner_instance(8, 2, 64, rng);
        auto res = held_karp(ps);
        CHECK(res.optimum == doctest::Approx(selfcheck::tsp_enum_opt(ps)).epsilon(1e-12));
        CHECK(tour_cost(ps, res.witness) == doctest::Approx(res.optimum));
    }
}

TEST_CASE("held-karp rejects oversized instances") {
    RngStream rng(64, 0);
    PointSet ps = gen_inner_instance(10, 2, 64, rng);
    CHECK_THROWS(held_karp(ps, 9));
}

TEST_CASE("submodular oracle on canonical instances") {
    auto cov = make_coverage_fn({{0, 1}, {1, 2}, {3}}, 4);
    auto unconstrained = make_uniform_matroid(3, 3);
    std::vector<const Matroid*> ms{unconstrained.get()};
    Bitset all(3);
    for (int i = 0; i < 3; ++i) all.set(i);
    CHECK(brute_submodular_opt(*cov, ms).optimum == doctest::Approx(cov->eval(all)));

    auto r1 = make_uniform_matroid(3, 1);
    std::vector<const Matroid*> ms1{r1.get()};
    CHECK(brute_submodular_opt(*cov, ms1).optimum == doctest::Approx(2.0)); // best single set

    // cut on C_5 under a rank-2 uniform matroid: exhaustive cross-check
    Graph c5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    auto cut = make_cut_fn(c5);
    auto r2 = make_uniform_matroid(5, 2);
    std::vector<const Matroid*> ms2{r2.get()};
    double expect = 0;
    for (std::uint32_t mask = 0; mask < 32; ++mask) {
        if (std::popcount(mask) > 2) continue;
        Bitset x(5);
        for (int i = 0; i < 5; ++i)
            if ((mask >> i) & 1u) x.set(i);
        expect = std::max(expect, cut->eval(x));
    }
    CHECK(brute_submodular_opt(*cut, ms2).optimum == doctest::Approx(expect));
}

TEST_CASE("oracle size caps throw instead of approximating") {
    auto lin = make_linear_fn(std::vector<double>(25, 1.0));
    auto m = make_uniform_matroid(25, 3);
    std::vector<const Matroid*> ms{m.get()};
    CHECK_THROWS(brute_submodular_opt(*lin, ms));
}
