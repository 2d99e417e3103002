#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "rsh/oracles.hpp"
#include "rsh/selfcheck.hpp"
#include "rsh/vertex_cover.hpp"

using namespace rsh;

namespace {

Bitset bits_of(int n, std::initializer_list<int> ones) {
    Bitset b(n);
    for (int v : ones) b.set(v);
    return b;
}

} // namespace

TEST_CASE("uncovered counts") {
    Graph k23 = gen_complete_bipartite(2, 3);
    Bitset all(k23.n), none(k23.n);
    for (int v = 0; v < k23.n; ++v) all.set(v);
    CHECK(uncovered(k23, all) == 0);
    CHECK(uncovered(k23, none) == k23.m());
    CHECK(uncovered(k23, bits_of(k23.n, {0, 1})) == 0); // the 2-side covers all
}

TEST_CASE("lp_value: covers give zero, known closed forms") {
    Graph triangle = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    Bitset none(3);
    CHECK(twice_lp_value(triangle, none) == 3); // 3/2
    CHECK(lp_value(triangle, none) == doctest::Approx(1.5));
    CHECK(twice_lp_value(triangle, bits_of(3, {0, 1})) == 0);

    for (int a = 1; a <= 4; ++a)
        for (int b = a; b <= 4; ++b) {
            Graph kab = gen_complete_bipartite(a, b);
            Bitset zero(kab.n);
            CHECK(twice_lp_value(kab, zero) == 2 * std::min(a, b));
        }
}

TEST_CASE("lp_value equals the half-integral brute force on all connected graphs n<=5") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : selfcheck::all_connected_graphs(n)) {
            Bitset zero(g.n);
            CHECK(twice_lp_value(g, zero) == selfcheck::twice_lp_bruteforce(g, zero));
        }
}

TEST_CASE("lp_value matches brute force with nonempty x on random graphs") {
    RngStream rng(21, 0);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = gen_random_connected(5 + rng.next_below(3), 0.35, rng);
        Bitset x(g.n);
        for (int v = 0; v < g.n; ++v)
            if (rng.bernoulli(0.3)) x.set(v);
        CHECK(twice_lp_value(g, x) == selfcheck::twice_lp_bruteforce(g, x));
    }
}

TEST_CASE("half-integrality and the sandwich bounds against brute-force cover") {
    RngStream rng(22, 0);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = gen_random_connected(4 + rng.next_below(5), 0.4, rng);
        Bitset zero(g.n);
        const int twice = twice_lp_value(g, zero);
        const int opt = brute_min_vertex_cover(g).optimum;
        CHECK(twice <= 2 * opt);      // LP lower-bounds the ILP
        CHECK(2 * opt <= 2 * twice);  // min cover <= 2 LP
    }
}

TEST_CASE("nt_split: single edge is all-half") {
    Graph e = make_graph(2, {{0, 1}});
    NtSplit s = nt_split(e);
    CHECK(s.p0.empty());
    CHECK(s.p1.empty());
    CHECK(s.half.size() == 2);
}

TEST_CASE("nt_split: star center is P1, leaves are P0") {
    Graph star = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    NtSplit s = nt_split(star);
    CHECK(s.p1 == std::vector<int>{0});
    CHECK(s.p0 == std::vector<int>{1, 2, 3, 4});
    CHECK(s.half.empty());
}

TEST_CASE("nt_split: value matches lp and some optimal cover respects the split") {
    RngStream rng(23, 0);
    for (int trial = 0; trial < 80; ++trial) {
        Graph g = gen_random_connected(3 + rng.next_below(6), 0.35, rng);
        NtSplit s = nt_split(g);
        Bitset zero(g.n);
        CHECK(2 * static_cast<int>(s.p1.size()) + static_cast<int>(s.half.size()) ==
              twice_lp_value(g, zero));
        auto oracle = brute_min_vertex_cover(g);
        bool found = false;
        for (const Bitset& cover : oracle.witnesses) {
            bool ok = true;
            for (int v : s.p1)
                if (!cover.test(v)) ok = false;
            for (int v : s.p0)
                if (cover.test(v)) ok = false;
            if (ok) found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("alt_mutation: behaves as standard mutation on a cover") {
    Graph k4 = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    Bitset cover = bits_of(4, {0, 1, 2});
    REQUIRE(uncovered(k4, cover) == 0);
    // S(x) empty: identical byte stream consumption as standard mutation
    RngStream a(24, 0), b(24, 0);
    a.bernoulli(0.5); // alt_mutation draws the branch coin first
    for (int i = 0; i < 200; ++i) {
        Bitset ya = alt_mutation(k4, cover, b);
        Bitset yb = standard_mutation(k4, cover, a);
        CHECK(ya == yb);
        a.bernoulli(0.5);
    }
}

TEST_CASE("alt_mutation high branch: expected flips in S is |S|/2") {
    Graph k4 = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    Bitset empty(4);
    auto s = uncovered_incident(k4, empty);
    REQUIRE(s.size() == 4);
    RngStream rng(25, 0);
    const int draws = 100000;
    std::uint64_t flips = 0;
    for (int i = 0; i < draws; ++i)
        flips += empty.hamming(alt_mutation_high(k4, empty, rng, s));
    CHECK(static_cast<double>(flips) / draws == doctest::Approx(2.0).epsilon(0.025));
}

TEST_CASE("alt_mutation offspring distribution on P_3 matches the exact mixture") {
    // path 0-1-2, x = 0: S(x) = {0,1,2}; mixture = 1/2 standard(1/3 flips)
    // + 1/2 high-rate (1/2 flips), bits independent
    Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
    Bitset x(3);
    auto exact = [](int mask) {
        double std_p = 1.0, high_p = 1.0;
        for (int b = 0; b < 3; ++b) {
            const bool flip = (mask >> b) & 1;
            std_p *= flip ? 1.0 / 3 : 2.0 / 3;
            high_p *= 0.5;
        }
        return 0.5 * std_p + 0.5 * high_p;
    };
    RngStream rng(26, 0);
    const int draws = 200000;
    std::map<int, int> freq;
    for (int i = 0; i < draws; ++i) {
        Bitset y = alt_mutation(p3, x, rng);
        int mask = 0;
        for (int b = 0; b < 3; ++b)
            if (y.test(b)) mask |= 1 << b;
        freq[mask]++;
    }
    for (int mask = 0; mask < 8; ++mask)
        CHECK(static_cast<double>(freq[mask]) / draws ==
              doctest::Approx(exact(mask)).epsilon(0.08));
}

TEST_CASE("semo_update: insertion semantics") {
    VcArchive archive;
    VcVector v1{4, 6, true, true};
    CHECK(archive.update(bits_of(4, {0, 1}), v1));
    CHECK(archive.size() == 1);

    // equal vector replaces the member
    Bitset other = bits_of(4, {2, 3});
    CHECK(archive.update(other, v1));
    CHECK(archive.size() == 1);
    CHECK(archive.members().begin()->second.solution == other);

    // strictly dominated candidate rejected
    CHECK_FALSE(archive.update(bits_of(4, {0, 1, 2}), VcVector{6, 6, true, true}));
    // dominating candidate evicts
    CHECK(archive.update(bits_of(4, {0}), VcVector{2, 4, true, true}));
    CHECK(archive.size() == 1);
}

TEST_CASE("semo_update: random insert sequences match the brute-force pareto filter") {
    RngStream rng(27, 0);
    for (int trial = 0; trial < 100; ++trial) {
        VcArchive archive;
        std::vector<std::pair<long long, long long>> inserted;
        const int inserts = 1 + static_cast<int>(rng.next_below(200));
        for (int i = 0; i < inserts; ++i) {
            VcVector v;
            v.a = static_cast<long long>(rng.next_below(5));
            v.b = static_cast<long long>(rng.next_below(5));
            archive.update(Bitset(4), v);
            inserted.emplace_back(v.a, v.b);
        }
        std::vector<std::pair<long long, long long>> expect;
        for (auto idx : selfcheck::non_dominated_indices(inserted))
            expect.push_back(inserted[idx]);
        std::sort(expect.begin(), expect.end());
        expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
        std::vector<std::pair<long long, long long>> got;
        for (const auto& [key, entry] : archive.members())
            got.emplace_back(entry.value.a, entry.value.b);
        CHECK(got == expect);
        CHECK(archive.pairwise_non_dominated());
    }
}

TEST_CASE("run_vc: single edge solved quickly on every seed") {
    Graph e = make_graph(2, {{0, 1}});
    for (int s = 0; s < 100; ++s) {
        RngStream rng(600, s);
        VcOptions opts;
        opts.target_cover_size = 1;
        VcResult res =
            run_vc(e, VcFitness::f1, VcMutation::standard, Budget{10000}, rng, opts);
        CHECK(res.trajectory.success());
    }
}

TEST_CASE("run_vc: archive stays within n+1 and pareto-clean; pareto line persists") {
    Graph g = gen_complete_bipartite(3, 6);
    RngStream rng(28, 0);
    VcOptions opts;
    VcResult res = run_vc(g, VcFitness::f2, VcMutation::alternative, Budget{20000}, rng, opts);
    CHECK(res.archive.size() <= static_cast<std::size_t>(g.n + 1));
    CHECK(res.archive.pairwise_non_dominated());

    // pareto-optimal members (r, LP(0)-r) are never removed once present:
    // after the run, every key on that line present in the archive must sit
    // exactly on the line (they cannot be dominated away)
    Bitset zero(g.n);
    const long long lp0 = twice_lp_value(g, zero);
    for (const auto& [key, entry] : res.archive.members()) {
        if (entry.value.b == lp0 - entry.value.a) continue; // on the line
        CHECK(entry.value.b >= lp0 - entry.value.a);        // never below it
    }
    // 0^n lies on the line, so once seen it must still be in the archive
    if (res.t_zero_n >= 0) {
        auto* zero_entry = res.archive.find_key(0);
        REQUIRE(zero_entry != nullptr);
        CHECK(zero_entry->value.b == lp0);
    }
}

TEST_CASE("run_vc: K_{3,6} with f2+alt succeeds within budget on most seeds") {
    Graph g = gen_complete_bipartite(3, 6);
    int successes = 0;
    const int seeds = 25; // acceptance covers the 100-seed version
    for (int s = 0; s < seeds; ++s) {
        RngStream rng(700, s);
        VcOptions opts;
        opts.target_cover_size = 3;
        VcResult res =
            run_vc(g, VcFitness::f2, VcMutation::alternative, Budget{1000000}, rng, opts);
        if (res.trajectory.success()) ++successes;
    }
    CHECK(successes >= 24);
}

TEST_CASE("kernel_check_f1 basics") {
    Graph star = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    auto oracle = brute_min_vertex_cover(star);
    REQUIRE(oracle.optimum == 1);

    CHECK(kernel_check_f1(star, bits_of(4, {0}), 1, oracle.witnesses));     // optimal cover
    CHECK_FALSE(kernel_check_f1(star, Bitset(4), 1, oracle.witnesses));     // center degree 3 > 1
    CHECK_FALSE(kernel_check_f1(star, bits_of(4, {1}), 1, oracle.witnesses)); // not in any opt
}

TEST_CASE("kernel_check_f1 agrees with the definition on random graphs") {
    RngStream rng(29, 0);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = gen_random_connected(4 + rng.next_below(5), 0.35, rng);
        auto oracle = brute_min_vertex_cover(g);
        Bitset x(g.n);
        for (int v = 0; v < g.n; ++v)
            if (rng.bernoulli(0.25)) x.set(v);

        bool expect_subset = false;
        for (const Bitset& cover : oracle.witnesses)
            if (x.is_subset_of(cover)) expect_subset = true;
        int max_degree = 0;
        std::vector<int> deg(g.n, 0);
        for (const auto& [u, v] : g.edges)
            if (!x.test(u) && !x.test(v)) {
                max_degree = std::max(max_degree, std::max(++deg[u], ++deg[v]));
            }
        const bool expect = expect_subset && max_degree <= oracle.optimum;
        CHECK(kernel_check_f1(g, x, oracle.optimum, oracle.witnesses) == expect);
    }
}

TEST_CASE("kernel_check_f2 examples") {
    Graph e = make_graph(2, {{0, 1}});
    CHECK(kernel_check_f2(e, Bitset(2)));

    Graph star = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_FALSE(kernel_check_f2(star, Bitset(4))); // optimum assigns 1 to the center

    // x = optimal cover on an lp-tight instance: vacuously a kernel
    Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    Bitset zero4(4);
    REQUIRE(twice_lp_value(c4, zero4) == 2 * brute_min_vertex_cover(c4).optimum);
    CHECK(kernel_check_f2(c4, bits_of(4, {0, 2})));
}
