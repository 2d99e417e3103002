#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>

#include "rsh/oracles.hpp"
#include "rsh/selfcheck.hpp"
#include "rsh/tsp.hpp"

using namespace rsh;

namespace {

PointSet unit_square() {
    return PointSet::create({{0, 0}, {10, 1}, {9, 11}, {1, 10}}, 16);
}

Tour tour_of(std::vector<int> perm) { return Tour{std::move(perm)}; }

} // namespace

TEST_CASE("point set validation rejects duplicates and collinear triples") {
    CHECK_THROWS(PointSet::create({{0, 0}, {0, 0}, {1, 3}}, 8));
    CHECK_THROWS(PointSet::create({{0, 0}, {1, 1}, {3, 3}}, 8));
    CHECK_THROWS(PointSet::create({{0, 0}, {1, 2}}, 8));
    CHECK_NOTHROW(PointSet::create({{0, 0}, {5, 1}, {2, 7}}, 8));
}

TEST_CASE("hull is counterclockwise and inner points are identified") {
    PointSet ps = PointSet::create({{0, 0}, {12, 1}, {11, 13}, {1, 12}, {6, 5}}, 16);
    CHECK(ps.hull().size() == 4);
    CHECK(ps.inner() == std::vector<int>{4});
    // counterclockwise: consecutive hull triples turn left
    const auto& h = ps.hull();
    for (std::size_t i = 0; i < h.size(); ++i) {
        const Pt& a = ps.point(h[i]);
        const Pt& b = ps.point(h[(i + 1) % h.size()]);
        const Pt& c = ps.point(h[(i + 2) % h.size()]);
        CHECK(orientation(a, b, c) > 0);
    }
    CHECK(h[0] == 0); // lexicographically smallest point first
}

TEST_CASE("tour cost on the unit square in boundary order") {
    PointSet sq = PointSet::create({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, 4);
    CHECK(tour_cost(sq, tour_of({0, 1, 2, 3})) == doctest::Approx(4.0));
}

TEST_CASE("tour cost is invariant under cyclic rotation") {
    PointSet ps = unit_square();
    RngStream rng(31, 0);
    for (int trial = 0; trial < 50; ++trial) {
        Tour t = random_tour(4, rng);
        Tour rotated = t;
        std::rotate(rotated.perm.begin(), rotated.perm.begin() + 1, rotated.perm.end());
        CHECK(tour_cost(ps, t) == doctest::Approx(tour_cost(ps, rotated)));
    }
}

TEST_CASE("inversion applies the definition") {
    Tour t = tour_of({1, 2, 3, 4, 5});
    // positions 2..4 in the chapter's 1-based indexing
    CHECK(inversion(t, 1, 3).perm == std::vector<int>{1, 4, 3, 2, 5});
    CHECK_THROWS(inversion(t, 3, 3));
    CHECK_THROWS(inversion(t, -1, 2));
}

TEST_CASE("inversion is an involution and full reversal preserves cost") {
    PointSet ps = unit_square();
    RngStream rng(32, 0);
    for (int trial = 0; trial < 100; ++trial) {
        Tour t = random_tour(4, rng);
        int i = static_cast<int>(rng.next_below(3));
        int j = i + 1 + static_cast<int>(rng.next_below(3 - i));
        CHECK(inversion(inversion(t, i, j), i, j) == t);
        CHECK(tour_cost(ps, inversion(t, 0, 3)) == doctest::Approx(tour_cost(ps, t)));
    }
}

TEST_CASE("jump applies the definition and inverts") {
    Tour t = tour_of({1, 2, 3, 4, 5});
    CHECK(jump(t, 1, 3).perm == std::vector<int>{1, 3, 4, 2, 5});
    CHECK(jump(jump(t, 1, 3), 3, 1) == t);
    CHECK_THROWS(jump(t, 2, 2));
}

TEST_CASE("adjacent jump equals adjacent inversion") {
    RngStream rng(33, 0);
    for (int trial = 0; trial < 50; ++trial) {
        Tour t = random_tour(5, rng);
        const int j = 1 + static_cast<int>(rng.next_below(4));
        CHECK(jump(t, j - 1, j) == inversion(t, j - 1, j));
    }
}

TEST_CASE("mutate_2opt: probability of exactly one inversion is 1/e") {
    // count runs whose op count was 1 by checking against a parallel stream
    RngStream rng(34, 0);
    const int draws = 1000000;
    int singles = 0;
    for (int i = 0; i < draws; ++i)
        if (poisson_plus_one(rng) == 1) ++singles;
    CHECK(static_cast<double>(singles) / draws ==
          doctest::Approx(std::exp(-1.0)).epsilon(0.0136));
}

TEST_CASE("mutate_mixed: fair coin branch") {
    RngStream rng(35, 0);
    const int draws = 1000000;
    int jumps = 0;
    for (int i = 0; i < draws; ++i)
        if (!(rng.next_double() < 0.5)) ++jumps;
    CHECK(static_cast<double>(jumps) / draws == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("single-op one-step outcome distribution is uniform over pairs") {
    // condition on one inversion; the resulting tour determines the pair
    // (i, j) uniquely for n = 6 distinct-neighbor tours
    const int n = 6;
    RngStream rng(36, 0);
    Tour base = tour_of({0, 1, 2, 3, 4, 5});
    std::map<std::vector<int>, int> freq;
    int singles = 0;
    const int draws = 200000;
    for (int d = 0; d < draws; ++d) {
        RngStream probe = rng;
        if (probe.poisson1() != 0) { // mutate uses s+1 ops; s=0 means one op
            rng = probe;
            continue;
        }
        Tour y = mutate_2opt(base, rng);
        freq[y.perm]++;
        ++singles;
    }
    const double uniform = 1.0 / 15; // C(6,2) pairs
    CHECK(freq.size() == 15);
    for (const auto& [perm, count] : freq) {
        CHECK(static_cast<double>(count) / singles ==
              doctest::Approx(uniform).epsilon(0.08));
        // each distinct move is at least as likely as the k^-2 floor
        CHECK(static_cast<double>(count) / singles >= 1.0 / (n * n));
    }
}

TEST_CASE("count_crossings: convex order has none, bowtie has one") {
    PointSet sq = PointSet::create({{0, 0}, {10, 1}, {9, 11}, {1, 10}}, 16);
    // hull order = 0,1,2,3
    CHECK(count_crossings(sq, tour_of({0, 1, 2, 3})) == 0);
    CHECK(count_crossings(sq, tour_of({0, 1, 3, 2})) == 1); // bowtie
}

TEST_CASE("count_crossings matches the rational-arithmetic oracle") {
    RngStream rng(37, 0);
    for (int trial = 0; trial < 40; ++trial) {
        PointSet ps = gen_inner_instance(8, 2, 32, rng);
        for (int t = 0; t < 25; ++t) {
            Tour tour = random_tour(8, rng);
            CHECK(count_crossings(ps, tour) ==
                  selfcheck::count_crossings_rational(ps, tour));
        }
    }
}

TEST_CASE("angle_bound: equilateral-like triangle has a_eps 0") {
    // exact equilateral impossible on a grid; use d_max == d_min isoceles:
    // right isoceles has d_max != d_min, so build via the formula instead
    PointSet tri = PointSet::create({{0, 0}, {4, 0}, {2, 3}}, 8);
    AngleBound ab = angle_bound(tri);
    // sides: 4, sqrt(13), sqrt(13): a_eps = (4/sqrt(13)... just check shape
    CHECK(ab.epsilon > 0);
    CHECK(ab.a_eps >= 0);

    // hand-computed 4-point instance
    PointSet sq = PointSet::create({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, 4);
    AngleBound sq_ab = angle_bound(sq);
    // smallest angle among triples of a unit square is 45 degrees
    CHECK(sq_ab.epsilon == doctest::Approx(std::numbers::pi / 4).epsilon(1e-9));
    // d_max/d_min = sqrt(2): a_eps = (sqrt(2)-1) cos(pi/4)/(1-cos(pi/4))
    const double c = std::cos(std::numbers::pi / 4);
    CHECK(sq_ab.a_eps ==
          doctest::Approx((std::sqrt(2.0) - 1.0) * c / (1.0 - c)).epsilon(1e-9));
}

TEST_CASE("angle_bound: d_max == d_min makes a_eps vanish") {
    // any pair-equidistant set: use a 3-point set with equal side lengths
    // impossible exactly on grid; verify factor analytically instead
    AngleBound ab;
    ab.epsilon = 0.3;
    ab.d_min = 5.0;
    ab.d_max = 5.0;
    const double c = std::cos(ab.epsilon);
    ab.a_eps = (ab.d_max / ab.d_min - 1.0) * (c / (1.0 - c));
    CHECK(ab.a_eps == doctest::Approx(0.0));
}

TEST_CASE("grid instances: a_eps stays at or below the m^5 budget") {
    RngStream rng(38, 0);
    for (int m : {8, 16}) {
        for (int trial = 0; trial < 5; ++trial) {
            PointSet ps = gen_inner_instance(8, 2, m, rng);
            AngleBound ab = angle_bound(ps);
            CHECK(ab.a_eps <= std::pow(static_cast<double>(m), 5.0));
        }
    }
}

TEST_CASE("run_rls: convex instances solved with crossings hitting zero first") {
    RngStream gen(39, 0);
    for (int trial = 0; trial < 10; ++trial) {
        PointSet ps = gen_convex_instance(10, 64, gen);
        const double target = held_karp(ps).optimum;
        RngStream rng(900, trial);
        TspOptions opts;
        opts.target_cost = target;
        opts.audit_crossings = true;
        TspResult res = run_rls(ps, Budget{1000000}, rng, opts);
        REQUIRE(res.trajectory.success());
        CHECK(res.t_crossing_free >= 0);
        CHECK(res.t_crossing_free <= static_cast<std::int64_t>(*res.trajectory.hit_time));
        CHECK(count_crossings(ps, res.best) == 0);
    }
}

TEST_CASE("run_rls cost trajectory is non-increasing") {
    RngStream gen(40, 0);
    PointSet ps = gen_inner_instance(9, 2, 64, gen);
    RngStream rng(901, 0);
    TspResult res = run_rls(ps, Budget{5000}, rng);
    for (std::size_t i = 1; i < res.trajectory.best_history.size(); ++i)
        CHECK(res.trajectory.best_history[i].second <
              res.trajectory.best_history[i - 1].second);
}

TEST_CASE("run_mu_lambda: k=2 instances solved by mixed mutation") {
    RngStream gen(41, 0);
    int successes = 0;
    const int trials = 10;
    for (int trial = 0; trial < trials; ++trial) {
        PointSet ps = gen_inner_instance(10, 2, 64, gen);
        const double target = held_karp(ps).optimum;
        RngStream rng(902, trial);
        TspOptions opts;
        opts.target_cost = target;
        TspResult res =
            run_mu_lambda(ps, 1, 1, TspMutation::mixed, Budget{10000000}, rng, opts);
        if (res.trajectory.success()) ++successes;
    }
    CHECK(successes == trials);
}

TEST_CASE("held-karp optimal tours visit hull points in cyclic hull order") {
    RngStream gen(42, 0);
    for (int trial = 0; trial < 10; ++trial) {
        PointSet ps = gen_inner_instance(7, 2, 64, gen);
        const double opt = held_karp(ps).optimum;
        // enumerate all optimal tours and check gamma order cyclically
        std::vector<int> perm(ps.n());
        for (int i = 0; i < ps.n(); ++i) perm[i] = i;
        std::vector<int> hull_rank(ps.n(), -1);
        for (std::size_t i = 0; i < ps.hull().size(); ++i)
            hull_rank[ps.hull()[i]] = static_cast<int>(i);
        const int h = static_cast<int>(ps.hull().size());
        do {
            Tour t{perm};
            if (tour_cost(ps, t) > opt + 1e-9) continue;
            std::vector<int> ranks;
            for (int v : perm)
                if (hull_rank[v] >= 0) ranks.push_back(hull_rank[v]);
            // cyclic sequence must be a rotation of 0..h-1 forward or backward
            int start = static_cast<int>(
                std::find(ranks.begin(), ranks.end(), 0) - ranks.begin());
            bool forward = true, backward = true;
            for (int i = 0; i < h; ++i) {
                if (ranks[(start + i) % h] != i) forward = false;
                if (ranks[(start + h - i) % h] != i) backward = false;
            }
            CHECK((forward || backward));
        } while (std::next_permutation(perm.begin() + 1, perm.end()));
    }
}
