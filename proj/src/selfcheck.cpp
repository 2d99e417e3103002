#include "rsh/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "rsh/engine.hpp"
#include "rsh/harness.hpp"
#include "rsh/mlst.hpp"
#include "rsh/oracles.hpp"
#include "rsh/pareto.hpp"
#include "rsh/submodular.hpp"
#include "rsh/tsp_fpt.hpp"
#include "rsh/vertex_cover.hpp"

namespace rsh::selfcheck {

int twice_lp_bruteforce(const Graph& g, const Bitset& x) {
    if (g.n > 14) throw std::runtime_error("lp bruteforce: too large");
    std::vector<std::pair<int, int>> residual;
    for (const auto& [u, v] : g.edges)
        if (!x.test(u) && !x.test(v)) residual.emplace_back(u, v);

    int best = 2 * g.n;
    std::vector<int> assign(g.n, 0); // half units
    for (;;) {
        bool feasible = true;
        for (const auto& [u, v] : residual)
            if (assign[u] + assign[v] < 2) {
                feasible = false;
                break;
            }
        if (feasible) best = std::min(best, std::accumulate(assign.begin(), assign.end(), 0));
        int pos = 0;
        while (pos < g.n && assign[pos] == 2) assign[pos++] = 0;
        if (pos == g.n) break;
        ++assign[pos];
    }
    return best;
}

bool segments_cross_rational(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    // solve a + t (b-a) = c + s (d-c) exactly; proper crossing iff
    // 0 < t < 1 and 0 < s < 1
    using I = __int128;
    const I rx = b.x - a.x, ry = b.y - a.y;
    const I sx = d.x - c.x, sy = d.y - c.y;
    const I denom = rx * sy - ry * sx;
    if (denom == 0) return false; // parallel
    const I qpx = c.x - a.x, qpy = c.y - a.y;
    I t_num = qpx * sy - qpy * sx;
    I s_num = qpx * ry - qpy * rx;
    I den = denom;
    if (den < 0) {
        den = -den;
        t_num = -t_num;
        s_num = -s_num;
    }
    return t_num > 0 && t_num < den && s_num > 0 && s_num < den;
}

int count_crossings_rational(const PointSet& ps, const Tour& t) {
    const int n = static_cast<int>(t.perm.size());
    int crossings = 0;
    for (int i = 0; i < n; ++i) {
        const int a = t.perm[i], b = t.perm[(i + 1) % n];
        for (int j = i + 1; j < n; ++j) {
            const int c = t.perm[j], d = t.perm[(j + 1) % n];
            if (a == c || a == d || b == c || b == d) continue;
            if (segments_cross_rational(ps.point(a), ps.point(b), ps.point(c), ps.point(d)))
                ++crossings;
        }
    }
    return crossings;
}

namespace {

// connectivity by walking edges only (deliberately not union-find)
bool spans_by_walk(const Graph& g, const std::vector<int>& edge_ids) {
    if (static_cast<int>(edge_ids.size()) != g.n - 1) return false;
    std::vector<std::vector<int>> adj(g.n);
    for (int e : edge_ids) {
        adj[g.edges[e].first].push_back(g.edges[e].second);
        adj[g.edges[e].second].push_back(g.edges[e].first);
    }
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.n;
}

} // namespace

std::vector<std::vector<int>> all_spanning_trees(const Graph& g) {
    std::vector<std::vector<int>> trees;
    const int m = g.m();
    const int need = g.n - 1;
    if (need < 0 || need > m) return trees;
    std::vector<int> comb(need);
    for (int i = 0; i < need; ++i) comb[i] = i;
    for (;;) {
        if (spans_by_walk(g, comb)) trees.push_back(comb);
        int i = need - 1;
        while (i >= 0 && comb[i] == m - need + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < need; ++j) comb[j] = comb[j - 1] + 1;
    }
    return trees;
}

double tsp_enum_opt(const PointSet& ps) {
    const int n = ps.n();
    if (n > 9) throw std::runtime_error("tsp enumeration: too large");
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    double best = 1e300;
    // city 0 fixed first; reversal still enumerated (harmless)
    do {
        double cost = 0;
        for (int i = 0; i < n; ++i) cost += ps.dist(perm[i], perm[(i + 1) % n]);
        best = std::min(best, cost);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return best;
}

double min_interleaving_cost(const PointSet& ps, const std::vector<int>& inner_order) {
    const auto& hull = ps.hull();
    const int h = static_cast<int>(hull.size());
    const int k = static_cast<int>(inner_order.size());
    // choose the slots of the inner points among the h + k - 1 positions
    // after the fixed first hull point
    const int slots = h + k - 1;
    double best = 1e300;
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    for (;;) {
        std::vector<int> seq;
        seq.push_back(hull[0]);
        int hi = 1, ki = 0;
        for (int pos = 0; pos < slots; ++pos) {
            if (ki < k && comb[ki] == pos)
                seq.push_back(inner_order[ki++]);
            else
                seq.push_back(hull[hi++]);
        }
        double cost = 0;
        for (std::size_t i = 0; i < seq.size(); ++i)
            cost += ps.dist(seq[i], seq[(i + 1) % seq.size()]);
        best = std::min(best, cost);
        if (k == 0) break;
        int i = k - 1;
        while (i >= 0 && comb[i] == slots - k + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
    return best;
}

std::vector<Graph> all_connected_graphs(int n) {
    if (n > 5) throw std::runtime_error("graph enumeration: too large");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1u) edges.push_back(pairs[i]);
        Graph g = make_graph(n, std::move(edges));
        if (g.connected()) out.push_back(std::move(g));
    }
    return out;
}

double chi_square(const std::vector<std::uint64_t>& observed,
                  const std::vector<double>& expected_probability) {
    std::uint64_t total = 0;
    for (auto c : observed) total += c;
    double stat = 0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double expected = expected_probability[i] * static_cast<double>(total);
        const double diff = static_cast<double>(observed[i]) - expected;
        stat += diff * diff / expected;
    }
    return stat;
}

std::vector<std::size_t> non_dominated_indices(
    const std::vector<std::pair<long long, long long>>& vectors) {
    // minimize both coordinates; later equal vectors replace earlier ones
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < vectors.size(); ++j) {
            if (i == j) continue;
            const bool weakly = vectors[j].first <= vectors[i].first &&
                                vectors[j].second <= vectors[i].second;
            const bool equal = vectors[j] == vectors[i];
            if (weakly && !equal) {
                dominated = true;
                break;
            }
            if (equal && j > i) { // replaced by the later copy
                dominated = true;
                break;
            }
        }
        if (!dominated) keep.push_back(i);
    }
    return keep;
}

// ---------------------------------------------------------------------------
// verify suite

namespace {

using Check = CheckResult (*)();

CheckResult check_poisson() {
    RngStream rng(20240901, 0);
    const int draws = 1000000;
    // bins for s = 0..5 plus a tail at s >= 6, all with healthy expected counts
    std::vector<std::uint64_t> counts(7, 0);
    double sum = 0;
    for (int i = 0; i < draws; ++i) {
        const int v = poisson_plus_one(rng);
        sum += v;
        counts[std::min(v - 1, 6)]++;
    }
    const double mean = sum / draws;
    std::vector<double> probs(7);
    double pmf = std::exp(-1.0), cdf = 0;
    for (int k = 0; k < 6; ++k) {
        probs[k] = pmf;
        cdf += pmf;
        pmf /= (k + 1);
    }
    probs[6] = 1.0 - cdf;
    const double stat = chi_square(counts, probs);
    const double p1 = static_cast<double>(counts[0]) / draws;
    // chi-square 0.001 critical value, 6 dof
    const bool pass = std::abs(mean - 2.0) < 0.01 && std::abs(p1 - std::exp(-1.0)) < 0.005 &&
                      stat < 22.458;
    std::ostringstream detail;
    detail << "mean=" << mean << " P(1)=" << p1 << " chi2=" << stat;
    return {"poisson-sampler", pass, detail.str()};
}

CheckResult check_lp_oracle() {
    RngStream rng(77, 1);
    int mismatches = 0, cases = 0;
    for (int n = 2; n <= 5; ++n) {
        for (const Graph& g : all_connected_graphs(n)) {
            Bitset zero(g.n);
            ++cases;
            if (twice_lp_value(g, zero) != twice_lp_bruteforce(g, zero)) ++mismatches;
        }
    }
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 6 + static_cast<int>(rng.next_below(2));
        Graph g = gen_random_connected(n, 0.3, rng);
        for (int xs = 0; xs < 3; ++xs) {
            Bitset x(g.n);
            for (int v = 0; v < g.n; ++v)
                if (xs > 0 && rng.bernoulli(0.3)) x.set(v);
            ++cases;
            if (twice_lp_value(g, x) != twice_lp_bruteforce(g, x)) ++mismatches;
        }
    }
    std::ostringstream detail;
    detail << cases << " cases, " << mismatches << " mismatches";
    return {"lp-vs-halfintegral-bruteforce", mismatches == 0, detail.str()};
}

CheckResult check_nt_property() {
    RngStream rng(78, 2);
    int violations = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 3 + static_cast<int>(rng.next_below(6));
        Graph g = gen_random_connected(n, 0.35, rng);
        NtSplit split = nt_split(g);
        auto oracle = brute_min_vertex_cover(g);
        bool found = false;
        for (const Bitset& cover : oracle.witnesses) {
            bool ok = true;
            for (int v : split.p1)
                if (!cover.test(v)) ok = false;
            for (int v : split.p0)
                if (cover.test(v)) ok = false;
            if (ok) {
                found = true;
                break;
            }
        }
        if (!found) ++violations;
    }
    return {"nemhauser-trotter-property", violations == 0,
            std::to_string(violations) + " violations over 100 graphs"};
}

CheckResult check_wilson() {
    // C_4: four spanning trees, each 1/4
    Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    RngStream rng(79, 3);
    const int draws = 100000;
    std::map<std::vector<int>, int> freq;
    for (int i = 0; i < draws; ++i) freq[random_spanning_tree(c4, rng).edge_ids()]++;
    bool pass = freq.size() == 4;
    for (const auto& [ids, count] : freq)
        if (std::abs(count / static_cast<double>(draws) - 0.25) > 0.01) pass = false;

    // K_4: Cayley 4^2 = 16 distinct trees
    Graph k4 = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    std::map<std::vector<int>, int> freq4;
    for (int i = 0; i < draws; ++i) freq4[random_spanning_tree(k4, rng).edge_ids()]++;
    if (freq4.size() != 16) pass = false;

    // a tree input returns itself
    Graph path = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    if (random_spanning_tree(path, rng).edge_ids() != std::vector<int>{0, 1, 2}) pass = false;

    std::ostringstream detail;
    detail << "C4 classes=" << freq.size() << " K4 classes=" << freq4.size();
    return {"wilson-uniformity", pass, detail.str()};
}

CheckResult check_max_leaf_lemma() {
    RngStream rng(80, 4);
    int violations = 0, cases = 0;
    auto bound_ok = [&](const Graph& g) {
        auto oracle = brute_max_leaf_tree(g);
        const int k = oracle.optimum;
        int deg3 = 0;
        for (int v = 0; v < g.n; ++v)
            if (g.degree(v) >= 3) ++deg3;
        ++cases;
        if (g.m() > g.n + 5 * k * k - 7 * k) return false;
        if (deg3 > 10 * k - 14) return false;
        return true;
    };
    for (int n = 3; n <= 5; ++n)
        for (const Graph& g : all_connected_graphs(n))
            if (!bound_ok(g)) ++violations;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 6 + static_cast<int>(rng.next_below(2));
        if (!bound_ok(gen_random_connected(n, 0.35, rng))) ++violations;
    }
    std::ostringstream detail;
    detail << cases << " graphs, " << violations << " violations";
    return {"max-leaf-lemma-bounds", violations == 0, detail.str()};
}

CheckResult check_tree_mutation_closure() {
    RngStream rng(81, 5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 4 + static_cast<int>(rng.next_below(17));
        Graph g = gen_random_connected(n, 0.3, rng);
        SpanningTree t = bfs_tree(g);
        for (int i = 0; i < 500; ++i) {
            t = tree_mutation(t, g, rng);
            if (!is_spanning_tree(g, t.edge_bits))
                return {"tree-mutation-closure", false, "non-tree produced"};
        }
    }
    return {"tree-mutation-closure", true, "100000 mutations, all trees"};
}

CheckResult check_semo_update() {
    RngStream rng(82, 6);
    for (int trial = 0; trial < 200; ++trial) {
        ParetoArchive<int, long long> archive;
        std::vector<std::pair<long long, long long>> inserted;
        const int inserts = 1 + static_cast<int>(rng.next_below(200));
        for (int i = 0; i < inserts; ++i) {
            ObjVec<long long> v;
            v.a = static_cast<long long>(rng.next_below(5));
            v.b = static_cast<long long>(rng.next_below(5));
            archive.update(i, v);
            inserted.emplace_back(v.a, v.b);
        }
        // final archive vectors must equal the brute-force non-dominated set
        std::vector<std::pair<long long, long long>> expect;
        for (std::size_t idx : non_dominated_indices(inserted)) expect.push_back(inserted[idx]);
        std::sort(expect.begin(), expect.end());
        expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
        std::vector<std::pair<long long, long long>> got;
        for (const auto& [key, entry] : archive.members())
            got.emplace_back(entry.value.a, entry.value.b);
        std::sort(got.begin(), got.end());
        if (got != expect) return {"semo-update-oracle", false, "archive mismatch"};
        if (!archive.pairwise_non_dominated())
            return {"semo-update-oracle", false, "dominated members"};
    }
    return {"semo-update-oracle", true, "200 random insert sequences"};
}

CheckResult check_crossings() {
    RngStream rng(83, 7);
    for (int trial = 0; trial < 60; ++trial) {
        PointSet ps = gen_inner_instance(8, 2, 64, rng);
        for (int t = 0; t < 20; ++t) {
            Tour tour = random_tour(ps.n(), rng);
            if (count_crossings(ps, tour) != count_crossings_rational(ps, tour))
                return {"crossings-vs-rational", false, "count mismatch"};
        }
    }
    return {"crossings-vs-rational", true, "1200 random tours agree"};
}

CheckResult check_held_karp() {
    RngStream rng(84, 8);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 5 + static_cast<int>(rng.next_below(4));
        const int k = static_cast<int>(rng.next_below(3));
        if (n - k < 3) continue;
        PointSet ps = gen_inner_instance(n, k, 64, rng);
        const double hk = held_karp(ps).optimum;
        if (std::abs(hk - tsp_enum_opt(ps)) > 1e-9)
            return {"held-karp-vs-enumeration", false, "cost mismatch"};
    }
    return {"held-karp-vs-enumeration", true, "20 instances agree"};
}

CheckResult check_dyn() {
    RngStream rng(85, 9);
    for (int trial = 0; trial < 40; ++trial) {
        const int k = 1 + static_cast<int>(rng.next_below(3));
        const int n = std::max(5, 6 + static_cast<int>(rng.next_below(4)));
        PointSet ps = gen_inner_instance(n, k, 64, rng);
        std::vector<int> x = ps.inner();
        for (int shuffle = static_cast<int>(x.size()) - 1; shuffle > 0; --shuffle)
            std::swap(x[shuffle], x[rng.next_below(shuffle + 1)]);
        if (std::abs(dyn_fitness(ps, x) - min_interleaving_cost(ps, x)) > 1e-9)
            return {"dyn-vs-interleavings", false, "dp mismatch"};
        // min over all inner orders equals the exact optimum
        std::sort(x.begin(), x.end());
        double best = 1e300;
        do best = std::min(best, dyn_fitness(ps, x));
        while (std::next_permutation(x.begin(), x.end()));
        if (std::abs(best - held_karp(ps).optimum) > 1e-9)
            return {"dyn-vs-interleavings", false, "min over orders != optimum"};
    }
    return {"dyn-vs-interleavings", true, "40 instances agree"};
}

CheckResult check_gloc() {
    auto inst = gen_gloc(3, 9);
    bool pass = inst.graph.m() == 9 + 2 * 3 - 3 && inst.graph.connected();
    if (leaf_count(inst.t_opt) != leaf_count(inst.t_lopt) + 1) pass = false;
    if (inst.t_lopt.edge_bits.hamming(inst.t_opt.edge_bits) != 4 * (3 - 1)) pass = false;
    if (brute_max_leaf_tree(inst.graph).optimum != leaf_count(inst.t_opt)) pass = false;
    // every spanning tree keeps the path edges
    auto trees = all_spanning_trees(inst.graph);
    std::vector<int> path_edges;
    for (int e = 0; e < inst.graph.m(); ++e) {
        const auto& [u, v] = inst.graph.edges[e];
        if (u >= 2 * 3 + 2 || v >= 2 * 3 + 2) path_edges.push_back(e);
    }
    for (const auto& tree : trees)
        for (int e : path_edges)
            if (std::find(tree.begin(), tree.end(), e) == tree.end()) pass = false;
    std::ostringstream detail;
    detail << trees.size() << " spanning trees checked";
    return {"gloc-structure", pass, detail.str()};
}

CheckResult check_submodular_oracles() {
    bool pass = true;
    // cut function on C_5 is symmetric submodular
    Graph c5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    auto cut = make_cut_fn(c5);
    const int n = 5;
    for (std::uint32_t a = 0; a < (1u << n) && pass; ++a)
        for (std::uint32_t b = 0; b < (1u << n); ++b) {
            Bitset sa(n), sb(n), su(n), si(n);
            for (int i = 0; i < n; ++i) {
                if ((a >> i) & 1u) sa.set(i);
                if ((b >> i) & 1u) sb.set(i);
                if (((a | b) >> i) & 1u) su.set(i);
                if (((a & b) >> i) & 1u) si.set(i);
            }
            if (cut->eval(su) + cut->eval(si) > cut->eval(sa) + cut->eval(sb) + 1e-9) {
                pass = false;
                break;
            }
        }
    // complement symmetry
    for (std::uint32_t a = 0; a < (1u << n) && pass; ++a) {
        Bitset sa(n), sc(n);
        for (int i = 0; i < n; ++i)
            ((a >> i) & 1u) ? sa.set(i) : sc.set(i);
        if (std::abs(cut->eval(sa) - cut->eval(sc)) > 1e-9) pass = false;
    }
    // graphic matroid rank == components formula on C_5 edge subsets
    auto gm = make_graphic_matroid(c5);
    for (std::uint32_t a = 0; a < (1u << c5.m()) && pass; ++a) {
        Bitset sa(c5.m());
        for (int i = 0; i < c5.m(); ++i)
            if ((a >> i) & 1u) sa.set(i);
        const int expect = static_cast<int>(sa.count()) - (sa.count() == 5 ? 1 : 0);
        if (gm->rank(sa) != expect) pass = false;
    }
    return {"submodular-oracle-axioms", pass, "cut/C5 exhaustive"};
}

CheckResult check_2opt_improvement() {
    RngStream rng(86, 10);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        PointSet ps = gen_inner_instance(8, 2, 64, rng);
        AngleBound ab = angle_bound(ps);
        const double min_gain = min_crossing_improvement(ab);
        Tour tour = random_tour(ps.n(), rng);
        const double cost = tour_cost(ps, tour);
        const int n = ps.n();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const int a = tour.perm[i], b = tour.perm[(i + 1) % n];
                const int c = tour.perm[j], d = tour.perm[(j + 1) % n];
                if (a == c || a == d || b == c || b == d) continue;
                if (!segments_cross(ps.point(a), ps.point(b), ps.point(c), ps.point(d)))
                    continue;
                // remove the crossing pair via the matching inversion
                Tour repaired = inversion(tour, i + 1, j);
                const double gain = cost - tour_cost(ps, repaired);
                ++checked;
                if (gain <= 0)
                    return {"2opt-crossing-improvement", false, "no strict decrease"};
                if (gain < min_gain - 1e-9)
                    return {"2opt-crossing-improvement", false, "decrease below angle bound"};
            }
    }
    std::ostringstream detail;
    detail << checked << " crossing pairs improved above the bound";
    return {"2opt-crossing-improvement", true, detail.str()};
}

CheckResult check_fpt_population() {
    RngStream rng(87, 11);
    bool pass = true;
    for (int trial = 0; trial < 10 && pass; ++trial) {
        const int k = static_cast<int>(rng.next_below(4));
        PointSet ps = gen_inner_instance(8, k, 64, rng);
        auto pop = init_fpt_population(ps);
        if (pop.size() != fpt_population_size(ps.n(), ps.k())) pass = false;
        for (const auto& ind : pop) {
            if (ind.order.front() != ps.hull()[0]) pass = false;
            if (ind.order.back() != ind.tail) pass = false;
            if (!gamma_respecting(ps, ind.order)) pass = false;
        }
    }
    return {"fpt-population-invariants", pass, "sizes and orders verified"};
}

} // namespace

std::vector<CheckResult> run_all(int threads) {
    const std::vector<Check> checks = {
        check_poisson,         check_lp_oracle,
        check_nt_property,     check_wilson,
        check_max_leaf_lemma,  check_tree_mutation_closure,
        check_semo_update,     check_crossings,
        check_held_karp,       check_dyn,
        check_gloc,            check_submodular_oracles,
        check_2opt_improvement, check_fpt_population,
    };
    std::vector<CheckResult> results(checks.size());
    parallel_for(checks.size(), [&](std::size_t i) { results[i] = checks[i](); }, threads);
    return results;
}

} // namespace rsh::selfcheck
