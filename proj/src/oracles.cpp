#include "rsh/oracles.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace rsh {

namespace {

bool covers_all(const Graph& g, const Bitset& x) {
    for (const auto& [u, v] : g.edges)
        if (!x.test(u) && !x.test(v)) return false;
    return true;
}

// branch and bound on an uncovered edge
void vc_branch(const Graph& g, Bitset& chosen, Bitset& excluded, int size, int& best,
               std::uint64_t& nodes) {
    ++nodes;
    if (size >= best) return;
    int pick_u = -1, pick_v = -1;
    for (const auto& [u, v] : g.edges)
        if (!chosen.test(u) && !chosen.test(v)) {
            pick_u = u;
            pick_v = v;
            break;
        }
    if (pick_u < 0) {
        best = size;
        return;
    }
    if (!excluded.test(pick_u)) {
        chosen.set(pick_u);
        vc_branch(g, chosen, excluded, size + 1, best, nodes);
        chosen.reset(pick_u);
    }
    if (!excluded.test(pick_v)) {
        // branches where pick_v is also skipped cannot cover the edge
        excluded.set(pick_u);
        chosen.set(pick_v);
        vc_branch(g, chosen, excluded, size + 1, best, nodes);
        chosen.reset(pick_v);
        excluded.reset(pick_u);
    }
}

} // namespace

VcOracleResult brute_min_vertex_cover(const Graph& g, int max_n) {
    if (g.n > max_n) throw std::runtime_error("vertex cover oracle: instance too large");
    VcOracleResult result;
    Bitset chosen(g.n), excluded(g.n);
    int best = g.n;
    vc_branch(g, chosen, excluded, 0, best, result.search_space_size);
    result.optimum = best;

    if (g.n <= 16) {
        // enumerate all subsets of size `best` and keep the covers
        std::vector<int> comb(best);
        for (int i = 0; i < best; ++i) comb[i] = i;
        for (;;) {
            Bitset x(g.n);
            for (int v : comb) x.set(v);
            if (covers_all(g, x)) result.witnesses.push_back(x);
            // next combination
            int i = best - 1;
            while (i >= 0 && comb[i] == g.n - best + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < best; ++j) comb[j] = comb[j - 1] + 1;
        }
        for (const Bitset& w : result.witnesses)
            if (!covers_all(g, w) || static_cast<int>(w.count()) != best)
                throw std::logic_error("vertex cover oracle: witness re-verification failed");
        if (result.witnesses.empty())
            throw std::logic_error("vertex cover oracle: no witness found");
    }
    return result;
}

namespace {

bool connected_and_dominating(const Graph& g, std::uint32_t subset) {
    if (subset == 0) return false;
    // connectivity of g[subset]
    int start = std::countr_zero(subset);
    std::uint32_t seen = 1u << start;
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : g.incident[v]) {
            int w = g.other_end(e, v);
            if ((subset >> w) & 1u && !((seen >> w) & 1u)) {
                seen |= 1u << w;
                stack.push_back(w);
            }
        }
    }
    if (seen != subset) return false;
    // domination
    for (int v = 0; v < g.n; ++v) {
        if ((subset >> v) & 1u) continue;
        bool dominated = false;
        for (int e : g.incident[v])
            if ((subset >> g.other_end(e, v)) & 1u) {
                dominated = true;
                break;
            }
        if (!dominated) return false;
    }
    return true;
}

} // namespace

MlstOracleResult brute_max_leaf_tree(const Graph& g, int max_n) {
    if (g.n > max_n) throw std::runtime_error("max leaf oracle: instance too large");
    if (!g.connected()) throw std::invalid_argument("max leaf oracle: graph not connected");
    MlstOracleResult result;

    if (g.n <= 2) {
        result.optimum = g.n == 2 ? 2 : 0; // the single edge has two degree-1 ends
        result.witness = bfs_tree(g);
        result.search_space_size = 1;
        return result;
    }

    // A spanning tree with L leaves has n-L internal vertices forming a
    // connected dominating set, and any CDS yields a tree with n-|CDS|
    // leaves, so max leaves = n - min |CDS|.
    int best_cds = g.n;
    std::uint32_t best_subset = 0;
    const std::uint32_t limit = 1u << g.n;
    for (std::uint32_t subset = 1; subset < limit; ++subset) {
        ++result.search_space_size;
        int size = std::popcount(subset);
        if (size >= best_cds) continue;
        if (connected_and_dominating(g, subset)) {
            best_cds = size;
            best_subset = subset;
        }
    }
    result.optimum = g.n - best_cds;

    // rebuild a witness: spanning tree of g[CDS] plus every other vertex as
    // a leaf on some CDS neighbor
    std::vector<int> tree_edges;
    {
        std::vector<char> in_tree(g.n, 0);
        int start = std::countr_zero(best_subset);
        in_tree[start] = 1;
        std::vector<int> queue{start};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int e : g.incident[v]) {
                int w = g.other_end(e, v);
                if (((best_subset >> w) & 1u) && !in_tree[w]) {
                    in_tree[w] = 1;
                    tree_edges.push_back(e);
                    queue.push_back(w);
                }
            }
        }
        for (int v = 0; v < g.n; ++v) {
            if ((best_subset >> v) & 1u) continue;
            for (int e : g.incident[v])
                if ((best_subset >> g.other_end(e, v)) & 1u) {
                    tree_edges.push_back(e);
                    break;
                }
        }
    }
    result.witness = SpanningTree::from_edges(g, tree_edges); // re-verifies spanning
    if (leaf_count(result.witness) != result.optimum)
        throw std::logic_error("max leaf oracle: witness re-verification failed");
    return result;
}

TspOracleResult held_karp(const PointSet& ps, int max_n) {
    const int n = ps.n();
    if (n > max_n) throw std::runtime_error("held-karp oracle: instance too large");
    TspOracleResult result;

    const std::uint32_t masks = 1u << (n - 1); // subsets of {1..n-1}
    constexpr double kInf = std::numeric_limits<double>::infinity();
    // dp[mask][last]: shortest path from 0 through mask ending at last+1
    std::vector<double> dp(static_cast<std::size_t>(masks) * (n - 1), kInf);
    std::vector<std::int8_t> parent(static_cast<std::size_t>(masks) * (n - 1), -1);
    auto at = [&](std::uint32_t mask, int last) -> std::size_t {
        return static_cast<std::size_t>(mask) * (n - 1) + last;
    };

    for (int v = 0; v < n - 1; ++v) dp[at(1u << v, v)] = ps.dist(0, v + 1);
    for (std::uint32_t mask = 1; mask < masks; ++mask) {
        for (int last = 0; last < n - 1; ++last) {
            if (!((mask >> last) & 1u)) continue;
            const double base = dp[at(mask, last)];
            if (base == kInf) continue;
            for (int next = 0; next < n - 1; ++next) {
                if ((mask >> next) & 1u) continue;
                const std::uint32_t m2 = mask | (1u << next);
                const double cand = base + ps.dist(last + 1, next + 1);
                if (cand < dp[at(m2, next)]) {
                    dp[at(m2, next)] = cand;
                    parent[at(m2, next)] = static_cast<std::int8_t>(last);
                }
            }
        }
    }
    result.search_space_size = static_cast<std::uint64_t>(masks) * (n - 1);

    const std::uint32_t full = masks - 1;
    double best = kInf;
    int best_last = -1;
    for (int last = 0; last < n - 1; ++last) {
        const double cand = dp[at(full, last)] + ps.dist(last + 1, 0);
        if (cand < best) {
            best = cand;
            best_last = last;
        }
    }
    result.optimum = best;

    std::vector<int> order{0};
    {
        std::vector<int> back;
        std::uint32_t mask = full;
        int last = best_last;
        while (last >= 0) {
            back.push_back(last + 1);
            const int prev = parent[at(mask, last)];
            mask &= ~(1u << last);
            last = prev;
        }
        order.insert(order.end(), back.rbegin(), back.rend());
    }
    result.witness.perm = order;
    if (std::abs(tour_cost(ps, result.witness) - result.optimum) > 1e-6)
        throw std::logic_error("held-karp oracle: witness re-verification failed");
    return result;
}

SubmodularOracleResult brute_submodular_opt(const SubmodularFn& f,
                                            const std::vector<const Matroid*>& matroids,
                                            int max_n) {
    const int n = f.ground_size();
    if (n > max_n) throw std::runtime_error("submodular oracle: instance too large");
    SubmodularOracleResult result;
    result.witness = Bitset(n);
    result.optimum = f.eval(result.witness);

    // depth-first over independent sets: independence is downward closed,
    // so infeasible branches prune
    Bitset current(n);
    std::function<void(int)> recurse = [&](int next) {
        ++result.search_space_size;
        const double value = f.eval(current);
        if (value > result.optimum) {
            result.optimum = value;
            result.witness = current;
        }
        for (int i = next; i < n; ++i) {
            current.set(i);
            bool ok = true;
            for (const Matroid* m : matroids)
                if (!m->independent(current)) {
                    ok = false;
                    break;
                }
            if (ok) recurse(i + 1);
            current.reset(i);
        }
    };
    recurse(0);

    for (const Matroid* m : matroids)
        if (!m->independent(result.witness))
            throw std::logic_error("submodular oracle: witness re-verification failed");
    return result;
}

} // namespace rsh
