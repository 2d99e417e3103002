#include "rsh/vertex_cover.hpp"

#include <algorithm>
#include <stdexcept>

#include "rsh/matching.hpp"

namespace rsh {

int uncovered(const Graph& g, const Bitset& x) {
    int count = 0;
    for (const auto& [u, v] : g.edges)
        if (!x.test(u) && !x.test(v)) ++count;
    return count;
}

std::vector<int> uncovered_incident(const Graph& g, const Bitset& x) {
    std::vector<char> mark(g.n, 0);
    for (const auto& [u, v] : g.edges)
        if (!x.test(u) && !x.test(v)) mark[u] = mark[v] = 1;
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if (mark[v]) out.push_back(v);
    return out;
}

namespace {

std::vector<std::vector<int>> double_cover_adj(const Graph& g, const Bitset& x) {
    std::vector<std::vector<int>> adj(g.n);
    for (const auto& [u, v] : g.edges) {
        if (x.test(u) || x.test(v)) continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

} // namespace

int twice_lp_value(const Graph& g, const Bitset& x) {
    return max_bipartite_matching(g.n, g.n, double_cover_adj(g, x));
}

NtSplit nt_split(const Graph& g) {
    Bitset empty(g.n);
    auto adj = double_cover_adj(g, empty);
    std::vector<int> mate_l, mate_r;
    max_bipartite_matching(g.n, g.n, adj, &mate_l, &mate_r);

    // Koenig: alternating reachability from unmatched left vertices.
    std::vector<char> reach_l(g.n, 0), reach_r(g.n, 0);
    std::vector<int> stack;
    for (int l = 0; l < g.n; ++l)
        if (mate_l[l] < 0) {
            reach_l[l] = 1;
            stack.push_back(l);
        }
    while (!stack.empty()) {
        int l = stack.back();
        stack.pop_back();
        for (int r : adj[l]) {
            if (reach_r[r]) continue;
            reach_r[r] = 1;
            int l2 = mate_r[r];
            if (l2 >= 0 && !reach_l[l2]) {
                reach_l[l2] = 1;
                stack.push_back(l2);
            }
        }
    }

    // Koenig cover of the double cover: unreached left + reached right.
    // Vertex value = (left copy in cover + right copy in cover) / 2.
    NtSplit split;
    for (int v = 0; v < g.n; ++v) {
        int units = (reach_l[v] ? 0 : 1) + (reach_r[v] ? 1 : 0);
        if (units == 0)
            split.p0.push_back(v);
        else if (units == 2)
            split.p1.push_back(v);
        else
            split.half.push_back(v);
    }
    return split;
}

Bitset standard_mutation(const Graph& g, const Bitset& x, RngStream& rng) {
    Bitset y = x;
    const double p = 1.0 / g.n;
    for (int v = 0; v < g.n; ++v)
        if (rng.bernoulli(p)) y.flip(v);
    return y;
}

Bitset alt_mutation_high(const Graph& g, const Bitset& x, RngStream& rng,
                         const std::vector<int>& s) {
    Bitset y = x;
    std::vector<char> in_s(g.n, 0);
    for (int v : s) in_s[v] = 1;
    const double p = 1.0 / g.n;
    for (int v = 0; v < g.n; ++v)
        if (rng.bernoulli(in_s[v] ? 0.5 : p)) y.flip(v);
    return y;
}

Bitset alt_mutation(const Graph& g, const Bitset& x, RngStream& rng) {
    std::vector<int> s = uncovered_incident(g, x);
    bool high = rng.bernoulli(0.5);
    if (!high || s.empty()) return standard_mutation(g, x, rng);
    return alt_mutation_high(g, x, rng, s);
}

VcVector vc_evaluate(const Graph& g, const Bitset& x, VcFitness fitness) {
    VcVector v;
    v.a = 2 * static_cast<long long>(x.count());
    v.b = fitness == VcFitness::f1 ? 2LL * uncovered(g, x) : twice_lp_value(g, x);
    return v;
}

VcResult run_vc(const Graph& g, VcFitness fitness, VcMutation mutation, Budget budget,
                RngStream& rng, const VcOptions& options) {
    VcResult result;
    bool initialized = false;
    std::uint64_t evals_done = 0;

    auto note_insert = [&](const Bitset& x, const VcVector& val) {
        if (result.t_zero_n < 0 && val.a == 0)
            result.t_zero_n = static_cast<std::int64_t>(evals_done);
        if (val.b == 0) {
            int size = static_cast<int>(val.a / 2);
            if (result.best_cover_size < 0 || size < result.best_cover_size) {
                result.best_cover_size = size;
                if (result.t_opt < 0 && options.target_cover_size &&
                    size <= *options.target_cover_size)
                    result.t_opt = static_cast<std::int64_t>(evals_done);
            }
        }
        if (result.t_kernel < 0 && options.kernel_predicate && options.kernel_predicate(x))
            result.t_kernel = static_cast<std::int64_t>(evals_done);
    };

    auto step = [&](RngStream& r, std::uint64_t) -> StepOutcome {
        Bitset candidate(g.n);
        if (!initialized) {
            for (int v = 0; v < g.n; ++v)
                if (r.bernoulli(0.5)) candidate.set(v);
            initialized = true;
        } else {
            std::size_t idx = r.next_below(result.archive.size());
            const Bitset& parent = result.archive.nth(idx).solution;
            candidate = mutation == VcMutation::standard
                            ? standard_mutation(g, parent, r)
                            : alt_mutation(g, parent, r);
        }
        ++evals_done;
        VcVector val = vc_evaluate(g, candidate, fitness);
        int prev_best = result.best_cover_size;
        if (result.archive.update(candidate, val)) note_insert(candidate, val);
        bool improved = result.best_cover_size >= 0 && result.best_cover_size != prev_best;
        double best = result.best_cover_size < 0 ? static_cast<double>(g.n + 1)
                                                 : static_cast<double>(result.best_cover_size);
        return {1, best, improved};
    };

    auto success = [&]() -> bool {
        return options.target_cover_size && result.best_cover_size >= 0 &&
               result.best_cover_size <= *options.target_cover_size;
    };

    result.trajectory = run_until(step, success, budget, rng);
    return result;
}

bool kernel_check_f1(const Graph& g, const Bitset& x, int opt,
                     const std::vector<Bitset>& all_optimal_covers) {
    bool subset_of_some = false;
    for (const Bitset& cover : all_optimal_covers)
        if (x.is_subset_of(cover)) {
            subset_of_some = true;
            break;
        }
    if (!subset_of_some) return false;

    std::vector<int> residual_degree(g.n, 0);
    for (const auto& [u, v] : g.edges) {
        if (x.test(u) || x.test(v)) continue;
        ++residual_degree[u];
        ++residual_degree[v];
    }
    for (int v = 0; v < g.n; ++v)
        if (residual_degree[v] > opt) return false;
    return true;
}

bool kernel_check_f2(const Graph& g, const Bitset& x, int max_n) {
    if (g.n > max_n)
        throw std::runtime_error("kernel_check_f2: instance too large for exact LP face analysis");

    Bitset empty(g.n);
    int lp_full = twice_lp_value(g, empty);
    int lp_x = twice_lp_value(g, x);
    if (lp_x != lp_full - 2 * static_cast<int>(x.count())) return false;

    // residual edges and nonisolated vertices of G(x)
    std::vector<std::pair<int, int>> residual;
    std::vector<char> nonisolated(g.n, 0);
    for (const auto& [u, v] : g.edges) {
        if (x.test(u) || x.test(v)) continue;
        residual.emplace_back(u, v);
        nonisolated[u] = nonisolated[v] = 1;
    }
    if (residual.empty()) return true;

    // every optimal assignment in {0, 1/2, 1}^n (half units) must be
    // all-half on the nonisolated vertices
    std::vector<int> assign(g.n, 0);
    for (;;) {
        bool feasible = true;
        for (const auto& [u, v] : residual)
            if (assign[u] + assign[v] < 2) {
                feasible = false;
                break;
            }
        if (feasible) {
            int total = 0;
            for (int a : assign) total += a;
            if (total == lp_x) {
                for (int v = 0; v < g.n; ++v)
                    if (nonisolated[v] && assign[v] != 1) return false;
            }
        }
        int pos = 0;
        while (pos < g.n && assign[pos] == 2) assign[pos++] = 0;
        if (pos == g.n) break;
        ++assign[pos];
    }
    return true;
}

} // namespace rsh
