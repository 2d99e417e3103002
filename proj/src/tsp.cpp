#include "rsh/tsp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rsh {

Tour identity_tour(int n) {
    Tour t;
    t.perm.resize(n);
    for (int i = 0; i < n; ++i) t.perm[i] = i;
    return t;
}

Tour random_tour(int n, RngStream& rng) {
    Tour t = identity_tour(n);
    for (int i = n - 1; i > 0; --i)
        std::swap(t.perm[i], t.perm[rng.next_below(i + 1)]);
    return t;
}

double tour_cost(const PointSet& ps, const Tour& t) {
    const int n = static_cast<int>(t.perm.size());
    double total = 0.0;
    for (int i = 0; i < n; ++i)
        total += ps.dist(t.perm[i], t.perm[(i + 1) % n]);
    return total;
}

Tour inversion(const Tour& t, int i, int j) {
    const int n = static_cast<int>(t.perm.size());
    if (i < 0 || j >= n || i >= j) throw std::invalid_argument("bad inversion indices");
    Tour out = t;
    std::reverse(out.perm.begin() + i, out.perm.begin() + j + 1);
    return out;
}

Tour jump(const Tour& t, int i, int j) {
    const int n = static_cast<int>(t.perm.size());
    if (i < 0 || j < 0 || i >= n || j >= n || i == j)
        throw std::invalid_argument("bad jump indices");
    Tour out = t;
    int v = out.perm[i];
    out.perm.erase(out.perm.begin() + i);
    out.perm.insert(out.perm.begin() + j, v);
    return out;
}

Tour random_inversion(const Tour& t, RngStream& rng) {
    const int n = static_cast<int>(t.perm.size());
    if (n < 2) return t;
    // uniform unordered pair i < j
    int i = static_cast<int>(rng.next_below(n));
    int j = static_cast<int>(rng.next_below(n - 1));
    if (j >= i) ++j;
    if (i > j) std::swap(i, j);
    return inversion(t, i, j);
}

Tour random_jump(const Tour& t, RngStream& rng) {
    const int n = static_cast<int>(t.perm.size());
    if (n < 2) return t;
    int i = static_cast<int>(rng.next_below(n));
    int j = static_cast<int>(rng.next_below(n - 1));
    if (j >= i) ++j;
    return jump(t, i, j);
}

Tour mutate_2opt(const Tour& t, RngStream& rng) {
    int ops = poisson_plus_one(rng);
    Tour out = t;
    for (int s = 0; s < ops; ++s) out = random_inversion(out, rng);
    return out;
}

Tour mutate_mixed(const Tour& t, RngStream& rng) {
    const bool use_inversion = rng.next_double() < 0.5;
    int ops = poisson_plus_one(rng);
    Tour out = t;
    for (int s = 0; s < ops; ++s)
        out = use_inversion ? random_inversion(out, rng) : random_jump(out, rng);
    return out;
}

int count_crossings(const PointSet& ps, const Tour& t) {
    const int n = static_cast<int>(t.perm.size());
    int crossings = 0;
    for (int i = 0; i < n; ++i) {
        const int a = t.perm[i], b = t.perm[(i + 1) % n];
        for (int j = i + 1; j < n; ++j) {
            const int c = t.perm[j], d = t.perm[(j + 1) % n];
            if (a == c || a == d || b == c || b == d) continue;
            if (segments_cross(ps.point(a), ps.point(b), ps.point(c), ps.point(d)))
                ++crossings;
        }
    }
    return crossings;
}

namespace {

constexpr double kCostTol = 1e-9;

bool reached(double cost, const std::optional<double>& target) {
    return target && cost <= *target + kCostTol;
}

} // namespace

TspResult run_rls(const PointSet& ps, Budget budget, RngStream& rng,
                  const TspOptions& options) {
    const int n = ps.n();
    TspResult result;
    bool initialized = false;
    Tour current;
    double cost = 0.0;

    auto audit = [&](std::uint64_t evals) {
        if (options.audit_crossings && result.t_crossing_free < 0 &&
            count_crossings(ps, current) == 0)
            result.t_crossing_free = static_cast<std::int64_t>(evals);
    };

    std::uint64_t evals_done = 0;
    auto step = [&](RngStream& r, std::uint64_t) -> StepOutcome {
        bool improved = false;
        ++evals_done;
        if (!initialized) {
            current = random_tour(n, r);
            cost = tour_cost(ps, current);
            initialized = true;
            improved = true;
            audit(evals_done);
        } else {
            Tour y = random_inversion(current, r);
            double cy = tour_cost(ps, y);
            if (cy <= cost) {
                improved = cy < cost - kCostTol;
                current = std::move(y);
                cost = cy;
                audit(evals_done);
            }
        }
        return {1, cost, improved};
    };
    auto success = [&]() { return initialized && reached(cost, options.target_cost); };

    result.trajectory = run_until(step, success, budget, rng);
    result.best = current;
    result.best_cost = cost;
    return result;
}

TspResult run_mu_lambda(const PointSet& ps, int mu, int lambda, TspMutation mutation,
                        Budget budget, RngStream& rng, const TspOptions& options) {
    if (mu < 1 || lambda < 1) throw std::invalid_argument("mu and lambda must be >= 1");
    const int n = ps.n();
    TspResult result;

    std::vector<Tour> pop;
    std::vector<double> cost;
    double best = 0.0;
    bool initialized = false;
    std::uint64_t evals_done = 0;

    auto audit = [&](const Tour& t) {
        if (options.audit_crossings && result.t_crossing_free < 0 &&
            count_crossings(ps, t) == 0)
            result.t_crossing_free = static_cast<std::int64_t>(evals_done);
    };

    auto step = [&](RngStream& r, std::uint64_t allowance) -> StepOutcome {
        bool improved = false;
        if (!initialized) {
            std::uint64_t count = std::min<std::uint64_t>(mu, allowance);
            for (std::uint64_t i = 0; i < count; ++i) {
                pop.push_back(random_tour(n, r));
                cost.push_back(tour_cost(ps, pop.back()));
                ++evals_done;
                if (i == 0 || cost.back() < best) {
                    best = cost.back();
                    result.best = pop.back();
                    audit(pop.back());
                }
            }
            initialized = true;
            result.best_cost = best;
            return {count, best, true};
        }
        std::uint64_t offspring = std::min<std::uint64_t>(lambda, allowance);
        for (std::uint64_t i = 0; i < offspring; ++i) {
            const Tour& parent = pop[r.next_below(pop.size())];
            Tour y = mutation == TspMutation::two_opt ? mutate_2opt(parent, r)
                                                      : mutate_mixed(parent, r);
            double cy = tour_cost(ps, y);
            ++evals_done;
            if (cy < best - kCostTol) {
                best = cy;
                result.best = y;
                improved = true;
                audit(y);
            }
            pop.push_back(std::move(y));
            cost.push_back(cy);
        }
        // truncation survival: keep the mu best, parents first on ties
        std::vector<std::size_t> order(pop.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return cost[a] < cost[b]; });
        std::vector<Tour> next_pop;
        std::vector<double> next_cost;
        for (int i = 0; i < mu; ++i) {
            next_pop.push_back(std::move(pop[order[i]]));
            next_cost.push_back(cost[order[i]]);
        }
        pop = std::move(next_pop);
        cost = std::move(next_cost);
        result.best_cost = best;
        return {offspring, best, improved};
    };
    auto success = [&]() { return initialized && reached(best, options.target_cost); };

    result.trajectory = run_until(step, success, budget, rng);
    result.best_cost = best;
    return result;
}

} // namespace rsh
