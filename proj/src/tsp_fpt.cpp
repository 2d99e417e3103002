#include "rsh/tsp_fpt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace rsh {

namespace {

constexpr double kCostTol = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

} // namespace

double subtour_cost(const PointSet& ps, const SubtourIndividual& ind) {
    const int len = static_cast<int>(ind.order.size());
    if (len == 1) return 0.0;
    double total = 0.0;
    for (int j = 0; j < len; ++j)
        total += ps.dist(ind.order[j], ind.order[(j + 1) % len]);
    return total;
}

bool gamma_respecting(const PointSet& ps, const std::vector<int>& order) {
    std::vector<int> hull_rank(ps.n(), -1);
    for (std::size_t i = 0; i < ps.hull().size(); ++i) hull_rank[ps.hull()[i]] = static_cast<int>(i);
    int last_rank = -1;
    for (int v : order) {
        if (hull_rank[v] < 0) continue;
        if (hull_rank[v] < last_rank) return false;
        last_rank = hull_rank[v];
    }
    return true;
}

std::uint64_t fpt_population_size(int n, int k) {
    // (n-k) * sum_{s=0}^{k} C(k,s) (s+1)
    std::uint64_t sum = 0;
    std::uint64_t binom = 1;
    for (int s = 0; s <= k; ++s) {
        sum += binom * static_cast<std::uint64_t>(s + 1);
        binom = binom * static_cast<std::uint64_t>(k - s) / static_cast<std::uint64_t>(s + 1);
    }
    return static_cast<std::uint64_t>(n - k) * sum;
}

namespace {

// Canonical gamma-respecting individual: hull prefix in hull order with the
// non-tail inner points (ascending) wedged before the last element.
SubtourIndividual make_individual(const PointSet& ps, int i, std::uint32_t mask, int tail) {
    SubtourIndividual ind;
    ind.hull_prefix = i;
    ind.inner_mask = mask;
    ind.tail = tail;
    const auto& hull = ps.hull();
    const auto& inner = ps.inner();
    std::vector<int> inner_rest;
    for (std::size_t b = 0; b < inner.size(); ++b)
        if ((mask >> b) & 1u && inner[b] != tail) inner_rest.push_back(inner[b]);

    for (int h = 0; h < i - 1; ++h) ind.order.push_back(hull[h]);
    if (tail == hull[i - 1]) {
        ind.order.insert(ind.order.end(), inner_rest.begin(), inner_rest.end());
        ind.order.push_back(hull[i - 1]);
    } else {
        ind.order.push_back(hull[i - 1]);
        ind.order.insert(ind.order.end(), inner_rest.begin(), inner_rest.end());
        ind.order.push_back(tail);
    }
    return ind;
}

} // namespace

std::vector<SubtourIndividual> init_fpt_population(const PointSet& ps, int k_cap) {
    const int k = ps.k();
    if (k > k_cap) throw std::runtime_error("inner point count exceeds the population cap");
    const int h = static_cast<int>(ps.hull().size());
    const auto& inner = ps.inner();

    std::vector<SubtourIndividual> pop;
    for (int i = 1; i <= h; ++i) {
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
            for (int b = 0; b < k; ++b)
                if ((mask >> b) & 1u)
                    pop.push_back(make_individual(ps, i, mask, inner[b]));
            pop.push_back(make_individual(ps, i, mask, ps.hull()[i - 1]));
        }
    }
    return pop;
}

SubtourIndividual extend_mutation(const SubtourIndividual& ind, const PointSet& ps,
                                  RngStream& rng) {
    const int k = ps.k();
    const int h = static_cast<int>(ps.hull().size());
    const auto& inner = ps.inner();

    std::vector<int> candidates;
    for (int b = 0; b < k; ++b)
        if (!((ind.inner_mask >> b) & 1u)) candidates.push_back(inner[b]);
    const bool hull_extendable = ind.hull_prefix < h;
    const int total = static_cast<int>(candidates.size()) + (hull_extendable ? 1 : 0);
    if (total == 0) return ind; // complete ground set: no effect

    const int pick = static_cast<int>(rng.next_below(total));
    SubtourIndividual out = ind;
    int v;
    if (pick < static_cast<int>(candidates.size())) {
        v = candidates[pick];
        for (int b = 0; b < k; ++b)
            if (inner[b] == v) out.inner_mask |= (1u << b);
    } else {
        v = ps.hull()[ind.hull_prefix];
        out.hull_prefix = ind.hull_prefix + 1;
    }
    out.order.push_back(v);
    out.tail = v;
    return out;
}

namespace {

struct SlotKey {
    int hull_prefix;
    std::uint32_t mask;
    int tail;
    friend bool operator==(const SlotKey&, const SlotKey&) = default;
};

struct SlotKeyHash {
    std::size_t operator()(const SlotKey& k) const {
        std::uint64_t v = (static_cast<std::uint64_t>(k.hull_prefix) << 40) ^
                          (static_cast<std::uint64_t>(k.mask) << 8) ^
                          static_cast<std::uint64_t>(k.tail + 1);
        return static_cast<std::size_t>(RngStream::mix(v));
    }
};

} // namespace

FptEaResult run_fpt_ea(const PointSet& ps, int lambda, Budget budget, RngStream& rng,
                       const FptEaOptions& options) {
    if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
    FptEaResult result;
    const int k = ps.k();
    const int h = static_cast<int>(ps.hull().size());
    const std::uint32_t full_mask = (k == 32) ? ~0u : ((1u << k) - 1u);

    std::vector<SubtourIndividual> pop;
    std::vector<double> cost;
    std::unordered_map<SlotKey, std::size_t, SlotKeyHash> slot_of;
    bool initialized = false;
    std::size_t init_next = 0;

    auto refresh_best = [&]() {
        double best = -1.0;
        for (std::size_t idx = 0; idx < pop.size(); ++idx) {
            if (pop[idx].hull_prefix == h && pop[idx].inner_mask == full_mask) {
                if (best < 0 || cost[idx] < best) best = cost[idx];
            }
        }
        result.best_full_tour_cost = best;
    };

    auto audit_slots = [&]() {
        if (pop.size() != fpt_population_size(ps.n(), k)) result.slot_invariant_ok = false;
        if (slot_of.size() != pop.size()) result.slot_invariant_ok = false;
    };

    auto step = [&](RngStream& r, std::uint64_t allowance) -> StepOutcome {
        if (!initialized) {
            if (pop.empty()) {
                pop = init_fpt_population(ps, options.k_cap);
                cost.resize(pop.size());
                for (std::size_t idx = 0; idx < pop.size(); ++idx)
                    slot_of[SlotKey{pop[idx].hull_prefix, pop[idx].inner_mask,
                                    pop[idx].tail}] = idx;
            }
            // initial evaluations, allowance-limited
            std::uint64_t count = std::min<std::uint64_t>(pop.size() - init_next, allowance);
            for (std::uint64_t c = 0; c < count; ++c, ++init_next)
                cost[init_next] = subtour_cost(ps, pop[init_next]);
            if (init_next == pop.size()) {
                initialized = true;
                refresh_best();
                if (options.audit_slots) audit_slots();
            }
            return {count, result.best_full_tour_cost, initialized};
        }

        std::uint64_t offspring = std::min<std::uint64_t>(lambda, allowance);
        double before = result.best_full_tour_cost;
        for (std::uint64_t c = 0; c < offspring; ++c) {
            const SubtourIndividual& parent = pop[r.next_below(pop.size())];
            SubtourIndividual child = parent;
            const int ops = poisson_plus_one(r);
            for (int s = 0; s < ops; ++s) child = extend_mutation(child, ps, r);
            const double child_cost = subtour_cost(ps, child);

            auto it = slot_of.find(SlotKey{child.hull_prefix, child.inner_mask, child.tail});
            if (it == slot_of.end()) {
                ++result.discarded_offspring;
                continue;
            }
            const std::size_t idx = it->second;
            if (child_cost <= cost[idx]) {
                pop[idx] = std::move(child);
                cost[idx] = child_cost;
                if (pop[idx].hull_prefix == h && pop[idx].inner_mask == full_mask &&
                    (result.best_full_tour_cost < 0 ||
                     child_cost < result.best_full_tour_cost))
                    result.best_full_tour_cost = child_cost;
            }
        }
        if (options.audit_slots) audit_slots();
        bool improved = result.best_full_tour_cost >= 0 &&
                        (before < 0 || result.best_full_tour_cost < before - kCostTol);
        return {offspring, result.best_full_tour_cost, improved};
    };

    auto success = [&]() {
        return initialized && options.target_cost && result.best_full_tour_cost >= 0 &&
               result.best_full_tour_cost <= *options.target_cost + kCostTol;
    };

    result.trajectory = run_until(step, success, budget, rng);
    return result;
}

DynEvaluator::DynEvaluator(const PointSet& ps) : ps_(ps) {
    const std::size_t cells =
        ps.hull().size() * static_cast<std::size_t>(ps.k() + 1);
    f_out_.resize(cells);
    f_inn_.resize(cells);
}

double DynEvaluator::eval(const std::vector<int>& x) {
    const auto& hull = ps_.hull();
    const int h = static_cast<int>(hull.size());   // n - k
    const int k = static_cast<int>(x.size());
    auto out = [&](int i, int j) -> double& { return f_out_[(i - 1) * (k + 1) + j]; };
    auto inn = [&](int i, int j) -> double& { return f_inn_[(i - 1) * (k + 1) + j]; };

    out(1, 0) = 0.0;
    for (int j = 1; j <= k; ++j) out(1, j) = kInf;
    for (int i = 1; i <= h; ++i) inn(i, 0) = kInf;

    for (int i = 1; i <= h; ++i) {
        if (i >= 2) {
            for (int j = 0; j <= k; ++j) {
                double via_out = out(i - 1, j) + ps_.dist(hull[i - 2], hull[i - 1]);
                double via_inn =
                    j >= 1 ? inn(i - 1, j) + ps_.dist(x[j - 1], hull[i - 1]) : kInf;
                out(i, j) = std::min(via_out, via_inn);
            }
        }
        for (int j = 1; j <= k; ++j) {
            double via_out = out(i, j - 1) + ps_.dist(hull[i - 1], x[j - 1]);
            double via_inn =
                j >= 2 ? inn(i, j - 1) + ps_.dist(x[j - 2], x[j - 1]) : kInf;
            inn(i, j) = std::min(via_out, via_inn);
        }
    }

    double closing_out = out(h, k) + ps_.dist(hull[h - 1], hull[0]);
    double closing_inn = k >= 1 ? inn(h, k) + ps_.dist(x[k - 1], hull[0]) : kInf;
    return std::min(closing_out, closing_inn);
}

double dyn_fitness(const PointSet& ps, const std::vector<int>& inner_order) {
    if (static_cast<int>(inner_order.size()) != ps.k())
        throw std::invalid_argument("inner order must cover all inner points");
    DynEvaluator ev(ps);
    return ev.eval(inner_order);
}

namespace {

std::vector<int> random_inner_perm(const PointSet& ps, RngStream& rng) {
    std::vector<int> x = ps.inner();
    for (int i = static_cast<int>(x.size()) - 1; i > 0; --i)
        std::swap(x[i], x[rng.next_below(i + 1)]);
    return x;
}

void apply_basic_op(std::vector<int>& x, BasicOp op, RngStream& rng) {
    const int k = static_cast<int>(x.size());
    if (k < 2) return;
    if (op == BasicOp::two_opt) {
        int i = static_cast<int>(rng.next_below(k));
        int j = static_cast<int>(rng.next_below(k - 1));
        if (j >= i) ++j;
        if (i > j) std::swap(i, j);
        std::reverse(x.begin() + i, x.begin() + j + 1);
    } else {
        int i = static_cast<int>(rng.next_below(k));
        int j = static_cast<int>(rng.next_below(k - 1));
        if (j >= i) ++j;
        int v = x[i];
        x.erase(x.begin() + i);
        x.insert(x.begin() + j, v);
    }
}

} // namespace

EaKResult run_ea_k(const PointSet& ps, int mu, int lambda, BasicOp op, Budget budget,
                   RngStream& rng, const EaKOptions& options) {
    if (mu < 1 || lambda < 1) throw std::invalid_argument("mu and lambda must be >= 1");
    EaKResult result;
    const int k = ps.k();
    DynEvaluator evaluator(ps);

    if (k == 0) {
        // hull tour is the whole search space; one evaluation
        std::vector<int> empty;
        Budget b = budget;
        if (!b.exhausted()) {
            result.best_cost = evaluator.eval(empty);
            result.best_inner_order = empty;
            b.consume(1);
            result.trajectory.evaluations_used = b.evaluations_used;
            result.trajectory.record(1, result.best_cost, true);
            if (!options.target_cost || result.best_cost <= *options.target_cost + kCostTol)
                result.trajectory.hit_time = 1;
        }
        return result;
    }

    std::vector<std::vector<int>> pop;
    std::vector<double> cost;
    bool initialized = false;

    auto step = [&](RngStream& r, std::uint64_t allowance) -> StepOutcome {
        bool improved = false;
        if (!initialized) {
            std::uint64_t count = std::min<std::uint64_t>(mu, allowance);
            for (std::uint64_t i = 0; i < count; ++i) {
                pop.push_back(random_inner_perm(ps, r));
                cost.push_back(evaluator.eval(pop.back()));
                if (result.best_cost < 0 || cost.back() < result.best_cost) {
                    result.best_cost = cost.back();
                    result.best_inner_order = pop.back();
                }
            }
            initialized = true;
            return {count, result.best_cost, true};
        }
        std::uint64_t offspring = std::min<std::uint64_t>(lambda, allowance);
        for (std::uint64_t i = 0; i < offspring; ++i) {
            std::vector<int> y = pop[r.next_below(pop.size())];
            const int ops = poisson_plus_one(r);
            for (int s = 0; s < ops; ++s) apply_basic_op(y, op, r);
            double cy = evaluator.eval(y);
            if (cy < result.best_cost - kCostTol) {
                result.best_cost = cy;
                result.best_inner_order = y;
                improved = true;
            }
            pop.push_back(std::move(y));
            cost.push_back(cy);
        }
        std::vector<std::size_t> order(pop.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return cost[a] < cost[b]; });
        std::vector<std::vector<int>> next_pop;
        std::vector<double> next_cost;
        for (int i = 0; i < mu; ++i) {
            next_pop.push_back(std::move(pop[order[i]]));
            next_cost.push_back(cost[order[i]]);
        }
        pop = std::move(next_pop);
        cost = std::move(next_cost);
        return {offspring, result.best_cost, improved};
    };

    auto success = [&]() {
        return initialized && options.target_cost && result.best_cost >= 0 &&
               result.best_cost <= *options.target_cost + kCostTol;
    };

    result.trajectory = run_until(step, success, budget, rng);
    return result;
}

double success_probability_bound(int k, int ell) {
    if (k < 2 || ell < 1) throw std::invalid_argument("requires k >= 2 and ell >= 1");
    double denom = 1.0; // (ell-1)!
    for (int i = 2; i <= ell - 1; ++i) denom *= i;
    return 1.0 / (std::exp(1.0) * denom * std::pow(static_cast<double>(k), 2.0 * ell));
}

} // namespace rsh
