#ifndef RSH_TSP_FPT_HPP
#define RSH_TSP_FPT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "rsh/engine.hpp"
#include "rsh/geometry.hpp"
#include "rsh/tsp.hpp"

namespace rsh {

// Subtour individual of the population DP-EA: a permutation over the ground
// set {p_1..p_i} + S (S a subset of the inner points) whose hull points
// follow the hull order, with head p_1 and a designated tail vertex.
struct SubtourIndividual {
    int hull_prefix = 1;         // i
    std::uint32_t inner_mask = 0; // S as a bitmask over ps.inner() positions
    int tail = -1;               // vertex id, in S or p_i
    std::vector<int> order;      // vertex ids, order[0] = p_1, order.back() = tail
};

// Closed subtour cost over the ground set (single vertex costs 0).
double subtour_cost(const PointSet& ps, const SubtourIndividual& ind);

bool gamma_respecting(const PointSet& ps, const std::vector<int>& order);

// mu = (n-k) * sum_s C(k,s) (s+1)
std::uint64_t fpt_population_size(int n, int k);

// One canonical individual per valid (i, S, tail) triple.
std::vector<SubtourIndividual> init_fpt_population(const PointSet& ps, int k_cap = 12);

// Append a uniform vertex from (Inn \ S) + {p_(i+1)} as the new tail; no-op
// on a complete ground set.
SubtourIndividual extend_mutation(const SubtourIndividual& ind, const PointSet& ps,
                                  RngStream& rng);

struct FptEaOptions {
    std::optional<double> target_cost;
    int k_cap = 12;
    bool audit_slots = false;  // verify the slot invariant every generation
};

struct FptEaResult {
    Trajectory trajectory;
    double best_full_tour_cost = -1.0; // best cost among complete-ground-set slots
    std::uint64_t discarded_offspring = 0; // offspring with no matching slot
    bool slot_invariant_ok = true;
};

FptEaResult run_fpt_ea(const PointSet& ps, int lambda, Budget budget, RngStream& rng,
                       const FptEaOptions& options = {});

// Optimal merge cost of the fixed hull order and an inner-point order x,
// via the two (n-k) x (k+1) DP tables; O(nk) time.
double dyn_fitness(const PointSet& ps, const std::vector<int>& inner_order);

// Scratch-buffer variant for hot loops.
class DynEvaluator {
public:
    explicit DynEvaluator(const PointSet& ps);
    double eval(const std::vector<int>& inner_order);

private:
    const PointSet& ps_;
    std::vector<double> f_out_, f_inn_;
};

enum class BasicOp { jump, two_opt };

struct EaKOptions {
    std::optional<double> target_cost;
};

struct EaKResult {
    Trajectory trajectory;
    double best_cost = -1.0;
    std::vector<int> best_inner_order;
};

// (mu+lambda) EA over permutations of the inner points with Dyn fitness;
// mutation applies s+1 basic operations of the chosen kind.
EaKResult run_ea_k(const PointSet& ps, int mu, int lambda, BasicOp op, Budget budget,
                   RngStream& rng, const EaKOptions& options = {});

// p(k, ell) = 1 / (e (ell-1)! k^(2 ell))
double success_probability_bound(int k, int ell);

} // namespace rsh

#endif
