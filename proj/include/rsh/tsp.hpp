#ifndef RSH_TSP_HPP
#define RSH_TSP_HPP

#include <optional>
#include <vector>

#include "rsh/engine.hpp"
#include "rsh/geometry.hpp"

namespace rsh {

struct Tour {
    std::vector<int> perm; // city index at each position
    friend bool operator==(const Tour&, const Tour&) = default;
};

Tour identity_tour(int n);
Tour random_tour(int n, RngStream& rng);

// Closed tour length, wrap-around edge included.
double tour_cost(const PointSet& ps, const Tour& t);

// Reverse positions i..j inclusive (0-based, i < j). A 2-opt move.
Tour inversion(const Tour& t, int i, int j);

// Move the element at position i to position j (0-based, i != j), shifting
// the block between them.
Tour jump(const Tour& t, int i, int j);

// Uniform random operation index pairs.
Tour random_inversion(const Tour& t, RngStream& rng);
Tour random_jump(const Tour& t, RngStream& rng);

// s + 1 inversions, s ~ Poisson(1).
Tour mutate_2opt(const Tour& t, RngStream& rng);
// Fair coin picks inversion or jump once, then s + 1 operations of that kind.
Tour mutate_mixed(const Tour& t, RngStream& rng);

// Number of tour-edge pairs that properly intersect (exact predicates;
// pairs sharing an endpoint excluded).
int count_crossings(const PointSet& ps, const Tour& t);

enum class TspMutation { two_opt, mixed };

struct TspOptions {
    std::optional<double> target_cost;  // success = cost within 1e-9 of this
    bool audit_crossings = false;       // record first crossing-free evaluation
};

struct TspResult {
    Trajectory trajectory;
    Tour best;
    double best_cost = 0.0;
    std::int64_t t_crossing_free = -1;
};

// RLS: one uniform inversion per step, accepted on cost <= incumbent.
TspResult run_rls(const PointSet& ps, Budget budget, RngStream& rng,
                  const TspOptions& options = {});

// (mu+lambda) EA with Poisson mutation and truncation survival.
TspResult run_mu_lambda(const PointSet& ps, int mu, int lambda, TspMutation mutation,
                        Budget budget, RngStream& rng, const TspOptions& options = {});

} // namespace rsh

#endif
