#ifndef RSH_SELFCHECK_HPP
#define RSH_SELFCHECK_HPP

#include <string>
#include <vector>

#include "rsh/bitset.hpp"
#include "rsh/geometry.hpp"
#include "rsh/graph.hpp"
#include "rsh/tsp.hpp"

namespace rsh::selfcheck {

// Independent reference implementations used to cross-check the production
// paths. Each deliberately takes a different algorithmic route than the
// code it validates.

// LP relaxation optimum of vertex cover on G(x), doubled, by enumerating
// every assignment in {0, 1/2, 1}^n. Exponential; n <= 14.
int twice_lp_bruteforce(const Graph& g, const Bitset& x);

// Proper segment intersection decided by exact rational intersection-point
// arithmetic (128-bit), independent of the orientation-sign predicate.
bool segments_cross_rational(const Pt& a, const Pt& b, const Pt& c, const Pt& d);
int count_crossings_rational(const PointSet& ps, const Tour& t);

// All spanning trees by filtering (n-1)-subsets of the edge list through an
// edge-walk connectivity check (no union-find).
std::vector<std::vector<int>> all_spanning_trees(const Graph& g);

// Optimal tour cost by full permutation enumeration (n <= 9).
double tsp_enum_opt(const PointSet& ps);

// Minimum closed-tour cost over all merges of the hull order with the given
// inner order, both orders preserved, by explicit merge enumeration.
double min_interleaving_cost(const PointSet& ps, const std::vector<int>& inner_order);

// All connected labeled graphs on n vertices (n <= 5 is practical).
std::vector<Graph> all_connected_graphs(int n);

// Chi-square statistic of observed counts against expected probabilities.
double chi_square(const std::vector<std::uint64_t>& observed,
                  const std::vector<double>& expected_probability);

// Brute-force non-dominated filter over (value, minimize-flag) pairs;
// returns the indices of surviving vectors, later-inserted equal vectors
// replacing earlier ones.
std::vector<std::size_t> non_dominated_indices(
    const std::vector<std::pair<long long, long long>>& vectors);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// The cross-check suite behind `verify`: every derived-oracle comparison at
// smoke scale. Deterministic; returns one row per check.
std::vector<CheckResult> run_all(int threads = 0);

} // namespace rsh::selfcheck

#endif
