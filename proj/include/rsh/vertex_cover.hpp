#ifndef RSH_VERTEX_COVER_HPP
#define RSH_VERTEX_COVER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rsh/bitset.hpp"
#include "rsh/engine.hpp"
#include "rsh/graph.hpp"
#include "rsh/pareto.hpp"

namespace rsh {

// Number of edges with neither endpoint selected.
int uncovered(const Graph& g, const Bitset& x);

// Vertices incident to at least one uncovered edge.
std::vector<int> uncovered_incident(const Graph& g, const Bitset& x);

// Exact LP relaxation value of vertex cover on G(x), the graph left after
// removing every edge covered by x. Returned doubled so the half-integral
// optimum is an exact integer. Computed as half the maximum matching of the
// bipartite double cover (u',v'') + (v',u'') per remaining edge, which
// equals the LP optimum and needs no floating point.
int twice_lp_value(const Graph& g, const Bitset& x);

inline double lp_value(const Graph& g, const Bitset& x) {
    return 0.5 * twice_lp_value(g, x);
}

// Nemhauser-Trotter split: partition induced by the canonical optimal
// half-integral cover derived from a maximum matching on the double cover
// via alternating-reachability (Koenig) labeling.
struct NtSplit {
    std::vector<int> p0;    // vertices valued 0
    std::vector<int> p1;    // vertices valued 1
    std::vector<int> half;  // vertices valued 1/2
};
NtSplit nt_split(const Graph& g);

// Standard 1/n bit flips.
Bitset standard_mutation(const Graph& g, const Bitset& x, RngStream& rng);

// Alternative operator: with probability 1/2 (or whenever no edge is
// uncovered) standard mutation; otherwise vertices touching uncovered edges
// flip with probability 1/2 each and all others with probability 1/n.
Bitset alt_mutation(const Graph& g, const Bitset& x, RngStream& rng);

// The high-rate branch of alt_mutation on a given incident set `s`.
Bitset alt_mutation_high(const Graph& g, const Bitset& x, RngStream& rng,
                         const std::vector<int>& s);

using VcVector = ObjVec<long long>; // both coordinates doubled, both minimized
using VcArchive = ParetoArchive<Bitset, long long>;

enum class VcFitness { f1, f2 };
enum class VcMutation { standard, alternative };

VcVector vc_evaluate(const Graph& g, const Bitset& x, VcFitness fitness);

struct VcOptions {
    std::optional<int> target_cover_size; // success = cover of this size in archive
    // instrumentation: evaluated on every archive insertion until first hit
    std::function<bool(const Bitset&)> kernel_predicate;
};

struct VcResult {
    Trajectory trajectory;
    VcArchive archive;
    std::int64_t t_zero_n = -1;  // evaluations until 0^n entered the archive
    std::int64_t t_kernel = -1;
    std::int64_t t_opt = -1;
    int best_cover_size = -1;    // smallest cover seen, -1 if none
};

VcResult run_vc(const Graph& g, VcFitness fitness, VcMutation mutation, Budget budget,
                RngStream& rng, const VcOptions& options = {});

// Kernel test for f1: the chosen vertices extend to an optimal cover and
// the residual graph has maximum degree at most OPT. Needs the full set of
// optimal covers, so it is desk-scale instrumentation.
bool kernel_check_f1(const Graph& g, const Bitset& x, int opt,
                     const std::vector<Bitset>& all_optimal_covers);

// Kernel test for f2: LP(x) = LP(0^n) - |x|_1 and every optimal
// half-integral cover of G(x) assigns 1/2 to each of its nonisolated
// vertices. Enumerates {0,1/2,1}^n, so restricted to small n.
bool kernel_check_f2(const Graph& g, const Bitset& x, int max_n = 12);

} // namespace rsh

#endif
