#ifndef RSH_ORACLES_HPP
#define RSH_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "rsh/bitset.hpp"
#include "rsh/geometry.hpp"
#include "rsh/graph.hpp"
#include "rsh/submodular.hpp"
#include "rsh/tsp.hpp"

namespace rsh {

// Exact references used for success detection and property tests. Size caps
// are hard errors; these define ground truth, never approximations.

struct VcOracleResult {
    int optimum = 0;
    std::vector<Bitset> witnesses;      // all minimum covers when n <= witness cap
    std::uint64_t search_space_size = 0;
};

// Branch on an uncovered edge; all minimum covers collected for n <= 16.
VcOracleResult brute_min_vertex_cover(const Graph& g, int max_n = 24);

struct MlstOracleResult {
    int optimum = 0;                    // maximum leaves over all spanning trees
    SpanningTree witness;
    std::uint64_t search_space_size = 0; // candidate vertex subsets examined
};

// Max leaves via minimum connected dominating set enumeration (n >= 3);
// the witness tree is rebuilt from the minimum CDS and re-verified.
MlstOracleResult brute_max_leaf_tree(const Graph& g, int max_n = 20);

struct TspOracleResult {
    double optimum = 0.0;
    Tour witness;
    std::uint64_t search_space_size = 0; // DP states
};

TspOracleResult held_karp(const PointSet& ps, int max_n = 18);

struct SubmodularOracleResult {
    double optimum = 0.0;
    Bitset witness;
    std::uint64_t search_space_size = 0; // feasible sets examined
};

SubmodularOracleResult brute_submodular_opt(const SubmodularFn& f,
                                            const std::vector<const Matroid*>& matroids,
                                            int max_n = 20);

} // namespace rsh

#endif
