#ifndef RSH_MLST_HPP
#define RSH_MLST_HPP

#include <optional>

#include "rsh/engine.hpp"
#include "rsh/graph.hpp"

namespace rsh {

enum class MlstVariant { generic, tree_based };

struct MlstState {
    SpanningTree tree;
    int leaves = 0;
};

// Flip each edge-membership bit independently with probability 1/m.
// The result need not be a tree.
Bitset generic_mutation(const SpanningTree& t, const Graph& g, RngStream& rng);

// Adopt the offspring iff it is a spanning tree with at least as many
// leaves as the incumbent.
MlstState generic_accept(const Graph& g, const MlstState& current, const Bitset& offspring);

// S ~ Poisson(1) sequential edge exchanges; each inserts a uniform non-tree
// edge and deletes a uniform edge of the resulting cycle (possibly the
// inserted one). Always yields a spanning tree. If the graph is itself a
// tree the input is returned unchanged.
SpanningTree tree_mutation(const SpanningTree& t, const Graph& g, RngStream& rng);

struct MlstOptions {
    std::optional<SpanningTree> start;    // default: uniform random (generic), BFS tree (tree_based)
    std::optional<int> target_leaves;     // success = reaching this leaf count
};

struct MlstResult {
    Trajectory trajectory;
    int best_leaves = 0;
};

MlstResult run_mlst(const Graph& g, MlstVariant variant, Budget budget, RngStream& rng,
                    const MlstOptions& options = {});

} // namespace rsh

#endif
