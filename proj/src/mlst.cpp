#include "rsh/mlst.hpp"

namespace rsh {

Bitset generic_mutation(const SpanningTree& t, const Graph& g, RngStream& rng) {
    Bitset bits = t.edge_bits;
    const double p = 1.0 / g.m();
    for (int e = 0; e < g.m(); ++e)
        if (rng.bernoulli(p)) bits.flip(e);
    return bits;
}

MlstState generic_accept(const Graph& g, const MlstState& current, const Bitset& offspring) {
    if (!is_spanning_tree(g, offspring)) return current;
    SpanningTree t = SpanningTree::from_bits(g, offspring);
    int leaves = leaf_count(t);
    if (leaves >= current.leaves) return MlstState{std::move(t), leaves};
    return current;
}

SpanningTree tree_mutation(const SpanningTree& t, const Graph& g, RngStream& rng) {
    const int non_tree = g.m() - (g.n - 1);
    if (non_tree <= 0) return t;

    SpanningTree cur = t;
    const int exchanges = rng.poisson1();
    for (int step = 0; step < exchanges; ++step) {
        // pick the idx-th edge outside the tree
        int idx = static_cast<int>(rng.next_below(non_tree));
        int insert_edge = -1;
        for (int e = 0; e < g.m(); ++e) {
            if (cur.edge_bits.test(e)) continue;
            if (idx-- == 0) {
                insert_edge = e;
                break;
            }
        }
        std::vector<int> cycle = fundamental_cycle(g, cur, insert_edge);
        int remove_edge = cycle[rng.next_below(cycle.size())];
        if (remove_edge == insert_edge) continue;
        cur.edge_bits.set(insert_edge);
        cur.edge_bits.reset(remove_edge);
        ++cur.degree[g.edges[insert_edge].first];
        ++cur.degree[g.edges[insert_edge].second];
        --cur.degree[g.edges[remove_edge].first];
        --cur.degree[g.edges[remove_edge].second];
    }
    return cur;
}

MlstResult run_mlst(const Graph& g, MlstVariant variant, Budget budget, RngStream& rng,
                    const MlstOptions& options) {
    MlstState state;
    bool initialized = false;

    auto init = [&](RngStream& r) {
        if (options.start) {
            state.tree = *options.start;
        } else if (variant == MlstVariant::generic) {
            state.tree = random_spanning_tree(g, r);
        } else {
            state.tree = bfs_tree(g);
        }
        state.leaves = leaf_count(state.tree);
        initialized = true;
    };

    auto step = [&](RngStream& r, std::uint64_t) -> StepOutcome {
        if (!initialized) {
            init(r);
            return {1, static_cast<double>(state.leaves), true};
        }
        int before = state.leaves;
        if (variant == MlstVariant::generic) {
            Bitset offspring = generic_mutation(state.tree, g, r);
            state = generic_accept(g, state, offspring);
        } else {
            SpanningTree offspring = tree_mutation(state.tree, g, r);
            int leaves = leaf_count(offspring);
            if (leaves >= state.leaves) state = MlstState{std::move(offspring), leaves};
        }
        return {1, static_cast<double>(state.leaves), state.leaves > before};
    };

    auto success = [&]() -> bool {
        return options.target_leaves && initialized && state.leaves >= *options.target_leaves;
    };

    MlstResult result;
    result.trajectory = run_until(step, success, budget, rng);
    result.best_leaves = state.leaves;
    return result;
}

} // namespace rsh
