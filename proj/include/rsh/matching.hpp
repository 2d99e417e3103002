#ifndef RSH_MATCHING_HPP
#define RSH_MATCHING_HPP

#include <vector>

namespace rsh {

// Maximum bipartite matching by augmenting paths (Kuhn). Left vertices
// 0..n_left-1, right vertices 0..n_right-1, adj[l] = right neighbors.
// Returns the matching size; mate_of_left (optional out) gives the right
// partner of each left vertex or -1.
int max_bipartite_matching(int n_left, int n_right,
                           const std::vector<std::vector<int>>& adj,
                           std::vector<int>* mate_of_left = nullptr,
                           std::vector<int>* mate_of_right = nullptr);

} // namespace rsh

#endif
