#include "rsh/matching.hpp"

namespace rsh {

namespace {

bool try_augment(int l, const std::vector<std::vector<int>>& adj,
                 std::vector<int>& mate_l, std::vector<int>& mate_r,
                 std::vector<int>& visited, int stamp) {
    for (int r : adj[l]) {
        if (visited[r] == stamp) continue;
        visited[r] = stamp;
        if (mate_r[r] < 0 || try_augment(mate_r[r], adj, mate_l, mate_r, visited, stamp)) {
            mate_l[l] = r;
            mate_r[r] = l;
            return true;
        }
    }
    return false;
}

} // namespace

int max_bipartite_matching(int n_left, int n_right,
                           const std::vector<std::vector<int>>& adj,
                           std::vector<int>* mate_of_left,
                           std::vector<int>* mate_of_right) {
    std::vector<int> mate_l(n_left, -1), mate_r(n_right, -1);
    std::vector<int> visited(n_right, -1);

    // greedy seed pass cuts down the number of augmenting searches
    for (int l = 0; l < n_left; ++l)
        for (int r : adj[l])
            if (mate_l[l] < 0 && mate_r[r] < 0) {
                mate_l[l] = r;
                mate_r[r] = l;
            }

    int size = 0;
    for (int l = 0; l < n_left; ++l)
        if (mate_l[l] >= 0) ++size;

    for (int l = 0; l < n_left; ++l) {
        if (mate_l[l] >= 0) continue;
        if (try_augment(l, adj, mate_l, mate_r, visited, l)) ++size;
    }

    if (mate_of_left) *mate_of_left = std::move(mate_l);
    if (mate_of_right) *mate_of_right = std::move(mate_r);
    return size;
}

} // namespace rsh
