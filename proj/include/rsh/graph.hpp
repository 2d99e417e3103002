#ifndef RSH_GRAPH_HPP
#define RSH_GRAPH_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "rsh/bitset.hpp"
#include "rsh/rng.hpp"

namespace rsh {

// Undirected simple graph: vertex count, edge list, and per-vertex incident
// edge ids. Immutable after construction and safe to share across threads.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // endpoints stored with u < v
    std::vector<std::vector<int>> incident;  // vertex -> edge ids

    int m() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(incident[v].size()); }
    int other_end(int edge_id, int v) const {
        const auto& [a, b] = edges[edge_id];
        return a == v ? b : a;
    }
    bool connected() const;
};

// Validates: no self-loops, no duplicate edges, endpoints in range.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

// Spanning tree as a bitset over the host graph's edge ids plus a degree
// cache. Construction verifies the tree invariants.
struct SpanningTree {
    Bitset edge_bits;
    std::vector<int> degree;

    static SpanningTree from_edges(const Graph& g, const std::vector<int>& edge_ids);
    static SpanningTree from_bits(const Graph& g, const Bitset& bits);

    std::vector<int> edge_ids() const { return edge_bits.ones(); }
};

// True iff `bits` selects exactly n-1 edges forming a connected acyclic
// subgraph spanning all vertices.
bool is_spanning_tree(const Graph& g, const Bitset& bits);

// Number of degree-1 vertices.
int leaf_count(const SpanningTree& t);

// The unique cycle of t + e, as a sequence of edge ids ending with e.
// Throws std::invalid_argument if e is already a tree edge.
std::vector<int> fundamental_cycle(const Graph& g, const SpanningTree& t, int edge_id);

// Uniform spanning tree by Wilson's loop-erased random walk.
SpanningTree random_spanning_tree(const Graph& g, RngStream& rng);

// Deterministic BFS tree rooted at vertex 0.
SpanningTree bfs_tree(const Graph& g);

// The chapter's maximum-leaf instance: two r-vertex components whose hubs
// u_i, v_i are adjacent to every other vertex of their component (and to
// each other), bridge vertices x and y with u_i-x, v_i-y and x-y edges, and
// a path of n-2r-2 vertices hanging off x.
//
// Vertex layout (stable; also written into generated instance files):
//   component i in {0,1}: u_i = i*r, v_i = i*r + 1, fill = i*r + 2 .. i*r + r-1
//   x = 2r, y = 2r + 1, path = 2r+2 .. n-1 (2r+2 adjacent to x, consecutive
//   path ids adjacent).
struct GlocInstance {
    Graph graph;
    int r = 0;
    SpanningTree t_lopt;  // all edges at the v_i hubs + {x,y} + path edges
    SpanningTree t_opt;   // all edges at the u_i hubs + {x,y} + path edges
};

GlocInstance gen_gloc(int r, int n);

// K_{a,b}; left side 0..a-1, right side a..a+b-1.
Graph gen_complete_bipartite(int a, int b);

// Random connected graph: uniform random tree skeleton plus each remaining
// pair added independently with probability extra_p.
Graph gen_random_connected(int n, double extra_p, RngStream& rng);

// Text format: optional leading '#' comment lines, then "n m", then m lines
// "u v" (0-based).
void write_graph(std::ostream& os, const Graph& g, const std::string& comment = "");
Graph read_graph(std::istream& is);
Graph load_graph_file(const std::string& path);
void save_graph_file(const std::string& path, const Graph& g, const std::string& comment = "");

} // namespace rsh

#endif
