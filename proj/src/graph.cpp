#include "rsh/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rsh {

namespace {

// Union-find over vertex ids; returns number of components after unions.
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

} // namespace

bool Graph::connected() const {
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : incident[v]) {
            int w = other_end(e, v);
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    Graph g;
    g.n = n;
    g.incident.resize(n);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("duplicate edge");
        int id = static_cast<int>(g.edges.size());
        g.edges.emplace_back(u, v);
        g.incident[u].push_back(id);
        g.incident[v].push_back(id);
    }
    return g;
}

bool is_spanning_tree(const Graph& g, const Bitset& bits) {
    if (static_cast<int>(bits.count()) != g.n - 1) return false;
    Dsu dsu(g.n);
    int merges = 0;
    for (int e = 0; e < g.m(); ++e) {
        if (!bits.test(e)) continue;
        if (!dsu.unite(g.edges[e].first, g.edges[e].second)) return false; // cycle
        ++merges;
    }
    return merges == g.n - 1;
}

SpanningTree SpanningTree::from_bits(const Graph& g, const Bitset& bits) {
    if (!is_spanning_tree(g, bits))
        throw std::invalid_argument("edge set is not a spanning tree");
    SpanningTree t;
    t.edge_bits = bits;
    t.degree.assign(g.n, 0);
    for (int e = 0; e < g.m(); ++e) {
        if (bits.test(e)) {
            ++t.degree[g.edges[e].first];
            ++t.degree[g.edges[e].second];
        }
    }
    return t;
}

SpanningTree SpanningTree::from_edges(const Graph& g, const std::vector<int>& edge_ids) {
    Bitset bits(g.m());
    for (int e : edge_ids) bits.set(e);
    return from_bits(g, bits);
}

int leaf_count(const SpanningTree& t) {
    int leaves = 0;
    for (int d : t.degree)
        if (d == 1) ++leaves;
    return leaves;
}

std::vector<int> fundamental_cycle(const Graph& g, const SpanningTree& t, int edge_id) {
    if (t.edge_bits.test(edge_id))
        throw std::invalid_argument("edge already in tree");
    const auto [src, dst] = g.edges[edge_id];

    // DFS over tree edges from src to dst, remembering the incoming edge.
    std::vector<int> via_edge(g.n, -1);
    std::vector<int> stack{src};
    std::vector<char> seen(g.n, 0);
    seen[src] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == dst) break;
        for (int e : g.incident[v]) {
            if (!t.edge_bits.test(e)) continue;
            int w = g.other_end(e, v);
            if (!seen[w]) {
                seen[w] = 1;
                via_edge[w] = e;
                stack.push_back(w);
            }
        }
    }
    std::vector<int> path;
    for (int v = dst; v != src;) {
        int e = via_edge[v];
        path.push_back(e);
        v = g.other_end(e, v);
    }
    std::reverse(path.begin(), path.end());
    path.push_back(edge_id);
    return path;
}

SpanningTree random_spanning_tree(const Graph& g, RngStream& rng) {
    if (!g.connected()) throw std::invalid_argument("graph not connected");
    std::vector<char> in_tree(g.n, 0);
    std::vector<int> next_edge(g.n, -1); // successor edge of the loop-erased walk
    in_tree[0] = 1;
    for (int start = 1; start < g.n; ++start) {
        if (in_tree[start]) continue;
        int v = start;
        while (!in_tree[v]) {
            int e = g.incident[v][rng.next_below(g.incident[v].size())];
            next_edge[v] = e;
            v = g.other_end(e, v);
        }
        v = start;
        while (!in_tree[v]) {
            in_tree[v] = 1;
            v = g.other_end(next_edge[v], v);
        }
    }
    Bitset bits(g.m());
    for (int v = 1; v < g.n; ++v)
        if (next_edge[v] >= 0 && !bits.test(next_edge[v])) bits.set(next_edge[v]);
    return SpanningTree::from_bits(g, bits);
}

SpanningTree bfs_tree(const Graph& g) {
    if (!g.connected()) throw std::invalid_argument("graph not connected");
    Bitset bits(g.m());
    std::vector<char> seen(g.n, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int e : g.incident[v]) {
            int w = g.other_end(e, v);
            if (!seen[w]) {
                seen[w] = 1;
                bits.set(e);
                queue.push_back(w);
            }
        }
    }
    return SpanningTree::from_bits(g, bits);
}

GlocInstance gen_gloc(int r, int n) {
    if (r < 3) throw std::invalid_argument("gloc requires r >= 3");
    if (n < 2 * r + 3) throw std::invalid_argument("gloc requires n >= 2r+3");

    const int x = 2 * r;
    const int y = 2 * r + 1;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> lopt_ids, opt_ids;

    auto add_edge = [&](int u, int v) {
        edges.emplace_back(u, v);
        return static_cast<int>(edges.size()) - 1;
    };

    for (int comp = 0; comp < 2; ++comp) {
        const int u_hub = comp * r;
        const int v_hub = comp * r + 1;
        for (int j = 2; j < r; ++j) {
            opt_ids.push_back(add_edge(u_hub, comp * r + j));
            lopt_ids.push_back(add_edge(v_hub, comp * r + j));
        }
        int uv = add_edge(u_hub, v_hub);
        opt_ids.push_back(uv);
        lopt_ids.push_back(uv);
        opt_ids.push_back(add_edge(u_hub, x));
        lopt_ids.push_back(add_edge(v_hub, y));
    }
    int xy = add_edge(x, y);
    opt_ids.push_back(xy);
    lopt_ids.push_back(xy);

    // path of n - 2r - 2 vertices attached to x
    int prev = x;
    for (int v = 2 * r + 2; v < n; ++v) {
        int e = add_edge(prev, v);
        opt_ids.push_back(e);
        lopt_ids.push_back(e);
        prev = v;
    }

    GlocInstance inst;
    inst.graph = make_graph(n, std::move(edges));
    inst.r = r;
    inst.t_lopt = SpanningTree::from_edges(inst.graph, lopt_ids);
    inst.t_opt = SpanningTree::from_edges(inst.graph, opt_ids);
    return inst;
}

Graph gen_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("bipartite sides must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            edges.emplace_back(i, a + j);
    return make_graph(a + b, std::move(edges));
}

Graph gen_random_connected(int n, double extra_p, RngStream& rng) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> present;
    // random tree skeleton: attach each vertex to a uniform earlier vertex,
    // over a random vertex relabeling
    std::vector<int> label(n);
    for (int i = 0; i < n; ++i) label[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(label[i], label[rng.next_below(i + 1)]);
    for (int i = 1; i < n; ++i) {
        int j = static_cast<int>(rng.next_below(i));
        int u = label[i], v = label[j];
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
        present.insert({u, v});
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!present.count({u, v}) && rng.bernoulli(extra_p))
                edges.emplace_back(u, v);
    return make_graph(n, std::move(edges));
}

void write_graph(std::ostream& os, const Graph& g, const std::string& comment) {
    if (!comment.empty()) os << "# " << comment << "\n";
    os << g.n << " " << g.m() << "\n";
    for (const auto& [u, v] : g.edges) os << u << " " << v << "\n";
}

Graph read_graph(std::istream& is) {
    std::string line;
    int n = -1, m = -1;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream head(line);
        if (!(head >> n >> m)) throw std::runtime_error("bad graph header");
        break;
    }
    if (n < 0) throw std::runtime_error("missing graph header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    while (static_cast<int>(edges.size()) < m && std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        int u, v;
        if (!(row >> u >> v)) throw std::runtime_error("bad edge line");
        edges.emplace_back(u, v);
    }
    if (static_cast<int>(edges.size()) != m) throw std::runtime_error("truncated edge list");
    return make_graph(n, std::move(edges));
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_graph(in);
}

void save_graph_file(const std::string& path, const Graph& g, const std::string& comment) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_graph(out, g, comment);
}

} // namespace rsh
