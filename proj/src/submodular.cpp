#include "rsh/submodular.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rsh {

namespace {

class CoverageFn final : public SubmodularFn {
public:
    CoverageFn(std::vector<std::vector<int>> sets, int universe)
        : n_(static_cast<int>(sets.size())), universe_(universe) {
        masks_.resize(sets.size());
        const int words = (universe + 63) / 64;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            masks_[i].assign(words, 0);
            for (int el : sets[i]) {
                if (el < 0 || el >= universe)
                    throw std::invalid_argument("coverage element out of range");
                masks_[i][el >> 6] |= std::uint64_t{1} << (el & 63);
            }
        }
    }
    double eval(const Bitset& a) const override {
        std::vector<std::uint64_t> acc((universe_ + 63) / 64, 0);
        for (int i = 0; i < n_; ++i)
            if (a.test(i))
                for (std::size_t w = 0; w < acc.size(); ++w) acc[w] |= masks_[i][w];
        int covered = 0;
        for (auto w : acc) covered += std::popcount(w);
        return covered;
    }
    int ground_size() const override { return n_; }
    bool monotone() const override { return true; }
    bool symmetric() const override { return false; }

private:
    int n_;
    int universe_;
    std::vector<std::vector<std::uint64_t>> masks_;
};

class CutFn final : public SubmodularFn {
public:
    explicit CutFn(Graph g) : g_(std::move(g)) {}
    double eval(const Bitset& a) const override {
        int cut = 0;
        for (const auto& [u, v] : g_.edges)
            if (a.test(u) != a.test(v)) ++cut;
        return cut;
    }
    int ground_size() const override { return g_.n; }
    bool monotone() const override { return false; }
    bool symmetric() const override { return true; }

private:
    Graph g_;
};

class LinearFn final : public SubmodularFn {
public:
    explicit LinearFn(std::vector<double> w) : w_(std::move(w)) {
        for (double x : w_)
            if (x < 0) throw std::invalid_argument("linear weights must be nonnegative");
    }
    double eval(const Bitset& a) const override {
        double total = 0;
        for (int i = 0; i < static_cast<int>(w_.size()); ++i)
            if (a.test(i)) total += w_[i];
        return total;
    }
    int ground_size() const override { return static_cast<int>(w_.size()); }
    bool monotone() const override { return true; }
    bool symmetric() const override { return false; }

private:
    std::vector<double> w_;
};

class UniformMatroid final : public Matroid {
public:
    UniformMatroid(int n, int r) : n_(n), r_(r) {
        if (r < 0) throw std::invalid_argument("uniform matroid rank must be >= 0");
    }
    int rank(const Bitset& a) const override {
        return std::min(static_cast<int>(a.count()), r_);
    }
    int ground_size() const override { return n_; }

private:
    int n_, r_;
};

class PartitionMatroid final : public Matroid {
public:
    PartitionMatroid(int n, std::vector<std::vector<int>> blocks, std::vector<int> caps)
        : n_(n), caps_(std::move(caps)), block_of_(n, -1) {
        if (blocks.size() != caps_.size())
            throw std::invalid_argument("block/capacity count mismatch");
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (int el : blocks[b]) {
                if (el < 0 || el >= n || block_of_[el] != -1)
                    throw std::invalid_argument("bad partition blocks");
                block_of_[el] = static_cast<int>(b);
            }
    }
    int rank(const Bitset& a) const override {
        std::vector<int> in_block(caps_.size(), 0);
        int free_elements = 0;
        for (int i = 0; i < n_; ++i) {
            if (!a.test(i)) continue;
            if (block_of_[i] < 0)
                ++free_elements; // unassigned elements are unconstrained
            else
                ++in_block[block_of_[i]];
        }
        int r = free_elements;
        for (std::size_t b = 0; b < caps_.size(); ++b)
            r += std::min(in_block[b], caps_[b]);
        return r;
    }
    int ground_size() const override { return n_; }

private:
    int n_;
    std::vector<int> caps_;
    std::vector<int> block_of_;
};

class GraphicMatroid final : public Matroid {
public:
    explicit GraphicMatroid(Graph g) : g_(std::move(g)) {}
    int rank(const Bitset& a) const override {
        // union-find: rank = number of merges
        std::vector<int> parent(g_.n);
        for (int i = 0; i < g_.n; ++i) parent[i] = i;
        auto find = [&](int v) {
            while (parent[v] != v) {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            return v;
        };
        int merges = 0;
        for (int e = 0; e < g_.m(); ++e) {
            if (!a.test(e)) continue;
            int ru = find(g_.edges[e].first), rv = find(g_.edges[e].second);
            if (ru != rv) {
                parent[ru] = rv;
                ++merges;
            }
        }
        return merges;
    }
    int ground_size() const override { return g_.m(); }

private:
    Graph g_;
};

} // namespace

std::unique_ptr<SubmodularFn> make_coverage_fn(std::vector<std::vector<int>> sets,
                                               int universe_size) {
    return std::make_unique<CoverageFn>(std::move(sets), universe_size);
}
std::unique_ptr<SubmodularFn> make_cut_fn(Graph g) {
    return std::make_unique<CutFn>(std::move(g));
}
std::unique_ptr<SubmodularFn> make_linear_fn(std::vector<double> weights) {
    return std::make_unique<LinearFn>(std::move(weights));
}
std::unique_ptr<Matroid> make_uniform_matroid(int n, int r) {
    return std::make_unique<UniformMatroid>(n, r);
}
std::unique_ptr<Matroid> make_partition_matroid(int n, std::vector<std::vector<int>> blocks,
                                                std::vector<int> capacities) {
    return std::make_unique<PartitionMatroid>(n, std::move(blocks), std::move(capacities));
}
std::unique_ptr<Matroid> make_graphic_matroid(Graph g) {
    return std::make_unique<GraphicMatroid>(std::move(g));
}

double marginal(const SubmodularFn& f, const Bitset& a, int i) {
    if (a.test(i)) throw std::invalid_argument("element already in set");
    Bitset with = a;
    with.set(i);
    return f.eval(with) - f.eval(a);
}

int violation(const Bitset& x, const std::vector<const Matroid*>& matroids) {
    const int k = static_cast<int>(matroids.size());
    int v = k * static_cast<int>(x.count());
    for (const Matroid* m : matroids) v -= m->rank(x);
    return v;
}

bool lex_accept(const LexFitness& current, const LexFitness& offspring) {
    if (offspring.violation < current.violation) return true;
    return offspring.violation == current.violation && offspring.value >= current.value;
}

namespace {

bool feasible_in_all(const Bitset& x, const std::vector<const Matroid*>& matroids) {
    for (const Matroid* m : matroids)
        if (!m->independent(x)) return false;
    return true;
}

} // namespace

SubmodularResult run_submodular_ea(const SubmodularFn& f,
                                   const std::vector<const Matroid*>& matroids,
                                   SubmodularAlgo algo, Budget budget, RngStream& rng,
                                   const SubmodularOptions& options) {
    const int n = f.ground_size();
    SubmodularResult result;
    result.best_solution = Bitset(n);

    auto note = [&](const Bitset& x, double fx, bool feasible) {
        if (feasible && fx > result.best_feasible) {
            result.best_feasible = fx;
            result.best_solution = x;
            return true;
        }
        return false;
    };

    auto success = [&]() -> bool {
        return options.target_value && result.best_feasible >= *options.target_value - 1e-9;
    };

    if (algo == SubmodularAlgo::one_plus_one_h) {
        Bitset x(n);
        LexFitness hx;
        bool initialized = false;
        auto step = [&](RngStream& r, std::uint64_t) -> StepOutcome {
            bool improved = false;
            if (!initialized) {
                for (int i = 0; i < n; ++i)
                    if (r.bernoulli(0.5)) x.set(i);
                hx = LexFitness{violation(x, matroids), f.eval(x)};
                improved = note(x, hx.value, hx.violation == 0);
                initialized = true;
            } else {
                Bitset y = x;
                const double p = 1.0 / n;
                for (int i = 0; i < n; ++i)
                    if (r.bernoulli(p)) y.flip(i);
                LexFitness hy{violation(y, matroids), f.eval(y)};
                if (lex_accept(hx, hy)) {
                    x = y;
                    hx = hy;
                    improved = note(x, hx.value, hx.violation == 0);
                }
            }
            return {1, result.best_feasible, improved};
        };
        result.trajectory = run_until(step, success, budget, rng);
        return result;
    }

    // Global SEMO on g(x) = (z(x), |x|_0), both maximized; z = f on feasible
    // solutions and -1 otherwise.
    ParetoArchive<Bitset, double> archive;
    bool initialized = false;
    auto evaluate = [&](const Bitset& x) {
        ObjVec<double> v;
        v.a_minimize = v.b_minimize = false;
        bool feasible = feasible_in_all(x, matroids);
        v.a = feasible ? f.eval(x) : -1.0;
        v.b = static_cast<double>(n - static_cast<int>(x.count()));
        return std::make_pair(v, feasible);
    };
    auto step = [&](RngStream& r, std::uint64_t) -> StepOutcome {
        Bitset candidate(n);
        if (!initialized) {
            for (int i = 0; i < n; ++i)
                if (r.bernoulli(0.5)) candidate.set(i);
            initialized = true;
        } else {
            const Bitset& parent = archive.nth(r.next_below(archive.size())).solution;
            candidate = parent;
            const double p = 1.0 / n;
            for (int i = 0; i < n; ++i)
                if (r.bernoulli(p)) candidate.flip(i);
        }
        auto [v, feasible] = evaluate(candidate);
        bool improved = false;
        if (archive.update(candidate, v))
            improved = note(candidate, v.a, feasible);
        return {1, result.best_feasible, improved};
    };
    result.trajectory = run_until(step, success, budget, rng);
    return result;
}

bool local_opt_check(const SubmodularFn& f, const std::vector<const Matroid*>& matroids,
                     const Bitset& x, int p, double eps, NeighborhoodKind kind) {
    if (p != 1) throw std::invalid_argument("only p = 1 neighborhoods are enumerable");
    if (!feasible_in_all(x, matroids))
        throw std::invalid_argument("local_opt_check requires a feasible solution");

    const int n = f.ground_size();
    const int k = static_cast<int>(matroids.size());
    const double fx = f.eval(x);
    const double factor = kind == NeighborhoodKind::lemma_insert1_delete_k
                              ? 1.0 + eps / (static_cast<double>(n) * n * n * n)
                              : 1.0 + eps / (static_cast<double>(n) * (k + 1));
    const double bar = factor * fx;

    std::vector<int> in = x.ones();
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (!x.test(i)) out.push_back(i);

    Bitset y = x;
    auto improves = [&]() {
        return !(y == x) && feasible_in_all(y, matroids) && f.eval(y) >= bar - 1e-9;
    };

    // enumerate deletion subsets of `in` of size <= left on top of whatever
    // insertions are currently applied to y
    std::function<bool(std::size_t, int)> any_deletion = [&](std::size_t start,
                                                             int left) -> bool {
        if (improves()) return true;
        if (left == 0) return false;
        for (std::size_t i = start; i < in.size(); ++i) {
            y.reset(in[i]);
            bool hit = any_deletion(i + 1, left - 1);
            y.set(in[i]);
            if (hit) return true;
        }
        return false;
    };

    if (kind == NeighborhoodKind::lemma_insert1_delete_k) {
        // delete exactly one element
        for (int el : in) {
            y.reset(el);
            bool hit = improves();
            y.set(el);
            if (hit) return false;
        }
        // insert one element, delete at most k
        for (int el : out) {
            y.set(el);
            bool hit = any_deletion(0, k);
            y.reset(el);
            if (hit) return false;
        }
        return true;
    }

    // p = 1 exchange: insert at most 2p new elements, delete at most 2kp
    std::function<bool(std::size_t, int)> any_insertion = [&](std::size_t start,
                                                              int left) -> bool {
        if (any_deletion(0, 2 * k * p)) return true;
        if (left == 0) return false;
        for (std::size_t i = start; i < out.size(); ++i) {
            y.set(out[i]);
            bool hit = any_insertion(i + 1, left - 1);
            y.reset(out[i]);
            if (hit) return true;
        }
        return false;
    };
    return !any_insertion(0, 2 * p);
}

std::vector<const Matroid*> SubmodularInstance::matroid_ptrs() const {
    std::vector<const Matroid*> out;
    for (const auto& m : matroids) out.push_back(m.get());
    return out;
}

SubmodularInstance parse_submodular_instance(const std::string& json_text) {
    using nlohmann::json;
    json doc = json::parse(json_text);
    SubmodularInstance inst;

    const json& oracle = doc.at("oracle");
    const std::string kind = oracle.at("kind").get<std::string>();
    if (kind == "coverage") {
        inst.fn = make_coverage_fn(oracle.at("sets").get<std::vector<std::vector<int>>>(),
                                   oracle.at("universe").get<int>());
    } else if (kind == "cut") {
        std::istringstream gs(oracle.at("graph").get<std::string>());
        inst.fn = make_cut_fn(read_graph(gs));
    } else if (kind == "linear") {
        inst.fn = make_linear_fn(oracle.at("weights").get<std::vector<double>>());
    } else {
        throw std::invalid_argument("unknown oracle kind: " + kind);
    }

    const int n = inst.fn->ground_size();
    for (const json& mj : doc.at("matroids")) {
        const std::string mkind = mj.at("kind").get<std::string>();
        std::unique_ptr<Matroid> m;
        if (mkind == "uniform") {
            m = make_uniform_matroid(n, mj.at("r").get<int>());
        } else if (mkind == "partition") {
            m = make_partition_matroid(n, mj.at("blocks").get<std::vector<std::vector<int>>>(),
                                       mj.at("capacities").get<std::vector<int>>());
        } else if (mkind == "graphic") {
            std::istringstream gs(mj.at("graph").get<std::string>());
            m = make_graphic_matroid(read_graph(gs));
        } else {
            throw std::invalid_argument("unknown matroid kind: " + mkind);
        }
        if (m->ground_size() != n)
            throw std::invalid_argument("matroid ground set size mismatch");
        inst.matroids.push_back(std::move(m));
    }
    if (inst.matroids.empty()) throw std::invalid_argument("at least one matroid required");
    return inst;
}

SubmodularInstance load_submodular_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_submodular_instance(buf.str());
}

} // namespace rsh
