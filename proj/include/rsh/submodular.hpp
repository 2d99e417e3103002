#ifndef RSH_SUBMODULAR_HPP
#define RSH_SUBMODULAR_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rsh/bitset.hpp"
#include "rsh/engine.hpp"
#include "rsh/graph.hpp"
#include "rsh/pareto.hpp"

namespace rsh {

// Set-function oracle. Built-in oracles are integer valued and nonnegative,
// so the -1 infeasibility marker used by the multiobjective fitness is
// always strictly below every feasible value.
class SubmodularFn {
public:
    virtual ~SubmodularFn() = default;
    virtual double eval(const Bitset& a) const = 0;
    virtual int ground_size() const = 0;
    virtual bool monotone() const = 0;
    virtual bool symmetric() const = 0;
};

// f(A) = number of universe elements covered by the chosen sets.
std::unique_ptr<SubmodularFn> make_coverage_fn(std::vector<std::vector<int>> sets,
                                               int universe_size);
// f(A) = number of graph edges with exactly one endpoint in A.
std::unique_ptr<SubmodularFn> make_cut_fn(Graph g);
// f(A) = sum of nonnegative weights of the chosen elements.
std::unique_ptr<SubmodularFn> make_linear_fn(std::vector<double> weights);

class Matroid {
public:
    virtual ~Matroid() = default;
    virtual int rank(const Bitset& a) const = 0;
    virtual int ground_size() const = 0;
    bool independent(const Bitset& a) const {
        return rank(a) == static_cast<int>(a.count());
    }
};

std::unique_ptr<Matroid> make_uniform_matroid(int n, int r);
std::unique_ptr<Matroid> make_partition_matroid(int n, std::vector<std::vector<int>> blocks,
                                                std::vector<int> capacities);
// Ground set = edge ids of the host graph.
std::unique_ptr<Matroid> make_graphic_matroid(Graph g);

// f(A + i) - f(A); requires i not in A.
double marginal(const SubmodularFn& f, const Bitset& a, int i);

// v(x) = k * |x|_1 - sum_j rank_j(x); zero iff x independent in every matroid.
int violation(const Bitset& x, const std::vector<const Matroid*>& matroids);

struct LexFitness {
    int violation = 0;
    double value = 0.0;
};

// Lexicographic acceptance: lower violation wins; ties decided by value.
bool lex_accept(const LexFitness& current, const LexFitness& offspring);

enum class SubmodularAlgo { one_plus_one_h, gsemo_g };

struct SubmodularOptions {
    // success = best feasible value reaching this target (early stop)
    std::optional<double> target_value;
};

struct SubmodularResult {
    Trajectory trajectory;
    double best_feasible = -1.0;
    Bitset best_solution;
};

SubmodularResult run_submodular_ea(const SubmodularFn& f,
                                   const std::vector<const Matroid*>& matroids,
                                   SubmodularAlgo algo, Budget budget, RngStream& rng,
                                   const SubmodularOptions& options = {});

enum class NeighborhoodKind {
    lemma_insert1_delete_k,  // delete one, or insert one and delete <= k
    exchange_p1,             // insert <= 2, delete <= 2k (p = 1 slice)
};

// True iff no feasible neighbor improves f(x) by the factor tied to the
// neighborhood kind: (1 + eps/n^4) for the lemma neighborhood,
// (1 + eps/(n(k+1))) for the p-exchange neighborhood. Only p = 1 is
// enumerable; larger p throws std::invalid_argument.
bool local_opt_check(const SubmodularFn& f, const std::vector<const Matroid*>& matroids,
                     const Bitset& x, int p, double eps,
                     NeighborhoodKind kind = NeighborhoodKind::lemma_insert1_delete_k);

// JSON instance descriptor: oracle kind + parameters and the matroid list.
struct SubmodularInstance {
    std::unique_ptr<SubmodularFn> fn;
    std::vector<std::unique_ptr<Matroid>> matroids;
    std::vector<const Matroid*> matroid_ptrs() const;
};
SubmodularInstance load_submodular_instance(const std::string& path);
SubmodularInstance parse_submodular_instance(const std::string& json_text);

} // namespace rsh

#endif
