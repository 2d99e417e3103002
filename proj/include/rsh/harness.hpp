#ifndef RSH_HARNESS_HPP
#define RSH_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rsh/rng.hpp"

namespace rsh {

// Evaluation budget as a function of instance size n and parameter k
// (r / OPT / inner points, depending on the experiment).
struct BudgetRule {
    enum class Kind { fixed, poly_exp, vc_f2 };
    Kind kind = Kind::fixed;
    std::uint64_t fixed_evals = 0;
    double c = 1.0;    // leading constant for the shaped rules
    double base = 1.0; // poly_exp: c * base^k * n^degree
    int degree = 0;
    // vc_f2: c * (n^2 ln n + k n^2 + n 4^k)

    std::uint64_t evaluations(int n, double k) const;
};

struct ExperimentConfig {
    std::string name;
    std::string algorithm;       // mlst, vc, tsp-rls, tsp-ea, tsp-fpt-ea, tsp-ea-k,
                                 // submodular-1p1, submodular-gsemo
    nlohmann::json algo_params;  // algorithm-specific knobs
    std::string generator;       // gloc, bipartite, random-graph, points-convex,
                                 // points-inner, graph-file, points-file, submodular-file
    std::vector<nlohmann::json> grid;
    int replicates = 1;
    std::uint64_t master_seed = 1;
    BudgetRule budget;
    std::optional<double> min_success_rate; // per grid point, checked by sweep

    std::string canonical_json() const;
    std::string config_hash() const; // FNV-1a over the canonical form
};

ExperimentConfig parse_experiment_config(const std::string& json_text);
ExperimentConfig load_experiment_config(const std::string& path);

struct RunRecord {
    std::string config_hash;
    std::string instance;
    int n = 0;
    double param = 0.0;  // k / r / OPT
    double eps = std::nan(""), a_eps = std::nan("");
    std::uint64_t stream_id = 0;
    std::uint64_t evaluations = 0; // to success, or the budget when censored
    bool success = false;
    std::int64_t t_zero_n = -1, t_kernel = -1, t_opt = -1;

    friend bool operator==(const RunRecord&, const RunRecord&);
};

// grid x replicates records, deterministic given master_seed, replicates run
// concurrently over immutable instance data. Records are ordered by
// (grid point, stream_id) independent of scheduling.
std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg, int threads = 0);

struct SummaryRow {
    std::string instance;
    int n = 0;
    double param = 0.0;
    int runs = 0;
    int successes = 0;
    double success_rate = 0.0;
    double median = 0.0, mean = 0.0, q1 = 0.0, q3 = 0.0; // over evaluations
};

// Deterministic per-grid-point aggregation in first-appearance order.
// Censored runs count toward success_rate; they enter the evaluation
// statistics at the budget value unless exclude_censored is set.
std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records,
                                  bool exclude_censored = false);

enum class ScalingModel { poly_in_n_fixed_k, exp_in_k_fixed_n };

struct ScalingFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::vector<double> residuals;
};

// Least squares of log(median) against log(n) (poly) or k (exp).
// Requires at least 3 grid points.
ScalingFit scaling_fit(const std::vector<SummaryRow>& summary, ScalingModel model);

// Fixed column order; doubles printed in shortest round-trip form.
std::string emit_csv(const std::vector<RunRecord>& records);
std::vector<RunRecord> parse_csv(const std::string& text);
std::string emit_summary_csv(const std::vector<SummaryRow>& rows);

// Generic index-sliced parallel driver used by the harness and the
// verification suites. threads <= 0 picks hardware concurrency.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                  int threads = 0);

// Simple least squares y = intercept + slope x, with R^2.
ScalingFit least_squares(const std::vector<double>& xs, const std::vector<double>& ys);

} // namespace rsh

#endif
