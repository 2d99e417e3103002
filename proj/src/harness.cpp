#include "rsh/harness.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rsh/graph.hpp"
#include "rsh/mlst.hpp"
#include "rsh/oracles.hpp"
#include "rsh/submodular.hpp"
#include "rsh/tsp.hpp"
#include "rsh/tsp_fpt.hpp"
#include "rsh/vertex_cover.hpp"

namespace rsh {

using nlohmann::json;

std::uint64_t BudgetRule::evaluations(int n, double k) const {
    switch (kind) {
        case Kind::fixed:
            return fixed_evals;
        case Kind::poly_exp:
            return static_cast<std::uint64_t>(
                c * std::pow(base, k) * std::pow(static_cast<double>(n), degree));
        case Kind::vc_f2: {
            const double nn = static_cast<double>(n);
            return static_cast<std::uint64_t>(
                c * (nn * nn * std::log(nn) + k * nn * nn + nn * std::pow(4.0, k)));
        }
    }
    return fixed_evals;
}

namespace {

json budget_to_json(const BudgetRule& b) {
    json j;
    switch (b.kind) {
        case BudgetRule::Kind::fixed:
            j["kind"] = "fixed";
            j["evaluations"] = b.fixed_evals;
            break;
        case BudgetRule::Kind::poly_exp:
            j["kind"] = "poly_exp";
            j["c"] = b.c;
            j["base"] = b.base;
            j["degree"] = b.degree;
            break;
        case BudgetRule::Kind::vc_f2:
            j["kind"] = "vc_f2";
            j["c"] = b.c;
            break;
    }
    return j;
}

BudgetRule budget_from_json(const json& j) {
    BudgetRule b;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "fixed") {
        b.kind = BudgetRule::Kind::fixed;
        b.fixed_evals = j.at("evaluations").get<std::uint64_t>();
    } else if (kind == "poly_exp") {
        b.kind = BudgetRule::Kind::poly_exp;
        b.c = j.at("c").get<double>();
        b.base = j.at("base").get<double>();
        b.degree = j.at("degree").get<int>();
    } else if (kind == "vc_f2") {
        b.kind = BudgetRule::Kind::vc_f2;
        b.c = j.at("c").get<double>();
    } else {
        throw std::invalid_argument("unknown budget kind: " + kind);
    }
    return b;
}

} // namespace

std::string ExperimentConfig::canonical_json() const {
    json j;
    j["name"] = name;
    j["algorithm"] = algorithm;
    j["algo_params"] = algo_params;
    j["generator"] = generator;
    j["grid"] = grid;
    j["replicates"] = replicates;
    j["master_seed"] = master_seed;
    j["budget"] = budget_to_json(budget);
    if (min_success_rate) j["min_success_rate"] = *min_success_rate;
    return j.dump();
}

std::string ExperimentConfig::config_hash() const {
    const std::string s = canonical_json();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

ExperimentConfig parse_experiment_config(const std::string& text) {
    json j = json::parse(text);
    ExperimentConfig cfg;
    cfg.name = j.value("name", "");
    cfg.algorithm = j.at("algorithm").get<std::string>();
    cfg.algo_params = j.value("algo_params", json::object());
    cfg.generator = j.at("generator").get<std::string>();
    for (const json& p : j.at("grid")) cfg.grid.push_back(p);
    cfg.replicates = j.value("replicates", 1);
    cfg.master_seed = j.value("master_seed", std::uint64_t{1});
    cfg.budget = budget_from_json(j.at("budget"));
    if (j.contains("min_success_rate"))
        cfg.min_success_rate = j["min_success_rate"].get<double>();
    if (cfg.grid.empty()) throw std::invalid_argument("empty grid");
    if (cfg.replicates < 1) throw std::invalid_argument("replicates must be >= 1");
    return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_experiment_config(buf.str());
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                  int threads) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (threads == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

namespace {

// reserved stream-id space for instance sampling, separate from replicates
constexpr std::uint64_t kInstanceStreamBase = std::uint64_t{1} << 40;

struct RunCore {
    std::uint64_t evaluations = 0;
    bool success = false;
    std::int64_t t_zero_n = -1, t_kernel = -1, t_opt = -1;
};

struct PreparedPoint {
    std::string id;
    int n = 0;
    double param = 0.0;
    double eps = std::nan("");
    double a_eps = std::nan("");
    std::uint64_t budget_evals = 0;
    std::function<RunCore(RngStream&)> run; // thread-safe over shared immutable data
};

RunCore core_from(const Trajectory& traj) {
    RunCore core;
    core.evaluations = traj.hit_time ? *traj.hit_time : traj.evaluations_used;
    core.success = traj.success();
    return core;
}

PreparedPoint prepare_mlst(const ExperimentConfig& cfg, const json& point,
                           std::uint64_t instance_stream) {
    PreparedPoint pp;
    const std::string variant_name = cfg.algo_params.value("variant", "tree");
    const MlstVariant variant =
        variant_name == "generic" ? MlstVariant::generic : MlstVariant::tree_based;
    const bool start_lopt = cfg.algo_params.value("start", "default") == std::string("lopt");

    std::shared_ptr<Graph> graph;
    std::shared_ptr<SpanningTree> start;
    int target = 0;

    if (cfg.generator == "gloc") {
        const int r = point.at("r").get<int>();
        const int n = point.at("n").get<int>();
        auto inst = std::make_shared<GlocInstance>(gen_gloc(r, n));
        graph = std::shared_ptr<Graph>(inst, &inst->graph);
        target = leaf_count(inst->t_opt);
        if (start_lopt) start = std::shared_ptr<SpanningTree>(inst, &inst->t_lopt);
        pp.id = "gloc(r=" + std::to_string(r) + ",n=" + std::to_string(n) + ")";
        pp.param = r;
    } else if (cfg.generator == "random-graph") {
        const int n = point.at("n").get<int>();
        const double p = point.value("p", 0.3);
        RngStream gen_rng(cfg.master_seed, instance_stream);
        graph = std::make_shared<Graph>(gen_random_connected(n, p, gen_rng));
        target = brute_max_leaf_tree(*graph).optimum;
        pp.id = "random-graph(n=" + std::to_string(n) + ")#" +
                std::to_string(instance_stream - kInstanceStreamBase);
        pp.param = target;
    } else if (cfg.generator == "graph-file") {
        graph = std::make_shared<Graph>(load_graph_file(point.at("path").get<std::string>()));
        target = brute_max_leaf_tree(*graph).optimum;
        pp.id = point.at("path").get<std::string>();
        pp.param = target;
    } else {
        throw std::invalid_argument("mlst: unsupported generator " + cfg.generator);
    }

    pp.n = graph->n;
    pp.budget_evals = cfg.budget.evaluations(pp.n, pp.param);
    const std::uint64_t budget_evals = pp.budget_evals;
    pp.run = [graph, start, variant, target, budget_evals](RngStream& rng) {
        MlstOptions opts;
        if (start) opts.start = *start;
        opts.target_leaves = target;
        MlstResult res =
            run_mlst(*graph, variant, Budget{budget_evals}, rng, opts);
        return core_from(res.trajectory);
    };
    return pp;
}

PreparedPoint prepare_vc(const ExperimentConfig& cfg, const json& point,
                         std::uint64_t instance_stream) {
    PreparedPoint pp;
    const VcFitness fitness =
        cfg.algo_params.value("fitness", "f2") == std::string("f1") ? VcFitness::f1
                                                                    : VcFitness::f2;
    const VcMutation mutation = cfg.algo_params.value("mutation", "alt") == std::string("std")
                                    ? VcMutation::standard
                                    : VcMutation::alternative;

    std::shared_ptr<Graph> graph;
    if (cfg.generator == "bipartite") {
        const int a = point.at("a").get<int>();
        const int b = point.at("b").get<int>();
        graph = std::make_shared<Graph>(gen_complete_bipartite(a, b));
        pp.id = "K(" + std::to_string(a) + "," + std::to_string(b) + ")";
    } else if (cfg.generator == "random-graph") {
        const int n = point.at("n").get<int>();
        const double p = point.value("p", 0.3);
        RngStream gen_rng(cfg.master_seed, instance_stream);
        graph = std::make_shared<Graph>(gen_random_connected(n, p, gen_rng));
        pp.id = "random-graph(n=" + std::to_string(n) + ")#" +
                std::to_string(instance_stream - kInstanceStreamBase);
    } else if (cfg.generator == "graph-file") {
        graph = std::make_shared<Graph>(load_graph_file(point.at("path").get<std::string>()));
        pp.id = point.at("path").get<std::string>();
    } else {
        throw std::invalid_argument("vc: unsupported generator " + cfg.generator);
    }

    const int opt = brute_min_vertex_cover(*graph).optimum;
    pp.n = graph->n;
    pp.param = opt;
    pp.budget_evals = cfg.budget.evaluations(pp.n, pp.param);
    const std::uint64_t budget_evals = pp.budget_evals;
    pp.run = [graph, fitness, mutation, opt, budget_evals](RngStream& rng) {
        VcOptions opts;
        opts.target_cover_size = opt;
        VcResult res = run_vc(*graph, fitness, mutation, Budget{budget_evals}, rng, opts);
        RunCore core = core_from(res.trajectory);
        core.t_zero_n = res.t_zero_n;
        core.t_kernel = res.t_kernel;
        core.t_opt = res.t_opt;
        return core;
    };
    return pp;
}

std::shared_ptr<PointSet> sample_points(const ExperimentConfig& cfg, const json& point,
                                        std::uint64_t instance_stream, std::string* id) {
    if (cfg.generator == "points-file") {
        *id = point.at("path").get<std::string>();
        return std::make_shared<PointSet>(load_points_file(point.at("path").get<std::string>()));
    }
    const int n = point.at("n").get<int>();
    const int m = point.value("m", 64);
    RngStream gen_rng(cfg.master_seed, instance_stream);
    if (cfg.generator == "points-convex") {
        *id = "points-convex(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")#" +
              std::to_string(instance_stream - kInstanceStreamBase);
        return std::make_shared<PointSet>(gen_convex_instance(n, m, gen_rng));
    }
    if (cfg.generator == "points-inner") {
        const int k = point.at("k").get<int>();
        *id = "points-inner(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",m=" +
              std::to_string(m) + ")#" + std::to_string(instance_stream - kInstanceStreamBase);
        return std::make_shared<PointSet>(gen_inner_instance(n, k, m, gen_rng));
    }
    throw std::invalid_argument("tsp: unsupported generator " + cfg.generator);
}

PreparedPoint prepare_tsp(const ExperimentConfig& cfg, const json& point,
                          std::uint64_t instance_stream) {
    PreparedPoint pp;
    auto ps = sample_points(cfg, point, instance_stream, &pp.id);
    pp.n = ps->n();
    pp.param = ps->k();
    if (ps->n() <= 50) {
        AngleBound ab = angle_bound(*ps);
        pp.eps = ab.epsilon;
        pp.a_eps = ab.a_eps;
    }
    const double target = held_karp(*ps).optimum;
    pp.budget_evals = cfg.budget.evaluations(pp.n, pp.param);
    const std::uint64_t budget_evals = pp.budget_evals;

    if (cfg.algorithm == "tsp-rls") {
        const bool audit = cfg.algo_params.value("audit_crossings", false);
        pp.run = [ps, target, budget_evals, audit](RngStream& rng) {
            TspOptions opts;
            opts.target_cost = target;
            opts.audit_crossings = audit;
            TspResult res = run_rls(*ps, Budget{budget_evals}, rng, opts);
            RunCore core = core_from(res.trajectory);
            core.t_kernel = res.t_crossing_free; // crossing-free milestone
            return core;
        };
    } else if (cfg.algorithm == "tsp-ea") {
        const int mu = cfg.algo_params.value("mu", 1);
        const int lambda = cfg.algo_params.value("lambda", 1);
        const TspMutation mut = cfg.algo_params.value("mutation", "2opt") == std::string("mixed")
                                    ? TspMutation::mixed
                                    : TspMutation::two_opt;
        pp.run = [ps, target, budget_evals, mu, lambda, mut](RngStream& rng) {
            TspOptions opts;
            opts.target_cost = target;
            TspResult res = run_mu_lambda(*ps, mu, lambda, mut, Budget{budget_evals}, rng, opts);
            return core_from(res.trajectory);
        };
    } else if (cfg.algorithm == "tsp-fpt-ea") {
        const int lambda = cfg.algo_params.value("lambda", 10);
        pp.run = [ps, target, budget_evals, lambda](RngStream& rng) {
            FptEaOptions opts;
            opts.target_cost = target;
            FptEaResult res = run_fpt_ea(*ps, lambda, Budget{budget_evals}, rng, opts);
            return core_from(res.trajectory);
        };
    } else if (cfg.algorithm == "tsp-ea-k") {
        const int mu = cfg.algo_params.value("mu", 1);
        const int lambda = cfg.algo_params.value("lambda", 1);
        const BasicOp op = cfg.algo_params.value("op", "2opt") == std::string("jump")
                               ? BasicOp::jump
                               : BasicOp::two_opt;
        pp.run = [ps, target, budget_evals, mu, lambda, op](RngStream& rng) {
            EaKOptions opts;
            opts.target_cost = target;
            EaKResult res = run_ea_k(*ps, mu, lambda, op, Budget{budget_evals}, rng, opts);
            return core_from(res.trajectory);
        };
    } else {
        throw std::invalid_argument("unknown tsp algorithm " + cfg.algorithm);
    }
    return pp;
}

PreparedPoint prepare_submodular(const ExperimentConfig& cfg, const json& point,
                                 std::uint64_t /*instance_stream*/) {
    PreparedPoint pp;
    std::shared_ptr<SubmodularInstance> inst;
    if (cfg.generator == "submodular-file") {
        const std::string path = point.at("path").get<std::string>();
        inst = std::make_shared<SubmodularInstance>(load_submodular_instance(path));
        pp.id = path;
    } else if (cfg.generator == "submodular-inline") {
        inst = std::make_shared<SubmodularInstance>(
            parse_submodular_instance(point.at("instance").dump()));
        pp.id = point.value("id", "inline");
    } else {
        throw std::invalid_argument("submodular: unsupported generator " + cfg.generator);
    }
    pp.n = inst->fn->ground_size();
    pp.param = static_cast<double>(inst->matroids.size());

    const double opt = brute_submodular_opt(*inst->fn, inst->matroid_ptrs()).optimum;
    const double ratio = cfg.algo_params.value("target_ratio", 1.0);
    const double target = ratio * opt;
    const SubmodularAlgo algo = cfg.algorithm == "submodular-1p1"
                                    ? SubmodularAlgo::one_plus_one_h
                                    : SubmodularAlgo::gsemo_g;
    pp.budget_evals = cfg.budget.evaluations(pp.n, pp.param);
    const std::uint64_t budget_evals = pp.budget_evals;
    pp.run = [inst, algo, target, budget_evals](RngStream& rng) {
        SubmodularOptions opts;
        opts.target_value = target;
        SubmodularResult res = run_submodular_ea(*inst->fn, inst->matroid_ptrs(), algo,
                                                 Budget{budget_evals}, rng, opts);
        return core_from(res.trajectory);
    };
    return pp;
}

PreparedPoint prepare_point(const ExperimentConfig& cfg, const json& point,
                            std::uint64_t instance_stream) {
    if (cfg.algorithm == "mlst") return prepare_mlst(cfg, point, instance_stream);
    if (cfg.algorithm == "vc") return prepare_vc(cfg, point, instance_stream);
    if (cfg.algorithm.rfind("tsp-", 0) == 0) return prepare_tsp(cfg, point, instance_stream);
    if (cfg.algorithm.rfind("submodular-", 0) == 0)
        return prepare_submodular(cfg, point, instance_stream);
    throw std::invalid_argument("unknown algorithm " + cfg.algorithm);
}

// grid entries may carry "count": N to expand into N sampled instances
std::vector<json> expand_grid(const std::vector<json>& grid) {
    std::vector<json> out;
    for (const json& point : grid) {
        const int count = point.value("count", 1);
        for (int i = 0; i < count; ++i) {
            json p = point;
            p.erase("count");
            p["sample_index"] = i;
            out.push_back(std::move(p));
        }
    }
    return out;
}

} // namespace

std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg, int threads) {
    const std::vector<json> points = expand_grid(cfg.grid);
    const std::string hash = cfg.config_hash();

    std::vector<PreparedPoint> prepared(points.size());
    parallel_for(points.size(), [&](std::size_t g) {
        prepared[g] = prepare_point(cfg, points[g], kInstanceStreamBase + g);
    }, threads);

    const std::size_t total = points.size() * static_cast<std::size_t>(cfg.replicates);
    std::vector<RunRecord> records(total);
    parallel_for(total, [&](std::size_t task) {
        const std::size_t g = task / cfg.replicates;
        const std::size_t rep = task % cfg.replicates;
        const PreparedPoint& pp = prepared[g];
        const std::uint64_t stream_id = g * cfg.replicates + rep;
        RngStream rng(cfg.master_seed, stream_id);
        RunCore core = pp.run(rng);
        RunRecord& rec = records[task];
        rec.config_hash = hash;
        rec.instance = pp.id;
        rec.n = pp.n;
        rec.param = pp.param;
        rec.eps = pp.eps;
        rec.a_eps = pp.a_eps;
        rec.stream_id = stream_id;
        rec.evaluations = core.evaluations;
        rec.success = core.success;
        rec.t_zero_n = core.t_zero_n;
        rec.t_kernel = core.t_kernel;
        rec.t_opt = core.t_opt;
    }, threads);
    return records;
}

bool operator==(const RunRecord& a, const RunRecord& b) {
    auto eq_nan = [](double x, double y) {
        return (std::isnan(x) && std::isnan(y)) || x == y;
    };
    return a.config_hash == b.config_hash && a.instance == b.instance && a.n == b.n &&
           eq_nan(a.param, b.param) && eq_nan(a.eps, b.eps) && eq_nan(a.a_eps, b.a_eps) &&
           a.stream_id == b.stream_id && a.evaluations == b.evaluations &&
           a.success == b.success && a.t_zero_n == b.t_zero_n && a.t_kernel == b.t_kernel &&
           a.t_opt == b.t_opt;
}

namespace {

std::string format_double(double v) {
    if (std::isnan(v)) return "";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double parse_double_field(const std::string& s) {
    if (s.empty()) return std::nan("");
    return std::strtod(s.c_str(), nullptr);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else {
            field.push_back(c);
        }
    }
    fields.push_back(field);
    return fields;
}

constexpr const char* kCsvHeader =
    "config_hash,instance,n,param,eps,a_eps,stream_id,evaluations,success,"
    "t_zero_n,t_kernel,t_opt";

} // namespace

std::string emit_csv(const std::vector<RunRecord>& records) {
    std::ostringstream out;
    out << kCsvHeader << "\n";
    for (const RunRecord& r : records) {
        out << r.config_hash << ',' << r.instance << ',' << r.n << ','
            << format_double(r.param) << ',' << format_double(r.eps) << ','
            << format_double(r.a_eps) << ',' << r.stream_id << ',' << r.evaluations << ','
            << (r.success ? 1 : 0) << ',' << r.t_zero_n << ',' << r.t_kernel << ','
            << r.t_opt << "\n";
    }
    return out.str();
}

std::vector<RunRecord> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw std::runtime_error("bad CSV header");
    std::vector<RunRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split_csv_line(line);
        if (f.size() != 12) throw std::runtime_error("bad CSV row");
        RunRecord r;
        r.config_hash = f[0];
        r.instance = f[1];
        r.n = std::stoi(f[2]);
        r.param = parse_double_field(f[3]);
        r.eps = parse_double_field(f[4]);
        r.a_eps = parse_double_field(f[5]);
        r.stream_id = std::stoull(f[6]);
        r.evaluations = std::stoull(f[7]);
        r.success = f[8] == "1";
        r.t_zero_n = std::stoll(f[9]);
        r.t_kernel = std::stoll(f[10]);
        r.t_opt = std::stoll(f[11]);
        records.push_back(std::move(r));
    }
    return records;
}

namespace {

double quantile_sorted(const std::vector<double>& sorted, double p) {
    if (sorted.empty()) return std::nan("");
    const double pos = p * (static_cast<double>(sorted.size()) - 1.0);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

} // namespace

std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records,
                                  bool exclude_censored) {
    if (records.empty()) throw std::invalid_argument("summarize: empty input");
    std::vector<SummaryRow> rows;
    std::vector<std::string> order;
    std::vector<std::vector<double>> evals;
    for (const RunRecord& r : records) {
        std::size_t idx = 0;
        for (; idx < order.size(); ++idx)
            if (order[idx] == r.instance) break;
        if (idx == order.size()) {
            order.push_back(r.instance);
            rows.push_back(SummaryRow{r.instance, r.n, r.param, 0, 0, 0, 0, 0, 0, 0});
            evals.emplace_back();
        }
        ++rows[idx].runs;
        if (r.success) ++rows[idx].successes;
        if (r.success || !exclude_censored)
            evals[idx].push_back(static_cast<double>(r.evaluations));
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        SummaryRow& row = rows[i];
        row.success_rate = static_cast<double>(row.successes) / row.runs;
        std::vector<double>& xs = evals[i];
        std::sort(xs.begin(), xs.end());
        if (!xs.empty()) {
            double total = 0;
            for (double x : xs) total += x;
            row.mean = total / static_cast<double>(xs.size());
            row.median = quantile_sorted(xs, 0.5);
            row.q1 = quantile_sorted(xs, 0.25);
            row.q3 = quantile_sorted(xs, 0.75);
        }
    }
    return rows;
}

ScalingFit least_squares(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double denom = n * sxx - sx * sx;
    ScalingFit fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss_res = 0, ss_tot = 0;
    const double mean_y = sy / n;
    for (std::size_t i = 0; i < n; ++i) {
        const double pred = fit.intercept + fit.slope * xs[i];
        fit.residuals.push_back(ys[i] - pred);
        ss_res += (ys[i] - pred) * (ys[i] - pred);
        ss_tot += (ys[i] - mean_y) * (ys[i] - mean_y);
    }
    fit.r_squared = ss_tot == 0 ? 1.0 : 1.0 - ss_res / ss_tot;
    return fit;
}

ScalingFit scaling_fit(const std::vector<SummaryRow>& summary, ScalingModel model) {
    if (summary.size() < 3)
        throw std::invalid_argument("scaling_fit: need at least 3 grid points");
    std::vector<double> xs, ys;
    for (const SummaryRow& row : summary) {
        xs.push_back(model == ScalingModel::poly_in_n_fixed_k
                         ? std::log(static_cast<double>(row.n))
                         : row.param);
        ys.push_back(std::log(row.median));
    }
    return least_squares(xs, ys);
}

std::string emit_summary_csv(const std::vector<SummaryRow>& rows) {
    std::ostringstream out;
    out << "instance,n,param,runs,successes,success_rate,median,mean,q1,q3\n";
    for (const SummaryRow& r : rows) {
        out << r.instance << ',' << r.n << ',' << format_double(r.param) << ',' << r.runs
            << ',' << r.successes << ',' << format_double(r.success_rate) << ','
            << format_double(r.median) << ',' << format_double(r.mean) << ','
            << format_double(r.q1) << ',' << format_double(r.q3) << "\n";
    }
    return out.str();
}

} // namespace rsh
