#include "rsh/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rsh/graph.hpp"
#include "rsh/harness.hpp"
#include "rsh/oracles.hpp"
#include "rsh/selfcheck.hpp"
#include "rsh/submodular.hpp"

namespace rsh {

namespace {

void add_gen_commands(CLI::App& gen, std::ostream& out) {
    auto gloc = gen.add_subcommand("gloc", "chapter maximum-leaf instance");
    auto gr = std::make_shared<int>(4);
    auto gn = std::make_shared<int>(16);
    auto gout = std::make_shared<std::string>();
    gloc->add_option("--r", *gr, "component size")->required();
    gloc->add_option("--n", *gn, "total vertices")->required();
    gloc->add_option("-o,--output", *gout, "output file")->required();
    gloc->callback([gr, gn, gout, &out]() {
        GlocInstance inst = gen_gloc(*gr, *gn);
        std::ostringstream comment;
        comment << "gloc r=" << *gr << " n=" << *gn
                << " layout: comp i in {0,1}: u_i=i*r v_i=i*r+1 fill=i*r+2..i*r+r-1;"
                << " x=2r y=2r+1 path=2r+2..n-1 (2r+2 adjacent to x)";
        save_graph_file(*gout, inst.graph, comment.str());
        out << "wrote " << *gout << " (n=" << inst.graph.n << " m=" << inst.graph.m()
            << ")\n";
    });

    auto bip = gen.add_subcommand("bipartite", "complete bipartite K_{a,b}");
    auto ba = std::make_shared<int>(2);
    auto bb = std::make_shared<int>(3);
    auto bout = std::make_shared<std::string>();
    bip->add_option("--a", *ba)->required();
    bip->add_option("--b", *bb)->required();
    bip->add_option("-o,--output", *bout)->required();
    bip->callback([ba, bb, bout, &out]() {
        Graph g = gen_complete_bipartite(*ba, *bb);
        std::ostringstream comment;
        comment << "bipartite a=" << *ba << " b=" << *bb << " left=0.." << *ba - 1;
        save_graph_file(*bout, g, comment.str());
        out << "wrote " << *bout << " (n=" << g.n << " m=" << g.m() << ")\n";
    });

    auto rg = gen.add_subcommand("random-graph", "random connected graph");
    auto rn = std::make_shared<int>(8);
    auto rp = std::make_shared<double>(0.3);
    auto rseed = std::make_shared<std::uint64_t>(1);
    auto rout = std::make_shared<std::string>();
    rg->add_option("--n", *rn)->required();
    rg->add_option("--p", *rp, "extra edge probability");
    rg->add_option("--seed", *rseed);
    rg->add_option("-o,--output", *rout)->required();
    rg->callback([rn, rp, rseed, rout, &out]() {
        RngStream rng(*rseed, 0);
        Graph g = gen_random_connected(*rn, *rp, rng);
        std::ostringstream comment;
        comment << "random-graph n=" << *rn << " p=" << *rp << " seed=" << *rseed;
        save_graph_file(*rout, g, comment.str());
        out << "wrote " << *rout << " (n=" << g.n << " m=" << g.m() << ")\n";
    });

    auto cp = gen.add_subcommand("points-convex", "convex position grid points");
    auto cn = std::make_shared<int>(10);
    auto cm = std::make_shared<int>(64);
    auto cseed = std::make_shared<std::uint64_t>(1);
    auto cout_path = std::make_shared<std::string>();
    cp->add_option("--n", *cn)->required();
    cp->add_option("--m", *cm, "grid size");
    cp->add_option("--seed", *cseed);
    cp->add_option("-o,--output", *cout_path)->required();
    cp->callback([cn, cm, cseed, cout_path, &out]() {
        RngStream rng(*cseed, 0);
        PointSet ps = gen_convex_instance(*cn, *cm, rng);
        std::ostringstream comment;
        comment << "points-convex n=" << *cn << " m=" << *cm << " seed=" << *cseed;
        save_points_file(*cout_path, ps, comment.str());
        out << "wrote " << *cout_path << " (n=" << ps.n() << " k=" << ps.k() << ")\n";
    });

    auto ip = gen.add_subcommand("points-inner", "grid points with k inner points");
    auto in_ = std::make_shared<int>(10);
    auto ik = std::make_shared<int>(2);
    auto im = std::make_shared<int>(64);
    auto iseed = std::make_shared<std::uint64_t>(1);
    auto iout = std::make_shared<std::string>();
    ip->add_option("--n", *in_)->required();
    ip->add_option("--k", *ik)->required();
    ip->add_option("--m", *im, "grid size");
    ip->add_option("--seed", *iseed);
    ip->add_option("-o,--output", *iout)->required();
    ip->callback([in_, ik, im, iseed, iout, &out]() {
        RngStream rng(*iseed, 0);
        PointSet ps = gen_inner_instance(*in_, *ik, *im, rng);
        std::ostringstream comment;
        comment << "points-inner n=" << *in_ << " k=" << *ik << " m=" << *im
                << " seed=" << *iseed;
        save_points_file(*iout, ps, comment.str());
        out << "wrote " << *iout << " (n=" << ps.n() << " k=" << ps.k() << ")\n";
    });
}

void add_oracle_commands(CLI::App& oracle, std::ostream& out) {
    auto vc = oracle.add_subcommand("vc", "brute-force minimum vertex cover");
    auto vc_path = std::make_shared<std::string>();
    vc->add_option("file", *vc_path)->required();
    vc->callback([vc_path, &out]() {
        Graph g = load_graph_file(*vc_path);
        auto res = brute_min_vertex_cover(g);
        out << "optimum " << res.optimum << "\n";
        out << "search_space " << res.search_space_size << "\n";
        if (!res.witnesses.empty()) out << "optimal_covers " << res.witnesses.size() << "\n";
    });

    auto ml = oracle.add_subcommand("mlst", "brute-force maximum-leaf spanning tree");
    auto ml_path = std::make_shared<std::string>();
    ml->add_option("file", *ml_path)->required();
    ml->callback([ml_path, &out]() {
        Graph g = load_graph_file(*ml_path);
        auto res = brute_max_leaf_tree(g);
        out << "optimum " << res.optimum << "\n";
        out << "search_space " << res.search_space_size << "\n";
    });

    auto tsp = oracle.add_subcommand("tsp", "Held-Karp exact tour");
    auto tsp_path = std::make_shared<std::string>();
    tsp->add_option("file", *tsp_path)->required();
    tsp->callback([tsp_path, &out]() {
        PointSet ps = load_points_file(*tsp_path);
        auto res = held_karp(ps);
        out << "optimum " << res.optimum << "\n";
        out << "search_space " << res.search_space_size << "\n";
    });

    auto sub = oracle.add_subcommand("submodular", "brute-force constrained maximum");
    auto sub_path = std::make_shared<std::string>();
    sub->add_option("file", *sub_path)->required();
    sub->callback([sub_path, &out]() {
        SubmodularInstance inst = load_submodular_instance(*sub_path);
        auto res = brute_submodular_opt(*inst.fn, inst.matroid_ptrs());
        out << "optimum " << res.optimum << "\n";
        out << "search_space " << res.search_space_size << "\n";
    });
}

// single runs are one-point sweeps; reuse the harness adapters
void add_run_command(CLI::App& run, std::ostream& out) {
    auto algo = std::make_shared<std::string>();
    auto instance = std::make_shared<std::string>();
    auto budget = std::make_shared<std::uint64_t>(100000);
    auto seed = std::make_shared<std::uint64_t>(1);
    auto params = std::make_shared<std::string>("{}");
    run.add_option("algorithm", *algo,
                   "mlst | vc | tsp-rls | tsp-ea | tsp-fpt-ea | tsp-ea-k | "
                   "submodular-1p1 | submodular-gsemo")
        ->required();
    run.add_option("instance", *instance, "instance file path")->required();
    run.add_option("--budget", *budget, "evaluation budget");
    run.add_option("--seed", *seed, "master seed");
    run.add_option("--params", *params, "algorithm parameters as JSON");
    run.callback([algo, instance, budget, seed, params, &out]() {
        ExperimentConfig cfg;
        cfg.name = "cli-run";
        cfg.algorithm = *algo;
        cfg.algo_params = nlohmann::json::parse(*params);
        if (algo->rfind("tsp-", 0) == 0)
            cfg.generator = "points-file";
        else if (algo->rfind("submodular-", 0) == 0)
            cfg.generator = "submodular-file";
        else
            cfg.generator = "graph-file";
        cfg.grid.push_back(nlohmann::json{{"path", *instance}});
        cfg.replicates = 1;
        cfg.master_seed = *seed;
        cfg.budget.kind = BudgetRule::Kind::fixed;
        cfg.budget.fixed_evals = *budget;
        out << "# config " << cfg.canonical_json() << "\n";
        auto records = run_experiment(cfg);
        out << emit_csv(records);
    });
}

void add_sweep_command(CLI::App& sweep, std::ostream& out, int& exit_code) {
    auto cfg_path = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>();
    auto summary_path = std::make_shared<std::string>();
    auto threads = std::make_shared<int>(0);
    sweep.add_option("config", *cfg_path, "experiment config JSON")->required();
    sweep.add_option("-o,--output", *out_path, "records CSV path")->required();
    sweep.add_option("--summary", *summary_path, "summary CSV path");
    sweep.add_option("--threads", *threads);
    sweep.callback([cfg_path, out_path, summary_path, threads, &out, &exit_code]() {
        ExperimentConfig cfg = load_experiment_config(*cfg_path);
        out << "# config " << cfg.canonical_json() << "\n";
        auto records = run_experiment(cfg, *threads);
        {
            std::ofstream f(*out_path);
            f << emit_csv(records);
        }
        auto summary = summarize(records);
        if (!summary_path->empty()) {
            std::ofstream f(*summary_path);
            f << emit_summary_csv(summary);
        }
        out << "wrote " << records.size() << " records to " << *out_path << "\n";
        if (cfg.min_success_rate) {
            for (const auto& row : summary) {
                out << row.instance << " success_rate=" << row.success_rate << "\n";
                if (row.success_rate < *cfg.min_success_rate) exit_code = 1;
            }
            if (exit_code == 1) out << "success-rate assertion FAILED\n";
        }
    });
}

} // namespace

int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"randomized search heuristics lab"};
    app.require_subcommand(1);
    int exit_code = 0;

    CLI::App* gen = app.add_subcommand("gen", "instance generators");
    gen->require_subcommand(1);
    add_gen_commands(*gen, out);

    CLI::App* oracle = app.add_subcommand("oracle", "exact brute-force references");
    oracle->require_subcommand(1);
    add_oracle_commands(*oracle, out);

    CLI::App* run = app.add_subcommand("run", "single seeded run, RunRecord CSV on stdout");
    add_run_command(*run, out);

    CLI::App* sweep = app.add_subcommand("sweep", "seeded replicate experiment");
    add_sweep_command(*sweep, out, exit_code);

    CLI::App* verify = app.add_subcommand("verify", "derived-oracle cross-check suite");
    auto verify_threads = std::make_shared<int>(0);
    verify->add_option("--threads", *verify_threads);
    verify->callback([verify_threads, &out, &exit_code]() {
        auto results = selfcheck::run_all(*verify_threads);
        for (const auto& r : results)
            out << (r.pass ? "PASS" : "FAIL") << "  " << r.name << ": " << r.detail << "\n";
        for (const auto& r : results)
            if (!r.pass) exit_code = 1;
    });

    std::vector<const char*> argv;
    argv.push_back("rsh");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

} // namespace rsh
