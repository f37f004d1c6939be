#include "hg_cli/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hg/instance_io.hpp"
#include "hg/oracle.hpp"
#include "hg/solvers.hpp"
#include "hg_cli/bench.hpp"

namespace hg::cli {

namespace {

using nlohmann::json;

int exit_code(Status s) {
    switch (s) {
        case Status::kSolved:
        case Status::kYes: return kExitOk;
        case Status::kNo: return kExitNo;
        case Status::kTimeout: return kExitTimeout;
    }
    return kExitError;
}

json counters_json(const OpCounters& c) {
    json out = json::object();
    for (std::size_t i = 0; i < kNumOps; ++i) {
        const OpStats& s = c.by_op[i];
        out[std::string(op_name(static_cast<Op>(i)))] = {{"calls", s.calls}, {"reads", s.reads}, {"writes", s.writes}};
    }
    return out;
}

json result_json(const BenchRecord& rec, const SolverResult& r, const InstanceSpec& spec) {
    json out = {{"instance", rec.instance},
                {"n", spec.graph.n},
                {"m", spec.graph.edges.size()},
                {"problem", rec.problem},
                {"repr", rec.repr},
                {"fold", rec.fold},
                {"status", std::string(to_string(r.status))},
                {"answer", rec.answer},
                {"value", r.value},
                {"k", rec.k},
                {"nodes", rec.nodes},
                {"wall_ms", rec.wall_ms},
                {"config_hash", rec.config_hash},
                {"counters", counters_json(r.counters)},
                {"solution", r.solution}};
    json edits = json::array();
    for (const EditOp& e : r.edits) edits.push_back({{"u", e.pair.u}, {"v", e.pair.v}, {"op", e.add ? "add" : "delete"}});
    out["edits"] = std::move(edits);
    return out;
}

SolverResult result_from_json(const json& doc, Problem& problem) {
    const auto p = parse_problem(doc.at("problem").get<std::string>());
    if (!p) throw GraphError(ErrorKind::kParse, "result: unknown problem");
    problem = *p;
    SolverResult r;
    r.problem = problem;
    const std::string status = doc.at("status").get<std::string>();
    if (status == "solved") r.status = Status::kSolved;
    else if (status == "yes") r.status = Status::kYes;
    else if (status == "no") r.status = Status::kNo;
    else r.status = Status::kTimeout;
    r.value = doc.value("value", -1);
    r.k = doc.value("k", -1);
    r.solution = doc.value("solution", std::vector<Vertex>{});
    for (const json& e : doc.value("edits", json::array()))
        r.edits.push_back({{e.at("u").get<Vertex>(), e.at("v").get<Vertex>()}, e.at("op").get<std::string>() == "add"});
    return r;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw GraphError(ErrorKind::kIo, "cannot write " + path);
    out << text;
}

struct SolveArgs {
    std::string problem;
    std::string input;
    std::string repr = "hybrid";
    int k = -1;
    bool fold = false;
    double timeout_s = 0.0;
    int reps = 3;
    bool json = false;
    bool csv = false;
    bool complement = false;
    bool count_cells = false;
    bool verify = false;
};

int cmd_solve(const SolveArgs& a) {
    const auto problem = parse_problem(a.problem);
    const auto repr = parse_repr(a.repr);
    if (!problem) throw GraphError(ErrorKind::kUsage, "unknown problem '" + a.problem + "' (vc, vc-parm, ds, ce)");
    if (!repr) throw GraphError(ErrorKind::kUsage, "unknown representation '" + a.repr + "' (hybrid, alist)");
    if ((*problem == Problem::kVcParm || *problem == Problem::kCeParm) && a.k < 0)
        throw GraphError(ErrorKind::kUsage, "--k is required for " + a.problem);

    const InstanceSpec spec = read_instance(a.input, a.complement);
    for (const std::string& w : spec.warnings) std::cerr << "warning: " << w << '\n';
    RunConfig cfg{*problem, *repr, a.fold, a.k, a.timeout_s};

    SolverResult r;
    if (a.count_cells) {
        SolveOptions opt{cfg.repr, cfg.fold, cfg.k,
                         cfg.timeout_s > 0 ? SearchLimits::seconds(cfg.timeout_s) : SearchLimits::none(), true};
        r = solve(cfg.problem, spec.graph, opt);
    } else {
        r = run_repeated(spec.graph, cfg, a.reps);
    }
    BenchRecord rec = make_record(spec.name, cfg, r);
    rec.seed = sidecar_seed(a.input);

    bool verified = true;
    if (a.verify && r.has_witness()) verified = verify_solution(cfg.problem, spec.graph, r);

    if (a.json) {
        json out = result_json(rec, r, spec);
        if (a.verify) out["verified"] = verified;
        std::cout << out.dump(2) << '\n';
    } else if (a.csv) {
        std::cout << csv_header() << '\n' << csv_row(rec) << '\n';
    } else {
        std::cout << "instance  " << spec.name << " (n=" << spec.graph.n << ", m=" << spec.graph.edges.size() << ")\n"
                  << "problem   " << rec.problem << " [" << rec.repr << (rec.fold ? ", fold" : "") << "]"
                  << (rec.k >= 0 ? " k=" + std::to_string(rec.k) : "") << '\n'
                  << "status    " << to_string(r.status) << '\n';
        if (r.status == Status::kSolved) std::cout << "size      " << r.value << '\n';
        if (r.status == Status::kYes && cfg.problem == Problem::kCeParm) std::cout << "edits     " << r.value << '\n';
        std::cout << "nodes     " << r.nodes << '\n' << "time      " << rec.wall_ms << " ms\n";
        if (a.verify) std::cout << "verified  " << (verified ? "yes" : "NO") << '\n';
    }
    if (!verified) return kExitError;
    return exit_code(r.status);
}

struct GenArgs {
    std::string kind;
    int n = 0;
    long long m = 0;
    int clusters = 1;
    int k = 0;
    int d = 4;
    int density = 2;
    std::uint64_t seed = 1;
    std::string out;
};

int cmd_gen(const GenArgs& a) {
    InstanceSpec spec;
    if (a.kind == "gnm") spec = gen_random_gnm(a.n, a.m, a.seed);
    else if (a.kind == "ce") spec = gen_cluster_editing(a.n, a.clusters, a.k, a.seed);
    else if (a.kind == "regular") spec = gen_random_regular(a.n, a.d, a.seed);
    else if (a.kind == "phat") spec = gen_phat(a.n, a.density, a.seed);
    else throw GraphError(ErrorKind::kUsage, "unknown generator '" + a.kind + "' (gnm, ce, regular, phat)");

    write_text(a.out, format_edge_list(spec.graph));
    if (!a.out.empty() && a.out != "-") {
        json meta = json::object();
        for (const auto& [key, value] : spec.params) meta[key] = value;
        meta["name"] = spec.name;
        meta["n"] = spec.graph.n;
        meta["m"] = spec.graph.edges.size();
        if (spec.planted_k >= 0) meta["planted_k"] = spec.planted_k;
        write_text(a.out + ".meta.json", meta.dump(2) + "\n");
    }
    return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& result_path, bool complement) {
    const InstanceSpec spec = read_instance(input, complement);
    json doc;
    if (result_path == "-") {
        doc = json::parse(std::cin);
    } else {
        std::ifstream in(result_path);
        if (!in) throw GraphError(ErrorKind::kIo, "cannot open " + result_path);
        doc = json::parse(in);
    }
    Problem problem{};
    const SolverResult r = result_from_json(doc, problem);
    if (!r.has_witness()) {
        std::cout << "nothing to verify: status " << to_string(r.status) << '\n';
        return kExitNo;
    }
    const bool ok = verify_solution(problem, spec.graph, r);
    std::cout << (ok ? "valid" : "INVALID") << '\n';
    return ok ? kExitOk : kExitNo;
}

int cmd_oracle(const std::string& problem, const std::string& input, int k) {
    const SimpleGraph g = read_instance(input).graph;
    if (problem == "vc") {
        std::cout << oracle::brute_vc(g) << '\n';
        return kExitOk;
    }
    if (problem == "ds") {
        std::cout << oracle::brute_ds(g) << '\n';
        return kExitOk;
    }
    if (problem == "ce") {
        const int best = oracle::brute_ce_min(g);
        if (k < 0) {
            std::cout << best << '\n';
            return kExitOk;
        }
        std::cout << (best <= k ? "yes" : "no") << '\n';
        return best <= k ? kExitOk : kExitNo;
    }
    throw GraphError(ErrorKind::kUsage, "oracle supports vc, ds, ce");
}

struct BenchArgs {
    std::string manifest;
    std::string out;
    int jobs = 1;
    int reps = -1;
    double timeout_s = -1;
};

int cmd_bench(const BenchArgs& a) {
    BenchOptions opt;
    opt.jobs = a.jobs;
    if (a.reps > 0) opt.reps = a.reps;
    if (a.timeout_s >= 0) opt.timeout_s = a.timeout_s;
    const BenchReport report = run_bench(a.manifest, opt);
    std::string csv = csv_header() + "\n";
    for (const BenchRecord& r : report.rows) csv += csv_row(r) + "\n";
    write_text(a.out, csv);
    std::cerr << report.rows.size() << " rows, " << report.pairs << " pairs, hybrid faster in " << report.hybrid_wins;
    if (report.median_speedup) std::cerr << ", median speedup " << *report.median_speedup;
    std::cerr << '\n';
    return report.any_error ? kExitError : kExitOk;
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"Exact graph search on hybrid and adjacency-list representations"};
    app.name("hgraph");
    app.require_subcommand(1);

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "Solve one instance");
    solve->add_option("problem", sa.problem, "vc | vc-parm | ds | ce")->required();
    solve->add_option("-i,--input", sa.input, "Instance file (DIMACS or edge list)")->required();
    solve->add_option("--repr", sa.repr, "hybrid | alist")->capture_default_str();
    solve->add_option("-k,--k", sa.k, "Parameter for vc-parm and ce");
    solve->add_flag("--fold", sa.fold, "Degree-two folding (vc-parm, hybrid only)");
    solve->add_option("--timeout-s", sa.timeout_s, "Per-run time limit in seconds, 0 = none")
        ->envname("HGRAPH_TIMEOUT_S");
    solve->add_option("--reps", sa.reps, "Repetitions; the median time is reported")
        ->envname("HGRAPH_REPS")
        ->capture_default_str();
    auto* json_flag = solve->add_flag("--json", sa.json, "Print the result as JSON");
    solve->add_flag("--csv", sa.csv, "Print the result as a CSV row")->excludes(json_flag);
    solve->add_flag("--complement", sa.complement, "Solve on the complement graph");
    solve->add_flag("--count-cells", sa.count_cells, "Instrumented run with cell-level counters (one repetition)");
    solve->add_flag("--verify", sa.verify, "Check the witness against the input");

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "Generate an instance in edge-list format");
    gen->add_option("kind", ga.kind, "gnm | ce | regular | phat")->required();
    gen->add_option("--n", ga.n, "Vertices")->required();
    gen->add_option("--m", ga.m, "Edges (gnm)");
    gen->add_option("--clusters", ga.clusters, "Clusters (ce)");
    gen->add_option("--k", ga.k, "Planted edits (ce)");
    gen->add_option("--d", ga.d, "Degree (regular)");
    gen->add_option("--class", ga.density, "Density class 1-3 (phat)");
    gen->add_option("--seed", ga.seed, "PRNG seed")->capture_default_str();
    gen->add_option("-o,--out", ga.out, "Output path (default stdout); writes <out>.meta.json too");

    std::string v_input, v_result;
    bool v_complement = false;
    auto* verify = app.add_subcommand("verify", "Check a solve --json result against its instance");
    verify->add_option("-i,--input", v_input, "Instance file")->required();
    verify->add_option("-r,--result", v_result, "Result JSON, '-' for stdin")->required();
    verify->add_flag("--complement", v_complement, "The result was computed on the complement");

    BenchArgs ba;
    auto* bench = app.add_subcommand("bench", "Run a benchmark manifest and print CSV");
    bench->add_option("manifest", ba.manifest, "Manifest JSON")->required();
    bench->add_option("-o,--out", ba.out, "CSV output path (default stdout)");
    bench->add_option("-j,--jobs", ba.jobs, "Worker threads")->capture_default_str();
    bench->add_option("--reps", ba.reps, "Override the manifest's repetitions")->envname("HGRAPH_REPS");
    bench->add_option("--timeout-s", ba.timeout_s, "Override the manifest's timeout")->envname("HGRAPH_TIMEOUT_S");

    std::string o_problem, o_input;
    int o_k = -1;
    auto* orc = app.add_subcommand("oracle", "Brute-force answer for a small instance");
    orc->add_option("problem", o_problem, "vc | ds | ce")->required();
    orc->add_option("-i,--input", o_input, "Instance file")->required();
    orc->add_option("-k,--k", o_k, "Decision parameter (ce); without it the minimum is printed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitError;
    }

    try {
        if (*solve) return cmd_solve(sa);
        if (*gen) return cmd_gen(ga);
        if (*verify) return cmd_verify(v_input, v_result, v_complement);
        if (*bench) return cmd_bench(ba);
        if (*orc) return cmd_oracle(o_problem, o_input, o_k);
    } catch (const GraphError& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

}  // namespace hg::cli
