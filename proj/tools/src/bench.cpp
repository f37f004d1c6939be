#include "hg_cli/bench.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "hg/instance_io.hpp"

namespace hg::cli {

namespace {

using nlohmann::json;

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

std::string fmt_double(double x) {
    std::ostringstream out;
    out.precision(6);
    out << x;
    return out.str();
}

}  // namespace

std::string sidecar_seed(const std::filesystem::path& instance) {
    std::ifstream in(instance.string() + ".meta.json");
    if (!in) return {};
    try {
        const json meta = json::parse(in);
        if (meta.contains("seed")) return meta["seed"].is_string() ? meta["seed"].get<std::string>() : meta["seed"].dump();
    } catch (const json::exception&) {
    }
    return {};
}

namespace {

struct Job {
    std::filesystem::path path;
    std::string label;
    RunConfig cfg;
    int reps = 1;
    std::string seed;
};

BenchRecord run_job(const Job& job) {
    try {
        const InstanceSpec spec = read_instance(job.path);
        BenchRecord rec = make_record(job.label, job.cfg, run_repeated(spec.graph, job.cfg, job.reps));
        rec.seed = job.seed.empty() ? sidecar_seed(job.path) : job.seed;
        return rec;
    } catch (const std::exception& e) {
        BenchRecord rec;
        rec.instance = job.label;
        rec.problem = std::string(to_string(job.cfg.problem));
        rec.repr = std::string(to_string(job.cfg.repr));
        rec.k = job.cfg.k;
        rec.fold = job.cfg.fold;
        rec.config_hash = config_hash(job.cfg);
        rec.seed = job.seed;
        rec.status = std::string("error: ") + e.what();
        return rec;
    }
}

}  // namespace

std::string config_hash(const RunConfig& cfg) {
    std::ostringstream key;
    key << to_string(cfg.problem) << '|' << (cfg.fold ? 1 : 0) << '|' << cfg.k << '|' << cfg.timeout_s;
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : key.str()) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

SolverResult run_repeated(const SimpleGraph& g, const RunConfig& cfg, int reps) {
    SolveOptions opt;
    opt.repr = cfg.repr;
    opt.fold = cfg.fold;
    opt.k = cfg.k;
    std::vector<double> times;
    SolverResult last;
    for (int i = 0; i < std::max(reps, 1); ++i) {
        opt.limits = cfg.timeout_s > 0 ? SearchLimits::seconds(cfg.timeout_s) : SearchLimits::none();
        last = solve(cfg.problem, g, opt);
        times.push_back(last.wall_ms);
        if (last.status == Status::kTimeout) break;
    }
    last.wall_ms = median(times);
    return last;
}

BenchRecord make_record(const std::string& instance, const RunConfig& cfg, const SolverResult& r) {
    BenchRecord rec;
    rec.instance = instance;
    rec.problem = std::string(to_string(cfg.problem));
    rec.repr = std::string(to_string(cfg.repr));
    rec.k = cfg.k;
    rec.fold = cfg.fold;
    rec.nodes = r.nodes;
    rec.counters = r.counters;
    rec.wall_ms = r.wall_ms;
    rec.config_hash = config_hash(cfg);
    switch (r.status) {
        case Status::kSolved: rec.answer = std::to_string(r.value); break;
        case Status::kYes: rec.answer = "yes"; break;
        case Status::kNo: rec.answer = "no"; break;
        case Status::kTimeout: rec.status = "timeout"; break;
    }
    return rec;
}

std::string csv_header() {
    std::string h = "instance,problem,repr,answer,k,nodes";
    for (std::size_t i = 0; i < kNumOps; ++i) h += "," + std::string(op_name(static_cast<Op>(i))) + "_calls";
    h += ",wall_ms,seed,config_hash,speedup,status";
    return h;
}

std::string csv_row(const BenchRecord& rec) {
    auto quoted = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += '"';
            out += c;
        }
        return out + "\"";
    };
    std::ostringstream out;
    out << quoted(rec.instance) << ',' << rec.problem << ',' << rec.repr << (rec.fold ? "+fold" : "") << ','
        << rec.answer << ',' << (rec.k >= 0 ? std::to_string(rec.k) : "") << ',' << rec.nodes;
    for (const OpStats& s : rec.counters.by_op) out << ',' << s.calls;
    out << ',' << fmt_double(rec.wall_ms) << ',' << quoted(rec.seed) << ',' << rec.config_hash << ','
        << (rec.speedup ? fmt_double(*rec.speedup) : "") << ',' << quoted(rec.status);
    return out.str();
}

BenchReport run_bench(const std::filesystem::path& manifest, const BenchOptions& opt) {
    std::ifstream in(manifest);
    if (!in) throw GraphError(ErrorKind::kIo, "cannot open manifest " + manifest.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw GraphError(ErrorKind::kParse, "manifest: " + std::string(e.what()));
    }
    const std::filesystem::path base = manifest.parent_path();
    const int reps = opt.reps.value_or(doc.value("reps", 3));
    const double timeout = opt.timeout_s.value_or(doc.value("timeout_s", 0.0));

    std::vector<Job> jobs;
    // Indices of the (hybrid, alist) rows belonging to one manifest entry.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const json& run : doc.value("runs", json::array())) {
        const std::string rel = run.at("instance").get<std::string>();
        const auto problem = parse_problem(run.at("problem").get<std::string>());
        if (!problem) throw GraphError(ErrorKind::kParse, "manifest: unknown problem in entry for " + rel);
        RunConfig cfg;
        cfg.problem = *problem;
        cfg.fold = run.value("fold", false);
        cfg.k = run.contains("k") && !run["k"].is_null() ? run["k"].get<int>() : -1;
        cfg.timeout_s = timeout;
        std::vector<std::string> reprs = run.value("reprs", std::vector<std::string>{"hybrid", "alist"});
        std::optional<std::size_t> hybrid_row;
        std::optional<std::size_t> alist_row;
        for (const std::string& name : reprs) {
            const auto repr = parse_repr(name);
            if (!repr) throw GraphError(ErrorKind::kParse, "manifest: unknown representation '" + name + "'");
            cfg.repr = *repr;
            (cfg.repr == Repr::kHybrid ? hybrid_row : alist_row) = jobs.size();
            std::string seed;
            if (run.contains("seed")) seed = run["seed"].is_string() ? run["seed"].get<std::string>() : run["seed"].dump();
            jobs.push_back({base / rel, rel, cfg, reps, seed});
        }
        if (hybrid_row && alist_row) pairs.emplace_back(*hybrid_row, *alist_row);
    }

    BenchReport report;
    report.rows.resize(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) report.rows[i] = run_job(jobs[i]);
    };
    const int workers = std::clamp(opt.jobs, 1, static_cast<int>(std::max<std::size_t>(jobs.size(), 1)));
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::vector<double> speedups;
    for (const auto& [h, a] : pairs) {
        BenchRecord& hy = report.rows[h];
        BenchRecord& al = report.rows[a];
        if (hy.status != "ok" || al.status != "ok") continue;
        if (hy.nodes != al.nodes || hy.answer != al.answer) {
            const std::string why = "error: representations disagree (nodes " + std::to_string(hy.nodes) + " vs " +
                                    std::to_string(al.nodes) + ", answer " + hy.answer + " vs " + al.answer + ")";
            hy.status = al.status = why;
            continue;
        }
        const double s = al.wall_ms / std::max(hy.wall_ms, 1e-6);
        hy.speedup = al.speedup = s;
        speedups.push_back(s);
        ++report.pairs;
        if (hy.wall_ms < al.wall_ms) ++report.hybrid_wins;
    }
    for (const BenchRecord& r : report.rows)
        if (r.status != "ok") report.any_error = true;
    if (!speedups.empty()) report.median_speedup = median(speedups);
    return report;
}

}  // namespace hg::cli
