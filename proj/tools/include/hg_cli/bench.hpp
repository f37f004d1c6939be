#ifndef HG_CLI_BENCH_HPP
#define HG_CLI_BENCH_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hg/solver_types.hpp"
#include "hg/solvers.hpp"

namespace hg::cli {

/// One solver run as reported by `solve --csv/--json` and `bench`.
struct BenchRecord {
    std::string instance;
    std::string problem;
    std::string repr;
    /// Optimum, "yes"/"no", or empty when the run failed.
    std::string answer;
    int k = -1;
    std::uint64_t nodes = 0;
    OpCounters counters;
    /// Median over the repetitions.
    double wall_ms = 0.0;
    std::string seed;
    std::string config_hash;
    /// alist / hybrid median time, set on both rows of a pair.
    std::optional<double> speedup;
    /// "ok", "timeout", or "error: ...".
    std::string status = "ok";
    bool fold = false;
};

struct RunConfig {
    Problem problem = Problem::kVcOpt;
    Repr repr = Repr::kHybrid;
    bool fold = false;
    int k = -1;
    double timeout_s = 0.0;
};

/// Seed recorded in the generator's `<instance>.meta.json`, or empty.
std::string sidecar_seed(const std::filesystem::path& instance);

/// FNV-1a over the configuration fields that influence the search.
std::string config_hash(const RunConfig& cfg);

/// Runs `reps` times and reports the median wall time. Node counts and
/// answers are identical across repetitions; the last result is kept.
SolverResult run_repeated(const SimpleGraph& g, const RunConfig& cfg, int reps);

BenchRecord make_record(const std::string& instance, const RunConfig& cfg, const SolverResult& r);

std::string csv_header();
std::string csv_row(const BenchRecord& rec);

struct BenchOptions {
    int jobs = 1;
    /// Override the manifest's repetitions / timeout when set.
    std::optional<int> reps;
    std::optional<double> timeout_s;
};

struct BenchReport {
    std::vector<BenchRecord> rows;
    /// Median of the per-pair speedups, if any pair completed.
    std::optional<double> median_speedup;
    int pairs = 0;
    int hybrid_wins = 0;
    bool any_error = false;
};

/// Manifest format (JSON):
///   { "reps": 3, "timeout_s": 600,
///     "runs": [ { "instance": "instances/a.el", "problem": "ds",
///                 "k": 12, "fold": false, "reprs": ["hybrid", "alist"] } ] }
/// Instance paths are relative to the manifest. Rows come back in manifest
/// order whatever the number of workers.
BenchReport run_bench(const std::filesystem::path& manifest, const BenchOptions& opt);

}  // namespace hg::cli

#endif  // HG_CLI_BENCH_HPP
