// Acceptance checks. One criterion per invocation (`hg_acceptance C3`) or all
// of them in sequence; each prints a single [PASS]/[FAIL]/[SKIP] line.
// Exit code 0 on pass, 1 on fail, 77 on skip.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hg/baseline_graph.hpp"
#include "hg/contraction.hpp"
#include "hg/hybrid_graph.hpp"
#include "hg/instance_io.hpp"
#include "hg/oracle.hpp"
#include "hg/solvers.hpp"
#include "hg_cli/bench.hpp"

namespace fs = std::filesystem;
using namespace hg;

namespace {

constexpr int kSkip = 77;

struct Verdict {
    enum { kPass, kFail, kSkip } state;
    std::string detail;
};

Verdict pass(std::string d) { return {Verdict::kPass, std::move(d)}; }
Verdict fail(std::string d) { return {Verdict::kFail, std::move(d)}; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SolveOptions opts(Repr repr, int k = -1, bool fold = false) {
    SolveOptions o;
    o.repr = repr;
    o.k = k;
    o.fold = fold;
    return o;
}

// ---- C1 ---------------------------------------------------------------------

Verdict c1_dimacs() {
    std::vector<fs::path> dirs;
    if (const char* env = std::getenv("HGRAPH_DIMACS_DIR")) dirs.emplace_back(env);
    dirs.emplace_back(fs::path(HG_SOURCE_DIR) / "data" / "dimacs");
    const std::pair<const char*, int> targets[] = {{"p_hat700-2.clq", 651}, {"p_hat1500-3.clq", 1488}};

    std::ostringstream detail;
    for (const auto& [file, expected] : targets) {
        fs::path found;
        for (const fs::path& d : dirs)
            if (fs::exists(d / file)) found = d / file;
        if (found.empty())
            return {Verdict::kSkip, std::string(file) + " not found (set HGRAPH_DIMACS_DIR or add data/dimacs/)"};
        const InstanceSpec spec = read_instance(found);
        SolveOptions o = opts(Repr::kHybrid);
        o.limits = SearchLimits::seconds(30 * 60);
        const SolverResult r = solve_vc_opt(spec.graph, o);
        if (r.status == Status::kTimeout) return fail(std::string(file) + ": no answer within 30 min");
        if (r.value != expected || !verify_solution(Problem::kVcOpt, spec.graph, r))
            return fail(std::string(file) + ": |C|=" + std::to_string(r.value) + ", expected " +
                        std::to_string(expected));
        detail << file << " |C|=" << r.value << " in " << r.wall_ms / 1000.0 << " s; ";
    }
    return pass(detail.str());
}

// ---- C2 ---------------------------------------------------------------------

Verdict c2_oracles() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20240601);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        const int n = 1 + static_cast<int>(rng() % 16);
        const long long total = static_cast<long long>(n) * (n - 1) / 2;
        const long long m = total == 0 ? 0 : static_cast<long long>(rng() % (total + 1));
        const SimpleGraph g = gen_random_gnm(n, m, rng()).graph;
        const int vc = oracle::brute_vc(g);
        const int ds = oracle::brute_ds(g);
        for (Repr r : {Repr::kHybrid, Repr::kAlist}) {
            const SolverResult a = solve_vc_opt(g, opts(r));
            const SolverResult b = solve_ds_opt(g, opts(r));
            if (a.value != vc || !verify_solution(Problem::kVcOpt, g, a))
                return fail("vc mismatch on G(" + std::to_string(n) + "," + std::to_string(m) + ")");
            if (b.value != ds || !verify_solution(Problem::kDsOpt, g, b))
                return fail("ds mismatch on G(" + std::to_string(n) + "," + std::to_string(m) + ")");
        }
        ++checked;
    }
    int ce_checked = 0;
    for (int i = 0; i < 100; ++i) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const long long total = static_cast<long long>(n) * (n - 1) / 2;
        const long long m = total == 0 ? 0 : static_cast<long long>(rng() % (total + 1));
        const SimpleGraph g = gen_random_gnm(n, m, rng()).graph;
        for (int k = 0; k <= 6; ++k) {
            const bool expected = oracle::brute_ce(g, k);
            for (Repr r : {Repr::kHybrid, Repr::kAlist}) {
                const SolverResult res = solve_ce_parm(g, opts(r, k));
                const bool yes = res.status == Status::kYes;
                if (yes != expected || (yes && !verify_solution(Problem::kCeParm, g, res)))
                    return fail("ce mismatch on G(" + std::to_string(n) + "," + std::to_string(m) +
                                "), k=" + std::to_string(k));
            }
        }
        ++ce_checked;
    }
    const double secs = seconds_since(t0);
    std::ostringstream d;
    d << checked << " vc/ds graphs, " << ce_checked << " ce graphs x k=0..6, " << secs << " s";
    if (secs > 120) return fail(d.str() + " (over 2 min)");
    return pass(d.str());
}

// ---- C3 ---------------------------------------------------------------------

using Matrix = std::vector<std::vector<char>>;

Matrix adjacency(const SimpleGraph& g) {
    Matrix a(g.n, std::vector<char>(g.n, 0));
    for (const Edge& e : g.edges) a[e.u][e.v] = a[e.v][e.u] = 1;
    return a;
}

SimpleGraph random_graph(int n, std::mt19937_64& rng) {
    const long long total = static_cast<long long>(n) * (n - 1) / 2;
    const long long m = static_cast<long long>(rng() % (total / 2 + 1));
    return gen_random_gnm(n, m, rng()).graph;
}

// Base mode: matrix plus active flags.
struct BaseModel {
    Matrix adj;
    std::vector<char> active;
};

bool matches(const HybridGraph& g, const SearchFrame& f, const BaseModel& m) {
    const int n = g.order();
    int live = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (g.is_active(f, v) != static_cast<bool>(m.active[v])) return false;
        live += m.active[v];
        int d = 0;
        for (Vertex u = 0; u < n; ++u) {
            if (u == v) continue;
            if (g.is_adjacent(f, u, v) != static_cast<bool>(m.adj[u][v])) return false;
            d += m.adj[u][v];
        }
        if (d != f.deg[v]) return false;
    }
    return live == f.n_active;
}

void base_step(HybridGraph& g, SearchFrame& f, BaseModel& m, std::mt19937_64& rng) {
    const auto act = g.active_vertices(f);
    if (act.empty()) return;
    const Vertex v = act[rng() % act.size()];
    if (rng() % 4 == 0 || f.deg[v] == 0) {
        g.delete_vertex(f, v);
        m.active[v] = 0;
        for (auto& row : m.adj) row[v] = 0;
        std::fill(m.adj[v].begin(), m.adj[v].end(), 0);
    } else {
        const Vertex u = g.al_at(v, static_cast<int>(rng() % f.deg[v]));
        g.delete_edge(f, v, u);
        m.adj[u][v] = m.adj[v][u] = 0;
    }
}

// Contraction mode: the partition is the model; the quotient is recomputed
// from the original edges.
struct ColorModel {
    std::vector<Vertex> color;  // kNoVertex once deleted
};

bool matches(const HybridGraph& g, const SearchFrame& f, const ColorSets& cs, const ColorFrame& cf,
             const ColorModel& m, const SimpleGraph& sg) {
    const int n = sg.n;
    std::vector<std::set<Vertex>> members(n);
    for (Vertex v = 0; v < n; ++v)
        if (m.color[v] != kNoVertex) members[m.color[v]].insert(v);
    std::vector<std::set<Vertex>> quotient(n);
    for (const Edge& e : sg.edges) {
        const Vertex a = m.color[e.u];
        const Vertex b = m.color[e.v];
        if (a == kNoVertex || b == kNoVertex || a == b) continue;
        quotient[a].insert(b);
        quotient[b].insert(a);
    }
    int live = 0;
    for (Vertex c = 0; c < n; ++c) {
        const bool alive = !members[c].empty();
        live += alive;
        if (g.is_active(f, c) != alive) return false;
        if (!alive) continue;
        if (cf.cc[c] != static_cast<int>(members[c].size())) return false;
        const auto span = cs.members(cf, c);
        if (std::set<Vertex>(span.begin(), span.end()) != members[c]) return false;
        for (Vertex v : members[c])
            if (cf.vcolor[v] != c) return false;
        auto nb = cs.color_neighbors(g, f, cf, c);
        std::sort(nb.begin(), nb.end());
        if (nb != std::vector<Vertex>(quotient[c].begin(), quotient[c].end())) return false;
        if (cf.cd[c] != static_cast<int>(nb.size())) return false;
    }
    return live == f.n_active;
}

void color_step(HybridGraph& g, SearchFrame& f, ColorSets& cs, ColorFrame& cf, ColorModel& m,
                std::mt19937_64& rng) {
    const auto act = g.active_vertices(f);
    if (act.empty()) return;
    const Vertex c = act[rng() % act.size()];
    const auto nb = cs.color_neighbors(g, f, cf, c);
    if (rng() % 4 == 0 || nb.empty()) {
        cs.delete_color(g, f, cf, c);
        for (Vertex& x : m.color)
            if (x == c) x = kNoVertex;
        return;
    }
    const Vertex d = nb[rng() % nb.size()];
    // Contract through arbitrary members to exercise the color lookup.
    const auto mc = cs.members(cf, c);
    const auto md = cs.members(cf, d);
    cs.contract_edge(g, f, cf, mc[rng() % mc.size()], md[rng() % md.size()]);
    for (Vertex& x : m.color)
        if (x == d) x = c;
}

// Edge-addition mode: matrix of the current relation plus the original one.
bool matches_ext(const HybridGraph& g, const SearchFrame& f, const AdditionState& a, const BaseModel& m) {
    const int n = g.order();
    for (Vertex v = 0; v < n; ++v) {
        if (g.is_active(f, v) != static_cast<bool>(m.active[v])) return false;
        if (!m.active[v]) continue;
        std::vector<Vertex> expected;
        for (Vertex u = 0; u < n; ++u) {
            if (u == v) continue;
            if (g.is_adjacent_ext(f, a, u, v) != static_cast<bool>(m.adj[u][v])) return false;
            if (m.adj[u][v]) expected.push_back(u);
        }
        auto nb = g.active_neighbors_ext(f, a, v);
        std::sort(nb.begin(), nb.end());
        if (nb != expected) return false;
    }
    return true;
}

void addition_step(HybridGraph& g, SearchFrame& f, AdditionState& a, BaseModel& m, const Matrix& original,
                   std::mt19937_64& rng) {
    const auto act = g.active_vertices(f);
    if (act.size() < 2) return;
    const Vertex u = act[rng() % act.size()];
    const Vertex v = act[rng() % act.size()];
    if (u == v) return;
    switch (rng() % 3) {
        case 0:
            // Only pairs that were never edges of the input: an added edge is
            // permanent, a deleted base edge is never re-added.
            if (!m.adj[u][v] && !original[u][v]) {
                g.add_edge_permanent(f, a, u, v);
                m.adj[u][v] = m.adj[v][u] = 1;
            }
            break;
        case 1:
            if (m.adj[u][v] && original[u][v]) {
                g.delete_edge(f, u, v);
                m.adj[u][v] = m.adj[v][u] = 0;
            }
            break;
        default:
            if (a.ndeg[u] == 0) {
                g.delete_vertex(f, u);
                m.active[u] = 0;
                for (auto& row : m.adj) row[u] = 0;
                std::fill(m.adj[u].begin(), m.adj[u].end(), 0);
            }
    }
}

Verdict c3_undo() {
    constexpr int kN = 50;
    constexpr int kTrialsPerGraph = 100;
    std::mt19937_64 rng(777);
    int trials = 0;
    int failures = 0;
    std::map<std::string, int> per_mode;

    // Every 10th trial commits its burst instead of restoring, so later
    // restores start from deeper states.
    auto burst_len = [&] { return 1 + static_cast<int>(rng() % 25); };

    for (int graph = 0; trials < 10000; ++graph) {
        const SimpleGraph sg = random_graph(kN, rng);
        switch (graph % 3) {
            case 0: {
                auto [g, f] = HybridGraph::build(kN, sg.edges);
                BaseModel model{adjacency(sg), std::vector<char>(kN, 1)};
                for (int t = 0; t < kTrialsPerGraph && trials < 10000; ++t) {
                    const SearchFrame saved = g.snapshot(f);
                    BaseModel scratch = model;
                    for (int s = burst_len(); s > 0; --s) base_step(g, f, scratch, rng);
                    if (!matches(g, f, scratch)) ++failures;
                    if (t % 10 == 9) {
                        model = std::move(scratch);
                        continue;
                    }
                    g.restore(f, saved);
                    ++trials;
                    ++per_mode["base"];
                    if (!matches(g, f, model)) ++failures;
                }
                break;
            }
            case 1: {
                auto [g, f] = HybridGraph::build(kN, sg.edges, GraphMode::kContraction);
                auto [cs, cf] = ColorSets::make(g, f);
                ColorModel model{std::vector<Vertex>(kN)};
                for (Vertex v = 0; v < kN; ++v) model.color[v] = v;
                for (int t = 0; t < kTrialsPerGraph && trials < 10000; ++t) {
                    const SearchFrame saved = g.snapshot(f);
                    const ColorFrame saved_colors = cf;
                    ColorModel scratch = model;
                    for (int s = burst_len(); s > 0; --s) color_step(g, f, cs, cf, scratch, rng);
                    if (!matches(g, f, cs, cf, scratch, sg)) ++failures;
                    if (t % 10 == 9) {
                        model = std::move(scratch);
                        continue;
                    }
                    g.restore(f, saved);
                    cs.restore_colors(g, cf, saved_colors);
                    ++trials;
                    ++per_mode["contraction"];
                    if (!matches(g, f, cs, cf, model, sg)) ++failures;
                }
                break;
            }
            default: {
                auto [g, f] = HybridGraph::build(kN, sg.edges, GraphMode::kEdgeAddition);
                AdditionState a = g.make_addition_state();
                const Matrix original = adjacency(sg);
                BaseModel model{original, std::vector<char>(kN, 1)};
                for (int t = 0; t < kTrialsPerGraph && trials < 10000; ++t) {
                    const SearchFrame saved = g.snapshot(f);
                    const AdditionState saved_add = a;
                    BaseModel scratch = model;
                    for (int s = burst_len(); s > 0; --s) addition_step(g, f, a, scratch, original, rng);
                    if (!matches_ext(g, f, a, scratch)) ++failures;
                    if (t % 10 == 9) {
                        model = std::move(scratch);
                        continue;
                    }
                    g.restore(f, saved);
                    g.restore(a, saved_add);
                    ++trials;
                    ++per_mode["edge-addition"];
                    if (!matches_ext(g, f, a, model)) ++failures;
                }
            }
        }
    }
    std::ostringstream d;
    d << trials << " restores (";
    for (const auto& [mode, count] : per_mode) d << mode << " " << count << ", ";
    d << "n=" << kN << "), " << failures << " mismatches";
    return failures == 0 ? pass(d.str()) : fail(d.str());
}

// ---- C4 ---------------------------------------------------------------------

Verdict c4_counters() {
    // delete_vertex must stay within c*(d+1) accesses; the implementation
    // spends 9 + 17d, so c = 17.
    constexpr std::uint64_t kVertexConstant = 17;
    std::mt19937_64 rng(4242);
    std::uint64_t max_edge_writes = 0;
    std::uint64_t max_adj_reads = 0;
    std::uint64_t vertex_calls = 0;
    std::vector<std::string> problems;

    for (int round = 0; round < 50; ++round) {
        const SimpleGraph sg = random_graph(40, rng);
        const GraphMode mode = round % 2 ? GraphMode::kEdgeAddition : GraphMode::kBase;
        auto [g, f] = InstrumentedHybridGraph::build(sg.n, sg.edges, mode);
        AdditionState a = g.make_addition_state();
        auto stats = [&](Op op) { return g.counters()[op]; };
        for (int step = 0; step < 200; ++step) {
            const auto act = g.active_vertices(f);
            if (act.size() < 2) break;
            const Vertex u = act[rng() % act.size()];
            const Vertex v = act[rng() % act.size()];
            if (u == v) continue;
            const OpStats before_adj = stats(Op::kAdjacency);
            if (mode == GraphMode::kEdgeAddition)
                g.is_adjacent_ext(f, a, u, v);
            else
                g.is_adjacent(f, u, v);
            max_adj_reads = std::max(max_adj_reads, stats(Op::kAdjacency).reads - before_adj.reads);

            const int what = static_cast<int>(rng() % 3);
            if (what == 0 && f.deg[u] > 0) {
                const Vertex w = g.al_at(u, static_cast<int>(rng() % f.deg[u]));
                const OpStats before = stats(Op::kDeleteEdge);
                g.delete_edge(f, u, w);
                max_edge_writes = std::max(max_edge_writes, stats(Op::kDeleteEdge).writes - before.writes);
            } else if (what == 1 && a.ndeg[u] == 0) {
                const int d = f.deg[u];
                const OpStats before = stats(Op::kDeleteVertex);
                g.delete_vertex(f, u);
                const std::uint64_t acc = stats(Op::kDeleteVertex).accesses() - before.accesses();
                ++vertex_calls;
                if (acc > kVertexConstant * static_cast<std::uint64_t>(d + 1))
                    problems.push_back("delete_vertex d=" + std::to_string(d) + " took " + std::to_string(acc));
            } else if (mode == GraphMode::kEdgeAddition && !g.is_adjacent_ext(f, a, u, v) &&
                       g.im_at(u, v) < 0) {
                g.add_edge_permanent(f, a, u, v);
            }
        }
    }
    if (max_edge_writes > 12) problems.push_back("delete_edge wrote " + std::to_string(max_edge_writes) + " cells");
    if (max_adj_reads > 4) problems.push_back("is_adjacent read " + std::to_string(max_adj_reads) + " cells");

    // Restore cost against the number of undone operations.
    const SimpleGraph sg = gen_random_gnm(60, 600, 5).graph;
    std::vector<std::uint64_t> restore_cost;
    for (int undone : {1, 10, 100, 400}) {
        auto [g, f] = InstrumentedHybridGraph::build(sg.n, sg.edges);
        const SearchFrame saved = g.snapshot(f);
        std::mt19937_64 r2(undone);
        int done = 0;
        while (done < undone) {
            const auto act = g.active_vertices(f);
            const Vertex v = act[r2() % act.size()];
            if (f.deg[v] == 0) continue;
            g.delete_edge(f, v, g.al_at(v, 0));
            ++done;
        }
        const OpStats before = g.counters()[Op::kRestore];
        g.restore(f, saved);
        restore_cost.push_back(g.counters()[Op::kRestore].accesses() - before.accesses());
    }
    const bool flat = std::all_of(restore_cost.begin(), restore_cost.end(),
                                  [&](std::uint64_t c) { return c == restore_cost.front(); });
    if (!flat) problems.push_back("restore cost depends on the number of undone operations");
    if (restore_cost.front() > static_cast<std::uint64_t>(sg.n) + 1)
        problems.push_back("restore touched more than n+1 cells");

    std::ostringstream d;
    d << "delete_edge max writes " << max_edge_writes << ", is_adjacent max reads " << max_adj_reads << ", "
      << vertex_calls << " delete_vertex calls within 17(d+1), restore " << restore_cost.front()
      << " cells for 1..400 undone ops";
    for (const std::string& p : problems) d << "; " << p;
    return problems.empty() ? pass(d.str()) : fail(d.str());
}

// ---- C5 / C6 ----------------------------------------------------------------

std::string summarize_errors(const cli::BenchReport& r) {
    std::string out;
    for (const cli::BenchRecord& row : r.rows)
        if (row.status != "ok") out += "; " + row.instance + " " + row.repr + ": " + row.status;
    return out;
}

Verdict c5_independence() {
    cli::BenchOptions o;
    o.reps = 1;
    const cli::BenchReport r = cli::run_bench(HG_BENCH_MANIFEST, o);
    // run_bench turns node or answer disagreements into error rows.
    std::ostringstream d;
    d << r.rows.size() << " rows, " << r.pairs << " agreeing pairs" << summarize_errors(r);
    if (r.any_error || r.pairs * 2 != static_cast<int>(r.rows.size())) return fail(d.str());
    return pass(d.str());
}

Verdict c6_speedup() {
    const cli::BenchReport r = cli::run_bench(HG_BENCH_MANIFEST, {});
    const fs::path csv = fs::path(HG_BINARY_DIR) / "bench_report.csv";
    {
        std::ofstream out(csv);
        out << cli::csv_header() << '\n';
        for (const cli::BenchRecord& row : r.rows) out << cli::csv_row(row) << '\n';
    }
    std::ostringstream d;
    d << r.pairs << " pairs, hybrid faster in " << r.hybrid_wins << ", median speedup "
      << (r.median_speedup ? *r.median_speedup : 0.0) << "x (report: " << csv.string() << ")"
      << summarize_errors(r);
    const bool ok = !r.any_error && r.pairs >= 10 && r.median_speedup && *r.median_speedup >= 1.5 &&
                    r.hybrid_wins == r.pairs;
    return ok ? pass(d.str()) : fail(d.str());
}

// ---- C7 ---------------------------------------------------------------------

Verdict c7_folding() {
    std::ostringstream d;
    int fewer = 0;
    int regular = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const SimpleGraph g = gen_random_regular(60, 4, seed).graph;
        const int opt = solve_vc_opt(g, opts(Repr::kHybrid)).value;
        for (int k : {opt - 1, opt}) {
            const SolverResult plain = solve_vc_parm(g, opts(Repr::kHybrid, k));
            const SolverResult fold = solve_vc_parm(g, opts(Repr::kHybrid, k, true));
            if (plain.status != fold.status)
                return fail("fold disagrees on 4-regular seed " + std::to_string(seed) + ", k=" + std::to_string(k));
            if (fold.status == Status::kYes && !verify_solution(Problem::kVcParm, g, fold))
                return fail("fold witness rejected on seed " + std::to_string(seed));
            if (k == opt - 1) {
                if (plain.status != Status::kNo) return fail("k=opt-1 answered yes");
                ++regular;
                if (fold.nodes < plain.nodes) ++fewer;
                d << plain.nodes << "->" << fold.nodes << " ";
            }
        }
    }
    // Agreement on small random graphs around the threshold.
    std::mt19937_64 rng(99);
    int small = 0;
    for (int i = 0; i < 100; ++i) {
        const SimpleGraph g = random_graph(4 + static_cast<int>(rng() % 12), rng);
        const int opt = oracle::brute_vc(g);
        for (int k = std::max(0, opt - 1); k <= opt + 1; ++k) {
            const bool a = solve_vc_parm(g, opts(Repr::kHybrid, k)).status == Status::kYes;
            const bool b = solve_vc_parm(g, opts(Repr::kHybrid, k, true)).status == Status::kYes;
            if (a != b || a != (k >= opt)) return fail("fold disagreement on a small graph");
        }
        ++small;
    }
    std::ostringstream out;
    out << "fold used fewer nodes on " << fewer << "/" << regular << " 4-regular n=60 graphs at k=opt-1 (nodes "
        << d.str() << "); agreement on " << small << " small graphs";
    return fewer == regular ? pass(out.str()) : fail(out.str());
}

// ---- C8 ---------------------------------------------------------------------

Verdict c8_planted() {
    std::mt19937_64 rng(8080);
    int ok = 0;
    for (int i = 0; i < 50; ++i) {
        const int n = 20 + static_cast<int>(rng() % 41);
        const int clusters = 2 + static_cast<int>(rng() % 5);
        const int k = 1 + static_cast<int>(rng() % 10);
        const std::uint64_t seed = rng();
        const InstanceSpec spec = gen_cluster_editing(n, clusters, k, seed);
        for (Repr r : {Repr::kHybrid, Repr::kAlist}) {
            const SolverResult res = solve_ce_parm(spec.graph, opts(r, spec.planted_k));
            if (res.status != Status::kYes || !verify_solution(Problem::kCeParm, spec.graph, res))
                return fail("planted instance n=" + std::to_string(n) + " C=" + std::to_string(clusters) +
                            " k=" + std::to_string(k) + " seed=" + std::to_string(seed) + " not solved");
        }
        ++ok;
    }
    return pass(std::to_string(ok) + " planted instances (n 20..60, k 1..10) answered yes and verified");
}

struct Criterion {
    const char* id;
    const char* title;
    std::function<Verdict()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {"C1", "DIMACS cover sizes", c1_dimacs},
        {"C2", "oracle equivalence", c2_oracles},
        {"C3", "implicit-undo integrity", c3_undo},
        {"C4", "cell-count contracts", c4_counters},
        {"C5", "representation independence", c5_independence},
        {"C6", "speedup trend", c6_speedup},
        {"C7", "folding agreement and benefit", c7_folding},
        {"C8", "planted cluster editing", c8_planted},
    };
    return all;
}

int report(const Criterion& c) {
    Verdict v;
    try {
        v = c.run();
    } catch (const std::exception& e) {
        v = fail(std::string("exception: ") + e.what());
    }
    const char* tag = v.state == Verdict::kPass ? "[PASS]" : v.state == Verdict::kFail ? "[FAIL]" : "[SKIP]";
    std::cout << tag << ' ' << c.id << ' ' << c.title << ": " << v.detail << std::endl;
    return v.state == Verdict::kPass ? 0 : v.state == Verdict::kFail ? 1 : kSkip;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> wanted(argv + 1, argv + argc);
    if (wanted.empty() || wanted[0] == "all") {
        int failed = 0;
        for (const Criterion& c : criteria()) failed += report(c) == 1;
        return failed ? 1 : 0;
    }
    int worst = 0;
    for (const std::string& id : wanted) {
        const auto it = std::find_if(criteria().begin(), criteria().end(), [&](const Criterion& c) { return id == c.id; });
        if (it == criteria().end()) {
            std::cerr << "unknown criterion " << id << '\n';
            return 2;
        }
        const int code = report(*it);
        if (code == 1 || worst == 0) worst = code;
    }
    return worst;
}
