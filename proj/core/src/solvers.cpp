#include "hg/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "hg/cluster_editing.hpp"
#include "hg/dominating_set.hpp"
#include "hg/oracle.hpp"
#include "hg/repr.hpp"
#include "hg/vertex_cover.hpp"

namespace hg {

namespace {

// Runs the search, timing only run(), and turns a timeout into a result.
template <typename Search, typename G>
SolverResult timed(Problem problem, Search& search, G& g) {
    SolverResult r;
    const auto start = std::chrono::steady_clock::now();
    try {
        r = search.run();
    } catch (const SearchTimeout&) {
        r = SolverResult{};
        r.problem = problem;
        r.status = Status::kTimeout;
        r.nodes = search.nodes();
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    r.counters = g.counters();
    return r;
}

template <bool kCells>
SolverResult vc_opt(const SimpleGraph& g, const SolveOptions& opt) {
    if (opt.repr == Repr::kHybrid) {
        HybridRepr<kCells> rep(g.n, g.edges);
        VcOptSearch s(rep, opt.limits);
        return timed(Problem::kVcOpt, s, rep);
    }
    BasicBaselineGraph<kCells> rep(g.n, g.edges);
    VcOptSearch s(rep, opt.limits);
    return timed(Problem::kVcOpt, s, rep);
}

template <bool kCells>
SolverResult vc_parm(const SimpleGraph& g, const SolveOptions& opt) {
    SolverResult r;
    if (opt.fold) {
        ColoredRepr<kCells> rep(g.n, g.edges);
        VcParmSearch s(rep, opt.k, true, opt.limits);
        r = timed(Problem::kVcParm, s, rep);
    } else if (opt.repr == Repr::kHybrid) {
        HybridRepr<kCells> rep(g.n, g.edges);
        VcParmSearch s(rep, opt.k, false, opt.limits);
        r = timed(Problem::kVcParm, s, rep);
    } else {
        BasicBaselineGraph<kCells> rep(g.n, g.edges);
        VcParmSearch s(rep, opt.k, false, opt.limits);
        r = timed(Problem::kVcParm, s, rep);
    }
    r.k = opt.k;
    return r;
}

template <bool kCells>
SolverResult ds_opt(const SimpleGraph& g, const SolveOptions& opt) {
    const std::vector<Edge> inc = dominating_set_incidence(g);
    if (opt.repr == Repr::kHybrid) {
        HybridRepr<kCells> rep(2 * g.n, inc);
        DsOptSearch s(rep, g.n, opt.limits);
        return timed(Problem::kDsOpt, s, rep);
    }
    BasicBaselineGraph<kCells> rep(2 * g.n, inc);
    DsOptSearch s(rep, g.n, opt.limits);
    return timed(Problem::kDsOpt, s, rep);
}

template <bool kCells>
SolverResult ce_parm(const SimpleGraph& g, const SolveOptions& opt) {
    SolverResult r;
    if (opt.repr == Repr::kHybrid) {
        HybridRepr<kCells> rep(g.n, g.edges, GraphMode::kEdgeAddition);
        CeParmSearch s(rep, opt.k, opt.limits);
        r = timed(Problem::kCeParm, s, rep);
    } else {
        BasicBaselineGraph<kCells> rep(g.n, g.edges);
        CeParmSearch s(rep, opt.k, opt.limits);
        r = timed(Problem::kCeParm, s, rep);
    }
    r.k = opt.k;
    return r;
}

void require_k(const SolveOptions& opt, const char* what) {
    if (opt.k < 0) throw GraphError(ErrorKind::kUsage, std::string(what) + " needs a parameter k >= 0");
}

}  // namespace

std::vector<Edge> dominating_set_incidence(const SimpleGraph& g) {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(g.n) + 2 * g.edges.size());
    for (Vertex v = 0; v < g.n; ++v) out.push_back({v, g.n + v});
    for (const Edge& e : g.edges) {
        out.push_back({e.u, g.n + e.v});
        out.push_back({e.v, g.n + e.u});
    }
    return out;
}

SolverResult solve_vc_opt(const SimpleGraph& g, const SolveOptions& opt) {
    return opt.count_cells ? vc_opt<true>(g, opt) : vc_opt<false>(g, opt);
}

SolverResult solve_vc_parm(const SimpleGraph& g, const SolveOptions& opt) {
    require_k(opt, "vc-parm");
    if (opt.fold && opt.repr != Repr::kHybrid)
        throw GraphError(ErrorKind::kUsage, "folding is only available with the hybrid representation");
    return opt.count_cells ? vc_parm<true>(g, opt) : vc_parm<false>(g, opt);
}

SolverResult solve_ds_opt(const SimpleGraph& g, const SolveOptions& opt) {
    return opt.count_cells ? ds_opt<true>(g, opt) : ds_opt<false>(g, opt);
}

SolverResult solve_ce_parm(const SimpleGraph& g, const SolveOptions& opt) {
    require_k(opt, "ce");
    return opt.count_cells ? ce_parm<true>(g, opt) : ce_parm<false>(g, opt);
}

SolverResult solve(Problem problem, const SimpleGraph& g, const SolveOptions& opt) {
    if (opt.fold && problem != Problem::kVcParm)
        throw GraphError(ErrorKind::kUsage, "--fold is only valid with vc-parm");
    switch (problem) {
        case Problem::kVcOpt: return solve_vc_opt(g, opt);
        case Problem::kVcParm: return solve_vc_parm(g, opt);
        case Problem::kDsOpt: return solve_ds_opt(g, opt);
        case Problem::kCeParm: return solve_ce_parm(g, opt);
    }
    throw GraphError(ErrorKind::kUsage, "unknown problem");
}

bool verify_solution(Problem problem, const SimpleGraph& original, const SolverResult& result) {
    if (!result.has_witness()) return false;
    const auto distinct = [](const std::vector<Vertex>& s) { return std::set<Vertex>(s.begin(), s.end()).size() == s.size(); };
    switch (problem) {
        case Problem::kVcOpt:
        case Problem::kVcParm:
            if (!distinct(result.solution) || static_cast<int>(result.solution.size()) != result.value) return false;
            if (problem == Problem::kVcParm && result.value > result.k) return false;
            return oracle::is_vertex_cover(original, result.solution);
        case Problem::kDsOpt:
            if (!distinct(result.solution) || static_cast<int>(result.solution.size()) != result.value) return false;
            return oracle::is_dominating_set(original, result.solution);
        case Problem::kCeParm: {
            if (static_cast<int>(result.edits.size()) != result.value || result.value > result.k) return false;
            std::set<Edge> edges;
            for (const Edge& e : original.edges) edges.insert(normalized(e));
            std::set<Edge> touched;
            for (const EditOp& op : result.edits) {
                const Edge p = normalized(op.pair);
                if (p.u < 0 || p.v >= original.n || p.u == p.v || !touched.insert(p).second) return false;
                if (op.add ? !edges.insert(p).second : edges.erase(p) == 0) return false;
            }
            SimpleGraph edited{original.n, {edges.begin(), edges.end()}};
            return oracle::is_cluster_graph(edited);
        }
    }
    return false;
}

}  // namespace hg
