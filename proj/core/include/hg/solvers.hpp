#ifndef HG_SOLVERS_HPP
#define HG_SOLVERS_HPP

// Entry points that build the requested representation, run one search and
// package the result. Wall time covers the search only; building the
// representation and parsing are excluded.

#include "hg/solver_types.hpp"
#include "hg/types.hpp"

namespace hg {

struct SolveOptions {
    Repr repr = Repr::kHybrid;
    /// Degree-two folding for vc-parm; hybrid only.
    bool fold = false;
    /// Parameter for vc-parm and ce.
    int k = -1;
    SearchLimits limits;
    /// Use the instrumented representations (cell reads and writes).
    bool count_cells = false;
};

SolverResult solve_vc_opt(const SimpleGraph& g, const SolveOptions& opt = {});
SolverResult solve_vc_parm(const SimpleGraph& g, const SolveOptions& opt);
SolverResult solve_ds_opt(const SimpleGraph& g, const SolveOptions& opt = {});
SolverResult solve_ce_parm(const SimpleGraph& g, const SolveOptions& opt);

/// Dispatches on the problem. Throws GraphError(kUsage) on bad options
/// (missing k, folding outside vc-parm or with the alist representation).
SolverResult solve(Problem problem, const SimpleGraph& g, const SolveOptions& opt);

/// Checks a witness against the untouched input: a cover of every edge, a
/// set dominating every vertex, or at most k pair flips leaving a cluster
/// graph. Sizes must match the reported value. False for results without a
/// witness.
bool verify_solution(Problem problem, const SimpleGraph& original, const SolverResult& result);

}  // namespace hg

#endif  // HG_SOLVERS_HPP
