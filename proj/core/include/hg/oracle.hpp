#ifndef HG_ORACLE_HPP
#define HG_ORACLE_HPP

// Brute-force reference solvers. They read raw edge lists into bitmasks and
// share no code with the representations or the search drivers.

#include <span>
#include <vector>

#include "hg/types.hpp"

namespace hg::oracle {

inline constexpr int kMaxSubsetVertices = 24;
inline constexpr int kMaxPartitionVertices = 12;
inline constexpr int kMaxEditSetK = 8;

bool is_vertex_cover(const SimpleGraph& g, std::span<const Vertex> cover);
bool is_dominating_set(const SimpleGraph& g, std::span<const Vertex> set);
/// True if the graph is a disjoint union of cliques.
bool is_cluster_graph(const SimpleGraph& g);

/// Minimum vertex cover size by subset enumeration in order of size.
int brute_vc(const SimpleGraph& g);
/// Minimum dominating set size by subset enumeration in order of size.
int brute_ds(const SimpleGraph& g);

/// Minimum number of edits to a cluster graph, minimized over all vertex
/// partitions (restricted growth strings, pruned by the running cost).
int brute_ce_min(const SimpleGraph& g);
/// brute_ce_min(g) <= k.
bool brute_ce(const SimpleGraph& g, int k);
/// Same question answered by trying every set of at most k pair flips.
/// Slow; meant for cross-checking brute_ce on tiny graphs.
bool brute_ce_edits(const SimpleGraph& g, int k);

}  // namespace hg::oracle

#endif  // HG_ORACLE_HPP
