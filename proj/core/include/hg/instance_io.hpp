#ifndef HG_INSTANCE_IO_HPP
#define HG_INSTANCE_IO_HPP

// Instance parsing, writing and seeded generation.
//
// Generators draw from std::mt19937_64 with their own bounded-integer and
// unit-interval helpers instead of the standard distributions, whose output
// differs between standard libraries. Same parameters and seed give the same
// edge list, byte for byte, on any platform.

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hg/types.hpp"

namespace hg {

struct InstanceSpec {
    std::string name;
    SimpleGraph graph;
    /// "dimacs", "edgelist" or "generator".
    std::string source;
    /// Generator name, seed and parameters; empty for parsed files.
    std::map<std::string, std::string> params;
    /// Number of planted edits for cluster-editing instances, -1 otherwise.
    int planted_k = -1;
    /// DIMACS only: repeated `e` lines that were collapsed.
    std::size_t duplicate_edges = 0;
    std::vector<std::string> warnings;
};

/// Throws GraphError unless the graph is simple and all endpoints are in
/// range.
void validate_simple(const SimpleGraph& g);

/// Edges normalized (u < v) and sorted.
std::vector<Edge> canonical_edges(const SimpleGraph& g);

SimpleGraph complement(const SimpleGraph& g);

/// `c` comment lines, one `p edge n m` (or `p col n m`) line, `e u v` lines
/// with 1-indexed endpoints. Repeated edges are collapsed and counted; an
/// edge count that disagrees with the problem line is only a warning.
InstanceSpec parse_dimacs(std::string_view text, bool take_complement = false);

/// "n m" header, then exactly m lines "u v" with 0-indexed endpoints.
InstanceSpec parse_edge_list(std::string_view text);
std::string format_edge_list(const SimpleGraph& g);

/// Reads either format; DIMACS is recognized by a leading `c` or `p` line.
InstanceSpec read_instance(const std::filesystem::path& path, bool take_complement = false);
void write_edge_list(const std::filesystem::path& path, const SimpleGraph& g);

/// Uniform simple graph with exactly m edges, sorted.
InstanceSpec gen_random_gnm(int n, long long m, std::uint64_t seed);

/// Random partition into C cliques, then exactly k distinct vertex pairs
/// flipped (intra-cluster edges deleted, inter-cluster pairs joined).
InstanceSpec gen_cluster_editing(int n, int clusters, int k, std::uint64_t seed);

/// Random d-regular graph by the pairing model with restarts.
InstanceSpec gen_random_regular(int n, int d, std::uint64_t seed);

/// Weighted-density random graph: vertex i draws p_i uniformly from [lo, hi]
/// and pair (i, j) is an edge with probability (p_i + p_j) / 2. Density
/// class 1, 2, 3 uses [0, .5], [.25, .75], [.5, 1].
InstanceSpec gen_phat(int n, int density_class, std::uint64_t seed);

}  // namespace hg

#endif  // HG_INSTANCE_IO_HPP
