#include "hg/oracle.hpp"

#include <bit>
#include <cstdint>
#include <string>

namespace hg::oracle {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency(const SimpleGraph& g, int limit) {
    if (g.n > limit)
        throw GraphError(ErrorKind::kTooLarge,
                         "oracle limited to " + std::to_string(limit) + " vertices, got " + std::to_string(g.n));
    std::vector<Mask> adj(g.n, 0);
    for (const Edge& e : g.edges) {
        if (e.u < 0 || e.v < 0 || e.u >= g.n || e.v >= g.n || e.u == e.v)
            throw GraphError(ErrorKind::kOutOfRange, "oracle: invalid edge");
        adj[e.u] |= Mask{1} << e.v;
        adj[e.v] |= Mask{1} << e.u;
    }
    return adj;
}

// Calls test(mask) for every subset of n elements in order of size and
// returns the first size for which test succeeds.
template <typename Fn>
int smallest_subset(int n, Fn&& test) {
    const std::uint64_t full = std::uint64_t{1} << n;
    for (int size = 0; size <= n; ++size) {
        if (size == 0) {
            if (test(Mask{0})) return 0;
            continue;
        }
        // Gosper's hack over all size-element masks.
        std::uint64_t s = (std::uint64_t{1} << size) - 1;
        while (s < full) {
            if (test(static_cast<Mask>(s))) return size;
            const std::uint64_t c = s & (~s + 1);
            const std::uint64_t r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return n;
}

bool cluster_masks(const std::vector<Mask>& adj) {
    const int n = static_cast<int>(adj.size());
    for (int v = 0; v < n; ++v) {
        const Mask closed = adj[v] | (Mask{1} << v);
        for (Mask rest = adj[v]; rest != 0; rest &= rest - 1) {
            const int u = std::countr_zero(rest);
            if ((adj[u] | (Mask{1} << u)) != closed) return false;
        }
    }
    return true;
}

struct PartitionSearch {
    const std::vector<Mask>& adj;
    int n;
    std::vector<Mask> blocks;
    int best;

    // Places vertex v; `cost` counts edits among vertices 0..v-1.
    void place(int v, int cost) {
        if (cost >= best) return;
        if (v == n) {
            best = cost;
            return;
        }
        const Mask before = (Mask{1} << v) - 1;
        const Mask nbrs = adj[v] & before;
        const int blocks_now = static_cast<int>(blocks.size());
        for (int b = 0; b <= blocks_now; ++b) {
            const Mask block = b < blocks_now ? blocks[b] : 0;
            // Missing edges inside the block plus edges leaving it.
            const int added = std::popcount(block & ~nbrs) + std::popcount(nbrs & ~block);
            if (b == blocks_now)
                blocks.push_back(Mask{1} << v);
            else
                blocks[b] |= Mask{1} << v;
            place(v + 1, cost + added);
            if (b == blocks_now)
                blocks.pop_back();
            else
                blocks[b] &= ~(Mask{1} << v);
        }
    }
};

struct EditSearch {
    std::vector<Mask>& adj;
    std::vector<Edge> pairs;

    bool flips_left(std::size_t start, int left) {
        if (cluster_masks(adj)) return true;
        if (left == 0) return false;
        for (std::size_t i = start; i < pairs.size(); ++i) {
            const Edge p = pairs[i];
            adj[p.u] ^= Mask{1} << p.v;
            adj[p.v] ^= Mask{1} << p.u;
            const bool ok = flips_left(i + 1, left - 1);
            adj[p.u] ^= Mask{1} << p.v;
            adj[p.v] ^= Mask{1} << p.u;
            if (ok) return true;
        }
        return false;
    }
};

}  // namespace

bool is_vertex_cover(const SimpleGraph& g, std::span<const Vertex> cover) {
    std::vector<char> in(g.n, 0);
    for (Vertex v : cover) {
        if (v < 0 || v >= g.n) return false;
        in[v] = 1;
    }
    for (const Edge& e : g.edges)
        if (!in[e.u] && !in[e.v]) return false;
    return true;
}

bool is_dominating_set(const SimpleGraph& g, std::span<const Vertex> set) {
    std::vector<char> dominated(g.n, 0);
    for (Vertex v : set) {
        if (v < 0 || v >= g.n) return false;
        dominated[v] = 1;
    }
    std::vector<char> in(dominated);
    for (const Edge& e : g.edges) {
        if (in[e.u]) dominated[e.v] = 1;
        if (in[e.v]) dominated[e.u] = 1;
    }
    for (char d : dominated)
        if (!d) return false;
    return true;
}

bool is_cluster_graph(const SimpleGraph& g) {
    // Each component must have s(s-1)/2 edges.
    std::vector<int> parent(g.n);
    for (int v = 0; v < g.n; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const Edge& e : g.edges) parent[find(e.u)] = find(e.v);
    std::vector<long long> size(g.n, 0);
    std::vector<long long> edges(g.n, 0);
    for (int v = 0; v < g.n; ++v) ++size[find(v)];
    for (const Edge& e : g.edges) ++edges[find(e.u)];
    for (int r = 0; r < g.n; ++r)
        if (edges[r] != size[r] * (size[r] - 1) / 2) return false;
    return true;
}

int brute_vc(const SimpleGraph& g) {
    const auto adj = adjacency(g, kMaxSubsetVertices);
    return smallest_subset(g.n, [&](Mask s) {
        for (int v = 0; v < g.n; ++v)
            if (!(s >> v & 1u) && (adj[v] & ~s) != 0) return false;
        return true;
    });
}

int brute_ds(const SimpleGraph& g) {
    const auto adj = adjacency(g, kMaxSubsetVertices);
    const Mask full = (Mask{1} << g.n) - 1;
    return smallest_subset(g.n, [&](Mask s) {
        Mask covered = s;
        for (Mask rest = s; rest != 0; rest &= rest - 1) covered |= adj[std::countr_zero(rest)];
        return covered == full;
    });
}

int brute_ce_min(const SimpleGraph& g) {
    const auto adj = adjacency(g, kMaxPartitionVertices);
    PartitionSearch s{adj, g.n, {}, static_cast<int>(g.edges.size()) + 1};
    s.place(0, 0);
    return s.best;
}

bool brute_ce(const SimpleGraph& g, int k) { return k >= 0 && brute_ce_min(g) <= k; }

bool brute_ce_edits(const SimpleGraph& g, int k) {
    if (k > kMaxEditSetK) throw GraphError(ErrorKind::kTooLarge, "edit-set oracle limited to k <= 8");
    auto adj = adjacency(g, kMaxPartitionVertices);
    if (k < 0) return false;
    EditSearch s{adj, {}};
    for (Vertex u = 0; u < g.n; ++u)
        for (Vertex v = u + 1; v < g.n; ++v) s.pairs.push_back({u, v});
    return s.flips_left(0, k);
}

}  // namespace hg::oracle
