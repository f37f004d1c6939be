#ifndef HG_TESTS_SUPPORT_HPP
#define HG_TESTS_SUPPORT_HPP

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "hg/instance_io.hpp"
#include "hg/types.hpp"

namespace hg::test {

// The 8-vertex example graph; edges listed so that every al row comes out
// in ascending order.
inline SimpleGraph fig1() {
    return {8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 3}, {2, 5}, {3, 6}, {4, 5}, {4, 7}, {5, 6}, {5, 7}, {6, 7}}};
}

inline SimpleGraph petersen() {
    SimpleGraph g{10, {}};
    for (Vertex i = 0; i < 5; ++i) {
        g.edges.push_back({i, static_cast<Vertex>((i + 1) % 5)});
        g.edges.push_back({i, static_cast<Vertex>(i + 5)});
        g.edges.push_back({static_cast<Vertex>(i + 5), static_cast<Vertex>((i + 2) % 5 + 5)});
    }
    return g;
}

inline SimpleGraph cycle(int n) {
    SimpleGraph g{n, {}};
    for (Vertex i = 0; i < n; ++i) g.edges.push_back(normalized({i, static_cast<Vertex>((i + 1) % n)}));
    return g;
}

inline SimpleGraph path(int n) {
    SimpleGraph g{n, {}};
    for (Vertex i = 0; i + 1 < n; ++i) g.edges.push_back({i, static_cast<Vertex>(i + 1)});
    return g;
}

inline SimpleGraph complete(int n) {
    SimpleGraph g{n, {}};
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.edges.push_back({u, v});
    return g;
}

inline SimpleGraph star(int leaves) {
    SimpleGraph g{leaves + 1, {}};
    for (Vertex i = 1; i <= leaves; ++i) g.edges.push_back({0, i});
    return g;
}

/// Random G(n, m) with m drawn uniformly from [0, n(n-1)/2].
inline SimpleGraph random_graph(int n, std::mt19937_64& rng, double max_density = 1.0) {
    const long long total = static_cast<long long>(n) * (n - 1) / 2;
    std::uniform_int_distribution<long long> pick_m(0, static_cast<long long>(total * max_density));
    return gen_random_gnm(n, pick_m(rng), rng()).graph;
}

/// Reference adjacency kept in parallel with a representation under test.
class EdgeOracle {
   public:
    explicit EdgeOracle(const SimpleGraph& g) : n_(g.n), active_(g.n, true) {
        for (const Edge& e : g.edges) edges_.insert(normalized(e));
    }

    bool adjacent(Vertex u, Vertex v) const { return u != v && edges_.count(normalized({u, v})) != 0; }
    void erase_edge(Vertex u, Vertex v) { edges_.erase(normalized({u, v})); }
    void add_edge(Vertex u, Vertex v) { edges_.insert(normalized({u, v})); }
    void erase_vertex(Vertex v) {
        active_[v] = false;
        for (auto it = edges_.begin(); it != edges_.end();)
            it = (it->u == v || it->v == v) ? edges_.erase(it) : std::next(it);
    }
    bool active(Vertex v) const { return active_[v]; }
    int degree(Vertex v) const {
        int d = 0;
        for (const Edge& e : edges_) d += e.u == v || e.v == v;
        return d;
    }
    std::vector<Vertex> neighbors(Vertex v) const {
        std::vector<Vertex> out;
        for (const Edge& e : edges_) {
            if (e.u == v) out.push_back(e.v);
            if (e.v == v) out.push_back(e.u);
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    std::vector<Vertex> active_vertices() const {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < n_; ++v)
            if (active_[v]) out.push_back(v);
        return out;
    }
    const std::set<Edge>& edges() const { return edges_; }
    int order() const { return n_; }

   private:
    int n_;
    std::set<Edge> edges_;
    std::vector<bool> active_;
};

template <typename T>
std::vector<T> sorted(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace hg::test

#endif  // HG_TESTS_SUPPORT_HPP
