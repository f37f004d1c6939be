#ifndef HG_CLUSTER_EDITING_HPP
#define HG_CLUSTER_EDITING_HPP

// Parameterized Cluster Editing by branching on conflict triples x-y-z
// (xy, yz present, xz absent): delete xy, delete yz, or add xz. Each branch
// freezes the edited pair for the whole subtree, so added edges are never
// deleted again and deleted pairs are never re-added.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hg/repr.hpp"
#include "hg/solver_types.hpp"

namespace hg {

/// Frame-local set of frozen vertex pairs, copied on every descent.
class PairSet {
   public:
    PairSet() = default;
    explicit PairSet(int n) : n_(n), bits_((static_cast<std::size_t>(n) * n + 63) / 64, 0) {}

    bool contains(Vertex a, Vertex b) const {
        const std::size_t i = index(a, b);
        return (bits_[i >> 6] >> (i & 63)) & 1u;
    }
    void insert(Vertex a, Vertex b) {
        const std::size_t i = index(a, b);
        bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

   private:
    std::size_t index(Vertex a, Vertex b) const {
        if (a > b) std::swap(a, b);
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
    }

    int n_ = 0;
    std::vector<std::uint64_t> bits_;
};

template <EditableGraph G>
class CeParmSearch {
   public:
    CeParmSearch(G& g, int k, const SearchLimits& limits)
        : g_(g),
          n_(g.order()),
          k_(k),
          counter_(limits),
          used_(static_cast<std::size_t>(n_) * n_, 0),
          seen_(n_, 0) {}

    SolverResult run() {
        SolverResult r;
        r.problem = Problem::kCeParm;
        r.k = k_;
        if (k_ >= 0 && search(k_, PairSet(n_))) {
            r.status = Status::kYes;
            r.edits = edits_;
            r.value = static_cast<int>(edits_.size());
        } else {
            r.status = Status::kNo;
        }
        r.nodes = counter_.count();
        return r;
    }

    std::uint64_t nodes() const { return counter_.count(); }

   private:
    struct Triple {
        Vertex x, y, z;
    };

    std::size_t pair_index(Vertex a, Vertex b) const {
        if (a > b) std::swap(a, b);
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
    }

    // Deletes every connected component that already is a clique.
    void remove_clique_components() {
        if (++stamp_ == 0) {
            std::fill(seen_.begin(), seen_.end(), 0);
            stamp_ = 1;
        }
        roots_.clear();
        g_.for_each_active([&](Vertex v) { roots_.push_back(v); });
        for (Vertex root : roots_) {
            if (seen_[root] == stamp_) continue;
            comp_.clear();
            comp_.push_back(root);
            seen_[root] = stamp_;
            long long degree_sum = 0;
            for (std::size_t i = 0; i < comp_.size(); ++i) {
                const Vertex v = comp_[i];
                degree_sum += g_.degree(v);
                g_.for_each_neighbor(v, [&](Vertex u) {
                    if (seen_[u] != stamp_) {
                        seen_[u] = stamp_;
                        comp_.push_back(u);
                    }
                });
            }
            const long long s = static_cast<long long>(comp_.size());
            if (degree_sum == s * (s - 1))
                for (Vertex v : comp_) g_.delete_vertex(v);
        }
    }

    // Enumerates conflict triples in lexicographic (y, x, z) order. The
    // first one is the branching triple; a greedy packing of triples that
    // share no editable pair gives the lower bound. Returns false when the
    // branch is dead (bound above k, or a triple with every pair frozen).
    bool analyze(int k, const PairSet& frozen, bool& found, Triple& first) {
        found = false;
        if (++gen_ == 0) {
            std::fill(used_.begin(), used_.end(), 0);
            gen_ = 1;
        }
        int bound = 0;
        for (Vertex y = 0; y < n_; ++y) {
            if (!g_.is_active(y) || g_.degree(y) < 2) continue;
            nbrs_.clear();
            g_.for_each_neighbor(y, [&](Vertex u) { nbrs_.push_back(u); });
            std::sort(nbrs_.begin(), nbrs_.end());
            for (std::size_t a = 0; a < nbrs_.size(); ++a) {
                for (std::size_t b = a + 1; b < nbrs_.size(); ++b) {
                    const Vertex x = nbrs_[a];
                    const Vertex z = nbrs_[b];
                    if (g_.adjacent(x, z)) continue;
                    if (!found) {
                        found = true;
                        first = {x, y, z};
                    }
                    const Edge pairs[3] = {{x, y}, {y, z}, {x, z}};
                    int editable = 0;
                    bool fresh = true;
                    for (const Edge& p : pairs) {
                        if (frozen.contains(p.u, p.v)) continue;
                        ++editable;
                        if (used_[pair_index(p.u, p.v)] == gen_) fresh = false;
                    }
                    if (editable == 0) return false;
                    if (!fresh) continue;
                    for (const Edge& p : pairs)
                        if (!frozen.contains(p.u, p.v)) used_[pair_index(p.u, p.v)] = gen_;
                    if (++bound > k) return false;
                }
            }
        }
        return true;
    }

    bool search(int k, const PairSet& frozen) {
        counter_.enter();
        remove_clique_components();
        bool found = false;
        Triple t{};
        if (!analyze(k, frozen, found, t)) return false;
        if (!found) return true;

        const EditOp options[3] = {{normalized({t.x, t.y}), false},
                                   {normalized({t.y, t.z}), false},
                                   {normalized({t.x, t.z}), true}};
        for (const EditOp& op : options) {
            if (frozen.contains(op.pair.u, op.pair.v)) continue;
            const auto mark = g_.save();
            PairSet child = frozen;
            child.insert(op.pair.u, op.pair.v);
            if (op.add)
                g_.add_edge(op.pair.u, op.pair.v);
            else
                g_.delete_edge(op.pair.u, op.pair.v);
            edits_.push_back(op);
            if (search(k - 1, child)) return true;
            edits_.pop_back();
            g_.restore(mark);
        }
        return false;
    }

    G& g_;
    int n_;
    int k_;
    NodeCounter counter_;
    std::vector<EditOp> edits_;
    std::vector<std::uint32_t> used_;
    std::uint32_t gen_ = 0;
    std::vector<std::uint32_t> seen_;
    std::uint32_t stamp_ = 0;
    std::vector<Vertex> roots_;
    std::vector<Vertex> comp_;
    std::vector<Vertex> nbrs_;
};

}  // namespace hg

#endif  // HG_CLUSTER_EDITING_HPP
