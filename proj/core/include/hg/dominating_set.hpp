#ifndef HG_DOMINATING_SET_HPP
#define HG_DOMINATING_SET_HPP

// Minimum Dominating Set through Minimum Set Cover. The set system lives in
// a bipartite search graph: vertex s < n is the set N[s], vertex n + e is the
// element e. A set's degree is its cardinality, an element's degree its
// frequency.

#include <algorithm>
#include <vector>

#include "hg/repr.hpp"
#include "hg/solver_types.hpp"

namespace hg {

/// Incidence edges of the set-cover instance, in a fixed order so that every
/// representation starts from identical lists.
std::vector<Edge> dominating_set_incidence(const SimpleGraph& g);

template <SearchGraph G>
class DsOptSearch {
   public:
    /// `g` must hold the incidence graph of an n-vertex instance (2n vertices).
    DsOptSearch(G& g, int n, const SearchLimits& limits) : g_(g), n_(n), counter_(limits) {}

    SolverResult run() {
        SolverResult r;
        r.problem = Problem::kDsOpt;
        greedy_incumbent();
        search(0, n_);
        r.status = Status::kSolved;
        r.value = static_cast<int>(best_.size());
        r.solution = best_;
        std::sort(r.solution.begin(), r.solution.end());
        r.nodes = counter_.count();
        return r;
    }

    std::uint64_t nodes() const { return counter_.count(); }

   private:
    bool is_set(Vertex x) const { return x < n_; }

    // Picks s: removes its elements from the universe, then s itself.
    int include(Vertex s) {
        buf_.clear();
        g_.for_each_neighbor(s, [&](Vertex e) { buf_.push_back(e); });
        for (Vertex e : buf_) g_.delete_vertex(e);
        g_.delete_vertex(s);
        partial_.push_back(s);
        return static_cast<int>(buf_.size());
    }

    void greedy_incumbent() {
        const auto mark = g_.save();
        const std::size_t entry = partial_.size();
        int left = n_;
        while (left > 0) {
            Vertex best = kNoVertex;
            int card = -1;
            g_.for_each_active([&](Vertex x) {
                if (!is_set(x)) return;
                const int d = g_.degree(x);
                if (d > card || (d == card && x < best)) {
                    card = d;
                    best = x;
                }
            });
            left -= include(best);
        }
        best_.assign(partial_.begin() + static_cast<std::ptrdiff_t>(entry), partial_.end());
        partial_.resize(entry);
        g_.restore(mark);
    }

    // Unique-element rule (an element covered by one set forces that set)
    // and removal of empty sets, lowest id first. Returns the number of
    // elements left, or -1 if some element can no longer be covered.
    int reduce(int left) {
        for (;;) {
            cand_.clear();
            bool dead = false;
            g_.for_each_active([&](Vertex x) {
                const int d = g_.degree(x);
                if (is_set(x)) {
                    if (d == 0) cand_.push_back(x);
                } else if (d == 0) {
                    dead = true;
                } else if (d == 1) {
                    cand_.push_back(x);
                }
            });
            if (dead) return -1;
            if (cand_.empty()) return left;
            std::sort(cand_.begin(), cand_.end());
            for (Vertex x : cand_) {
                if (!g_.is_active(x)) continue;
                const int d = g_.degree(x);
                if (is_set(x)) {
                    if (d == 0) g_.delete_vertex(x);
                } else if (d == 0) {
                    return -1;
                } else if (d == 1) {
                    Vertex s = kNoVertex;
                    g_.for_each_neighbor(x, [&](Vertex y) { s = y; });
                    left -= include(s);
                }
            }
        }
    }

    void search(int chosen, int left) {
        counter_.enter();
        const std::size_t entry = partial_.size();
        left = reduce(left);
        chosen = static_cast<int>(partial_.size());
        if (left < 0 || chosen >= static_cast<int>(best_.size())) {
            partial_.resize(entry);
            return;
        }
        if (left == 0) {
            best_ = partial_;
            partial_.resize(entry);
            return;
        }
        Vertex s = kNoVertex;
        int card = -1;
        g_.for_each_active([&](Vertex x) {
            if (!is_set(x)) return;
            const int d = g_.degree(x);
            if (d > card || (d == card && x < s)) {
                card = d;
                s = x;
            }
        });
        const int lb = (left + card - 1) / card;
        if (chosen + lb >= static_cast<int>(best_.size())) {
            partial_.resize(entry);
            return;
        }
        const std::size_t here = partial_.size();
        {
            const auto mark = g_.save();
            const int covered = include(s);
            search(chosen + 1, left - covered);
            partial_.resize(here);
            g_.restore(mark);
        }
        {
            const auto mark = g_.save();
            g_.delete_vertex(s);
            search(chosen, left);
            partial_.resize(here);
            g_.restore(mark);
        }
        partial_.resize(entry);
    }

    G& g_;
    int n_;
    NodeCounter counter_;
    std::vector<Vertex> partial_;
    std::vector<Vertex> best_;
    std::vector<Vertex> buf_;
    std::vector<Vertex> cand_;
};

}  // namespace hg

#endif  // HG_DOMINATING_SET_HPP
