#ifndef HG_VERTEX_COVER_HPP
#define HG_VERTEX_COVER_HPP

// Branch-and-reduce Vertex Cover over any SearchGraph.
//
// Every choice the search makes is a function of the current graph as a set
// (lowest vertex id wins ties, neighbor lists are sorted before use), so the
// hybrid and baseline representations explore the same tree.

#include <algorithm>
#include <functional>
#include <queue>
#include <unordered_set>
#include <vector>

#include "hg/repr.hpp"
#include "hg/solver_types.hpp"

namespace hg {

namespace detail {

struct Scan {
    Vertex best = kNoVertex;  // max degree, lowest id on ties
    int max_deg = 0;
    long long degree_sum = 0;
};

template <SearchGraph G>
Scan scan_degrees(const G& g) {
    Scan s;
    int best_deg = -1;
    g.for_each_active([&](Vertex v) {
        const int d = g.degree(v);
        s.degree_sum += d;
        if (d > best_deg || (d == best_deg && v < s.best)) {
            best_deg = d;
            s.best = v;
        }
    });
    s.max_deg = std::max(best_deg, 0);
    return s;
}

template <SearchGraph G>
void sorted_neighbors(const G& g, Vertex v, std::vector<Vertex>& out) {
    out.clear();
    g.for_each_neighbor(v, [&](Vertex u) { out.push_back(u); });
    std::sort(out.begin(), out.end());
}

}  // namespace detail

/// Minimum vertex cover by branching on a maximum-degree vertex v: take v,
/// or take all of N(v). Reductions: drop isolated vertices, take the
/// neighbor of a degree-one vertex. Lower bound: max(ceil(m / maxdeg),
/// size of a greedy maximal matching).
template <SearchGraph G>
class VcOptSearch {
   public:
    VcOptSearch(G& g, const SearchLimits& limits) : g_(g), counter_(limits), matched_(g.order(), 0) {}

    SolverResult run() {
        SolverResult r;
        r.problem = Problem::kVcOpt;
        greedy_incumbent();
        search();
        r.status = Status::kSolved;
        r.value = static_cast<int>(best_.size());
        r.solution = best_;
        std::sort(r.solution.begin(), r.solution.end());
        r.nodes = counter_.count();
        return r;
    }

    std::uint64_t nodes() const { return counter_.count(); }

   private:
    void greedy_incumbent() {
        const auto mark = g_.save();
        std::vector<Vertex> cover;
        for (;;) {
            const detail::Scan s = detail::scan_degrees(g_);
            if (s.degree_sum == 0) break;
            cover.push_back(s.best);
            g_.delete_vertex(s.best);
        }
        g_.restore(mark);
        best_ = std::move(cover);
    }

    // Degree <= 1 rules, always applied to the lowest-id eligible vertex.
    // Returns false once the partial cover can no longer beat the incumbent.
    bool reduce() {
        std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> heap;
        g_.for_each_active([&](Vertex v) {
            if (g_.degree(v) <= 1) heap.push(v);
        });
        while (!heap.empty()) {
            const Vertex v = heap.top();
            heap.pop();
            if (!g_.is_active(v)) continue;
            const int d = g_.degree(v);
            if (d == 0) {
                g_.delete_vertex(v);
            } else if (d == 1) {
                Vertex u = kNoVertex;
                g_.for_each_neighbor(v, [&](Vertex x) { u = x; });
                buf_.clear();
                g_.for_each_neighbor(u, [&](Vertex x) { buf_.push_back(x); });
                partial_.push_back(u);
                g_.delete_vertex(u);
                if (partial_.size() >= best_.size()) return false;
                for (Vertex x : buf_)
                    if (g_.degree(x) <= 1) heap.push(x);
            }
        }
        return true;
    }

    int matching_bound() {
        ++stamp_;
        int size = 0;
        active_.clear();
        g_.for_each_active([&](Vertex v) { active_.push_back(v); });
        std::sort(active_.begin(), active_.end());
        for (Vertex v : active_) {
            if (matched_[v] == stamp_) continue;
            Vertex partner = kNoVertex;
            g_.for_each_neighbor(v, [&](Vertex u) {
                if (matched_[u] != stamp_ && (partner == kNoVertex || u < partner)) partner = u;
            });
            if (partner != kNoVertex) {
                matched_[v] = matched_[partner] = stamp_;
                ++size;
            }
        }
        return size;
    }

    void search() {
        const std::size_t entry = partial_.size();
        search_reduced();
        partial_.resize(entry);
    }

    void search_reduced() {
        counter_.enter();
        if (!reduce()) return;
        const detail::Scan s = detail::scan_degrees(g_);
        if (s.degree_sum == 0) {
            if (partial_.size() < best_.size()) best_ = partial_;
            return;
        }
        const long long m = s.degree_sum / 2;
        const long long by_degree = (m + s.max_deg - 1) / s.max_deg;
        const std::size_t have = partial_.size();
        if (have + static_cast<std::size_t>(by_degree) >= best_.size()) return;
        if (have + static_cast<std::size_t>(matching_bound()) >= best_.size()) return;

        const Vertex v = s.best;
        {
            const auto mark = g_.save();
            partial_.push_back(v);
            g_.delete_vertex(v);
            search();
            partial_.resize(have);
            g_.restore(mark);
        }
        if (have + static_cast<std::size_t>(g_.degree(v)) >= best_.size()) return;
        {
            const auto mark = g_.save();
            std::vector<Vertex> nbrs;
            detail::sorted_neighbors(g_, v, nbrs);
            for (Vertex u : nbrs) {
                partial_.push_back(u);
                g_.delete_vertex(u);
            }
            search();
            partial_.resize(have);
            g_.restore(mark);
        }
    }

    G& g_;
    NodeCounter counter_;
    std::vector<Vertex> partial_;
    std::vector<Vertex> best_;
    std::vector<Vertex> buf_;
    std::vector<Vertex> active_;
    std::vector<std::uint32_t> matched_;
    std::uint32_t stamp_ = 0;
};

template <typename G>
concept FoldingGraph = SearchGraph<G> && requires(G g, const G cg, Vertex v) {
    g.contract(v, v);
    cg.members(v);
    cg.member_prefix(v, 0);
    { cg.cardinality(v) } -> std::convertible_to<int>;
};

/// Decision version: is there a cover of size <= k? Reductions: isolated
/// vertices, degree one (take the neighbor), degree > k (take the vertex),
/// and with folding enabled degree two: adjacent neighbors are both taken
/// (k -= 2), non-adjacent ones are folded into the degree-two vertex by two
/// contractions (k -= 1). Folding needs a FoldingGraph (ColoredRepr).
template <SearchGraph G>
class VcParmSearch {
   public:
    VcParmSearch(G& g, int k, bool fold, const SearchLimits& limits)
        : g_(g), k_(k), fold_(fold), counter_(limits) {
        if constexpr (!FoldingGraph<G>) {
            if (fold) throw GraphError(ErrorKind::kUsage, "folding requires a contraction-capable representation");
        }
    }

    SolverResult run() {
        SolverResult r;
        r.problem = Problem::kVcParm;
        r.k = k_;
        if (k_ >= 0 && search(k_)) {
            r.status = Status::kYes;
            r.solution = witness_;
            r.value = static_cast<int>(witness_.size());
        } else {
            r.status = Status::kNo;
        }
        r.nodes = counter_.count();
        return r;
    }

    std::uint64_t nodes() const { return counter_.count(); }

   private:
    struct Fold {
        Vertex mid;
        int mid_count;
        Vertex a;
        int a_count;
        Vertex b;
        int b_count;
    };

    void take(Vertex c) {
        if constexpr (FoldingGraph<G>) {
            for (Vertex m : g_.members(c)) partial_.push_back(m);
        } else {
            partial_.push_back(c);
        }
        g_.delete_vertex(c);
    }

    // Applies reductions until none fires. Returns the remaining budget, or
    // -1 if the branch is infeasible.
    int reduce(int k) {
        for (;;) {
            cand_.clear();
            g_.for_each_active([&](Vertex v) {
                const int d = g_.degree(v);
                if (d <= 1 || d > k || (fold_ && d == 2)) cand_.push_back(v);
            });
            if (cand_.empty()) return k;
            std::sort(cand_.begin(), cand_.end());
            for (Vertex v : cand_) {
                if (!g_.is_active(v)) continue;
                const int d = g_.degree(v);
                if (d == 0) {
                    g_.delete_vertex(v);
                } else if (d == 1) {
                    Vertex u = kNoVertex;
                    g_.for_each_neighbor(v, [&](Vertex x) { u = x; });
                    take(u);
                    --k;
                } else if (d > k) {
                    take(v);
                    --k;
                } else if (fold_ && d == 2) {
                    if constexpr (FoldingGraph<G>) k = fold_degree_two(v, k);
                }
                if (k < 0) return -1;
            }
        }
    }

    int fold_degree_two(Vertex v, int k) {
        if constexpr (FoldingGraph<G>) {
            detail::sorted_neighbors(g_, v, nbrs_);
            const Vertex a = nbrs_[0];
            const Vertex b = nbrs_[1];
            if (g_.adjacent(a, b)) {
                take(a);
                take(b);
                g_.delete_vertex(v);
                return k - 2;
            }
            folds_.push_back({v, g_.cardinality(v), a, g_.cardinality(a), b, g_.cardinality(b)});
            g_.contract(v, a);
            g_.contract(v, b);
            return k - 1;
        } else {
            return k;
        }
    }

    bool search(int k) {
        counter_.enter();
        const std::size_t have = partial_.size();
        const std::size_t folds = folds_.size();
        k = reduce(k);
        if (k < 0) return fail(have, folds);
        const detail::Scan s = detail::scan_degrees(g_);
        if (s.degree_sum == 0) {
            build_witness();
            return true;
        }
        const long long m = s.degree_sum / 2;
        if (k == 0 || m > static_cast<long long>(k) * s.max_deg) return fail(have, folds);

        const Vertex v = s.best;
        const std::size_t have2 = partial_.size();
        const std::size_t folds2 = folds_.size();
        {
            const auto mark = g_.save();
            take(v);
            if (search(k - 1)) return true;
            partial_.resize(have2);
            folds_.resize(folds2);
            g_.restore(mark);
        }
        const int d = g_.degree(v);
        if (d <= k) {
            const auto mark = g_.save();
            std::vector<Vertex> nbrs;
            detail::sorted_neighbors(g_, v, nbrs);
            for (Vertex u : nbrs) take(u);
            if (search(k - d)) return true;
            partial_.resize(have2);
            folds_.resize(folds2);
            g_.restore(mark);
        }
        return fail(have, folds);
    }

    bool fail(std::size_t have, std::size_t folds) {
        partial_.resize(have);
        folds_.resize(folds);
        return false;
    }

    // Unfolds in reverse order. A folded color is in the cover either with
    // all its members or with none; in the first case the two outer parts
    // stay and the middle part leaves, otherwise the middle part joins.
    void build_witness() {
        std::unordered_set<Vertex> cover(partial_.begin(), partial_.end());
        if constexpr (FoldingGraph<G>) {
            for (auto it = folds_.rbegin(); it != folds_.rend(); ++it) {
                const auto mid = g_.member_prefix(it->mid, it->mid_count);
                if (cover.count(mid.front()) != 0) {
                    for (Vertex x : mid) cover.erase(x);
                } else {
                    for (Vertex x : mid) cover.insert(x);
                }
            }
        }
        witness_.assign(cover.begin(), cover.end());
        std::sort(witness_.begin(), witness_.end());
    }

    G& g_;
    int k_;
    bool fold_;
    NodeCounter counter_;
    std::vector<Vertex> partial_;
    std::vector<Fold> folds_;
    std::vector<Vertex> witness_;
    std::vector<Vertex> cand_;
    std::vector<Vertex> nbrs_;
};

}  // namespace hg

#endif  // HG_VERTEX_COVER_HPP
