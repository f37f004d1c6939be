#ifndef HG_BASELINE_GRAPH_HPP
#define HG_BASELINE_GRAPH_HPP

// Classical adjacency lists with an explicit undo log. Every modification
// pushes a record; undo_to(mark) pops records and performs them in reverse.
//
// Neighbor lists are circular doubly-linked lists threaded through one node
// pool (node v is the list head of vertex v). Unlinked nodes keep their
// prev/next pointers, so an undo relinks them at their old position and the
// list order comes back exactly.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hg/counters.hpp"
#include "hg/types.hpp"

namespace hg {

template <bool kCells = false>
class BasicBaselineGraph {
   public:
    using Mark = std::size_t;

    BasicBaselineGraph(int n, std::span<const Edge> edges) : n_(n) {
        if (n < 0) throw GraphError(ErrorKind::kOutOfRange, "negative vertex count");
        node_.assign(n, kNoVertex);
        next_.resize(n);
        prev_.resize(n);
        for (int v = 0; v < n; ++v) next_[v] = prev_[v] = v;
        deg_.assign(n, 0);
        active_.assign(n, 1);
        n_active_ = n;
        std::vector<Edge> sorted;
        sorted.reserve(edges.size());
        for (const Edge& e : edges) {
            if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
                throw GraphError(ErrorKind::kOutOfRange,
                                 "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                     ") has an endpoint outside 0.." + std::to_string(n - 1));
            if (e.u == e.v)
                throw GraphError(ErrorKind::kSelfLoop, "self-loop at vertex " + std::to_string(e.u));
            sorted.push_back(normalized(e));
        }
        std::sort(sorted.begin(), sorted.end());
        if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end())
            throw GraphError(ErrorKind::kDuplicateEdge,
                             "duplicate edge (" + std::to_string(it->u) + "," + std::to_string(it->v) + ")");
        for (const Edge& e : edges) {
            append(e.u, e.v);
            append(e.v, e.u);
        }
        tally_.reset();
    }

    int order() const { return n_; }
    int active_count() const { return n_active_; }
    bool is_active(Vertex v) const { return active_[v] != 0; }
    int degree(Vertex v) const { return deg_[v]; }

    /// Scans the shorter of the two lists.
    bool adjacent(Vertex u, Vertex v) const {
        tally_.call(Op::kAdjacency);
        if (deg_[u] > deg_[v]) std::swap(u, v);
        for (int p = next_[u]; p != u; p = next_[p]) {
            tally_.read(Op::kAdjacency, 2);
            if (node_[p] == v) return true;
        }
        return false;
    }

    template <typename Fn>
    void for_each_neighbor(Vertex v, Fn&& fn) const {
        tally_.call(Op::kNeighborhood);
        for (int p = next_[v]; p != v; p = next_[p]) {
            tally_.read(Op::kNeighborhood, 2);
            fn(node_[p]);
        }
    }

    template <typename Fn>
    void for_each_active(Fn&& fn) const {
        tally_.call(Op::kTraversal);
        tally_.read(Op::kTraversal, static_cast<std::uint64_t>(n_));
        for (Vertex v = 0; v < n_; ++v)
            if (active_[v]) fn(v);
    }

    std::vector<Vertex> neighbors(Vertex v) const {
        std::vector<Vertex> out;
        for_each_neighbor(v, [&](Vertex u) { out.push_back(u); });
        return out;
    }

    void delete_edge(Vertex u, Vertex v) {
        tally_.call(Op::kDeleteEdge);
        const int p = find_counted(u, v, Op::kDeleteEdge);
        const int q = find_counted(v, u, Op::kDeleteEdge);
        HG_EXPECTS(p >= 0 && q >= 0, "b_delete_edge: edge is not present");
        unlink(p, Op::kDeleteEdge);
        --deg_[u];
        unlink(q, Op::kDeleteEdge);
        --deg_[v];
        log_.push_back({Kind::kEdge, p, q});
    }

    /// Walks the list of v; for every neighbor u the entry for v has to be
    /// searched for in the list of u, hence O(sum of neighbor degrees).
    void delete_vertex(Vertex v) {
        HG_EXPECTS(active_[v], "b_delete_vertex: vertex is not active");
        tally_.call(Op::kDeleteVertex);
        for (int p = next_[v]; p != v; p = next_[v]) {
            const Vertex u = node_[p];
            tally_.read(Op::kDeleteVertex, 2);
            const int q = find_counted(u, v, Op::kDeleteVertex);
            unlink(p, Op::kDeleteVertex);
            --deg_[v];
            unlink(q, Op::kDeleteVertex);
            --deg_[u];
            log_.push_back({Kind::kEdge, p, q});
        }
        active_[v] = 0;
        --n_active_;
        tally_.write(Op::kDeleteVertex, 2);
        log_.push_back({Kind::kVertex, v, 0});
    }

    void add_edge(Vertex u, Vertex v) {
        HG_EXPECTS(u != v && active_[u] && active_[v], "b_add_edge: inactive endpoint");
        HG_EXPECTS(find(u, v) < 0, "b_add_edge: edge already present");
        tally_.call(Op::kAddEdge);
        const int p = append(u, v);
        const int q = append(v, u);
        tally_.write(Op::kAddEdge, 10);
        log_.push_back({Kind::kAdd, p, q});
    }

    Mark save() const {
        tally_.call(Op::kSnapshot);
        return log_.size();
    }

    /// Pops and reverses every record pushed after `mark`.
    void undo_to(Mark mark) {
        if (mark > log_.size())
            throw GraphError(ErrorKind::kUsage, "undo_to: mark " + std::to_string(mark) +
                                                    " is beyond the undo log (" +
                                                    std::to_string(log_.size()) + " records)");
        tally_.call(Op::kRestore);
        while (log_.size() > mark) {
            const Record r = log_.back();
            log_.pop_back();
            switch (r.kind) {
                case Kind::kEdge:
                    relink(r.b);
                    ++deg_[node_[r.a]];
                    relink(r.a);
                    ++deg_[node_[r.b]];
                    tally_.write(Op::kRestore, 8);
                    break;
                case Kind::kVertex:
                    active_[r.a] = 1;
                    ++n_active_;
                    tally_.write(Op::kRestore, 2);
                    break;
                case Kind::kAdd:
                    unlink(r.b, Op::kRestore);
                    --deg_[node_[r.a]];
                    unlink(r.a, Op::kRestore);
                    --deg_[node_[r.b]];
                    // The two nodes are the most recent allocations.
                    node_.resize(node_.size() - 2);
                    next_.resize(next_.size() - 2);
                    prev_.resize(prev_.size() - 2);
                    break;
            }
        }
    }

    void restore(Mark mark) { undo_to(mark); }

    std::size_t log_size() const { return log_.size(); }

    const OpCounters& counters() const { return tally_.counters(); }
    void reset_counters() { tally_.reset(); }

   private:
    enum class Kind : std::uint8_t { kEdge, kVertex, kAdd };
    struct Record {
        Kind kind;
        int a;
        int b;
    };

    int find(Vertex owner, Vertex target) const {
        for (int p = next_[owner]; p != owner; p = next_[p])
            if (node_[p] == target) return p;
        return -1;
    }

    int find_counted(Vertex owner, Vertex target, Op cls) const {
        for (int p = next_[owner]; p != owner; p = next_[p]) {
            tally_.read(cls, 2);
            if (node_[p] == target) return p;
        }
        return -1;
    }

    int append(Vertex owner, Vertex target) {
        const int p = static_cast<int>(node_.size());
        node_.push_back(target);
        const int tail = prev_[owner];
        next_.push_back(owner);
        prev_.push_back(tail);
        next_[tail] = p;
        prev_[owner] = p;
        ++deg_[owner];
        return p;
    }

    void unlink(int p, Op cls) {
        next_[prev_[p]] = next_[p];
        prev_[next_[p]] = prev_[p];
        tally_.read(cls, 2);
        tally_.write(cls, 3);
    }

    void relink(int p) {
        next_[prev_[p]] = p;
        prev_[next_[p]] = p;
    }

    int n_ = 0;
    int n_active_ = 0;
    std::vector<Vertex> node_;
    std::vector<int> next_;
    std::vector<int> prev_;
    std::vector<int> deg_;
    std::vector<std::uint8_t> active_;
    std::vector<Record> log_;
    mutable Tally<kCells> tally_;
};

using BaselineGraph = BasicBaselineGraph<false>;
using InstrumentedBaselineGraph = BasicBaselineGraph<true>;

}  // namespace hg

#endif  // HG_BASELINE_GRAPH_HPP
