#ifndef HG_HYBRID_GRAPH_HPP
#define HG_HYBRID_GRAPH_HPP

// Hybrid adjacency-list / index-matrix graph for backtracking search.
//
// Global, allocated once:
//   al      per-vertex neighbor arrays
//   im      n x n index table, im(u, v) = position of u inside al[v] or -1
//   list    permutation of the vertices, active ones first
//   idxlist inverse of list
//
// Frame-local (SearchFrame, AdditionState): the degree vectors and the
// active-vertex count. The first deg[v] slots of al[v] are the active
// neighbors of v and the first n_active slots of list are the active
// vertices. Deletions swap the removed element just past the boundary, so
// restoring an older copy of the frame brings every deleted element back
// without touching the global arrays.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hg/counters.hpp"
#include "hg/types.hpp"

namespace hg {

struct SearchFrame {
    std::vector<int> deg;
    int n_active = 0;

    friend bool operator==(const SearchFrame&, const SearchFrame&) = default;
};

/// Second degree vector for permanently added edges. Added neighbors of v
/// occupy al[v] positions n-1, n-2, ..., n-ndeg[v].
struct AdditionState {
    std::vector<int> ndeg;

    friend bool operator==(const AdditionState&, const AdditionState&) = default;
};

enum class GraphMode : std::uint8_t {
    kBase,
    /// list/idxlist track color classes; see contraction.hpp.
    kContraction,
    /// Every al row has capacity n so edges can be appended at the tail.
    kEdgeAddition,
};

template <bool kCells = false>
class BasicHybridGraph {
   public:
    static std::pair<BasicHybridGraph, SearchFrame> build(int n, std::span<const Edge> edges,
                                                          GraphMode mode = GraphMode::kBase) {
        if (n < 0) throw GraphError(ErrorKind::kOutOfRange, "negative vertex count");
        BasicHybridGraph g;
        g.n_ = n;
        g.mode_ = mode;
        g.im_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
        g.original_degree_.assign(n, 0);
        for (const Edge& e : edges) {
            if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
                throw GraphError(ErrorKind::kOutOfRange,
                                 "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                     ") has an endpoint outside 0.." + std::to_string(n - 1));
            if (e.u == e.v)
                throw GraphError(ErrorKind::kSelfLoop, "self-loop at vertex " + std::to_string(e.u));
            ++g.original_degree_[e.u];
            ++g.original_degree_[e.v];
        }

        g.row_start_.assign(static_cast<std::size_t>(n) + 1, 0);
        for (int v = 0; v < n; ++v) {
            const std::size_t width = mode == GraphMode::kEdgeAddition
                                          ? static_cast<std::size_t>(n)
                                          : static_cast<std::size_t>(g.original_degree_[v]);
            g.row_start_[v + 1] = g.row_start_[v] + width;
        }
        g.al_.assign(g.row_start_[n], kNoVertex);

        SearchFrame f;
        f.deg.assign(n, 0);
        for (const Edge& e : edges) {
            if (g.im_[g.cell(e.u, e.v)] != -1)
                throw GraphError(ErrorKind::kDuplicateEdge, "duplicate edge (" + std::to_string(e.u) +
                                                                "," + std::to_string(e.v) + ")");
            g.al_[g.row_start_[e.u] + f.deg[e.u]] = e.v;
            g.im_[g.cell(e.v, e.u)] = f.deg[e.u]++;
            g.al_[g.row_start_[e.v] + f.deg[e.v]] = e.u;
            g.im_[g.cell(e.u, e.v)] = f.deg[e.v]++;
        }

        g.list_.resize(n);
        g.idxlist_.resize(n);
        for (int v = 0; v < n; ++v) g.list_[v] = g.idxlist_[v] = v;
        f.n_active = n;
        return {std::move(g), std::move(f)};
    }

    int order() const { return n_; }
    GraphMode mode() const { return mode_; }

    AdditionState make_addition_state() const { return AdditionState{std::vector<int>(n_, 0)}; }

    // ---- queries ---------------------------------------------------------

    /// O(1): -1 < im[u][v] < deg[v].
    bool is_adjacent(const SearchFrame& f, Vertex u, Vertex v) const {
        tally_.call(Op::kAdjacency);
        const int i = im_[cell(u, v)];
        tally_.read(Op::kAdjacency);
        if (i < 0) return false;
        tally_.read(Op::kAdjacency);
        return i < f.deg[v];
    }

    /// Adjacency including permanently added edges. The tail test also
    /// checks that the slot still holds u: im is never rolled back, so after
    /// backtracking im[u][v] may point at a tail slot that another vertex has
    /// since claimed.
    bool is_adjacent_ext(const SearchFrame& f, const AdditionState& a, Vertex u, Vertex v) const {
        tally_.call(Op::kAdjacency);
        const int i = im_[cell(u, v)];
        tally_.read(Op::kAdjacency);
        if (i < 0) return false;
        tally_.read(Op::kAdjacency);
        if (i < f.deg[v]) return true;
        tally_.read(Op::kAdjacency);
        if (n_ - 1 - i >= a.ndeg[v]) return false;
        tally_.read(Op::kAdjacency);
        return al_[row_start_[v] + i] == u;
    }

    template <typename Fn>
    void for_each_neighbor(const SearchFrame& f, Vertex v, Fn&& fn) const {
        tally_.call(Op::kNeighborhood);
        const Vertex* row = al_.data() + row_start_[v];
        const int d = f.deg[v];
        tally_.read(Op::kNeighborhood, static_cast<std::uint64_t>(d) + 1);
        for (int i = 0; i < d; ++i) fn(row[i]);
    }

    template <typename Fn>
    void for_each_neighbor_ext(const SearchFrame& f, const AdditionState& a, Vertex v, Fn&& fn) const {
        tally_.call(Op::kNeighborhood);
        const Vertex* row = al_.data() + row_start_[v];
        const int d = f.deg[v];
        const int nd = a.ndeg[v];
        tally_.read(Op::kNeighborhood, static_cast<std::uint64_t>(d + nd) + 2);
        for (int i = 0; i < d; ++i) fn(row[i]);
        for (int i = n_ - 1; i >= n_ - nd; --i) fn(row[i]);
    }

    std::vector<Vertex> active_neighbors(const SearchFrame& f, Vertex v) const {
        std::vector<Vertex> out;
        out.reserve(f.deg[v]);
        for_each_neighbor(f, v, [&](Vertex u) { out.push_back(u); });
        return out;
    }

    std::vector<Vertex> active_neighbors_ext(const SearchFrame& f, const AdditionState& a,
                                             Vertex v) const {
        std::vector<Vertex> out;
        for_each_neighbor_ext(f, a, v, [&](Vertex u) { out.push_back(u); });
        return out;
    }

    template <typename Fn>
    void for_each_active(const SearchFrame& f, Fn&& fn) const {
        tally_.call(Op::kTraversal);
        tally_.read(Op::kTraversal, static_cast<std::uint64_t>(f.n_active) + 1);
        for (int i = 0; i < f.n_active; ++i) fn(list_[i]);
    }

    std::vector<Vertex> active_vertices(const SearchFrame& f) const {
        return {list_.begin(), list_.begin() + f.n_active};
    }

    bool is_active(const SearchFrame& f, Vertex v) const { return idxlist_[v] < f.n_active; }

    /// Active vertex of maximum degree, lowest id on ties; kNoVertex if the
    /// graph has no active vertex.
    Vertex max_degree_active_vertex(const SearchFrame& f) const {
        tally_.call(Op::kTraversal);
        Vertex best = kNoVertex;
        int best_deg = -1;
        for (int i = 0; i < f.n_active; ++i) {
            const Vertex v = list_[i];
            const int d = f.deg[v];
            if (d > best_deg || (d == best_deg && v < best)) {
                best = v;
                best_deg = d;
            }
        }
        tally_.read(Op::kTraversal, 2 * static_cast<std::uint64_t>(f.n_active) + 1);
        return best;
    }

    // ---- modifications ---------------------------------------------------

    void delete_edge(SearchFrame& f, Vertex u, Vertex v) {
        HG_EXPECTS(u != v && active_base_edge(f, u, v), "delete_edge: edge is not active");
        tally_.call(Op::kDeleteEdge);
        unlink(f, u, v, Op::kDeleteEdge);
    }

    /// Removes v from the active list, then deletes its edges from the last
    /// active slot down to the first. In edge-addition mode only base-region
    /// edges are removed; permanently added edges are never deleted.
    void delete_vertex(SearchFrame& f, Vertex v) {
        HG_EXPECTS(is_active(f, v), "delete_vertex: vertex is not active");
        tally_.call(Op::kDeleteVertex);
        const int d = f.deg[v];
        tally_.read(Op::kDeleteVertex);
        deactivate(f, v, Op::kDeleteVertex);
        const Vertex* row = al_.data() + row_start_[v];
        for (int j = d - 1; j >= 0; --j) {
            const Vertex u = row[j];
            tally_.read(Op::kDeleteVertex);
            unlink(f, u, v, Op::kDeleteVertex);
        }
    }

    /// Swaps v with the last active entry of list and shrinks the active
    /// prefix. Does not touch edges.
    void remove_from_list(SearchFrame& f, Vertex v) {
        HG_EXPECTS(is_active(f, v), "remove_from_list: vertex is not active");
        deactivate(f, v, Op::kDeleteVertex);
    }

    void add_edge_permanent(SearchFrame& f, AdditionState& a, Vertex u, Vertex v) {
        HG_EXPECTS(mode_ == GraphMode::kEdgeAddition, "add_edge_permanent: graph not in edge-addition mode");
        HG_EXPECTS(u != v && is_active(f, u) && is_active(f, v), "add_edge_permanent: inactive endpoint");
        HG_EXPECTS(!adjacent_ext_unchecked(f, a, u, v), "add_edge_permanent: edge already present");
        HG_EXPECTS(n_ - 1 - a.ndeg[v] >= original_degree_[v] && n_ - 1 - a.ndeg[u] >= original_degree_[u],
                   "add_edge_permanent: tail region overflows into base region");
        tally_.call(Op::kAddEdge);
        const int pv = n_ - 1 - a.ndeg[v];
        al_[row_start_[v] + pv] = u;
        im_[cell(u, v)] = pv;
        ++a.ndeg[v];
        const int pu = n_ - 1 - a.ndeg[u];
        al_[row_start_[u] + pu] = v;
        im_[cell(v, u)] = pu;
        ++a.ndeg[u];
        tally_.read(Op::kAddEdge, 2);
        tally_.write(Op::kAddEdge, 6);
    }

    // ---- implicit undo ---------------------------------------------------

    SearchFrame snapshot(const SearchFrame& f) const {
        tally_.call(Op::kSnapshot);
        tally_.read(Op::kSnapshot, f.deg.size() + 1);
        return f;
    }

    /// Copies the saved vectors back. Nothing else is undone: the global
    /// arrays keep whatever order the deletions left behind, which is fine
    /// because only the active prefixes carry meaning.
    void restore(SearchFrame& f, const SearchFrame& saved) const {
        tally_.call(Op::kRestore);
        f.deg = saved.deg;
        f.n_active = saved.n_active;
        tally_.write(Op::kRestore, saved.deg.size() + 1);
    }

    void restore(AdditionState& a, const AdditionState& saved) const {
        tally_.call(Op::kRestore);
        a.ndeg = saved.ndeg;
        tally_.write(Op::kRestore, saved.ndeg.size());
    }

    // ---- raw array access (tests, contraction layer) ---------------------

    Vertex al_at(Vertex v, int i) const { return al_[row_start_[v] + i]; }
    int im_at(Vertex u, Vertex v) const { return im_[cell(u, v)]; }
    Vertex list_at(int i) const { return list_[i]; }
    int idxlist_at(Vertex v) const { return idxlist_[v]; }
    int row_capacity(Vertex v) const { return static_cast<int>(row_start_[v + 1] - row_start_[v]); }
    int original_degree(Vertex v) const { return original_degree_[v]; }
    const Vertex* row(Vertex v) const { return al_.data() + row_start_[v]; }

    const OpCounters& counters() const { return tally_.counters(); }
    void reset_counters() { tally_.reset(); }
    Tally<kCells>& tally() const { return tally_; }

   private:
    BasicHybridGraph() = default;

    std::size_t cell(Vertex u, Vertex v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }

    bool active_base_edge(const SearchFrame& f, Vertex u, Vertex v) const {
        const int i = im_[cell(u, v)];
        const int j = im_[cell(v, u)];
        return i >= 0 && i < f.deg[v] && j >= 0 && j < f.deg[u];
    }

    bool adjacent_ext_unchecked(const SearchFrame& f, const AdditionState& a, Vertex u, Vertex v) const {
        const int i = im_[cell(u, v)];
        if (i < 0) return false;
        if (i < f.deg[v]) return true;
        return n_ - 1 - i < a.ndeg[v] && al_[row_start_[v] + i] == u;
    }

    // The DeleteEdge procedure: in each row, swap the partner with the last
    // active slot and fix the two affected index-table entries.
    void unlink(SearchFrame& f, Vertex u, Vertex v, Op cls) {
        Vertex* row_u = al_.data() + row_start_[u];
        int i = im_[cell(v, u)];
        int j = f.deg[u] - 1;
        Vertex x = row_u[j];
        row_u[i] = x;
        row_u[j] = v;
        im_[cell(x, u)] = i;
        im_[cell(v, u)] = j;
        f.deg[u] = j;

        Vertex* row_v = al_.data() + row_start_[v];
        i = im_[cell(u, v)];
        j = f.deg[v] - 1;
        x = row_v[j];
        row_v[i] = x;
        row_v[j] = u;
        im_[cell(x, v)] = i;
        im_[cell(u, v)] = j;
        f.deg[v] = j;

        tally_.read(cls, 6);
        tally_.write(cls, 10);
    }

    void deactivate(SearchFrame& f, Vertex v, Op cls) {
        const int last_pos = f.n_active - 1;
        const Vertex last = list_[last_pos];
        const int i = idxlist_[v];
        list_[i] = last;
        list_[last_pos] = v;
        idxlist_[last] = i;
        idxlist_[v] = last_pos;
        --f.n_active;
        tally_.read(cls, 3);
        tally_.write(cls, 5);
    }

    int n_ = 0;
    GraphMode mode_ = GraphMode::kBase;
    std::vector<std::size_t> row_start_;
    std::vector<int> original_degree_;
    std::vector<Vertex> al_;
    std::vector<int> im_;
    std::vector<Vertex> list_;
    std::vector<int> idxlist_;
    mutable Tally<kCells> tally_;
};

using HybridGraph = BasicHybridGraph<false>;
using InstrumentedHybridGraph = BasicHybridGraph<true>;

}  // namespace hg

#endif  // HG_HYBRID_GRAPH_HPP
