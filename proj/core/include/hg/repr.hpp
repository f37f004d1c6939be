#ifndef HG_REPR_HPP
#define HG_REPR_HPP

// Solver-facing view of a search graph. The solvers are written once against
// the SearchGraph concept; HybridRepr (implicit undo by frame copy) and
// BaselineGraph (explicit undo log) both model it, so two runs of the same
// solver differ only in the representation.

#include <concepts>
#include <span>
#include <utility>
#include <vector>

#include "hg/baseline_graph.hpp"
#include "hg/contraction.hpp"
#include "hg/hybrid_graph.hpp"

namespace hg {

template <typename G>
concept SearchGraph = requires(G g, const G cg, Vertex v, typename G::Mark m) {
    { cg.order() } -> std::convertible_to<int>;
    { cg.active_count() } -> std::convertible_to<int>;
    { cg.is_active(v) } -> std::same_as<bool>;
    { cg.degree(v) } -> std::convertible_to<int>;
    { cg.adjacent(v, v) } -> std::same_as<bool>;
    cg.for_each_active([](Vertex) {});
    cg.for_each_neighbor(v, [](Vertex) {});
    g.delete_edge(v, v);
    g.delete_vertex(v);
    { g.save() } -> std::same_as<typename G::Mark>;
    g.restore(m);
    { cg.counters() } -> std::convertible_to<const OpCounters&>;
};

template <typename G>
concept EditableGraph = SearchGraph<G> && requires(G g, Vertex v) { g.add_edge(v, v); };

/// Hybrid graph plus its current frame. save() pushes a copy of the frame
/// onto a reusable stack; restore(mark) copies it back. No operation is ever
/// logged.
template <bool kCells = false>
class HybridRepr {
   public:
    using Graph = BasicHybridGraph<kCells>;
    using Mark = std::size_t;

    HybridRepr(int n, std::span<const Edge> edges, GraphMode mode = GraphMode::kBase) {
        auto built = Graph::build(n, edges, mode);
        g_.emplace_back(std::move(built.first));
        frame_ = std::move(built.second);
        ext_ = mode == GraphMode::kEdgeAddition;
        if (ext_) add_ = graph().make_addition_state();
    }

    int order() const { return graph().order(); }
    int active_count() const { return frame_.n_active; }
    bool is_active(Vertex v) const { return graph().is_active(frame_, v); }
    int degree(Vertex v) const { return ext_ ? frame_.deg[v] + add_.ndeg[v] : frame_.deg[v]; }

    bool adjacent(Vertex u, Vertex v) const {
        return ext_ ? graph().is_adjacent_ext(frame_, add_, u, v) : graph().is_adjacent(frame_, u, v);
    }

    template <typename Fn>
    void for_each_active(Fn&& fn) const {
        graph().for_each_active(frame_, std::forward<Fn>(fn));
    }

    template <typename Fn>
    void for_each_neighbor(Vertex v, Fn&& fn) const {
        if (ext_)
            graph().for_each_neighbor_ext(frame_, add_, v, std::forward<Fn>(fn));
        else
            graph().for_each_neighbor(frame_, v, std::forward<Fn>(fn));
    }

    void delete_edge(Vertex u, Vertex v) { graph().delete_edge(frame_, u, v); }
    void delete_vertex(Vertex v) { graph().delete_vertex(frame_, v); }
    void add_edge(Vertex u, Vertex v) { graph().add_edge_permanent(frame_, add_, u, v); }

    Mark save() {
        auto& t = graph().tally();
        t.call(Op::kSnapshot);
        if (depth_ == stack_.size()) stack_.emplace_back();
        Saved& s = stack_[depth_];
        s.frame.deg = frame_.deg;
        s.frame.n_active = frame_.n_active;
        if (ext_) s.add.ndeg = add_.ndeg;
        t.read(Op::kSnapshot, frame_.deg.size() * (ext_ ? 2 : 1) + 1);
        return depth_++;
    }

    void restore(Mark mark) {
        const Saved& s = stack_[mark];
        graph().restore(frame_, s.frame);
        if (ext_) graph().restore(add_, s.add);
        depth_ = mark;
    }

    const OpCounters& counters() const { return graph().counters(); }
    void reset_counters() { graph().reset_counters(); }

    Graph& graph() { return g_.front(); }
    const Graph& graph() const { return g_.front(); }
    const SearchFrame& frame() const { return frame_; }
    const AdditionState& addition() const { return add_; }

   private:
    struct Saved {
        SearchFrame frame;
        AdditionState add;
    };

    // Graph has no default constructor; a one-element vector keeps this
    // class movable without an optional in every accessor.
    std::vector<Graph> g_;
    SearchFrame frame_;
    AdditionState add_;
    bool ext_ = false;
    std::vector<Saved> stack_;
    std::size_t depth_ = 0;
};

/// Color-level view for algorithms that contract edges: the "vertices" seen
/// through this interface are the active color classes.
template <bool kCells = false>
class ColoredRepr {
   public:
    using Graph = BasicHybridGraph<kCells>;
    using Colors = BasicColorSets<kCells>;
    using Mark = std::size_t;

    ColoredRepr(int n, std::span<const Edge> edges) {
        auto built = Graph::build(n, edges, GraphMode::kContraction);
        g_.emplace_back(std::move(built.first));
        frame_ = std::move(built.second);
        auto colored = Colors::make(g_.front(), frame_);
        cs_.emplace_back(std::move(colored.first));
        colors_ = std::move(colored.second);
    }

    int order() const { return graph().order(); }
    int active_count() const { return frame_.n_active; }
    bool is_active(Vertex c) const { return graph().is_active(frame_, c); }
    int degree(Vertex c) const { return colors_.cd[c]; }

    bool adjacent(Vertex a, Vertex b) const {
        graph().tally().call(Op::kAdjacency);
        return sets().colors_adjacent(graph(), frame_, colors_, a, b);
    }

    template <typename Fn>
    void for_each_active(Fn&& fn) const {
        graph().for_each_active(frame_, std::forward<Fn>(fn));
    }

    template <typename Fn>
    void for_each_neighbor(Vertex c, Fn&& fn) const {
        sets().for_each_color_neighbor(graph(), frame_, colors_, c, std::forward<Fn>(fn));
    }

    /// Color-level edge deletion: removes the single member edge joining a
    /// and b.
    void delete_edge(Vertex a, Vertex b) {
        for (Vertex m : sets().members(colors_, a)) {
            const Vertex* row = graph().row(m);
            for (int i = 0; i < frame_.deg[m]; ++i) {
                const Vertex x = row[i];
                if (colors_.vcolor[x] == b) {
                    graph().delete_edge(frame_, m, x);
                    --colors_.cd[a];
                    --colors_.cd[b];
                    return;
                }
            }
        }
        HG_EXPECTS(false, "delete_edge: colors are not adjacent");
    }

    void delete_vertex(Vertex c) { sets().delete_color(graph(), frame_, colors_, c); }
    void contract(Vertex a, Vertex b) { sets().contract_edge(graph(), frame_, colors_, a, b); }

    std::span<const Vertex> members(Vertex c) const { return sets().members(colors_, c); }
    std::span<const Vertex> member_prefix(Vertex c, int count) const { return sets().member_prefix(c, count); }
    int cardinality(Vertex c) const { return colors_.cc[c]; }

    Mark save() {
        auto& t = graph().tally();
        t.call(Op::kSnapshot);
        if (depth_ == stack_.size()) stack_.emplace_back();
        Saved& s = stack_[depth_];
        s.frame.deg = frame_.deg;
        s.frame.n_active = frame_.n_active;
        s.colors.vcolor = colors_.vcolor;
        s.colors.cc = colors_.cc;
        s.colors.cd = colors_.cd;
        t.read(Op::kSnapshot, 4 * frame_.deg.size() + 1);
        return depth_++;
    }

    void restore(Mark mark) {
        const Saved& s = stack_[mark];
        graph().restore(frame_, s.frame);
        sets().restore_colors(graph(), colors_, s.colors);
        depth_ = mark;
    }

    const OpCounters& counters() const { return graph().counters(); }
    void reset_counters() { graph().reset_counters(); }

    const Graph& graph() const { return g_.front(); }
    const SearchFrame& frame() const { return frame_; }
    const ColorFrame& colors() const { return colors_; }

   private:
    struct Saved {
        SearchFrame frame;
        ColorFrame colors;
    };

    Graph& graph() { return g_.front(); }
    Colors& sets() { return cs_.front(); }
    const Colors& sets() const { return cs_.front(); }

    std::vector<Graph> g_;
    std::vector<Colors> cs_;
    SearchFrame frame_;
    ColorFrame colors_;
    std::vector<Saved> stack_;
    std::size_t depth_ = 0;
};

static_assert(SearchGraph<HybridRepr<>>);
static_assert(EditableGraph<HybridRepr<>>);
static_assert(SearchGraph<BaselineGraph>);
static_assert(EditableGraph<BaselineGraph>);
static_assert(SearchGraph<ColoredRepr<>>);

}  // namespace hg

#endif  // HG_REPR_HPP
