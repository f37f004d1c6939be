#ifndef HG_CONTRACTION_HPP
#define HG_CONTRACTION_HPP

// Edge contraction by coloring. Vertices sharing a color form one vertex of
// the quotient graph. The member-level edges are kept so that between any
// two active colors there is exactly one active edge, and no active edge runs
// inside a color. With that invariant the degree of a color equals the sum
// of its members' degrees.
//
// Frame-local: vcolor, cc (cardinality), cd (color degree), plus the graph's
// SearchFrame. Global: csl (member arrays, capacity n each). csl needs no
// rollback because contraction only ever appends past cc[c], and entries
// beyond a restored cc[c] are ignored.

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "hg/hybrid_graph.hpp"

namespace hg {

struct ColorFrame {
    std::vector<Vertex> vcolor;
    std::vector<int> cc;
    std::vector<int> cd;

    friend bool operator==(const ColorFrame&, const ColorFrame&) = default;
};

template <bool kCells = false>
class BasicColorSets {
   public:
    using Graph = BasicHybridGraph<kCells>;

    /// Every vertex starts as its own color.
    static std::pair<BasicColorSets, ColorFrame> make(const Graph& g, const SearchFrame& f) {
        if (g.mode() != GraphMode::kContraction)
            throw GraphError(ErrorKind::kUsage, "color sets require a graph built in contraction mode");
        const int n = g.order();
        BasicColorSets cs;
        cs.n_ = n;
        cs.csl_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kNoVertex);
        cs.mark_.assign(n, 0);
        ColorFrame cf;
        cf.vcolor.resize(n);
        cf.cc.assign(n, 1);
        cf.cd.resize(n);
        for (Vertex v = 0; v < n; ++v) {
            cf.vcolor[v] = v;
            cf.cd[v] = f.deg[v];
            cs.csl_[cs.slot(v, 0)] = v;
        }
        return {std::move(cs), std::move(cf)};
    }

    std::span<const Vertex> members(const ColorFrame& cf, Vertex c) const {
        return {csl_.data() + slot(c, 0), static_cast<std::size_t>(cf.cc[c])};
    }

    /// First `count` entries of csl[c]; used to recover the members a color
    /// had at some earlier point of the current search path.
    std::span<const Vertex> member_prefix(Vertex c, int count) const {
        return {csl_.data() + slot(c, 0), static_cast<std::size_t>(count)};
    }

    /// Calls fn once per distinct active color adjacent to c.
    template <typename Fn>
    void for_each_color_neighbor(const Graph& g, const SearchFrame& f, const ColorFrame& cf, Vertex c,
                                 Fn&& fn) const {
        for (Vertex m : members(cf, c)) g.for_each_neighbor(f, m, [&](Vertex x) { fn(cf.vcolor[x]); });
    }

    std::vector<Vertex> color_neighbors(const Graph& g, const SearchFrame& f, const ColorFrame& cf,
                                        Vertex c) const {
        std::vector<Vertex> out;
        out.reserve(cf.cd[c]);
        for_each_color_neighbor(g, f, cf, c, [&](Vertex x) { out.push_back(x); });
        return out;
    }

    /// Scans the member edges of whichever color has the smaller degree.
    bool colors_adjacent(const Graph& g, const SearchFrame& f, const ColorFrame& cf, Vertex a,
                         Vertex b) const {
        if (cf.cd[a] > cf.cd[b]) std::swap(a, b);
        for (Vertex m : members(cf, a)) {
            const Vertex* row = g.row(m);
            for (int i = 0; i < f.deg[m]; ++i)
                if (cf.vcolor[row[i]] == b) return true;
        }
        return false;
    }

    /// Merges the color of v into the color of u (the first argument's color
    /// survives). Member edges that would become parallel color adjacencies
    /// or internal edges are deleted, and the color degrees are adjusted.
    void contract_edge(Graph& g, SearchFrame& f, ColorFrame& cf, Vertex u, Vertex v) {
        const Vertex cu = cf.vcolor[u];
        const Vertex cv = cf.vcolor[v];
        HG_EXPECTS(cu != cv, "contract_edge: endpoints already share a color");
        HG_EXPECTS(cf.cc[cu] > 0 && cf.cc[cv] > 0, "contract_edge: inactive color");
        HG_EXPECTS(colors_adjacent(g, f, cf, cu, cv), "contract_edge: colors are not adjacent");
        auto& t = g.tally();
        t.call(Op::kContract);

        if (++stamp_ == 0) {
            std::fill(mark_.begin(), mark_.end(), 0);
            stamp_ = 1;
        }
        for (Vertex m : members(cf, cu)) {
            const Vertex* row = g.row(m);
            const int d = f.deg[m];
            for (int i = 0; i < d; ++i) mark_[cf.vcolor[row[i]]] = stamp_;
            t.read(Op::kContract, 2 * static_cast<std::uint64_t>(d) + 2);
            t.write(Op::kContract, d);
        }

        int gained = 0;
        for (Vertex m : members(cf, cv)) {
            const Vertex* row = g.row(m);
            for (int i = f.deg[m] - 1; i >= 0; --i) {
                const Vertex x = row[i];
                const Vertex cx = cf.vcolor[x];
                t.read(Op::kContract, 3);
                if (cx == cu) {
                    g.delete_edge(f, m, x);
                } else if (mark_[cx] == stamp_) {
                    g.delete_edge(f, m, x);
                    --cf.cd[cx];
                    t.write(Op::kContract);
                } else {
                    mark_[cx] = stamp_;
                    ++gained;
                    t.write(Op::kContract);
                }
            }
        }
        // cu loses its adjacency to cv and gains cv's other neighbors.
        cf.cd[cu] += gained - 1;

        int& card = cf.cc[cu];
        for (Vertex m : members(cf, cv)) {
            cf.vcolor[m] = cu;
            csl_[slot(cu, card++)] = m;
        }
        t.write(Op::kContract, 2 * static_cast<std::uint64_t>(cf.cc[cv]) + 4);
        cf.cc[cv] = 0;
        cf.cd[cv] = 0;
        g.remove_from_list(f, cv);
    }

    /// Deletes a whole color class together with all its member edges.
    void delete_color(Graph& g, SearchFrame& f, ColorFrame& cf, Vertex c) {
        HG_EXPECTS(cf.cc[c] > 0 && g.is_active(f, c), "delete_color: color is not active");
        for (Vertex m : members(cf, c)) {
            const Vertex* row = g.row(m);
            for (int i = f.deg[m] - 1; i >= 0; --i) {
                const Vertex x = row[i];
                --cf.cd[cf.vcolor[x]];
                g.delete_edge(f, m, x);
            }
        }
        cf.cc[c] = 0;
        cf.cd[c] = 0;
        g.remove_from_list(f, c);
    }

    void restore_colors(const Graph& g, ColorFrame& cf, const ColorFrame& saved) const {
        auto& t = g.tally();
        t.call(Op::kRestore);
        cf.vcolor = saved.vcolor;
        cf.cc = saved.cc;
        cf.cd = saved.cd;
        t.write(Op::kRestore, 3 * saved.cc.size());
    }

   private:
    BasicColorSets() = default;

    std::size_t slot(Vertex c, int i) const {
        return static_cast<std::size_t>(c) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i);
    }

    int n_ = 0;
    std::vector<Vertex> csl_;
    std::vector<std::uint32_t> mark_;
    std::uint32_t stamp_ = 0;
};

using ColorSets = BasicColorSets<false>;

}  // namespace hg

#endif  // HG_CONTRACTION_HPP
