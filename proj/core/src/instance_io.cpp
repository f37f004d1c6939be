#include "hg/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

namespace hg {

namespace {

// Unbiased draw from [0, bound) by rejection.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
    for (;;) {
        const std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

// Uniform double in [0, 1) from the top 53 bits.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[bounded(rng, i)]);
}

std::uint64_t pair_key(Vertex u, Vertex v) {
    const Edge e = normalized({u, v});
    return (static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint32_t>(e.v);
}

long long pair_count(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

// Pair index in row-major order over u < v.
Edge decode_pair(int n, long long idx) {
    Vertex u = 0;
    while (idx >= n - 1 - u) {
        idx -= n - 1 - u;
        ++u;
    }
    return {u, static_cast<Vertex>(u + 1 + idx)};
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

template <typename T>
bool to_int(std::string_view s, T& out) {
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

[[noreturn]] void parse_error(std::size_t line_no, const std::string& msg) {
    throw GraphError(ErrorKind::kParse, "line " + std::to_string(line_no) + ": " + msg);
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        fn(++line_no, text.substr(pos, end - pos));
        pos = end + 1;
    }
}

std::string edge_text(Edge e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

InstanceSpec generated(std::string name, SimpleGraph g, std::map<std::string, std::string> params) {
    InstanceSpec spec;
    spec.name = std::move(name);
    spec.graph = std::move(g);
    spec.source = "generator";
    spec.params = std::move(params);
    return spec;
}

}  // namespace

void validate_simple(const SimpleGraph& g) {
    if (g.n < 0) throw GraphError(ErrorKind::kOutOfRange, "negative vertex count");
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(g.edges.size() * 2);
    for (const Edge& e : g.edges) {
        if (e.u < 0 || e.v < 0 || e.u >= g.n || e.v >= g.n)
            throw GraphError(ErrorKind::kOutOfRange, "edge " + edge_text(e) + " has an endpoint outside 0.." +
                                                         std::to_string(g.n - 1));
        if (e.u == e.v) throw GraphError(ErrorKind::kSelfLoop, "self-loop at vertex " + std::to_string(e.u));
        if (!seen.insert(pair_key(e.u, e.v)).second)
            throw GraphError(ErrorKind::kDuplicateEdge, "duplicate edge " + edge_text(e));
    }
}

std::vector<Edge> canonical_edges(const SimpleGraph& g) {
    std::vector<Edge> out;
    out.reserve(g.edges.size());
    for (const Edge& e : g.edges) out.push_back(normalized(e));
    std::sort(out.begin(), out.end());
    return out;
}

SimpleGraph complement(const SimpleGraph& g) {
    const std::size_t n = static_cast<std::size_t>(g.n);
    std::vector<char> adj(n * n, 0);
    for (const Edge& e : g.edges) adj[e.u * n + e.v] = adj[e.v * n + e.u] = 1;
    SimpleGraph out;
    out.n = g.n;
    for (Vertex u = 0; u < g.n; ++u)
        for (Vertex v = u + 1; v < g.n; ++v)
            if (!adj[u * n + v]) out.edges.push_back({u, v});
    return out;
}

InstanceSpec parse_dimacs(std::string_view text, bool take_complement) {
    InstanceSpec spec;
    spec.source = "dimacs";
    bool have_problem = false;
    long long declared_m = 0;
    std::unordered_set<std::uint64_t> seen;
    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        const auto tok = split_ws(line);
        if (tok.empty() || tok[0] == "c") return;
        if (tok[0] == "p") {
            if (have_problem) parse_error(line_no, "second problem line");
            if (tok.size() != 4) parse_error(line_no, "expected 'p <format> <n> <m>'");
            if (!to_int(tok[2], spec.graph.n) || spec.graph.n < 0) parse_error(line_no, "bad vertex count");
            if (!to_int(tok[3], declared_m) || declared_m < 0) parse_error(line_no, "bad edge count");
            have_problem = true;
            seen.reserve(static_cast<std::size_t>(declared_m) * 2);
            spec.graph.edges.reserve(static_cast<std::size_t>(declared_m));
            return;
        }
        if (tok[0] == "e") {
            if (!have_problem) parse_error(line_no, "edge line before the problem line");
            long long a = 0;
            long long b = 0;
            if (tok.size() < 3 || !to_int(tok[1], a) || !to_int(tok[2], b))
                parse_error(line_no, "expected 'e <u> <v>'");
            if (a < 1 || b < 1 || a > spec.graph.n || b > spec.graph.n)
                throw GraphError(ErrorKind::kOutOfRange,
                                 "line " + std::to_string(line_no) + ": endpoint outside 1.." +
                                     std::to_string(spec.graph.n));
            if (a == b)
                throw GraphError(ErrorKind::kSelfLoop, "line " + std::to_string(line_no) + ": self-loop");
            const Edge e{static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1)};
            if (!seen.insert(pair_key(e.u, e.v)).second) {
                ++spec.duplicate_edges;
                return;
            }
            spec.graph.edges.push_back(e);
            return;
        }
        parse_error(line_no, "unknown line type '" + std::string(tok[0]) + "'");
    });
    if (!have_problem) throw GraphError(ErrorKind::kParse, "missing problem line");
    if (spec.duplicate_edges > 0)
        spec.warnings.push_back(std::to_string(spec.duplicate_edges) + " duplicate edge lines collapsed");
    if (static_cast<long long>(spec.graph.edges.size() + spec.duplicate_edges) != declared_m)
        spec.warnings.push_back("problem line declares " + std::to_string(declared_m) + " edges, file has " +
                                std::to_string(spec.graph.edges.size() + spec.duplicate_edges));
    if (take_complement) spec.graph = complement(spec.graph);
    return spec;
}

InstanceSpec parse_edge_list(std::string_view text) {
    InstanceSpec spec;
    spec.source = "edgelist";
    bool have_header = false;
    long long m = 0;
    for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        const auto tok = split_ws(line);
        if (tok.empty()) {
            if (line_no == 1) parse_error(line_no, "missing 'n m' header");
            return;
        }
        if (!have_header) {
            if (tok.size() != 2 || !to_int(tok[0], spec.graph.n) || !to_int(tok[1], m) || spec.graph.n < 0 ||
                m < 0)
                parse_error(line_no, "expected header 'n m'");
            have_header = true;
            spec.graph.edges.reserve(static_cast<std::size_t>(m));
            return;
        }
        Edge e;
        if (tok.size() != 2 || !to_int(tok[0], e.u) || !to_int(tok[1], e.v))
            parse_error(line_no, "expected 'u v'");
        if (static_cast<long long>(spec.graph.edges.size()) == m)
            parse_error(line_no, "more edge lines than the header's " + std::to_string(m));
        spec.graph.edges.push_back(e);
    });
    if (!have_header) throw GraphError(ErrorKind::kParse, "empty edge-list file");
    if (static_cast<long long>(spec.graph.edges.size()) != m)
        throw GraphError(ErrorKind::kParse, "header declares " + std::to_string(m) + " edges, file has " +
                                                std::to_string(spec.graph.edges.size()));
    validate_simple(spec.graph);
    return spec;
}

std::string format_edge_list(const SimpleGraph& g) {
    std::string out;
    out.reserve(16 + g.edges.size() * 12);
    out += std::to_string(g.n) + ' ' + std::to_string(g.edges.size()) + '\n';
    for (const Edge& e : g.edges) {
        out += std::to_string(e.u);
        out += ' ';
        out += std::to_string(e.v);
        out += '\n';
    }
    return out;
}

InstanceSpec read_instance(const std::filesystem::path& path, bool take_complement) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GraphError(ErrorKind::kIo, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    const std::size_t first = text.find_first_not_of(" \t\r\n");
    const bool dimacs = first != std::string::npos && (text[first] == 'c' || text[first] == 'p');
    InstanceSpec spec;
    if (dimacs) {
        spec = parse_dimacs(text, take_complement);
    } else {
        spec = parse_edge_list(text);
        if (take_complement) spec.graph = complement(spec.graph);
    }
    spec.name = path.filename().string();
    return spec;
}

void write_edge_list(const std::filesystem::path& path, const SimpleGraph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw GraphError(ErrorKind::kIo, "cannot write " + path.string());
    out << format_edge_list(g);
    if (!out) throw GraphError(ErrorKind::kIo, "write failed: " + path.string());
}

InstanceSpec gen_random_gnm(int n, long long m, std::uint64_t seed) {
    if (n < 0) throw GraphError(ErrorKind::kInfeasible, "negative vertex count");
    const long long total = pair_count(n);
    if (m < 0 || m > total)
        throw GraphError(ErrorKind::kInfeasible, "cannot place " + std::to_string(m) + " edges on " +
                                                     std::to_string(n) + " vertices (at most " +
                                                     std::to_string(total) + ")");
    std::mt19937_64 rng(seed);
    // Sample whichever side (edges or non-edges) is smaller.
    const bool sample_missing = m > total / 2;
    const long long want = sample_missing ? total - m : m;
    std::set<long long> picked;
    while (static_cast<long long>(picked.size()) < want)
        picked.insert(static_cast<long long>(bounded(rng, static_cast<std::uint64_t>(total))));

    SimpleGraph g;
    g.n = n;
    g.edges.reserve(static_cast<std::size_t>(m));
    if (sample_missing) {
        long long idx = 0;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v, ++idx)
                if (!picked.count(idx)) g.edges.push_back({u, v});
    } else {
        for (long long idx : picked) g.edges.push_back(decode_pair(n, idx));
    }
    return generated("gnm_n" + std::to_string(n) + "_m" + std::to_string(m) + "_s" + std::to_string(seed),
                     std::move(g),
                     {{"generator", "gnm"},
                      {"n", std::to_string(n)},
                      {"m", std::to_string(m)},
                      {"seed", std::to_string(seed)}});
}

InstanceSpec gen_cluster_editing(int n, int clusters, int k, std::uint64_t seed) {
    if (n < 0 || clusters < 1 || clusters > std::max(n, 1))
        throw GraphError(ErrorKind::kInfeasible, "need 1 <= clusters <= n");
    if (k < 0 || k > pair_count(n))
        throw GraphError(ErrorKind::kInfeasible, "not enough vertex pairs for " + std::to_string(k) + " edits");
    std::mt19937_64 rng(seed);
    std::vector<int> cluster(n);
    for (int& c : cluster) c = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(clusters)));

    std::set<long long> flips;
    while (static_cast<int>(flips.size()) < k)
        flips.insert(static_cast<long long>(bounded(rng, static_cast<std::uint64_t>(pair_count(n)))));

    SimpleGraph g;
    g.n = n;
    long long idx = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++idx)
            if ((cluster[u] == cluster[v]) != (flips.count(idx) != 0)) g.edges.push_back({u, v});

    InstanceSpec spec = generated("ce_n" + std::to_string(n) + "_c" + std::to_string(clusters) + "_k" +
                                      std::to_string(k) + "_s" + std::to_string(seed),
                                  std::move(g),
                                  {{"generator", "ce"},
                                   {"n", std::to_string(n)},
                                   {"clusters", std::to_string(clusters)},
                                   {"k", std::to_string(k)},
                                   {"seed", std::to_string(seed)}});
    spec.planted_k = k;
    return spec;
}

InstanceSpec gen_random_regular(int n, int d, std::uint64_t seed) {
    if (n < 0 || d < 0 || d >= std::max(n, 1) || (static_cast<long long>(n) * d) % 2 != 0)
        throw GraphError(ErrorKind::kInfeasible, "no " + std::to_string(d) + "-regular graph on " +
                                                     std::to_string(n) + " vertices");
    std::mt19937_64 rng(seed);
    std::vector<Vertex> points(static_cast<std::size_t>(n) * d);
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Vertex>(i / d);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        shuffle(points, rng);
        std::unordered_set<std::uint64_t> seen;
        SimpleGraph g;
        g.n = n;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < points.size() && ok; i += 2) {
            const Vertex a = points[i];
            const Vertex b = points[i + 1];
            ok = a != b && seen.insert(pair_key(a, b)).second;
            if (ok) g.edges.push_back(normalized({a, b}));
        }
        if (!ok) continue;
        std::sort(g.edges.begin(), g.edges.end());
        return generated("regular_n" + std::to_string(n) + "_d" + std::to_string(d) + "_s" + std::to_string(seed),
                         std::move(g),
                         {{"generator", "regular"},
                          {"n", std::to_string(n)},
                          {"d", std::to_string(d)},
                          {"seed", std::to_string(seed)}});
    }
    throw GraphError(ErrorKind::kInfeasible, "pairing model did not produce a simple graph");
}

InstanceSpec gen_phat(int n, int density_class, std::uint64_t seed) {
    if (n < 0) throw GraphError(ErrorKind::kInfeasible, "negative vertex count");
    if (density_class < 1 || density_class > 3)
        throw GraphError(ErrorKind::kInfeasible, "density class must be 1, 2 or 3");
    const double lo = 0.25 * (density_class - 1);
    const double hi = lo + 0.5;
    std::mt19937_64 rng(seed);
    std::vector<double> p(n);
    for (double& x : p) x = lo + (hi - lo) * unit(rng);
    SimpleGraph g;
    g.n = n;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (unit(rng) < 0.5 * (p[u] + p[v])) g.edges.push_back({u, v});
    return generated("phat_n" + std::to_string(n) + "_" + std::to_string(density_class) + "_s" +
                         std::to_string(seed),
                     std::move(g),
                     {{"generator", "phat"},
                      {"n", std::to_string(n)},
                      {"class", std::to_string(density_class)},
                      {"seed", std::to_string(seed)}});
}

}  // namespace hg
