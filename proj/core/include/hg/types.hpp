#ifndef HG_TYPES_HPP
#define HG_TYPES_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hg {

using Vertex = std::int32_t;
inline constexpr Vertex kNoVertex = -1;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Edge with endpoints ordered so that u < v.
inline Edge normalized(Edge e) {
    return e.u < e.v ? e : Edge{e.v, e.u};
}

/// Plain undirected simple graph on vertices 0..n-1.
struct SimpleGraph {
    int n = 0;
    std::vector<Edge> edges;
};

enum class ErrorKind {
    kSelfLoop,
    kDuplicateEdge,
    kOutOfRange,
    kParse,
    kInfeasible,
    kTooLarge,
    kIo,
    kUsage,
};

const char* to_string(ErrorKind kind);

/// Raised on malformed input: bad graphs, unparsable files, impossible
/// generator parameters.
class GraphError : public std::runtime_error {
   public:
    GraphError(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

/// Raised by contract checks (deleting an inactive edge, contracting a color
/// with itself, ...). Only compiled in when HG_CHECK_CONTRACTS is defined.
class ContractViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace hg

#ifdef HG_CHECK_CONTRACTS
#define HG_EXPECTS(cond, msg)                                  \
    do {                                                       \
        if (!(cond)) throw ::hg::ContractViolation(msg);       \
    } while (0)
#else
// Unevaluated, so the names in `cond` still count as used.
#define HG_EXPECTS(cond, msg)            \
    do {                                 \
        (void)sizeof((cond) ? 1 : 0);    \
    } while (0)
#endif

#endif  // HG_TYPES_HPP
