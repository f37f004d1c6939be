#include <array>
#include <optional>
#include <string_view>

#include "hg/counters.hpp"
#include "hg/solver_types.hpp"
#include "hg/types.hpp"

namespace hg {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::kSelfLoop: return "self-loop";
        case ErrorKind::kDuplicateEdge: return "duplicate-edge";
        case ErrorKind::kOutOfRange: return "out-of-range";
        case ErrorKind::kParse: return "parse";
        case ErrorKind::kInfeasible: return "infeasible";
        case ErrorKind::kTooLarge: return "too-large";
        case ErrorKind::kIo: return "io";
        case ErrorKind::kUsage: return "usage";
    }
    return "unknown";
}

std::string_view op_name(Op op) {
    static constexpr std::array<std::string_view, kNumOps> kNames = {
        "adjacency", "neighborhood", "traversal", "delete_edge", "delete_vertex",
        "contract",  "add_edge",     "snapshot",  "restore",
    };
    const auto i = static_cast<std::size_t>(op);
    return i < kNumOps ? kNames[i] : "unknown";
}

std::string_view to_string(Problem p) {
    switch (p) {
        case Problem::kVcOpt: return "vc";
        case Problem::kVcParm: return "vc-parm";
        case Problem::kDsOpt: return "ds";
        case Problem::kCeParm: return "ce";
    }
    return "unknown";
}

std::string_view to_string(Repr r) { return r == Repr::kHybrid ? "hybrid" : "alist"; }

std::string_view to_string(Status s) {
    switch (s) {
        case Status::kSolved: return "solved";
        case Status::kYes: return "yes";
        case Status::kNo: return "no";
        case Status::kTimeout: return "timeout";
    }
    return "unknown";
}

std::optional<Problem> parse_problem(std::string_view s) {
    for (Problem p : {Problem::kVcOpt, Problem::kVcParm, Problem::kDsOpt, Problem::kCeParm})
        if (to_string(p) == s) return p;
    return std::nullopt;
}

std::optional<Repr> parse_repr(std::string_view s) {
    if (s == "hybrid") return Repr::kHybrid;
    if (s == "alist") return Repr::kAlist;
    return std::nullopt;
}

}  // namespace hg
