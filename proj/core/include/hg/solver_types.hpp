#ifndef HG_SOLVER_TYPES_HPP
#define HG_SOLVER_TYPES_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "hg/counters.hpp"
#include "hg/types.hpp"

namespace hg {

enum class Problem : std::uint8_t { kVcOpt, kVcParm, kDsOpt, kCeParm };
enum class Repr : std::uint8_t { kHybrid, kAlist };

/// kSolved: optimization answer found. kYes/kNo: decision answers.
enum class Status : std::uint8_t { kSolved, kYes, kNo, kTimeout };

std::string_view to_string(Problem p);
std::string_view to_string(Repr r);
std::string_view to_string(Status s);
std::optional<Problem> parse_problem(std::string_view s);
std::optional<Repr> parse_repr(std::string_view s);

struct EditOp {
    Edge pair;
    bool add = false;

    friend bool operator==(const EditOp&, const EditOp&) = default;
};

struct SolverResult {
    Problem problem = Problem::kVcOpt;
    Status status = Status::kSolved;
    /// Optimum for kSolved; size of the witness for kYes; -1 otherwise.
    int value = -1;
    /// Parameter of decision problems, -1 for optimization.
    int k = -1;
    std::vector<Vertex> solution;
    std::vector<EditOp> edits;
    std::uint64_t nodes = 0;
    OpCounters counters;
    double wall_ms = 0.0;

    bool has_witness() const { return status == Status::kSolved || status == Status::kYes; }
};

struct SearchLimits {
    std::optional<std::chrono::steady_clock::time_point> deadline;

    static SearchLimits none() { return {}; }
    static SearchLimits seconds(double s) {
        SearchLimits l;
        l.deadline = std::chrono::steady_clock::now() +
                     std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                         std::chrono::duration<double>(s));
        return l;
    }
};

struct SearchTimeout : std::runtime_error {
    SearchTimeout() : std::runtime_error("search timed out") {}
};

/// Shared by the search drivers: counts nodes and polls the deadline every
/// 1024 nodes.
class NodeCounter {
   public:
    explicit NodeCounter(const SearchLimits& limits) : limits_(limits) {}

    void enter() {
        if ((++nodes_ & 1023u) == 0 && limits_.deadline && std::chrono::steady_clock::now() > *limits_.deadline)
            throw SearchTimeout();
    }

    std::uint64_t count() const { return nodes_; }

   private:
    SearchLimits limits_;
    std::uint64_t nodes_ = 0;
};

}  // namespace hg

#endif  // HG_SOLVER_TYPES_HPP
