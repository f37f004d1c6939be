#ifndef HG_COUNTERS_HPP
#define HG_COUNTERS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace hg {

/// Operation classes tracked by the instrumentation counters. One row per
/// search operation of the runtime comparison table, plus frame copies.
enum class Op : std::uint8_t {
    kAdjacency,
    kNeighborhood,
    kTraversal,
    kDeleteEdge,
    kDeleteVertex,
    kContract,
    kAddEdge,
    kSnapshot,
    kRestore,
    kCount_
};

inline constexpr std::size_t kNumOps = static_cast<std::size_t>(Op::kCount_);

std::string_view op_name(Op op);

struct OpStats {
    std::uint64_t calls = 0;
    std::uint64_t reads = 0;
    std::uint64_t writes = 0;

    std::uint64_t accesses() const { return reads + writes; }
};

struct OpCounters {
    std::array<OpStats, kNumOps> by_op{};

    OpStats& operator[](Op op) { return by_op[static_cast<std::size_t>(op)]; }
    const OpStats& operator[](Op op) const { return by_op[static_cast<std::size_t>(op)]; }

    void reset() { by_op = {}; }

    OpCounters& operator+=(const OpCounters& rhs) {
        for (std::size_t i = 0; i < kNumOps; ++i) {
            by_op[i].calls += rhs.by_op[i].calls;
            by_op[i].reads += rhs.by_op[i].reads;
            by_op[i].writes += rhs.by_op[i].writes;
        }
        return *this;
    }

    friend OpCounters operator-(OpCounters lhs, const OpCounters& rhs) {
        for (std::size_t i = 0; i < kNumOps; ++i) {
            lhs.by_op[i].calls -= rhs.by_op[i].calls;
            lhs.by_op[i].reads -= rhs.by_op[i].reads;
            lhs.by_op[i].writes -= rhs.by_op[i].writes;
        }
        return lhs;
    }
};

/// Tally helper shared by the representations. With kCells == false only
/// per-operation call counts are kept and the cell hooks compile to nothing.
template <bool kCells>
class Tally {
   public:
    void call(Op op) { ++c_[op].calls; }
    void read(Op op, std::uint64_t n = 1) {
        if constexpr (kCells) c_[op].reads += n;
    }
    void write(Op op, std::uint64_t n = 1) {
        if constexpr (kCells) c_[op].writes += n;
    }

    const OpCounters& counters() const { return c_; }
    void reset() { c_.reset(); }

   private:
    OpCounters c_;
};

}  // namespace hg

#endif  // HG_COUNTERS_HPP
