#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "trussdec/graph.hpp"
#include "trussdec/triangle.hpp"
#include "trussdec/truss_serial.hpp"

namespace trussdec {

/// Edge frontier for one support level. curr/next hold edge ids; the flag
/// arrays mirror membership; every edge enters curr exactly once over a run.
struct LevelFrontier {
    std::vector<EdgeId> curr, next;
    std::atomic<std::size_t> curr_size{0}, next_size{0};
    std::vector<std::uint8_t> in_curr, in_next, processed;
    std::size_t todo = 0;
    std::uint32_t level = 0;

    explicit LevelFrontier(std::uint32_t m)
        : curr(m), next(m), in_curr(m, 0), in_next(m, 0), processed(m, 0), todo(m) {}
};

/// Per-level sub-level counts plus the running synchronization tally.
struct SubLevelTrace {
    std::vector<std::uint32_t> nsl;  // indexed by support level
    std::uint64_t barriers = 0;

    std::uint64_t sublevel_total() const {
        std::uint64_t s = 0;
        for (std::uint32_t c : nsl) s += c;
        return s;
    }
    /// Expected tally for a completed run: t_max + 2 * sum of sub-levels.
    std::uint64_t expected_barriers(std::uint32_t t_max) const {
        return t_max + 2 * sublevel_total();
    }
};

struct PhaseTimes {
    double support = 0;
    double scan = 0;
    double processing = 0;
};

struct ParallelDecomposition {
    TrussnessResult result;
    SubLevelTrace trace;
    PhaseTimes times;
};

/// Worker-private mark arrays (adjacency slot + 1, zero = unmarked).
struct MarkScratchPool {
    std::vector<std::vector<std::uint32_t>> x;
    MarkScratchPool(int workers, std::uint32_t n)
        : x(static_cast<std::size_t>(workers), std::vector<std::uint32_t>(n, 0)) {}
};

/// Collect unprocessed edges with support == level into curr.
void scan(const SupportArray& s, std::uint32_t level, LevelFrontier& frontier, int workers);

/// Drain curr: process each owned triangle, decrement peer supports above
/// the level, enqueue edges that land on the level into next, then mark all
/// curr edges processed.
void process_sublevel(LevelFrontier& frontier, const TrussGraph& tg, SupportArray& s,
                      std::uint32_t level, MarkScratchPool& scratch, int workers);

/// Level-synchronous parallel truss decomposition. Output is identical to
/// truss_wc / truss_oracle for every input and worker count.
ParallelDecomposition truss_parallel(const TrussGraph& tg, int workers);

}  // namespace trussdec
