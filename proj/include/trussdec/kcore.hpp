#pragma once

#include <vector>

#include "trussdec/graph.hpp"

namespace trussdec {

struct CorenessResult {
    std::vector<std::uint32_t> core;  // per vertex
    std::uint32_t c_max = 0;
};

/// Bucket-ordered peeling with constant-time position swaps.
CorenessResult kcore_serial(const CsrGraph& g);

/// Level-synchronous peeling over vertex frontiers. Produces the same core
/// array as kcore_serial for any worker count.
CorenessResult kcore_parallel(const CsrGraph& g, int workers);

/// Permutation sorting vertices by (coreness asc, original id asc);
/// perm[v] is the new id of v.
std::vector<VertexId> coreness_order(const CorenessResult& res);

}  // namespace trussdec
