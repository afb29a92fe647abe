#pragma once

#include <cstdint>
#include <vector>

#include "trussdec/graph.hpp"

namespace trussdec {

/// Per-edge triangle counts, indexed by edge id.
using SupportArray = std::vector<std::uint32_t>;

/// Ordered pivot kernel: each triangle {v < u < w} is discovered once at
/// pivot u by marking N+(u) and scanning v in N-(u). Three atomic
/// increments per triangle. Work is Theta(m + sum_v d+(v)^2).
SupportArray support_am4(const TrussGraph& tg, int workers);

/// Edge-based baseline: each edge counts its own triangles by neighbor
/// marking, cost d(u)+d(v) per edge.
SupportArray support_ros(const TrussGraph& tg, int workers);

/// Pure triangle count, no per-edge writes.
std::uint64_t triangle_count(const TrussGraph& tg, int workers);

/// Exhaustive ground truth over all vertex triples. Refuses graphs with
/// n > 512.
std::pair<std::uint64_t, SupportArray> triangle_oracle(const CsrGraph& g);

}  // namespace trussdec
