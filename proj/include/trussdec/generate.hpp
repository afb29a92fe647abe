#pragma once

#include <cstdint>

#include "trussdec/graph.hpp"

namespace trussdec {

/// Erdos-Renyi G(n, p), deterministic for a fixed seed. Emits each chosen
/// pair once with u < v.
RawEdgeList generate_er(std::uint32_t n, double p, std::uint64_t seed);

/// Recursive-matrix generator: 2^scale vertices, edge_factor * 2^scale raw
/// edge draws (duplicates and self loops included; canonicalize cleans up).
/// a + b + c + d must sum to 1.
RawEdgeList generate_rmat(std::uint32_t scale, std::uint32_t edge_factor, std::uint64_t seed,
                          double a = 0.57, double b = 0.19, double c = 0.19, double d = 0.05);

}  // namespace trussdec
