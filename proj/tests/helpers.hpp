#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>

#include "trussdec/generate.hpp"
#include "trussdec/graph.hpp"

namespace trussdec::testing {

inline CsrGraph make_graph(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> edges) {
    RawEdgeList raw;
    for (const auto& e : edges) raw.edges.push_back(e);
    return canonicalize(raw);
}

inline CsrGraph complete_graph(std::uint32_t n) {
    RawEdgeList raw;
    for (std::uint32_t u = 0; u < n; u++)
        for (std::uint32_t v = u + 1; v < n; v++) raw.edges.emplace_back(u, v);
    return canonicalize(raw);
}

inline CsrGraph cycle_graph(std::uint32_t n) {
    RawEdgeList raw;
    for (std::uint32_t u = 0; u < n; u++) raw.edges.emplace_back(u, (u + 1) % n);
    return canonicalize(raw);
}

inline CsrGraph star_graph(std::uint32_t leaves) {
    RawEdgeList raw;
    for (std::uint32_t v = 1; v <= leaves; v++) raw.edges.emplace_back(0, v);
    return canonicalize(raw);
}

inline CsrGraph er_graph(std::uint32_t n, double p, std::uint64_t seed) {
    return canonicalize(generate_er(n, p, seed));
}

inline CsrGraph rmat_graph(std::uint32_t scale, std::uint32_t ef, std::uint64_t seed) {
    return canonicalize(generate_rmat(scale, ef, seed));
}

}  // namespace trussdec::testing
