#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "trussdec/graph.hpp"
#include "trussdec/triangle.hpp"

namespace trussdec {

struct TrussnessResult {
    std::vector<std::uint32_t> truss;  // per edge id, >= 2
    std::uint32_t t_max = 0;
    std::map<std::uint32_t, std::uint64_t> kclass_sizes;

    void finalize();  // fills t_max and kclass_sizes from truss
};

/// Serial decomposition: process edges in ascending current-support order,
/// decrement the supports of co-triangle edges above the current level, and
/// delete. Trussness is final support + 2.
TrussnessResult truss_wc(const TrussGraph& tg, const SupportArray& s0);

/// Brute-force peeling: for k = 2, 3, ... repeatedly recompute supports
/// from scratch and delete edges with support <= k-2. Refuses n > 512.
TrussnessResult truss_oracle(const CsrGraph& g);

/// Connected components (disjoint-set union) of the subgraph with
/// truss[e] >= k; each component is a maximal k-truss, returned as edge ids.
std::vector<std::vector<EdgeId>> ktruss_subgraphs(const TrussGraph& tg,
                                                  const TrussnessResult& res,
                                                  std::uint32_t k);

}  // namespace trussdec
