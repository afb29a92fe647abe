#include "trussdec/triangle.hpp"

#include <omp.h>

#include <atomic>
#include <cassert>
#include <map>
#include <stdexcept>

namespace trussdec {

namespace {

// Scratch marker per vertex: adjacency slot + 1, zero = unmarked.
using MarkScratch = std::vector<std::uint32_t>;

#ifndef NDEBUG
void assert_scratch_clean(const MarkScratch& x, std::uint32_t n) {
    if (n > 64) return;
    for (std::uint32_t v = 0; v < n; v++) assert(x[v] == 0 && "scratch not rewalked to zero");
}
#endif

}  // namespace

SupportArray support_am4(const TrussGraph& tg, int workers) {
    const CsrGraph& g = tg.csr;
    SupportArray s(g.m, 0);
    if (workers < 1) workers = 1;

#pragma omp parallel num_threads(workers)
    {
        MarkScratch x(g.n, 0);
#pragma omp for schedule(dynamic, 10)
        for (std::int64_t ui = 0; ui < static_cast<std::int64_t>(g.n); ui++) {
            const VertexId u = static_cast<VertexId>(ui);
            for (std::uint32_t j = tg.eo[u]; j < g.offsets[u + 1]; j++)
                x[g.neighbors[j]] = j + 1;

            for (std::uint32_t j = g.offsets[u]; j < tg.eo[u]; j++) {
                const VertexId v = g.neighbors[j];
                for (std::uint32_t k = g.offsets[v + 1]; k-- > tg.eo[v];) {
                    const VertexId w = g.neighbors[k];
                    if (w < u) break;
                    if (x[w] == 0) continue;
                    // Triangle v < u < w.
                    std::atomic_ref<std::uint32_t>(s[tg.eid[k]]).fetch_add(1, std::memory_order_relaxed);
                    std::atomic_ref<std::uint32_t>(s[tg.eid[j]]).fetch_add(1, std::memory_order_relaxed);
                    std::atomic_ref<std::uint32_t>(s[tg.eid[x[w] - 1]]).fetch_add(1, std::memory_order_relaxed);
                }
            }

            for (std::uint32_t j = tg.eo[u]; j < g.offsets[u + 1]; j++)
                x[g.neighbors[j]] = 0;
#ifndef NDEBUG
            assert_scratch_clean(x, g.n);
#endif
        }
    }
    return s;
}

SupportArray support_ros(const TrussGraph& tg, int workers) {
    const CsrGraph& g = tg.csr;
    SupportArray s(g.m, 0);
    if (workers < 1) workers = 1;

#pragma omp parallel num_threads(workers)
    {
        // Marker holds the owning edge id + 1, so no reset pass is needed
        // between edges.
        std::vector<std::uint32_t> x(g.n, 0);
#pragma omp for schedule(dynamic, 10)
        for (std::int64_t e = 0; e < static_cast<std::int64_t>(g.m); e++) {
            const auto [u, v] = tg.el[e];
            const std::uint32_t tag = static_cast<std::uint32_t>(e) + 1;
            for (std::uint32_t j = g.offsets[u]; j < g.offsets[u + 1]; j++)
                x[g.neighbors[j]] = tag;
            std::uint32_t cnt = 0;
            for (std::uint32_t j = g.offsets[v]; j < g.offsets[v + 1]; j++) {
                const VertexId w = g.neighbors[j];
                if (w != u && x[w] == tag) cnt++;
            }
            s[e] = cnt;
        }
    }
    return s;
}

std::uint64_t triangle_count(const TrussGraph& tg, int workers) {
    const CsrGraph& g = tg.csr;
    if (workers < 1) workers = 1;
    std::uint64_t total = 0;

#pragma omp parallel num_threads(workers) reduction(+ : total)
    {
        MarkScratch x(g.n, 0);
#pragma omp for schedule(dynamic, 10)
        for (std::int64_t ui = 0; ui < static_cast<std::int64_t>(g.n); ui++) {
            const VertexId u = static_cast<VertexId>(ui);
            for (std::uint32_t j = tg.eo[u]; j < g.offsets[u + 1]; j++)
                x[g.neighbors[j]] = j + 1;
            for (std::uint32_t j = g.offsets[u]; j < tg.eo[u]; j++) {
                const VertexId v = g.neighbors[j];
                for (std::uint32_t k = g.offsets[v + 1]; k-- > tg.eo[v];) {
                    const VertexId w = g.neighbors[k];
                    if (w < u) break;
                    if (x[w] != 0) total++;
                }
            }
            for (std::uint32_t j = tg.eo[u]; j < g.offsets[u + 1]; j++)
                x[g.neighbors[j]] = 0;
        }
    }
    return total;
}

std::pair<std::uint64_t, SupportArray> triangle_oracle(const CsrGraph& g) {
    if (g.n > 512)
        throw std::runtime_error("triangle_oracle: refusing graph with n > 512");

    // Edge ids in ascending (u, v) scan order, assigned independently of
    // build_truss_graph.
    std::map<std::pair<VertexId, VertexId>, EdgeId> id_of;
    for (VertexId u = 0; u < g.n; u++)
        for (std::uint32_t j = g.offsets[u]; j < g.offsets[u + 1]; j++) {
            VertexId v = g.neighbors[j];
            if (u < v) id_of.emplace(std::make_pair(u, v), 0);
        }
    {
        EdgeId next = 0;
        for (auto& [key, id] : id_of) id = next++;
    }

    SupportArray s(g.m, 0);
    std::uint64_t count = 0;
    for (VertexId u = 0; u < g.n; u++)
        for (VertexId v = u + 1; v < g.n; v++) {
            if (!g.has_edge(u, v)) continue;
            for (VertexId w = v + 1; w < g.n; w++) {
                if (g.has_edge(u, w) && g.has_edge(v, w)) {
                    count++;
                    s[id_of.at({u, v})]++;
                    s[id_of.at({u, w})]++;
                    s[id_of.at({v, w})]++;
                }
            }
        }
    return {count, s};
}

}  // namespace trussdec
