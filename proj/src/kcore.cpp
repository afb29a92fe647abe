#include "trussdec/kcore.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <numeric>

#include "trussdec/appender.hpp"

namespace trussdec {

CorenessResult kcore_serial(const CsrGraph& g) {
    const std::uint32_t n = g.n;
    CorenessResult res;
    res.core.assign(n, 0);
    if (n == 0) return res;

    std::vector<std::uint32_t> deg(n);
    std::uint32_t max_deg = 0;
    for (VertexId v = 0; v < n; v++) {
        deg[v] = g.degree(v);
        max_deg = std::max(max_deg, deg[v]);
    }

    // Counting sort of vertices by degree, with position and bucket-start
    // indices for constant-time swaps.
    std::vector<std::uint32_t> bucket_start(max_deg + 2, 0);
    for (VertexId v = 0; v < n; v++) bucket_start[deg[v] + 1]++;
    for (std::uint32_t d = 0; d <= max_deg; d++) bucket_start[d + 1] += bucket_start[d];
    std::vector<VertexId> order(n);
    std::vector<std::uint32_t> pos(n);
    {
        std::vector<std::uint32_t> cursor(bucket_start.begin(), bucket_start.end() - 1);
        for (VertexId v = 0; v < n; v++) {
            pos[v] = cursor[deg[v]]++;
            order[pos[v]] = v;
        }
    }

    for (std::uint32_t i = 0; i < n; i++) {
        VertexId v = order[i];
        std::uint32_t k = deg[v];
        res.core[v] = k;
        for (std::uint32_t j = g.offsets[v]; j < g.offsets[v + 1]; j++) {
            VertexId w = g.neighbors[j];
            if (deg[w] > k) {
                // Swap w with the first vertex of its bucket, then shrink
                // the bucket from the left.
                std::uint32_t dw = deg[w];
                std::uint32_t pw = pos[w];
                std::uint32_t pfirst = bucket_start[dw];
                VertexId first = order[pfirst];
                if (first != w) {
                    std::swap(order[pw], order[pfirst]);
                    pos[w] = pfirst;
                    pos[first] = pw;
                }
                bucket_start[dw]++;
                deg[w]--;
            }
        }
    }
    res.c_max = n ? *std::max_element(res.core.begin(), res.core.end()) : 0;
    return res;
}

CorenessResult kcore_parallel(const CsrGraph& g, int workers) {
    const std::uint32_t n = g.n;
    CorenessResult res;
    res.core.assign(n, 0);
    if (n == 0) return res;
    if (workers < 1) workers = 1;

    std::vector<std::uint32_t> deg(n);
    for (VertexId v = 0; v < n; v++) deg[v] = g.degree(v);

    std::vector<VertexId> curr(n), next(n);
    std::vector<std::uint8_t> processed(n, 0);
    std::atomic<std::size_t> curr_size{0}, next_size{0};
    std::size_t todo = n;
    std::uint32_t level = 0;

    while (todo > 0) {
        // Scan: collect vertices whose remaining degree equals the level.
        curr_size.store(0, std::memory_order_relaxed);
#pragma omp parallel num_threads(workers)
        {
            BufferedAppender<VertexId> app(curr.data(), curr_size);
#pragma omp for schedule(static)
            for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); v++) {
                if (!processed[v] && deg[v] == level) app.push(static_cast<VertexId>(v));
            }
        }

        while (curr_size.load(std::memory_order_relaxed) > 0) {
            const std::size_t cs = curr_size.load(std::memory_order_relaxed);
            todo -= cs;
            next_size.store(0, std::memory_order_relaxed);
#pragma omp parallel num_threads(workers)
            {
                BufferedAppender<VertexId> app(next.data(), next_size);
#pragma omp for schedule(dynamic, 16)
                for (std::int64_t i = 0; i < static_cast<std::int64_t>(cs); i++) {
                    VertexId v = curr[i];
                    res.core[v] = level;
                    for (std::uint32_t j = g.offsets[v]; j < g.offsets[v + 1]; j++) {
                        VertexId w = g.neighbors[j];
                        std::atomic_ref<std::uint32_t> dw(deg[w]);
                        if (dw.load(std::memory_order_relaxed) > level) {
                            std::uint32_t prev = dw.fetch_sub(1, std::memory_order_relaxed);
                            if (prev == level + 1) app.push(w);
                            if (prev <= level) dw.fetch_add(1, std::memory_order_relaxed);
                        }
                    }
                }
            }
            for (std::size_t i = 0; i < cs; i++) processed[curr[i]] = 1;
            std::swap(curr, next);
            curr_size.store(next_size.load(std::memory_order_relaxed),
                            std::memory_order_relaxed);
        }
        level++;
    }
    res.c_max = *std::max_element(res.core.begin(), res.core.end());
    return res;
}

std::vector<VertexId> coreness_order(const CorenessResult& res) {
    const std::size_t n = res.core.size();
    std::vector<VertexId> by_core(n);
    std::iota(by_core.begin(), by_core.end(), 0);
    std::stable_sort(by_core.begin(), by_core.end(),
                     [&](VertexId a, VertexId b) { return res.core[a] < res.core[b]; });
    std::vector<VertexId> perm(n);
    for (std::size_t i = 0; i < n; i++) perm[by_core[i]] = static_cast<VertexId>(i);
    return perm;
}

}  // namespace trussdec
