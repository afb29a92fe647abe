#include "trussdec/truss_parallel.hpp"

#include <omp.h>

#include <chrono>
#include <utility>

#include "trussdec/appender.hpp"

namespace trussdec {

namespace {

double now() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

}  // namespace

void scan(const SupportArray& s, std::uint32_t level, LevelFrontier& frontier, int workers) {
    if (workers < 1) workers = 1;
    frontier.curr_size.store(0, std::memory_order_relaxed);
    const std::int64_t m = static_cast<std::int64_t>(s.size());

#pragma omp parallel num_threads(workers)
    {
        BufferedAppender<EdgeId> app(frontier.curr.data(), frontier.curr_size);
#pragma omp for schedule(static)
        for (std::int64_t e = 0; e < m; e++) {
            if (!frontier.processed[e] && s[e] == level) {
                frontier.in_curr[e] = 1;
                app.push(static_cast<EdgeId>(e));
            }
        }
    }
}

void process_sublevel(LevelFrontier& frontier, const TrussGraph& tg, SupportArray& s,
                      std::uint32_t level, MarkScratchPool& scratch, int workers) {
    if (workers < 1) workers = 1;
    const CsrGraph& g = tg.csr;
    const std::int64_t cs =
        static_cast<std::int64_t>(frontier.curr_size.load(std::memory_order_relaxed));

    // Decrement a peer edge of the triangle owned by e1. `other` is the
    // remaining triangle edge; when it is also in curr, the thread holding
    // the lower edge id owns the triangle.
    auto try_decrement = [&](EdgeId e1, EdgeId target, EdgeId other,
                             BufferedAppender<EdgeId>& app) {
        std::atomic_ref<std::uint32_t> st(s[target]);
        if (st.load(std::memory_order_relaxed) <= level) return;
        if (frontier.in_curr[other] && e1 >= other) return;
        std::uint32_t prev = st.fetch_sub(1, std::memory_order_relaxed);
        if (prev == level + 1) {
            frontier.in_next[target] = 1;
            app.push(target);
        } else if (prev <= level) {
            // Two owners of different triangles can race past the level;
            // repair the overshoot.
            st.fetch_add(1, std::memory_order_relaxed);
        }
    };

#pragma omp parallel num_threads(workers)
    {
        std::vector<std::uint32_t>& x = scratch.x[omp_get_thread_num()];
        {
            BufferedAppender<EdgeId> app(frontier.next.data(), frontier.next_size);
#pragma omp for schedule(dynamic, 4)
            for (std::int64_t i = 0; i < cs; i++) {
                const EdgeId e1 = frontier.curr[i];
                const auto [u, v] = tg.el[e1];

                // Both orientations of u's adjacency are marked: peeled
                // triangles need w on either side of u.
                for (std::uint32_t j = g.offsets[u]; j < g.offsets[u + 1]; j++)
                    x[g.neighbors[j]] = j + 1;

                for (std::uint32_t j = g.offsets[v]; j < g.offsets[v + 1]; j++) {
                    const VertexId w = g.neighbors[j];
                    if (x[w] == 0) continue;
                    const EdgeId e2 = tg.eid[j];           // {v, w}
                    const EdgeId e3 = tg.eid[x[w] - 1];    // {u, w}
                    if (frontier.processed[e2] || frontier.processed[e3]) continue;
                    try_decrement(e1, e2, e3, app);
                    try_decrement(e1, e3, e2, app);
                }

                for (std::uint32_t j = g.offsets[u]; j < g.offsets[u + 1]; j++)
                    x[g.neighbors[j]] = 0;
            }
            app.flush();
        }
        // Implicit barrier above: flags change only after every thread is
        // done with this sub-level's triangles.
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < cs; i++) {
            const EdgeId e = frontier.curr[i];
            frontier.processed[e] = 1;
            frontier.in_curr[e] = 0;
        }
    }
}

ParallelDecomposition truss_parallel(const TrussGraph& tg, int workers) {
    if (workers < 1) workers = 1;
    const std::uint32_t m = tg.m();

    ParallelDecomposition out;
    double t0 = now();
    SupportArray s = support_am4(tg, workers);
    out.trace.barriers++;  // sync after support computation
    out.times.support = now() - t0;

    LevelFrontier frontier(m);
    MarkScratchPool scratch(workers, tg.n());

    while (frontier.todo > 0) {
        t0 = now();
        scan(s, frontier.level, frontier, workers);
        out.trace.barriers++;
        out.times.scan += now() - t0;

        t0 = now();
        while (frontier.curr_size.load(std::memory_order_relaxed) > 0) {
            if (out.trace.nsl.size() <= frontier.level) out.trace.nsl.resize(frontier.level + 1, 0);
            out.trace.nsl[frontier.level]++;
            frontier.todo -= frontier.curr_size.load(std::memory_order_relaxed);

            process_sublevel(frontier, tg, s, frontier.level, scratch, workers);
            out.trace.barriers++;  // end of sub-level

            // Single-owner frontier swap between barriers.
            std::swap(frontier.curr, frontier.next);
            std::swap(frontier.in_curr, frontier.in_next);
            frontier.curr_size.store(frontier.next_size.load(std::memory_order_relaxed),
                                     std::memory_order_relaxed);
            frontier.next_size.store(0, std::memory_order_relaxed);
            out.trace.barriers++;  // after swap
        }
        out.times.processing += now() - t0;
        frontier.level++;
    }

    out.result.truss.resize(m);
    for (EdgeId e = 0; e < m; e++) out.result.truss[e] = s[e] + 2;
    out.result.finalize();
    return out;
}

}  // namespace trussdec
