#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "helpers.hpp"
#include "trussdec/triangle.hpp"
#include "trussdec/truss_parallel.hpp"
#include "trussdec/truss_serial.hpp"

using namespace trussdec;
using namespace trussdec::testing;

namespace {

std::vector<EdgeId> sorted_curr(const LevelFrontier& f) {
    std::vector<EdgeId> out(f.curr.begin(), f.curr.begin() + f.curr_size.load());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("scan collects exactly the edges at the level") {
    TrussGraph tg = build_truss_graph(complete_graph(4));
    SupportArray s = support_am4(tg, 1);  // all 2

    LevelFrontier f(tg.m());
    scan(s, 0, f, 2);
    CHECK(f.curr_size.load() == 0);  // all supports above the level

    scan(s, 2, f, 2);
    CHECK(sorted_curr(f) == std::vector<EdgeId>{0, 1, 2, 3, 4, 5});
    for (EdgeId e = 0; e < 6; e++) CHECK(f.in_curr[e] == 1);
}

TEST_CASE("scan multiset matches a sequential filter on a random graph") {
    TrussGraph tg = build_truss_graph(er_graph(120, 0.12, 3));
    SupportArray s = support_am4(tg, 1);
    std::uint32_t level = 1;
    std::vector<EdgeId> expect;
    for (EdgeId e = 0; e < tg.m(); e++)
        if (s[e] == level) expect.push_back(e);

    LevelFrontier f(tg.m());
    scan(s, level, f, 4);
    CHECK(sorted_curr(f) == expect);
}

TEST_CASE("process_sublevel: lone curr edge decrements both triangle peers") {
    TrussGraph tg = build_truss_graph(complete_graph(3));
    SupportArray s{0, 1, 1};
    LevelFrontier f(3);
    MarkScratchPool scratch(2, tg.n());

    f.curr[0] = 0;
    f.curr_size.store(1);
    f.in_curr[0] = 1;
    process_sublevel(f, tg, s, 0, scratch, 2);

    CHECK(s == SupportArray{0, 0, 0});
    std::vector<EdgeId> next(f.next.begin(), f.next.begin() + f.next_size.load());
    std::sort(next.begin(), next.end());
    CHECK(next == std::vector<EdgeId>{1, 2});
    CHECK(f.in_next[1] == 1);
    CHECK(f.in_next[2] == 1);
    CHECK(f.processed[0] == 1);
    CHECK(f.in_curr[0] == 0);
}

TEST_CASE("process_sublevel: ownership rule decrements the third edge once") {
    TrussGraph tg = build_truss_graph(complete_graph(3));
    for (int w : {1, 2, 4}) {
        SupportArray s{0, 0, 1};
        LevelFrontier f(3);
        MarkScratchPool scratch(w, tg.n());
        f.curr[0] = 0;
        f.curr[1] = 1;
        f.curr_size.store(2);
        f.in_curr[0] = f.in_curr[1] = 1;
        process_sublevel(f, tg, s, 0, scratch, w);

        CHECK(s[2] == 0);  // exactly one decrement
        CHECK(f.next_size.load() == 1);
        CHECK(f.next[0] == 2);
    }
}

TEST_CASE("process_sublevel: full K4 frontier produces no underflow and empty next") {
    TrussGraph tg = build_truss_graph(complete_graph(4));
    SupportArray s(6, 2);
    LevelFrontier f(6);
    MarkScratchPool scratch(4, tg.n());
    for (EdgeId e = 0; e < 6; e++) {
        f.curr[e] = e;
        f.in_curr[e] = 1;
    }
    f.curr_size.store(6);
    process_sublevel(f, tg, s, 2, scratch, 4);

    CHECK(s == SupportArray(6, 2));
    CHECK(f.next_size.load() == 0);
    for (EdgeId e = 0; e < 6; e++) CHECK(f.processed[e] == 1);
}

TEST_CASE("K4 decomposition trace") {
    TrussGraph tg = build_truss_graph(complete_graph(4));
    ParallelDecomposition ref = truss_parallel(tg, 1);
    ParallelDecomposition par = truss_parallel(tg, 4);

    for (std::uint32_t t : par.result.truss) CHECK(t == 4);
    CHECK(par.trace.nsl == std::vector<std::uint32_t>{0, 0, 1});  // one sub-level at level 2
    CHECK(par.trace.nsl == ref.trace.nsl);
    CHECK(par.trace.barriers == par.trace.expected_barriers(par.result.t_max));
}

TEST_CASE("triangle plus pendant peels in two stages") {
    CsrGraph g = make_graph({{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    TrussGraph tg = build_truss_graph(g);
    ParallelDecomposition dec = truss_parallel(tg, 2);
    std::map<std::uint32_t, int> hist;
    for (std::uint32_t t : dec.result.truss) hist[t]++;
    CHECK(hist.at(2) == 1);
    CHECK(hist.at(3) == 3);
}

TEST_CASE("parallel equals serial and oracle across worker counts") {
    CsrGraph g = er_graph(100, 0.15, 2);
    TrussGraph tg = build_truss_graph(g);
    TrussnessResult oracle = truss_oracle(g);
    CHECK(truss_wc(tg, support_am4(tg, 1)).truss == oracle.truss);
    for (int w : {1, 2, 4, 8}) {
        ParallelDecomposition dec = truss_parallel(tg, w);
        CHECK(dec.result.truss == oracle.truss);
    }
}

TEST_CASE("nsl trace and result are worker-count invariant") {
    TrussGraph tg = build_truss_graph(er_graph(140, 0.1, 17));
    ParallelDecomposition base = truss_parallel(tg, 1);
    for (int w : {2, 4, 8}) {
        ParallelDecomposition dec = truss_parallel(tg, w);
        CHECK(dec.result.truss == base.result.truss);
        CHECK(dec.trace.nsl == base.trace.nsl);
        CHECK(dec.trace.barriers == base.trace.barriers);
    }
}

TEST_CASE("manual frontier loop conserves edges and matches the engine") {
    TrussGraph tg = build_truss_graph(er_graph(80, 0.2, 7));
    const std::uint32_t m = tg.m();
    SupportArray s = support_am4(tg, 2);
    TrussnessResult expect = truss_wc(tg, s);

    LevelFrontier f(m);
    MarkScratchPool scratch(2, tg.n());
    std::vector<std::uint32_t> entered(m, 0);
    std::uint64_t total_curr = 0;

    while (f.todo > 0) {
        scan(s, f.level, f, 2);
        while (f.curr_size.load() > 0) {
            std::size_t cs = f.curr_size.load();
            total_curr += cs;
            f.todo -= cs;
            for (std::size_t i = 0; i < cs; i++) entered[f.curr[i]]++;
            process_sublevel(f, tg, s, f.level, scratch, 2);
            std::swap(f.curr, f.next);
            std::swap(f.in_curr, f.in_next);
            f.curr_size.store(f.next_size.load());
            f.next_size.store(0);
        }
        f.level++;
    }

    CHECK(total_curr == m);
    for (EdgeId e = 0; e < m; e++) {
        CHECK(entered[e] == 1);  // each edge enters curr exactly once
        CHECK(f.processed[e] == 1);
        CHECK(s[e] + 2 == expect.truss[e]);  // final support is trussness - 2
    }
    CHECK(f.todo == 0);
}
