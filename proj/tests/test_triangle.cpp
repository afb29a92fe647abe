#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "helpers.hpp"
#include "trussdec/triangle.hpp"

using namespace trussdec;
using namespace trussdec::testing;

TEST_CASE("support on a triangle, K4 and a path") {
    CHECK(support_am4(build_truss_graph(complete_graph(3)), 1) == SupportArray{1, 1, 1});

    SupportArray k4 = support_am4(build_truss_graph(complete_graph(4)), 2);
    REQUIRE(k4.size() == 6);
    for (std::uint32_t s : k4) CHECK(s == 2);
    CHECK(std::accumulate(k4.begin(), k4.end(), 0ull) == 3ull * 4);  // 3 * |triangles|

    CHECK(support_am4(build_truss_graph(make_graph({{0, 1}, {1, 2}})), 1) == SupportArray{0, 0});
}

TEST_CASE("am4 equals the triple-enumeration oracle") {
    CsrGraph g = er_graph(100, 0.15, 2);
    TrussGraph tg = build_truss_graph(g);
    auto [count, s_oracle] = triangle_oracle(g);
    SupportArray s = support_am4(tg, 4);
    CHECK(s == s_oracle);
    CHECK(std::accumulate(s.begin(), s.end(), 0ull) == 3 * count);
}

TEST_CASE("ros equals am4 on random graphs") {
    for (std::uint64_t seed : {1, 2, 3, 4}) {
        TrussGraph tg = build_truss_graph(er_graph(120, 0.1, seed));
        CHECK(support_ros(tg, 2) == support_am4(tg, 2));
    }
    TrussGraph tri = build_truss_graph(complete_graph(3));
    CHECK(support_ros(tri, 1) == SupportArray{1, 1, 1});
}

TEST_CASE("triangle_count closed forms and oracle") {
    CHECK(triangle_count(build_truss_graph(complete_graph(5)), 2) == 10);  // C(5,3)

    // bipartite K3,3 has no odd cycles
    CsrGraph k33 = make_graph({{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                               {2, 3}, {2, 4}, {2, 5}});
    CHECK(triangle_count(build_truss_graph(k33), 1) == 0);

    CsrGraph g = er_graph(200, 0.1, 5);
    CHECK(triangle_count(build_truss_graph(g), 4) == triangle_oracle(g).first);
}

TEST_CASE("triangle_oracle closed forms and size guard") {
    CHECK(triangle_oracle(CsrGraph{}).first == 0);
    CHECK(triangle_oracle(complete_graph(3)).second == SupportArray{1, 1, 1});

    auto [count, s] = triangle_oracle(complete_graph(6));
    CHECK(count == 20);
    for (std::uint32_t v : s) CHECK(v == 4);  // each edge in n-2 triangles

    CsrGraph big;
    big.n = 600;
    big.offsets.assign(big.n + 1, 0);
    CHECK_THROWS_AS(triangle_oracle(big), std::runtime_error);
}

TEST_CASE("triangle count is invariant under vertex reordering") {
    CsrGraph g = er_graph(90, 0.12, 6);
    std::uint64_t base = triangle_count(build_truss_graph(g), 2);
    std::vector<VertexId> perm(g.n);
    for (VertexId v = 0; v < g.n; v++) perm[v] = v;
    std::mt19937 rng(99);
    for (int trial = 0; trial < 3; trial++) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(triangle_count(build_truss_graph(reorder(g, perm)), 2) == base);
    }
}

TEST_CASE("results are worker-count invariant") {
    TrussGraph tg = build_truss_graph(er_graph(150, 0.08, 8));
    SupportArray base = support_am4(tg, 1);
    for (int w : {2, 4, 8}) {
        CHECK(support_am4(tg, w) == base);
        CHECK(support_ros(tg, w) == base);
        CHECK(triangle_count(tg, w) ==
              std::accumulate(base.begin(), base.end(), 0ull) / 3);
    }
}
