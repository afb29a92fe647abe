#include "trussdec/truss_serial.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace trussdec {

void TrussnessResult::finalize() {
    t_max = 0;
    kclass_sizes.clear();
    for (std::uint32_t t : truss) {
        t_max = std::max(t_max, t);
        kclass_sizes[t]++;
    }
}

namespace {

// Edges in nondecreasing current-support order with constant-time
// decrement-swaps, same trick as the k-core bucket order.
struct EdgeBucketOrder {
    std::vector<EdgeId> sorted;
    std::vector<std::uint32_t> pos;           // per edge
    std::vector<std::uint32_t> bucket_start;  // per support value

    EdgeBucketOrder(const SupportArray& s, std::uint32_t max_support) {
        const std::uint32_t m = static_cast<std::uint32_t>(s.size());
        bucket_start.assign(max_support + 2, 0);
        for (std::uint32_t e = 0; e < m; e++) bucket_start[s[e] + 1]++;
        for (std::uint32_t b = 0; b <= max_support; b++) bucket_start[b + 1] += bucket_start[b];
        sorted.resize(m);
        pos.resize(m);
        std::vector<std::uint32_t> cursor(bucket_start.begin(), bucket_start.end() - 1);
        for (EdgeId e = 0; e < m; e++) {  // ties in edge-id order
            pos[e] = cursor[s[e]]++;
            sorted[pos[e]] = e;
        }
    }

    // Move e from bucket b to b-1.
    void decrement(EdgeId e, std::uint32_t b) {
        std::uint32_t pe = pos[e];
        std::uint32_t pfirst = bucket_start[b];
        EdgeId first = sorted[pfirst];
        if (first != e) {
            std::swap(sorted[pe], sorted[pfirst]);
            pos[e] = pfirst;
            pos[first] = pe;
        }
        bucket_start[b]++;
    }
};

std::uint64_t pair_key(VertexId u, VertexId v) {
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

TrussnessResult truss_wc(const TrussGraph& tg, const SupportArray& s0) {
    const CsrGraph& g = tg.csr;
    const std::uint32_t m = g.m;
    if (s0.size() != m)
        throw std::invalid_argument("truss_wc: support array size does not match edge count");

    SupportArray s = s0;
    std::uint32_t max_support = 0;
    for (std::uint32_t v : s) max_support = std::max(max_support, v);

    // Canonical-pair -> edge-id map plus a deleted-flag array; membership
    // checks consult the flag.
    std::unordered_map<std::uint64_t, EdgeId> edge_of;
    edge_of.reserve(m * 2);
    for (EdgeId e = 0; e < m; e++) edge_of.emplace(pair_key(tg.el[e].first, tg.el[e].second), e);
    std::vector<std::uint8_t> deleted(m, 0);

    EdgeBucketOrder order(s, max_support);
    TrussnessResult res;
    res.truss.assign(m, 0);

    for (std::uint32_t i = 0; i < m; i++) {
        const EdgeId e = order.sorted[i];
        const std::uint32_t k = s[e];
        const auto [u, v] = tg.el[e];

        for (std::uint32_t j = g.offsets[u]; j < g.offsets[u + 1]; j++) {
            const VertexId w = g.neighbors[j];
            if (w == v) continue;
            const EdgeId euw = tg.eid[j];
            if (deleted[euw]) continue;
            auto it = edge_of.find(pair_key(std::min(v, w), std::max(v, w)));
            if (it == edge_of.end()) continue;
            const EdgeId evw = it->second;
            if (deleted[evw]) continue;

            if (s[euw] > k) {
                order.decrement(euw, s[euw]);
                s[euw]--;
            }
            if (s[evw] > k) {
                order.decrement(evw, s[evw]);
                s[evw]--;
            }
        }
        deleted[e] = 1;
        res.truss[e] = k + 2;
    }
    res.finalize();
    return res;
}

TrussnessResult truss_oracle(const CsrGraph& g) {
    if (g.n > 512)
        throw std::runtime_error("truss_oracle: refusing graph with n > 512");

    // Adjacency bit matrix for triple enumeration on the surviving graph.
    const std::uint32_t n = g.n;
    const std::uint32_t words = (n + 63) / 64;
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n) * words, 0);
    auto set_bit = [&](VertexId a, VertexId b) {
        adj[static_cast<std::size_t>(a) * words + b / 64] |= 1ull << (b % 64);
    };
    auto clear_bit = [&](VertexId a, VertexId b) {
        adj[static_cast<std::size_t>(a) * words + b / 64] &= ~(1ull << (b % 64));
    };

    std::vector<std::pair<VertexId, VertexId>> el;
    el.reserve(g.m);
    for (VertexId u = 0; u < n; u++)
        for (std::uint32_t j = g.offsets[u]; j < g.offsets[u + 1]; j++) {
            VertexId v = g.neighbors[j];
            set_bit(u, v);
            if (u < v) el.emplace_back(u, v);
        }
    std::sort(el.begin(), el.end());  // edge ids in ascending (u, v) order

    auto common = [&](VertexId a, VertexId b) {
        std::uint32_t c = 0;
        const std::uint64_t* ra = &adj[static_cast<std::size_t>(a) * words];
        const std::uint64_t* rb = &adj[static_cast<std::size_t>(b) * words];
        for (std::uint32_t w = 0; w < words; w++) c += std::popcount(ra[w] & rb[w]);
        return c;
    };

    TrussnessResult res;
    res.truss.assign(el.size(), 0);
    std::vector<std::uint8_t> alive(el.size(), 1);
    std::size_t remaining = el.size();

    std::uint32_t k = 2;
    while (remaining > 0) {
        bool removed_any = true;
        while (removed_any) {
            removed_any = false;
            for (EdgeId e = 0; e < el.size(); e++) {
                if (!alive[e]) continue;
                const auto [u, v] = el[e];
                if (common(u, v) <= k - 2) {
                    res.truss[e] = k;
                    alive[e] = 0;
                    clear_bit(u, v);
                    clear_bit(v, u);
                    remaining--;
                    removed_any = true;
                }
            }
        }
        k++;
    }
    res.finalize();
    return res;
}

std::vector<std::vector<EdgeId>> ktruss_subgraphs(const TrussGraph& tg,
                                                  const TrussnessResult& res,
                                                  std::uint32_t k) {
    if (k < 2 || (res.t_max > 0 && k > res.t_max))
        throw std::invalid_argument("ktruss_subgraphs: k out of range [2, t_max]");

    const std::uint32_t n = tg.n();
    std::vector<VertexId> parent(n);
    for (VertexId v = 0; v < n; v++) parent[v] = v;
    auto find = [&](VertexId v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };

    for (EdgeId e = 0; e < tg.m(); e++) {
        if (res.truss[e] < k) continue;
        VertexId ru = find(tg.el[e].first);
        VertexId rv = find(tg.el[e].second);
        if (ru != rv) parent[ru] = rv;
    }

    std::unordered_map<VertexId, std::size_t> comp_of;
    std::vector<std::vector<EdgeId>> comps;
    for (EdgeId e = 0; e < tg.m(); e++) {
        if (res.truss[e] < k) continue;
        VertexId root = find(tg.el[e].first);
        auto [it, inserted] = comp_of.try_emplace(root, comps.size());
        if (inserted) comps.emplace_back();
        comps[it->second].push_back(e);
    }
    return comps;
}

}  // namespace trussdec
